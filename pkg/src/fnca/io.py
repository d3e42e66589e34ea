"""Plain-text file formats: edge lists, label files and result records.

Edge lists hold one ``u v`` pair per line (space or tab separated) with
``#`` comment lines. External ids are arbitrary non-negative integers; they
are mapped to dense internal ids in ascending numeric order. All writers use
LF line endings and produce byte-identical output for identical input.
"""

from __future__ import annotations

import io
import json
import os
from contextlib import contextmanager
from dataclasses import asdict, dataclass, fields
from typing import IO, Iterator, Optional, Sequence, Union

import numpy as np

from .graph import Graph, build_graph
from .modularity import Labeling

Source = Union[str, os.PathLike, IO[str]]


class FormatError(ValueError):
    pass


@contextmanager
def _open(source: Source, mode: str = "r") -> Iterator[IO[str]]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, mode, encoding="utf-8", newline="\n" if "w" in mode else None) as fh:
            yield fh
    else:
        yield source


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def read_edge_list(source: Source) -> tuple[Graph, np.ndarray]:
    """Parse an edge list.

    Returns
    -------
    graph : Graph
        Simple graph (self-loops dropped, duplicates collapsed).
    ids : ndarray
        ``ids[internal] = external`` id.
    """
    pairs: list[tuple[int, int]] = []
    with _open(source) as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected two node ids, got {text!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: node ids must be integers, got {text!r}") from None
            if u < 0 or v < 0:
                raise FormatError(f"line {lineno}: node ids must be non-negative, got {text!r}")
            pairs.append((u, v))
    if not pairs:
        raise FormatError("edge list is empty")
    raw = np.asarray(pairs, dtype=np.int64)
    ids, inverse = np.unique(raw, return_inverse=True)
    graph = build_graph(ids.size, inverse.reshape(raw.shape))
    return graph, ids


def write_edge_list(g: Graph, sink: Source, ids: Optional[Sequence[int]] = None) -> None:
    ext = np.arange(g.n) if ids is None else np.asarray(ids)
    with _open(sink, "w") as fh:
        for u, v in g.edges().tolist():
            fh.write(f"{ext[u]} {ext[v]}\n")


def write_labels(lab: Union[Labeling, Sequence[int]], ids: Optional[Sequence[int]], sink: Source) -> None:
    """Write ``external_id<TAB>label`` lines in internal id order."""
    labels = lab.labels if isinstance(lab, Labeling) else list(lab)
    if len(labels) == 0:
        raise FormatError("refusing to write an empty labeling")
    ext = range(len(labels)) if ids is None else ids
    if len(ext) != len(labels):
        raise FormatError(f"{len(ext)} ids for {len(labels)} labels")
    with _open(sink, "w") as fh:
        for node, c in zip(ext, labels):
            fh.write(f"{int(node)}\t{int(c)}\n")


def read_labels(source: Source) -> dict[int, int]:
    """Parse a labels file into ``{external_id: label}``."""
    out: dict[int, int] = {}
    with _open(source) as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'id<TAB>label', got {text!r}")
            try:
                node, c = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: expected integers, got {text!r}") from None
            if node in out:
                raise FormatError(f"line {lineno}: node {node} labeled twice")
            out[node] = c
    if not out:
        raise FormatError("labels file is empty")
    return out


def labels_to_array(mapping: dict[int, int], ids: Sequence[int]) -> np.ndarray:
    """Order a parsed labels mapping by internal id.

    Raises if the file mentions a node outside ``ids`` or misses one.
    """
    known = {int(x) for x in ids}
    unknown = sorted(set(mapping) - known)
    if unknown:
        raise FormatError(f"unknown external id {unknown[0]} in labels")
    missing = [int(x) for x in ids if int(x) not in mapping]
    if missing:
        raise FormatError(f"no label for external id {missing[0]}")
    return np.asarray([mapping[int(x)] for x in ids], dtype=np.int64)


@dataclass
class ResultRecord:
    dataset: str
    n: int
    m: int
    q: float
    iterations: int
    stop_reason: str
    seed: int
    p: float
    max_iters: int
    wall_ms: float
    n_communities: int
    accuracy: Optional[float] = None

    @classmethod
    def from_result(cls, dataset: str, g: Graph, result, accuracy: Optional[float] = None) -> "ResultRecord":
        cfg = result.config
        return cls(
            dataset=dataset,
            n=g.n,
            m=g.m,
            q=result.q,
            iterations=result.iterations,
            stop_reason=str(result.stop_reason.value),
            seed=cfg.seed,
            p=cfg.p,
            max_iters=cfg.max_iters,
            wall_ms=result.wall_ms,
            n_communities=result.n_communities,
            accuracy=accuracy,
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("q", "p", "wall_ms", "accuracy"):
            if d[key] is not None:
                # 12 significant digits, parsed back so json emits the short form
                d[key] = float(_fmt(d[key]))
        if d["accuracy"] is None:
            del d["accuracy"]
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "ResultRecord":
        d = json.loads(text)
        allowed = {f.name for f in fields(cls)}
        extra = set(d) - allowed
        if extra:
            raise FormatError(f"unexpected keys in result record: {sorted(extra)}")
        return cls(**d)


def write_records(records: Sequence[ResultRecord], sink: Source, summary: Optional[dict] = None) -> None:
    """One JSON object per line; a final ``{"summary": ...}`` line when given."""
    with _open(sink, "w") as fh:
        for rec in records:
            fh.write(rec.dumps() + "\n")
        if summary is not None:
            fh.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")


def read_records(source: Source) -> tuple[list[ResultRecord], Optional[dict]]:
    records, summary = [], None
    with _open(source) as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            if "summary" in obj and len(obj) == 1:
                summary = obj["summary"]
            else:
                records.append(ResultRecord.loads(line))
    return records, summary


def dumps_edge_list(g: Graph, ids: Optional[Sequence[int]] = None) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf, ids)
    return buf.getvalue()
