"""Evaluation of found clusterings against planted communities."""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .modularity import Labeling


@dataclass(frozen=True)
class AccuracyReport:
    accuracy: float
    matched_pairs: list[tuple[int, int]]
    n_found_clusters: int
    n_planted: int
    greedy_accuracy: float

    @property
    def perfect(self) -> bool:
        return self.accuracy == 1.0 and self.n_found_clusters == self.n_planted


def _as_labels(x) -> np.ndarray:
    if isinstance(x, Labeling):
        return x.as_array()
    return np.asarray(x)


def overlap_matrix(found, planted) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Contingency table ``M[a, b] = |found == a and planted == b|``.

    Returns the table together with the found and planted label values
    indexing its rows and columns.
    """
    f = _as_labels(found)
    t = _as_labels(planted)
    if f.shape != t.shape:
        raise ValueError(f"labelings differ in length: {f.size} vs {t.size}")
    f_ids, f_idx = np.unique(f, return_inverse=True)
    t_ids, t_idx = np.unique(t, return_inverse=True)
    table = np.zeros((f_ids.size, t_ids.size), dtype=np.int64)
    np.add.at(table, (f_idx, t_idx), 1)
    return table, f_ids, t_ids


def _greedy_matching_value(table: np.ndarray) -> int:
    order = np.argsort(-table, axis=None, kind="stable")
    used_r, used_c = set(), set()
    total = 0
    for flat in order:
        r, c = divmod(int(flat), table.shape[1])
        if r in used_r or c in used_c:
            continue
        if table[r, c] == 0:
            break
        used_r.add(r)
        used_c.add(c)
        total += int(table[r, c])
    return total


def accuracy(found, planted) -> AccuracyReport:
    """Fraction of nodes correctly placed under the best one-to-one cluster matching.

    Each found cluster can be credited to at most one planted community, so
    a planted community split in two only earns credit for its larger half.
    """
    table, f_ids, t_ids = overlap_matrix(found, planted)
    n = int(table.sum())
    if n == 0:
        raise ValueError("cannot score an empty labeling")
    rows, cols = linear_sum_assignment(table, maximize=True)
    best = int(table[rows, cols].sum())
    pairs = [(int(f_ids[r]), int(t_ids[c])) for r, c in zip(rows, cols) if table[r, c] > 0]
    return AccuracyReport(
        accuracy=best / n,
        matched_pairs=pairs,
        n_found_clusters=int(f_ids.size),
        n_planted=int(t_ids.size),
        greedy_accuracy=_greedy_matching_value(table) / n,
    )


@dataclass(frozen=True)
class Stat:
    mean: float
    std: float

    @classmethod
    def of(cls, values: Sequence[float]) -> "Stat":
        vals = [float(v) for v in values]
        return cls(statistics.fmean(vals), statistics.pstdev(vals))


@dataclass(frozen=True)
class RunSummary:
    runs: int
    q: Stat
    iterations: Stat
    wall_ms: Stat
    accuracy: Optional[Stat] = None


def summarize_runs(results, planted=None) -> RunSummary:
    """Mean and (population) std of Q, iterations, wall time and, given ``planted``, accuracy."""
    if not results:
        raise ValueError("need at least one result to summarize")
    acc = None
    if planted is not None:
        acc = Stat.of([accuracy(r.labels, planted).accuracy for r in results])
    return RunSummary(
        runs=len(results),
        q=Stat.of([r.q for r in results]),
        iterations=Stat.of([r.iterations for r in results]),
        wall_ms=Stat.of([r.wall_ms for r in results]),
        accuracy=acc,
    )
