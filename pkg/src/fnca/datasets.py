"""Small real-world networks used for Q comparisons.

Only Zachary's karate club ships with the package. Other networks (e.g. the
dolphin and college-football graphs) are looked up as ``<name>.txt`` edge
lists or ``<name>.gml`` files in ``data_dir`` or ``$FNCA_DATA_DIR``.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np

from .graph import Graph, build_graph
from .io import read_edge_list

DATA_ENV = "FNCA_DATA_DIR"


def load_karate() -> Graph:
    with resources.files("fnca.data").joinpath("karate.txt").open("r", encoding="utf-8") as fh:
        g, _ = read_edge_list(fh)
    return g


def _read_gml(path: Path) -> tuple[Graph, np.ndarray]:
    try:
        import networkx as nx
    except ImportError as exc:  # pragma: no cover
        raise ImportError("reading GML files needs networkx") from exc
    nxg = nx.read_gml(path, label="id")
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    g = build_graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])
    return g, np.asarray(nodes)


def find_dataset(name: str, data_dir: Optional[os.PathLike] = None) -> Optional[Path]:
    dirs = [Path(d) for d in (data_dir, os.environ.get(DATA_ENV)) if d]
    for d in dirs:
        for ext in (".txt", ".gml"):
            path = d / f"{name}{ext}"
            if path.is_file():
                return path
    return None


def load_dataset(name: str, data_dir: Optional[os.PathLike] = None) -> Graph:
    """Load a named network.

    Raises
    ------
    FileNotFoundError
        If the network is neither bundled nor present in a data directory.
    """
    if name == "karate":
        return load_karate()
    path = find_dataset(name, data_dir)
    if path is None:
        raise FileNotFoundError(
            f"dataset {name!r} not found; place {name}.txt (edge list) or {name}.gml "
            f"in a directory and pass it as data_dir or set ${DATA_ENV}"
        )
    if path.suffix == ".gml":
        return _read_gml(path)[0]
    return read_edge_list(path)[0]
