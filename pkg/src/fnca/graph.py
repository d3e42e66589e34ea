"""Immutable undirected simple graph in compressed adjacency form."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised when an edge list cannot be turned into a graph."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on nodes ``0 .. n-1``.

    Adjacency is stored CSR-style: the neighbors of node ``i`` are
    ``indices[indptr[i]:indptr[i + 1]]``, sorted ascending. Use
    :func:`build_graph` rather than calling the constructor directly.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray = field(repr=False)
    m: int = 0

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Neighbor lists as plain Python ints (fast for per-node loops)."""
        flat = self.indices.tolist()
        ptr = self.indptr.tolist()
        return [flat[ptr[i]:ptr[i + 1]] for i in range(self.n)]

    @cached_property
    def degree_list(self) -> list[int]:
        return self.degrees.tolist()

    def edges(self) -> np.ndarray:
        """Return the ``(m, 2)`` array of edges with ``u < v``, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> Graph:
    """Build a simple undirected graph from node pairs.

    Self-loops are dropped and repeated pairs (in either orientation) are
    collapsed into one edge.

    Parameters
    ----------
    n : int
        Number of nodes.
    edges : iterable of pairs or array of shape (k, 2)
        Endpoints must lie in ``[0, n)``.

    Raises
    ------
    GraphError
        If ``n`` is negative or a pair has an endpoint out of range.
    """
    if n < 0:
        raise GraphError(f"node count must be non-negative, got {n}")
    arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError(f"edges must be pairs, got array of shape {arr.shape}")

    bad = np.flatnonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))
    if bad.size:
        u, v = arr[bad[0]]
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")

    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keep = lo != hi
    # n * n fits in int64 for any graph that fits in memory
    keys = np.unique(lo[keep] * n + hi[keep])
    lo, hi = keys // n, keys % n

    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]

    degrees = np.bincount(src, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    return Graph(n=n, indptr=indptr, indices=dst, degrees=degrees, m=int(keys.size))


def neighbors(g: Graph, i: int) -> list[int]:
    """Sorted neighbors of node ``i`` (never includes ``i`` itself)."""
    return g.indices[g.indptr[i]:g.indptr[i + 1]].tolist()
