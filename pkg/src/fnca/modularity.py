"""Global and per-node modularity arithmetic.

Modularity of a labeling ``c`` is

    Q = 1/(2m) * sum_ij [A_ij - k_i k_j / (2m)] * [c_i == c_j]

and splits into per-node terms ``Q = 1/(2m) * sum_i f_i`` where ``f_i`` only
involves the members of node ``i``'s own community. Moving a single node
``i`` from community ``a`` to ``b`` changes Q by exactly
``(f_i(b) - f_i(a)) / m``.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph


class ModularityError(ValueError):
    pass


class Labeling:
    """Mutable node-to-community assignment with per-community aggregates.

    Attributes
    ----------
    labels : list of int
        ``labels[i]`` is the community id of node ``i``.
    community_degree_sum : dict
        Community id -> sum of member degrees.
    community_sizes : dict
        Community id -> member count. Empty communities are never stored.
    """

    __slots__ = ("labels", "community_degree_sum", "community_sizes", "_degrees")

    def __init__(self, g: Graph, labels: Iterable[int]):
        self.labels = [int(c) for c in labels]
        if len(self.labels) != g.n:
            raise ModularityError(f"labeling covers {len(self.labels)} nodes, graph has {g.n}")
        self._degrees = g.degree_list
        self.community_degree_sum: dict[int, int] = {}
        self.community_sizes: dict[int, int] = {}
        deg_sum = self.community_degree_sum
        sizes = self.community_sizes
        for c, k in zip(self.labels, self._degrees):
            deg_sum[c] = deg_sum.get(c, 0) + k
            sizes[c] = sizes.get(c, 0) + 1

    @classmethod
    def singletons(cls, g: Graph) -> "Labeling":
        return cls(g, range(g.n))

    @property
    def n_communities(self) -> int:
        return len(self.community_sizes)

    def copy(self) -> "Labeling":
        new = object.__new__(Labeling)
        new.labels = list(self.labels)
        new.community_degree_sum = dict(self.community_degree_sum)
        new.community_sizes = dict(self.community_sizes)
        new._degrees = self._degrees
        return new

    def as_array(self) -> np.ndarray:
        return np.asarray(self.labels, dtype=np.int64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.community_degree_sum == other.community_degree_sum
            and self.community_sizes == other.community_sizes
        )

    def __repr__(self) -> str:
        return f"Labeling(n={len(self.labels)}, communities={self.n_communities})"


def _check_edges(g: Graph) -> None:
    if g.m == 0:
        raise ModularityError("modularity undefined on empty-edge graph")


def _intra_edge_counts(g: Graph, labels: Sequence[int]) -> Counter:
    lab = np.asarray(labels, dtype=np.int64)
    e = g.edges()
    same = lab[e[:, 0]] == lab[e[:, 1]]
    return Counter(lab[e[same, 0]].tolist())


def modularity_q(g: Graph, lab: Labeling) -> float:
    """Modularity as ``sum_c (e_c/m - (D_c/2m)^2)``.

    ``e_c`` counts edges with both ends in community ``c`` and ``D_c`` is the
    community's degree sum.
    """
    _check_edges(g)
    m = g.m
    intra = _intra_edge_counts(g, lab.labels)
    two_m = 2.0 * m
    q = sum(intra.values()) / m
    q -= sum((d / two_m) ** 2 for d in lab.community_degree_sum.values())
    return q


def modularity_pairwise(g: Graph, labels: Sequence[int]) -> float:
    """Literal double-sum form of modularity, O(n^2) memory.

    Intended as a cross-check on small graphs.
    """
    _check_edges(g)
    lab = np.asarray(labels)
    n = g.n
    a = np.zeros((n, n))
    e = g.edges()
    a[e[:, 0], e[:, 1]] = 1.0
    a[e[:, 1], e[:, 0]] = 1.0
    k = g.degrees.astype(float)
    two_m = 2.0 * g.m
    b = a - np.outer(k, k) / two_m
    delta = lab[:, None] == lab[None, :]
    return float(b[delta].sum() / two_m)


def _neighbor_count(g: Graph, lab: Labeling, i: int, c: int) -> int:
    labels = lab.labels
    return sum(1 for j in g.adjacency[i] if labels[j] == c)


def local_f(g: Graph, lab: Labeling, i: int, c: int | None) -> float:
    """Node ``i``'s share of modularity if it were a member of community ``c``.

    ``c=None`` evaluates the hypothetical community holding ``i`` alone. The
    self term ``-k_i^2/(2m)`` is always included, so summing ``local_f`` over
    every node at its own label gives ``2m * Q``.
    """
    _check_edges(g)
    k = g.degree_list[i]
    two_m = 2.0 * g.m
    if c is None:
        return -k * k / two_m
    d_c = lab.community_degree_sum.get(c, 0)
    if lab.labels[i] == c:
        d_c -= k
    return _neighbor_count(g, lab, i, c) - k * (d_c + k) / two_m


def delta_q(g: Graph, lab: Labeling, i: int, c_new: int | None) -> float:
    """Exact change in modularity from relabeling node ``i`` to ``c_new``."""
    current = lab.labels[i]
    if c_new == current:
        return 0.0
    return (local_f(g, lab, i, c_new) - local_f(g, lab, i, current)) / g.m


def apply_move(lab: Labeling, i: int, c_new: int) -> Labeling:
    """Relabel node ``i`` in place and return ``lab``.

    ``c_new`` may be an id not yet in use, which opens a fresh community.
    """
    old = lab.labels[i]
    if old == c_new:
        return lab
    k = lab._degrees[i]
    deg_sum = lab.community_degree_sum
    sizes = lab.community_sizes
    if sizes[old] == 1:
        del sizes[old]
        del deg_sum[old]
    else:
        sizes[old] -= 1
        deg_sum[old] -= k
    sizes[c_new] = sizes.get(c_new, 0) + 1
    deg_sum[c_new] = deg_sum.get(c_new, 0) + k
    lab.labels[i] = c_new
    return lab


def fresh_label(lab: Labeling) -> int:
    """An integer id not used by any community in ``lab``."""
    return max(lab.community_sizes, default=-1) + 1
