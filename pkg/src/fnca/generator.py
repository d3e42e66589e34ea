"""Planted-partition random networks with exact per-node degrees.

``RN(C, s, d, z_out)`` has ``C`` communities of ``s`` nodes each. Every node
has exactly ``z_in = d - z_out`` neighbors inside its community and
``z_out`` outside it. Node ``i`` belongs to community ``i // s``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, build_graph


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class RnSpec:
    C: int
    s: int
    d: int
    z_out: int
    seed: int = 0

    @property
    def z_in(self) -> int:
        return self.d - self.z_out

    @property
    def n(self) -> int:
        return self.C * self.s

    @property
    def m(self) -> int:
        return self.n * self.d // 2

    def violations(self) -> list[str]:
        """Names of the feasibility conditions this spec breaks."""
        out = []
        if self.C < 1 or self.s < 1:
            out.append("C and s must be positive")
        if self.z_out < 0:
            out.append("z_out negative")
        if self.z_in < 0:
            out.append("z_in negative")
        elif self.z_in > self.s - 1:
            out.append("z_in exceeds s - 1")
        if (self.s * self.z_in) % 2:
            out.append("s * z_in must be even")
        if (self.C * self.s * self.z_out) % 2:
            out.append("C * s * z_out must be even")
        if self.z_out > 0 and self.C < 2:
            out.append("C must be >= 2 when z_out > 0")
        if self.z_out > (self.C - 1) * self.s:
            out.append("z_out exceeds the number of nodes outside a community")
        if not 0 <= self.seed < 2**64:
            out.append("seed must be a 64-bit unsigned integer")
        return out


@dataclass(frozen=True, eq=False)
class PlantedGraph:
    graph: Graph
    planted: np.ndarray
    spec: RnSpec


def _pair_keys(u: np.ndarray, v: np.ndarray, n: int) -> np.ndarray:
    return np.minimum(u, v) * n + np.maximum(u, v)


def _match_stubs(
    stubs: np.ndarray,
    n: int,
    block: np.ndarray | None,
    rng: np.random.Generator,
    max_swaps: int,
) -> np.ndarray | None:
    """Randomly pair ``stubs`` into a simple edge list.

    With ``block`` given, edges joining two nodes of the same block are
    forbidden. Bad pairs are repaired by degree-preserving double swaps with
    random partner edges. Returns ``None`` if the swap budget runs out.
    """
    perm = rng.permutation(stubs)
    u = perm[0::2].copy()
    v = perm[1::2].copy()
    n_edges = u.size
    if n_edges == 0:
        return np.empty((0, 2), dtype=np.int64)

    keys = _pair_keys(u, v, n)
    uniq, counts = np.unique(keys, return_counts=True)
    mult = dict(zip(uniq.tolist(), counts.tolist()))

    def allowed(a: int, b: int) -> bool:
        if a == b:
            return False
        if block is not None and block[a] == block[b]:
            return False
        return True

    def is_bad(idx: int) -> bool:
        a, b = int(u[idx]), int(v[idx])
        return not allowed(a, b) or mult[int(keys[idx])] > 1

    self_loop = u == v
    same_block = block[u] == block[v] if block is not None else np.zeros(n_edges, bool)
    dup = np.isin(keys, uniq[counts > 1])
    bad = set(np.flatnonzero(self_loop | same_block | dup).tolist())

    attempts = 0
    while bad:
        if attempts >= max_swaps:
            return None
        attempts += 1
        i = rng.choice(list(bad)) if len(bad) < 64 else next(iter(bad))
        j = int(rng.integers(n_edges))
        if j == i:
            continue
        a, b = int(u[i]), int(v[i])
        x, y = int(u[j]), int(v[j])
        if rng.random() < 0.5:
            x, y = y, x
        # proposal: (a, b), (x, y) -> (a, x), (b, y)
        if not (allowed(a, x) and allowed(b, y)):
            continue
        k1 = min(a, x) * n + max(a, x)
        k2 = min(b, y) * n + max(b, y)
        if k1 == k2 or mult.get(k1, 0) > 0 or mult.get(k2, 0) > 0:
            continue
        for idx in (i, j):
            old = int(keys[idx])
            mult[old] -= 1
            if mult[old] == 0:
                del mult[old]
        u[i], v[i], keys[i] = a, x, k1
        u[j], v[j], keys[j] = b, y, k2
        mult[k1] = 1
        mult[k2] = 1
        bad.discard(i)
        bad.discard(j)
        # a removed duplicate may have cleared its twin
        bad = {e for e in bad if is_bad(e)}
    return np.column_stack([u, v])


def _regular_block(s: int, z: int, rng: np.random.Generator, max_swaps: int) -> np.ndarray | None:
    """A random ``z``-regular simple graph on ``s`` local nodes."""
    if z == 0:
        return np.empty((0, 2), dtype=np.int64)
    if z == s - 1:
        iu = np.triu_indices(s, 1)
        return np.column_stack(iu).astype(np.int64)
    if 2 * z > s - 1:
        # dense: sample the sparse complement and invert it
        comp = _regular_block(s, s - 1 - z, rng, max_swaps)
        if comp is None:
            return None
        full = np.zeros((s, s), dtype=bool)
        full[np.triu_indices(s, 1)] = True
        full[np.minimum(comp[:, 0], comp[:, 1]), np.maximum(comp[:, 0], comp[:, 1])] = False
        return np.column_stack(np.nonzero(full)).astype(np.int64)
    stubs = np.repeat(np.arange(s, dtype=np.int64), z)
    return _match_stubs(stubs, s, None, rng, max_swaps)


def generate_rn(spec: RnSpec, max_restarts: int = 20) -> PlantedGraph:
    """Sample an ``RN(C, s, d, z_out)`` network.

    Each community gets a random ``z_in``-regular graph; the inter-community
    layer is a stub matching that never pairs two nodes of one community.
    Repairs use up to ``100 * m`` swap attempts per layer before restarting.

    Raises
    ------
    GeneratorError
        On an infeasible spec, or when ``max_restarts`` restarts all fail.
    """
    problems = spec.violations()
    if problems:
        raise GeneratorError("infeasible RN spec: " + "; ".join(problems))
    rng = np.random.default_rng(spec.seed)
    C, s, n = spec.C, spec.s, spec.n
    planted = np.arange(n, dtype=np.int64) // s

    for _ in range(max_restarts):
        parts = []
        for c in range(C):
            block = _regular_block(s, spec.z_in, rng, 100 * max(1, s * spec.z_in // 2))
            if block is None:
                break
            parts.append(block + c * s)
        else:
            stubs = np.repeat(np.arange(n, dtype=np.int64), spec.z_out)
            inter = _match_stubs(stubs, n, planted, rng, 100 * max(1, n * spec.z_out // 2))
            if inter is not None:
                parts.append(inter)
                g = build_graph(n, np.concatenate(parts) if parts else np.empty((0, 2), np.int64))
                pg = PlantedGraph(graph=g, planted=planted, spec=spec)
                if not validate_planted(pg):
                    return pg
    raise GeneratorError(f"could not build RN{(spec.C, spec.s, spec.d, spec.z_out)} after {max_restarts} restarts")


def validate_planted(pg: PlantedGraph) -> list[str]:
    """Recount intra/inter degrees; one message per node that is off."""
    g, planted, spec = pg.graph, pg.planted, pg.spec
    e = g.edges()
    same = planted[e[:, 0]] == planted[e[:, 1]]
    intra = np.bincount(e[same].ravel(), minlength=g.n)
    inter = np.bincount(e[~same].ravel(), minlength=g.n)
    out = []
    for i in np.flatnonzero((intra != spec.z_in) | (inter != spec.z_out)).tolist():
        out.append(f"node {i}: intra={intra[i]} (want {spec.z_in}), inter={inter[i]} (want {spec.z_out})")
    return out


def planted_modularity(spec: RnSpec) -> float:
    """Closed-form modularity of the planted partition: ``z_in/d - 1/C``."""
    return spec.z_in / spec.d - 1.0 / spec.C
