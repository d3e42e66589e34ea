"""Agent-based local modularity maximization.

Every node starts in its own community. In each sweep, every awake node
looks at the labels of its neighbors and moves to whichever one maximizes
its local modularity share (with probability ``p``), or to a random label
that is at least strictly better than its current one (otherwise). Nodes
whose neighborhood did not change during a sweep go to sleep until a
neighbor moves again.

All gain comparisons use the integer score ``2m * f_i(c) + k_i^2`` so ties
are exact and the running modularity carries no rounding drift.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .graph import Graph
from .modularity import Labeling, ModularityError, apply_move, modularity_q


class StopReason(str, enum.Enum):
    STABLE = "stable"
    ITER_LIMIT = "iter-limit"
    TARGET_Q = "target-q"


class OrderPolicy(str, enum.Enum):
    FIXED = "fixed-ascending"
    SHUFFLED = "shuffled-per-sweep"


@dataclass(frozen=True)
class EngineConfig:
    """Parameters of one clustering run.

    ``p`` is the probability that an agent takes its best label; with
    probability ``1 - p`` it picks uniformly among strictly improving labels.
    """

    p: float = 0.95
    max_iters: int = 50
    target_q: Optional[float] = None
    sleeping_enabled: bool = True
    seed: int = 0
    order_policy: OrderPolicy = OrderPolicy.SHUFFLED

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        object.__setattr__(self, "order_policy", OrderPolicy(self.order_policy))


@dataclass
class AgentState:
    awake: list[bool]
    changed_last_sweep: list[bool]

    @classmethod
    def all_awake(cls, n: int) -> "AgentState":
        return cls(awake=[True] * n, changed_last_sweep=[False] * n)


class SweepStats(NamedTuple):
    changes: int
    awakened: int
    visited: int
    gain: int  # sum of integer score gains; delta Q = gain / (2 m^2)


class TraceEntry(NamedTuple):
    q: float
    changes: int
    awake: int


@dataclass
class ClusterResult:
    labels: Labeling
    q: float
    iterations: int
    stop_reason: StopReason
    trace: list[TraceEntry]
    config: EngineConfig
    wall_ms: float = field(default=0.0, compare=False)

    @property
    def n_communities(self) -> int:
        return self.labels.n_communities


def init_labels(g: Graph) -> Labeling:
    """Every node in its own community, labeled by its id."""
    return Labeling.singletons(g)


def candidate_labels(g: Graph, lab: Labeling, i: int) -> set[int]:
    labels = lab.labels
    cands = {labels[j] for j in g.adjacency[i]}
    cands.add(labels[i])
    return cands


def _scores(g: Graph, lab: Labeling, i: int, candidates: Iterable[int]) -> dict[int, int]:
    labels = lab.labels
    k = g.degree_list[i]
    two_m = 2 * g.m
    cur = labels[i]
    counts: dict[int, int] = {}
    for j in g.adjacency[i]:
        c = labels[j]
        counts[c] = counts.get(c, 0) + 1
    deg_sum = lab.community_degree_sum
    out = {}
    for c in candidates:
        d = deg_sum.get(c, 0) - (k if c == cur else 0)
        out[c] = two_m * counts.get(c, 0) - k * d
    return out


def _choose(cur: int, scores: dict[int, int], p: float, u_branch: float, u_pick: float) -> int:
    cur_score = scores[cur]
    if u_branch < p:
        best = max(scores.values())
        if cur_score == best:
            return cur
        top = [c for c, s in scores.items() if s == best]
    else:
        top = [c for c, s in scores.items() if s > cur_score]
        if not top:
            return cur
    if len(top) == 1:
        return top[0]
    return top[min(int(u_pick * len(top)), len(top) - 1)]


def select_label(
    g: Graph,
    lab: Labeling,
    i: int,
    candidates: Iterable[int],
    p: float,
    rng,
) -> int:
    """Pick node ``i``'s next label among ``candidates``.

    With probability ``p`` the label maximizing ``local_f`` is returned (the
    current label wins ties). Otherwise a uniformly random label with
    strictly larger ``local_f`` than the current one is returned, or the
    current label if none exists. ``rng`` is anything with a ``random()``
    method returning floats in ``[0, 1)``.
    """
    cands = sorted(set(candidates) | {lab.labels[i]})
    return _choose(lab.labels[i], _scores(g, lab, i, cands), p, rng.random(), rng.random())


def sweep(
    g: Graph,
    lab: Labeling,
    state: AgentState,
    cfg: EngineConfig,
    rng: np.random.Generator,
) -> SweepStats:
    """Give every agent awake at the start of the sweep one chance to relabel.

    Updates are asynchronous: a move is visible to agents visited later in
    the same sweep. A move wakes the mover's sleeping neighbors for the next
    sweep. With sleeping enabled, an agent that moved, or whose neighbor
    moved after the agent last looked, stays awake; everyone else sleeps.

    The visit order and every agent's random draws are fixed per sweep
    before any agent is visited, so whether an agent sleeps never shifts
    the randomness seen by the others.
    """
    adj = g.adjacency
    deg = g.degree_list
    labels = lab.labels
    deg_sum = lab.community_degree_sum
    two_m = 2 * g.m
    p = cfg.p
    awake = state.awake

    n = g.n
    if cfg.order_policy is OrderPolicy.SHUFFLED:
        order = rng.permutation(n).tolist()
    else:
        order = list(range(n))
    u_branch = rng.random(n).tolist()
    u_pick = rng.random(n).tolist()
    if cfg.sleeping_enabled:
        order = [i for i in order if awake[i]]

    moved: list[int] = []
    awakened = gain = 0
    # stale[j]: a neighbor of j moved after j's last look at its neighborhood
    stale = [False] * n
    if cfg.sleeping_enabled:
        for i in order:
            stale[i] = True

    for i in order:
        stale[i] = False
        nbrs = adj[i]
        if not nbrs:
            continue
        cur = labels[i]
        counts: dict[int, int] = {}
        for j in nbrs:
            c = labels[j]
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == 1 and cur in counts:
            continue
        k = deg[i]
        scores = {c: two_m * cnt - k * deg_sum[c] for c, cnt in counts.items()}
        scores[cur] = two_m * counts.get(cur, 0) - k * (deg_sum[cur] - k)
        new = _choose(cur, scores, p, u_branch[i], u_pick[i])
        if new == cur:
            continue
        gain += scores[new] - scores[cur]
        apply_move(lab, i, new)
        moved.append(i)
        for j in nbrs:
            stale[j] = True
            if not awake[j]:
                awake[j] = True
                awakened += 1

    changed = [False] * n
    for i in moved:
        changed[i] = True
    if cfg.sleeping_enabled:
        for i in moved:
            stale[i] = True
        state.awake = stale
    state.changed_last_sweep = changed
    return SweepStats(len(moved), awakened, len(order), gain)


def _renumber(g: Graph, lab: Labeling) -> Labeling:
    mapping: dict[int, int] = {}
    dense = [mapping.setdefault(c, len(mapping)) for c in lab.labels]
    return Labeling(g, dense)


def run(g: Graph, cfg: EngineConfig = EngineConfig()) -> ClusterResult:
    """Cluster ``g`` until labels settle, ``max_iters`` sweeps pass, or Q reaches ``target_q``.

    Labels count as settled only after a sweep in which every agent was
    awake and none moved. Runs are deterministic given ``cfg.seed``.
    """
    if g.m == 0:
        raise ModularityError("modularity undefined on empty-edge graph")
    start = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    lab = init_labels(g)
    state = AgentState.all_awake(g.n)

    # Q = numer / (4 m^2), kept exact in integers
    denom = 4 * g.m * g.m
    numer = -sum(k * k for k in g.degree_list)

    trace: list[TraceEntry] = []
    reason = StopReason.ITER_LIMIT
    for _ in range(cfg.max_iters):
        stats = sweep(g, lab, state, cfg, rng)
        numer += 2 * stats.gain
        q_run = numer / denom
        trace.append(TraceEntry(q_run, stats.changes, stats.visited))
        if stats.changes == 0 and stats.awakened == 0:
            if stats.visited == g.n:
                reason = StopReason.STABLE
                break
            # sleepers may have gone stale through non-neighbor moves; confirm with everyone awake
            state.awake = [True] * g.n
            continue
        if cfg.target_q is not None and q_run >= cfg.target_q:
            reason = StopReason.TARGET_Q
            break

    final = _renumber(g, lab)
    q = modularity_q(g, final)
    wall_ms = (time.perf_counter() - start) * 1000.0
    return ClusterResult(
        labels=final,
        q=q,
        iterations=len(trace),
        stop_reason=reason,
        trace=trace,
        config=cfg,
        wall_ms=wall_ms,
    )


def _run_seed(args):
    g, cfg = args
    return run(g, cfg)


def run_many(g: Graph, cfg: EngineConfig, runs: int, jobs: int = 1) -> list[ClusterResult]:
    """Run ``runs`` independent clusterings with seeds ``cfg.seed + r``.

    Results come back in run order. ``jobs > 1`` spreads runs over worker
    processes; each run is still single-threaded.
    """
    cfgs = [replace(cfg, seed=(cfg.seed + r) % 2**64) for r in range(runs)]
    if jobs <= 1 or runs <= 1:
        return [run(g, c) for c in cfgs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_seed, [(g, c) for c in cfgs]))
