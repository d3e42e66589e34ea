import random
from dataclasses import replace

import numpy as np
import pytest

from fnca import (
    AgentState,
    EngineConfig,
    Labeling,
    ModularityError,
    OrderPolicy,
    StopReason,
    build_graph,
    candidate_labels,
    delta_q,
    generate_rn,
    init_labels,
    modularity_q,
    run,
    run_many,
    RnSpec,
    select_label,
    sweep,
)
from fnca.engine import _scores

from conftest import random_edges


def improving_moves(g, lab):
    """Exhaustive scan for single-node moves to a neighbor's label with positive gain."""
    found = []
    for i in range(g.n):
        for c in candidate_labels(g, lab, i) - {lab.labels[i]}:
            # integer score comparison avoids rounding noise around zero gain
            s = _scores(g, lab, i, [c, lab.labels[i]])
            if s[c] > s[lab.labels[i]]:
                found.append((i, c, delta_q(g, lab, i, c)))
    return found


def test_init_labels():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    lab = init_labels(g)
    assert lab.labels == [0, 1, 2, 3, 4]
    assert all(v == 1 for v in lab.community_sizes.values())
    assert lab.community_degree_sum == {i: k for i, k in enumerate(g.degree_list)}


def test_init_q_single_edge(single_edge):
    assert modularity_q(single_edge, init_labels(single_edge)) == -0.5


def test_candidate_labels():
    g = build_graph(3, [(0, 1)])
    lab = init_labels(g)
    assert candidate_labels(g, lab, 2) == {2}
    assert candidate_labels(g, lab, 0) == {0, 1}
    same = Labeling(g, [4, 4, 1])
    assert candidate_labels(g, same, 0) == {4}


def test_select_label_greedy_merge(single_edge):
    lab = init_labels(single_edge)
    cands = candidate_labels(single_edge, lab, 1)
    assert select_label(single_edge, lab, 1, cands, 1.0, random.Random(0)) == 0


def test_select_label_only_current(triangle):
    lab = Labeling(triangle, [2, 2, 2])
    assert select_label(triangle, lab, 0, {2}, 1.0, random.Random(0)) == 2


def test_select_label_escape_without_better_label(two_triangles):
    lab = Labeling(two_triangles, [0, 0, 0, 1, 1, 1])
    for seed in range(20):
        assert select_label(two_triangles, lab, 0, {0}, 0.0, random.Random(seed)) == 0


def test_select_label_escape_takes_strictly_better_only():
    # star: center 0 with leaves 1..4, leaf 5 hanging off leaf 4
    g = build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
    lab = init_labels(g)
    seen = {select_label(g, lab, 0, candidate_labels(g, lab, 0), 0.0, random.Random(s)) for s in range(200)}
    better = {c for c in candidate_labels(g, lab, 0) if delta_q(g, lab, 0, c) > 0}
    assert seen == better


def test_sweep_fixed_point_sleeps_everyone(triangle):
    lab = Labeling(triangle, [0, 0, 0])
    state = AgentState.all_awake(3)
    stats = sweep(triangle, lab, state, EngineConfig(p=1.0), np.random.default_rng(0))
    assert stats.changes == 0
    assert state.awake == [False, False, False]


@pytest.mark.parametrize("policy", list(OrderPolicy))
def test_sweep_single_edge_one_change(single_edge, policy):
    for seed in range(10):
        lab = init_labels(single_edge)
        state = AgentState.all_awake(2)
        cfg = EngineConfig(p=1.0, order_policy=policy, seed=seed)
        stats = sweep(single_edge, lab, state, cfg, np.random.default_rng(seed))
        assert stats.changes == 1
        assert lab.labels[0] == lab.labels[1]


def test_sweep_single_edge_fixed_order_outcome(single_edge):
    lab = init_labels(single_edge)
    cfg = EngineConfig(p=1.0, order_policy="fixed-ascending")
    sweep(single_edge, lab, AgentState.all_awake(2), cfg, np.random.default_rng(0))
    # node 0 moves first and adopts label 1; node 1 then has nothing to gain
    assert lab.labels == [1, 1]


def test_two_triangles_converge_within_three_sweeps(two_triangles):
    for seed in range(20):
        cfg = EngineConfig(p=1.0, seed=seed)
        lab = init_labels(two_triangles)
        state = AgentState.all_awake(6)
        rng = np.random.default_rng(seed)
        for _ in range(3):
            sweep(two_triangles, lab, state, cfg, rng)
        assert modularity_q(two_triangles, lab) == pytest.approx(0.5)


def test_run_two_triangles(two_triangles):
    for seed in range(20):
        res = run(two_triangles, EngineConfig(p=1.0, seed=seed))
        assert res.q == pytest.approx(0.5)
        assert res.stop_reason is StopReason.STABLE
        assert res.labels.labels == [0, 0, 0, 1, 1, 1]


def test_run_rejects_empty_graph():
    with pytest.raises(ModularityError):
        run(build_graph(3, []), EngineConfig())


def test_config_validation():
    with pytest.raises(ValueError):
        EngineConfig(p=1.5)
    with pytest.raises(ValueError):
        EngineConfig(max_iters=0)
    with pytest.raises(ValueError):
        EngineConfig(seed=-1)


def test_iteration_limit(karate):
    res = run(karate, EngineConfig(max_iters=1, seed=4))
    assert res.iterations == 1
    assert res.stop_reason is StopReason.ITER_LIMIT


def test_target_q_stop(karate):
    reasons = {run(karate, EngineConfig(target_q=0.3, seed=s)).stop_reason for s in range(20)}
    assert StopReason.TARGET_Q in reasons
    for s in range(20):
        res = run(karate, EngineConfig(target_q=0.3, seed=s))
        if res.stop_reason is StopReason.TARGET_Q:
            assert res.trace[-1].q >= 0.3


def test_result_invariants(karate):
    for seed in range(10):
        res = run(karate, EngineConfig(seed=seed))
        assert len(res.trace) == res.iterations
        assert res.q == pytest.approx(modularity_q(karate, Labeling(karate, res.labels.labels)), abs=1e-9)
        assert res.trace[-1].q == pytest.approx(res.q, abs=1e-12)
        assert sorted(set(res.labels.labels)) == list(range(res.n_communities))
        # dense ids by first appearance
        first = []
        for c in res.labels.labels:
            if c not in first:
                first.append(c)
        assert first == list(range(res.n_communities))


def test_determinism(karate):
    for policy in OrderPolicy:
        cfg = EngineConfig(seed=123, order_policy=policy)
        a, b = run(karate, cfg), run(karate, cfg)
        assert a == b
        assert a.trace == b.trace


def test_different_seeds_can_differ(karate):
    outcomes = {tuple(run(karate, EngineConfig(seed=s)).labels.labels) for s in range(10)}
    assert len(outcomes) > 1


@pytest.mark.parametrize("sleeping", [True, False])
def test_greedy_monotone_and_local_optimum(sleeping):
    rng = random.Random(5)
    graphs = [build_graph(40, random_edges(rng, 40, 0.12)) for _ in range(10)]
    graphs.append(generate_rn(RnSpec(4, 32, 16, 6, seed=2)).graph)
    for idx, g in enumerate(graphs):
        res = run(g, EngineConfig(p=1.0, seed=idx, max_iters=1000, sleeping_enabled=sleeping))
        qs = [t.q for t in res.trace]
        assert all(b >= a for a, b in zip(qs, qs[1:]))
        assert res.stop_reason is StopReason.STABLE
        assert improving_moves(g, res.labels) == []


def test_community_count_never_increases():
    g = generate_rn(RnSpec(4, 32, 16, 5, seed=9)).graph
    for seed in range(5):
        cfg = EngineConfig(p=1.0, seed=seed)
        lab = init_labels(g)
        state = AgentState.all_awake(g.n)
        rng = np.random.default_rng(seed)
        counts = [lab.n_communities]
        while True:
            stats = sweep(g, lab, state, cfg, rng)
            counts.append(lab.n_communities)
            if stats.changes == 0:
                break
        assert all(b <= a for a, b in zip(counts, counts[1:]))


def test_every_move_improves_q_for_any_p(karate):
    # both selection branches only ever take strictly improving labels
    for p in (0.0, 0.5, 0.95):
        res = run(karate, EngineConfig(p=p, seed=1, sleeping_enabled=False))
        qs = [t.q for t in res.trace]
        assert all(b >= a for a, b in zip(qs, qs[1:]))


def test_run_many_seeds_and_parallel(karate):
    cfg = EngineConfig(seed=10)
    serial = run_many(karate, cfg, 4)
    assert [r.config.seed for r in serial] == [10, 11, 12, 13]
    assert serial[2] == run(karate, replace(cfg, seed=12))
    parallel = run_many(karate, cfg, 4, jobs=2)
    assert parallel == serial


def test_isolated_nodes_are_left_alone():
    g = build_graph(5, [(0, 1), (1, 2)])
    res = run(g, EngineConfig(p=1.0))
    labels = res.labels.labels
    assert labels[3] != labels[4]
    assert labels[3] not in labels[:3]
