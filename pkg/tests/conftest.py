import itertools
import random

import pytest

from fnca import build_graph
from fnca.datasets import load_karate

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_q(n, edges, labels):
    """Literal double sum over node pairs, written independently of the package."""
    adj = [[0] * n for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u][v] = adj[v][u] = 1
    k = [sum(row) for row in adj]
    two_m = sum(k)
    total = 0.0
    for i, j in itertools.product(range(n), repeat=2):
        if labels[i] == labels[j]:
            total += adj[i][j] - k[i] * k[j] / two_m
    return total / two_m


def random_edges(rng: random.Random, n: int, p: float):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


@pytest.fixture(scope="session")
def karate():
    return load_karate()


@pytest.fixture
def single_edge():
    return build_graph(2, [(0, 1)])


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def two_triangles():
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
