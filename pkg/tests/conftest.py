from __future__ import annotations

import random

import pytest

from tempobet.graph import TemporalEdge, TemporalGraph
from tempobet.oracle import g_loop, g_toy


@pytest.fixture
def toy() -> TemporalGraph:
    return g_toy()


@pytest.fixture
def loop() -> TemporalGraph:
    return g_loop()


def make_random_graph(rng: random.Random, n_max: int = 7, m_max: int = 18,
                      dep_max: int = 12, travel_max: int = 3) -> TemporalGraph:
    """Small random multigraph in the oracle-checkable regime."""
    n = rng.randint(2, n_max)
    m = rng.randint(1, m_max)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        edges.append(TemporalEdge(u, v, rng.randint(1, dep_max), rng.randint(1, travel_max)))
    return TemporalGraph(n, edges)


def edge_bc_by_original(rep, edge_bc) -> dict[int, object]:
    """Engine output (by arrival position) re-keyed by original edge index."""
    return {rep.e_arr[k]: edge_bc[k] for k in range(rep.m)}
