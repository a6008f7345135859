from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from tempobet.costs import ConfigError, get_criterion
from tempobet.driver import node_betweenness
from tempobet.graph import TemporalGraph
from tempobet.oracle import oracle_betweenness

from conftest import make_random_graph


def test_no_edges_all_zero():
    g = TemporalGraph(4, [])
    assert node_betweenness(g, "sh").values == [F(0)] * 4


def test_toy_node_values(toy):
    assert node_betweenness(toy, "sh", None).as_dict() == {
        "a": F(0), "b": F(1, 2), "c": F(1, 2), "d": F(0)
    }


def test_loop_per_occurrence_multiplicity(loop):
    # at beta=1 the only a->z walk passes x twice; both passes count
    assert node_betweenness(loop, "sh", 1).as_dict() == {
        "a": F(0), "x": F(4), "y": F(1), "z": F(0)
    }


def test_matches_oracle_node_scores_all_criteria():
    rng = random.Random(53)
    for _ in range(8):
        g = make_random_graph(rng, n_max=6, m_max=14)
        for crit_name in ("sh", "fa", "sla"):
            for beta in (1, None):
                got = node_betweenness(g, crit_name, beta).values
                want = oracle_betweenness(g, get_criterion(crit_name), beta).node_bc
                assert got == want


def test_worker_count_invariance(toy):
    base = node_betweenness(toy, "sh", None, workers=1)
    for workers in (2, 8):
        assert node_betweenness(toy, "sh", None, workers=workers).values == base.values


def test_source_subset_additivity():
    rng = random.Random(59)
    g = make_random_graph(rng, n_max=6, m_max=14)
    full = node_betweenness(g, "sfo", 2)
    half_a = node_betweenness(g, "sfo", 2, sources=list(range(0, g.n, 2)))
    half_b = node_betweenness(g, "sfo", 2, sources=list(range(1, g.n, 2)))
    merged = [a + b for a, b in zip(half_a.values, half_b.values)]
    assert merged == full.values
    assert half_a.source_count + half_b.source_count == g.n


def test_fast_mode_close_to_exact():
    rng = random.Random(61)
    for _ in range(6):
        g = make_random_graph(rng)
        exact = node_betweenness(g, "sh", 1, mode="exact").values
        fast = node_betweenness(g, "sh", 1, mode="fast").values
        for x, f in zip(exact, fast):
            if x != 0:
                assert abs(f - float(x)) / float(x) < 1e-9
            else:
                assert f == 0.0


def test_result_metadata(loop):
    res = node_betweenness(loop, "fa", 2, mode="fast")
    assert res.criterion == "fa" and res.beta == 2
    assert res.source_count == 4 and res.mode == "fast"
    ranked = res.ranking()
    assert ranked[0][1] == max(res.values)


def test_invalid_configuration():
    g = TemporalGraph(2, [])
    with pytest.raises(ConfigError):
        node_betweenness(g, "sh", mode="wrong")
    with pytest.raises(ConfigError):
        node_betweenness(g, "nope")
    with pytest.raises(ConfigError):
        node_betweenness(g, "sh", workers=0)
    with pytest.raises(ConfigError):
        node_betweenness(g, "fa", engine="nonrestless")
