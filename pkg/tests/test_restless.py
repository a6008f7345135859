from __future__ import annotations

import random
from collections import deque
from fractions import Fraction as F

import pytest

from tempobet.costs import CRITERION_NAMES, get_criterion
from tempobet.graph import TemporalEdge, TemporalGraph, build_sorted_representation
from tempobet.nonrestless import single_source_edge_betweenness as nonrestless_run
from tempobet.oracle import oracle_betweenness
from tempobet.restless import (
    Quintuple,
    finalise_up_to,
    new_scan,
    restless_forward,
    single_source_edge_betweenness,
)

from conftest import edge_bc_by_original, make_random_graph


def _by_original(rep, arr):
    return {rep.e_arr[k]: arr[k] for k in range(rep.m)}


def test_beta0_toy_single_optimal_walk(toy):
    rep = build_sorted_representation(toy)
    fwd = restless_forward(rep, 0, get_criterion("sh"), 0)
    # only a->c->d survives; a->b, b->d violates the waiting bound
    assert _by_original(rep, fwd.edge_cost)[3] == 2
    assert _by_original(rep, fwd.edge_count)[3] == 1


def test_waiting_window_inclusive_at_beta0():
    g = TemporalGraph(3, [TemporalEdge(0, 1, 1, 1), TemporalEdge(1, 2, 2, 1)])
    rep = build_sorted_representation(g)
    fwd = restless_forward(rep, 0, get_criterion("sh"), 0)
    assert _by_original(rep, fwd.edge_count)[1] == 1


def test_loop_beta1_forces_revisiting_walk(loop):
    rep = build_sorted_representation(loop)
    fwd = restless_forward(rep, 0, get_criterion("sh"), 1)
    # the only walk reaching z goes a->x->y->x->z
    assert _by_original(rep, fwd.edge_cost)[3] == 4
    assert _by_original(rep, fwd.edge_count)[3] == 1


def test_finalise_noop_below_frontier():
    g = TemporalGraph(2, [TemporalEdge(0, 1, 10, 1)])
    rep = build_sorted_representation(g)
    scan = new_scan(rep, get_criterion("sh"))
    scan.frontier[0] = 1
    finalise_up_to(scan, 0, 0)
    assert scan.frontier[0] == 1 and scan.edge_count[0] == 0


def _staged_graph() -> TemporalGraph:
    # two incoming edges at node 0 (usable as predecessors) plus three
    # outgoing positions whose coverage the tests manipulate
    return TemporalGraph(
        3,
        [
            TemporalEdge(2, 0, 1, 1),
            TemporalEdge(2, 0, 2, 1),
            TemporalEdge(0, 1, 10, 1),
            TemporalEdge(0, 1, 11, 1),
            TemporalEdge(0, 1, 12, 1),
        ],
    )


def test_finalise_consumes_whole_quintuple():
    rep = build_sorted_representation(_staged_graph())
    scan = new_scan(rep, get_criterion("sh"))
    pred = 0  # the (2,0,1,1) edge, covering both of node 0's first two slots
    scan.edge_count[pred] = 3
    scan.succ_hi[pred] = 1
    scan.intervals[0].append(Quintuple(0, 1, 4, deque([pred]), 3))
    finalise_up_to(scan, 0, 1)
    assert not scan.intervals[0]
    assert scan.frontier[0] == 2
    first = rep.e_dep_node[0][0]
    assert scan.edge_cost[first] == 5 and scan.edge_count[first] == 3


def test_finalise_staged_predecessor_consumption():
    """Two predecessors whose coverage ends at different positions: the
    first sub-range keeps the full count, the rest drops the consumed
    predecessor's walks."""
    rep = build_sorted_representation(_staged_graph())
    scan = new_scan(rep, get_criterion("sh"))
    pa, pb = 0, 1  # the two (2,0,...) edges acting as predecessors
    scan.edge_count[pa], scan.edge_count[pb] = 2, 3
    scan.succ_hi[pa], scan.succ_hi[pb] = 0, 1
    scan.intervals[0].append(Quintuple(0, 1, 5, deque([pa, pb]), 5))

    finalise_up_to(scan, 0, 0)
    pos0 = rep.e_dep_node[0][0]
    assert scan.edge_cost[pos0] == 6 and scan.edge_count[pos0] == 5
    q = scan.intervals[0][0]
    assert q.lo == 1 and q.eta == 3 and list(q.preds) == [pb]

    finalise_up_to(scan, 0, 1)
    pos1 = rep.e_dep_node[0][1]
    assert scan.edge_cost[pos1] == 6 and scan.edge_count[pos1] == 3
    assert not scan.intervals[0]


def test_staged_consumption_full_run_matches_oracle():
    # two equal-cost incoming walks whose reach windows end at different
    # out-edges of the middle node
    g = TemporalGraph(
        3,
        [
            TemporalEdge(0, 1, 8, 1),   # arr 9, reaches deps 9..10
            TemporalEdge(0, 1, 9, 1),   # arr 10, reaches deps 10..11
            TemporalEdge(1, 2, 10, 1),
            TemporalEdge(1, 2, 11, 1),
            TemporalEdge(1, 2, 12, 1),  # beyond both windows
        ],
    )
    rep = build_sorted_representation(g)
    crit = get_criterion("sh")
    fwd = restless_forward(rep, 0, crit, 1, debug_invariants=True)
    by_cost = _by_original(rep, fwd.edge_cost)
    by_count = _by_original(rep, fwd.edge_count)
    assert by_count[2] == 2 and by_cost[2] == 2
    assert by_count[3] == 1 and by_cost[3] == 2
    assert by_count[4] == 0 and by_cost[4] is None
    orc = oracle_betweenness(g, crit, 1)
    bc, _ = single_source_edge_betweenness(rep, 0, crit, 1)
    got = edge_bc_by_original(rep, bc)
    for e in range(g.m):
        assert got[e] == orc.edge_bc.get((0, e), F(0))


def test_unreachable_edges_score_zero(loop):
    rep = build_sorted_representation(loop)
    bc, _ = single_source_edge_betweenness(rep, 3, get_criterion("fa"), 2)
    assert bc == [F(0)] * rep.m


@pytest.mark.parametrize("crit_name", ["sh", "sfo"])
def test_beta_infinity_matches_nonrestless(crit_name):
    crit = get_criterion(crit_name)
    rng = random.Random(41)
    for _ in range(30):
        g = make_random_graph(rng)
        rep = build_sorted_representation(g)
        for s in range(g.n):
            b_fast, _ = nonrestless_run(rep, s, crit)
            b_gen, _ = single_source_edge_betweenness(rep, s, crit, None)
            assert b_fast == b_gen


@pytest.mark.parametrize("crit_name", CRITERION_NAMES)
def test_engine_equals_oracle_all_criteria(crit_name):
    crit = get_criterion(crit_name)
    rng = random.Random(43)
    for _ in range(12):
        g = make_random_graph(rng, n_max=6, m_max=14)
        for beta in (0, 2, None):
            orc = oracle_betweenness(g, crit, beta)
            rep = build_sorted_representation(g)
            for s in range(g.n):
                bc, _ = single_source_edge_betweenness(
                    rep, s, crit, beta, debug_invariants=True
                )
                got = edge_bc_by_original(rep, bc)
                for e in range(g.m):
                    assert got[e] == orc.edge_bc.get((s, e), F(0))


def test_operation_counters_stay_linear():
    """Quintuple bookkeeping touches each edge/position O(1) times."""
    rng = random.Random(47)
    for _ in range(20):
        g = make_random_graph(rng, n_max=7, m_max=18)
        rep = build_sorted_representation(g)
        for beta in (0, 1, 5, None):
            for crit_name in ("sh", "fa", "fo"):
                crit = get_criterion(crit_name)
                for s in range(g.n):
                    _, back = None, None
                    fwd = restless_forward(rep, s, crit, beta)
                    assert fwd.stats["quintuples"] <= g.m
                    assert fwd.stats["finalised"] <= g.m
                    assert fwd.stats["pred_consumed"] <= g.m
                    from tempobet.nonrestless import intermediate_phase
                    from tempobet.restless import restless_backward

                    back = intermediate_phase(rep, fwd.edge_cost, fwd.edge_count, crit)
                    restless_backward(rep, s, crit, fwd, back)
                    assert fwd.stats["window_ops"] <= 4 * g.m + 4
