"""Single-source betweenness engine for unrestricted waiting (hop costs).

Handles the fewest-edges ("sh") and earliest-arrival-then-fewest-edges
("sfo") criteria when the waiting bound is infinite.  Three phases over
the by-arrival edge order:

forward   -- for every edge e, the minimum hop count edge_cost[e] over
             walks ending with e and the exact number edge_count[e] of
             such walks.  Works because an edge appended to a walk always
             arrives strictly later than the walk it extends, so the
             by-arrival order is a topological order of walk extension.
backward  -- edge betweenness via the successor recursion: an edge's
             score is its walk count times the sum of score/count over
             its successors, plus a terminal share when the edge itself
             ends a target-optimal walk.
intermediate (shared with the restless engine) -- per-node optimal
             target values and the counts feeding the terminal shares.

Costs here are plain ints (hop counts); unreachable is None.  Walk
counts are exact ints; betweenness is Fraction in exact mode, float in
fast mode.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .costs import Criterion
from .graph import SortedRepresentation


class NumericOverflowError(OverflowError):
    """Fast mode exceeded float range; exact mode would succeed."""


def _ratio(num: int, den: int, exact: bool):
    if exact:
        return Fraction(num, den)
    try:
        return float(num) / float(den)
    except OverflowError:
        raise NumericOverflowError(
            "walk counts exceed float range; use exact mode"
        ) from None


@dataclass
class ForwardState:
    """Per-node and per-edge results of the forward scan.

    Edge arrays are indexed by position in the by-arrival order.
    succ_start[e] is the first position in the head's by-departure list
    that can extend an optimal walk ending with e; -1 when e was not
    ending an optimal walk to its head at scan time (such an edge has no
    successors at all).
    """

    best_cost: list[int | None]
    best_count: list[int]
    frontier: list[int]
    edge_cost: list[int | None]
    edge_count: list[int]
    succ_start: list[int]


@dataclass
class BackwardState:
    """Target-side counts and the final per-edge betweenness."""

    best_target: list[object]
    target_count: list[int]
    edge_target_count: list[int]
    edge_bc: list[object]

    def reachable(self, v: int) -> bool:
        return self.target_count[v] > 0


def forward_phase(rep: SortedRepresentation, source: int) -> ForwardState:
    """Scan edges by arrival, counting minimum-hop walks from ``source``.

    An out-edge of v is "finalised" the moment no later-scanned walk can
    still be extended by it; at that moment the node's running optimum
    (best_cost, best_count) is exactly the optimum over the walks it can
    extend.  Tail side: scanning e finalises every earlier-departing
    out-edge of its tail, e included.  Head side: when e ends an optimal
    walk to its head, out-edges departing before arr(e) are finalised and
    the node optimum absorbs e's walks.
    """
    n = rep.graph.n
    m = rep.m
    best_cost: list[int | None] = [None] * n
    best_count = [0] * n
    frontier = [0] * n
    edge_cost: list[int | None] = [None] * m
    edge_count = [0] * m
    succ_start = [-1] * m

    e_dep_node = rep.e_dep_node
    e_arr_dep = rep.e_arr_dep
    tails, heads, deps, arrs = rep.tails, rep.heads, rep.deps, rep.arrs

    for k in range(m):
        u = tails[k]
        i = e_arr_dep[k]
        if i >= frontier[u]:
            cu, su = best_cost[u], best_count[u]
            if su:
                lst = e_dep_node[u]
                cu1 = cu + 1
                for p in range(frontier[u], i + 1):
                    f = lst[p]
                    edge_cost[f] = cu1
                    edge_count[f] = su
            frontier[u] = i + 1
        if u == source:
            # The single-edge walk always beats any walk returning to the
            # source and continuing (hop costs are strictly increasing).
            edge_cost[k] = 1
            edge_count[k] = 1
        ck = edge_cost[k]
        if not edge_count[k]:
            continue
        v = heads[k]
        cv = best_cost[v]
        if cv is None or ck <= cv:
            arr_k = arrs[k]
            lst = e_dep_node[v]
            a = frontier[v]
            sv = best_count[v]
            cv1 = None if cv is None else cv + 1
            while a < len(lst) and deps[lst[a]] < arr_k:
                if sv:
                    f = lst[a]
                    edge_cost[f] = cv1
                    edge_count[f] = sv
                a += 1
            frontier[v] = a
            succ_start[k] = a
            if cv is None or ck < cv:
                best_cost[v] = ck
                best_count[v] = edge_count[k]
            else:
                best_count[v] += edge_count[k]

    return ForwardState(best_cost, best_count, frontier, edge_cost, edge_count, succ_start)


def intermediate_phase(
    rep: SortedRepresentation,
    edge_cost: list,
    edge_count: list[int],
    criterion: Criterion,
) -> BackwardState:
    """Per-node optimal target values and optimal-ending-walk counts.

    Generic over criteria: works for any cost domain the forward pass
    produced, which is why the restless engine reuses it.
    """
    graph = rep.graph
    n, m = graph.n, rep.m
    heads, e_arr = rep.heads, rep.e_arr
    tc = criterion.tc
    t_less = criterion.target.less

    best_target: list[object] = [None] * n
    edge_tc: list[object] = [None] * m
    for k in range(m):
        if not edge_count[k]:
            continue
        val = tc(graph.edges[e_arr[k]], edge_cost[k])
        edge_tc[k] = val
        v = heads[k]
        cur = best_target[v]
        if cur is None or t_less(val, cur):
            best_target[v] = val

    target_count = [0] * n
    edge_target_count = [0] * m
    t_eq = criterion.target.eq
    for k in range(m):
        if not edge_count[k]:
            continue
        v = heads[k]
        if t_eq(edge_tc[k], best_target[v]):
            edge_target_count[k] = edge_count[k]
            target_count[v] += edge_count[k]

    return BackwardState(best_target, target_count, edge_target_count, [])


def backward_phase(
    rep: SortedRepresentation,
    source: int,
    fwd: ForwardState,
    back: BackwardState,
    exact: bool = True,
) -> list:
    """Per-edge betweenness for one source, by the successor recursion.

    Scans edges in reverse arrival order keeping, per node, a sliding
    window sum over the node's by-departure list: the successors of the
    edge being scanned are exactly the window positions whose optimal
    hop count extends the edge's own (window start = succ_start, with
    a per-position hop filter).  Among edges that can have successors,
    hop counts never decrease as the scan moves to earlier arrivals, so
    windows only ever slide left and each position is summed once per
    run of equal hop counts.
    """
    n = rep.graph.n
    m = rep.m
    zero = Fraction(0) if exact else 0.0
    edge_bc: list = [zero] * m
    delta: list = [zero] * n
    win_lo = [len(lst) for lst in rep.e_dep_node]
    run_cost: list[int | None] = [None] * n

    heads = rep.heads
    e_dep_node = rep.e_dep_node
    edge_cost, edge_count, succ_start = fwd.edge_cost, fwd.edge_count, fwd.succ_start
    edge_target_count, target_count = back.edge_target_count, back.target_count

    for k in range(m - 1, -1, -1):
        cnt = edge_count[k]
        if not cnt:
            continue
        v = heads[k]
        score = zero
        ls = succ_start[k]
        if ls >= 0:
            ck1 = edge_cost[k] + 1
            if run_cost[v] != ck1:
                run_cost[v] = ck1
                delta[v] = zero
            lst = e_dep_node[v]
            d = delta[v]
            for p in range(ls, win_lo[v]):
                f = lst[p]
                if edge_cost[f] == ck1:
                    d += edge_bc[f] / edge_count[f]
            delta[v] = d
            win_lo[v] = ls
            if d:
                score = cnt * d
        etc = edge_target_count[k]
        if etc and v != source:
            score = score + _ratio(etc, target_count[v], exact)
        edge_bc[k] = score

    back.edge_bc = edge_bc
    return edge_bc


def single_source_edge_betweenness(
    rep: SortedRepresentation,
    source: int,
    criterion: Criterion,
    exact: bool = True,
) -> tuple[list, BackwardState]:
    """All three phases for one source; returns (edge scores, counts)."""
    if criterion.name not in ("sh", "sfo"):
        raise ValueError(
            f"non-restless engine supports sh and sfo, not {criterion.name!r}"
        )
    fwd = forward_phase(rep, source)
    back = intermediate_phase(rep, fwd.edge_cost, fwd.edge_count, criterion)
    edge_bc = backward_phase(rep, source, fwd, back, exact)
    return edge_bc, back
