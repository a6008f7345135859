"""Single-source betweenness engine for bounded waiting (any criterion).

With a finite waiting bound an out-edge of v no longer extends every
earlier-arriving walk: each walk reaches only the out-edges departing
inside its waiting window.  The forward scan therefore keeps, per node,
a list of disjoint *interval quintuples* (lo, hi, cost, preds, eta)
over the node's by-departure edge list:

    positions lo..hi currently extend optimal incoming walks of cost
    ``cost``; ``preds`` are the edges ending those walks, in arrival
    order, each covering a recorded window [succ_lo[p], succ_hi[p]] of
    positions; ``eta`` is the number of those walks not yet consumed by
    finalisation.

Because a newly scanned edge arrives no earlier than every previous
one, trimming the positions that depart before its arrival leaves the
whole remaining list inside the new edge's reach window; the insert is
then a comparison against a cost-sorted list: keep strictly cheaper
quintuples, merge into an equal-cost one, replace strictly costlier
ones, and take over the never-covered tail.  Costs along the list stay
non-decreasing, which keeps every edge's coverage a single interval.

A position is finalised (its optimal cost and walk count frozen) once
no future edge can reach it, consuming its quintuple's predecessors in
order.  The backward phase is the same successor recursion as the
non-restless engine, except an edge's successor window is its recorded
coverage interval and the per-node running sum follows those windows
right to left, dropping positions that fall off the right end.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .costs import Criterion
from .graph import SortedRepresentation
from .nonrestless import BackwardState, _ratio, intermediate_phase


@dataclass
class Quintuple:
    lo: int
    hi: int
    cost: object
    preds: deque
    eta: int


@dataclass
class RestlessScan:
    """Mutable forward-scan state for one source.

    Edge arrays are indexed by position in the by-arrival order;
    ``intervals[v]`` and ``frontier[v]`` describe node v's by-departure
    list: positions below the frontier are finalised, positions at or
    above it are covered by the interval quintuples (or by nothing, if
    no walk can reach them).
    """

    rep: SortedRepresentation
    criterion: Criterion
    gammas: list
    edge_cost: list
    edge_count: list[int]
    succ_lo: list[int]
    succ_hi: list[int]
    intervals: list[deque]
    frontier: list[int]
    stats: dict[str, int] = field(default_factory=dict)

    def check_invariants(self) -> None:
        """Debug-only: quintuple bookkeeping matches its predecessor lists."""
        for v, ivs in enumerate(self.intervals):
            prev_hi = self.frontier[v] - 1
            for q in ivs:
                assert self.frontier[v] <= q.lo <= q.hi, (v, q)
                assert q.lo > prev_hi, "intervals must be disjoint and ordered"
                assert q.eta == sum(self.edge_count[p] for p in q.preds), (v, q)
                assert all(self.succ_hi[p] >= q.lo for p in q.preds), (v, q)
                prev_hi = q.hi


def new_scan(rep: SortedRepresentation, criterion: Criterion) -> RestlessScan:
    m = rep.m
    gamma = criterion.cost.gamma
    gammas = [gamma(rep.graph.edges[rep.e_arr[k]]) for k in range(m)]
    return RestlessScan(
        rep=rep,
        criterion=criterion,
        gammas=gammas,
        edge_cost=[None] * m,
        edge_count=[0] * m,
        succ_lo=[0] * m,
        succ_hi=[-1] * m,
        intervals=[deque() for _ in range(rep.graph.n)],
        frontier=[0] * rep.graph.n,
        stats={"quintuples": 0, "finalised": 0, "pred_consumed": 0},
    )


def finalise_up_to(scan: RestlessScan, v: int, j: int) -> None:
    """Freeze cost/count of positions frontier[v]..j of v's out list.

    Walks front quintuples, consuming predecessors whose coverage ends
    by j: positions up to that coverage end get cost+gamma and the
    current eta, after which the predecessor's own walks no longer count
    (eta shrinks).  Uncovered positions stay unreachable.  No-op when j
    is below the frontier.
    """
    if j < scan.frontier[v]:
        return
    lst = scan.rep.e_dep_node[v]
    ivs = scan.intervals[v]
    edge_cost, edge_count = scan.edge_cost, scan.edge_count
    succ_hi = scan.succ_hi
    combine = scan.criterion.cost.combine
    gammas = scan.gammas
    stats = scan.stats
    while ivs:
        q = ivs[0]
        if q.lo > j:
            break
        preds = q.preds
        while preds and succ_hi[preds[0]] <= j:
            p = preds.popleft()
            stats["pred_consumed"] += 1
            rp = succ_hi[p]
            for pos in range(q.lo, rp + 1):
                f = lst[pos]
                edge_cost[f] = combine(q.cost, gammas[f])
                edge_count[f] = q.eta
                stats["finalised"] += 1
            if rp >= q.lo:
                q.lo = rp + 1
            q.eta -= edge_count[p]
        if q.hi <= j:
            # every pred's coverage ends by q.hi <= j, so all were
            # consumed above and q.lo has moved past q.hi
            ivs.popleft()
        else:
            for pos in range(q.lo, j + 1):
                f = lst[pos]
                edge_cost[f] = combine(q.cost, gammas[f])
                edge_count[f] = q.eta
                stats["finalised"] += 1
            q.lo = j + 1
            break
    scan.frontier[v] = j + 1


def restless_forward(
    rep: SortedRepresentation,
    source: int,
    criterion: Criterion,
    beta: int | None,
    debug_invariants: bool = False,
) -> RestlessScan:
    """Optimal-walk cost and count per edge under waiting bound ``beta``."""
    graph = rep.graph
    n, m = graph.n, rep.m
    cost = criterion.cost
    c_less, c_eq = cost.less, cost.eq

    scan = new_scan(rep, criterion)
    gammas = scan.gammas
    edge_cost, edge_count = scan.edge_cost, scan.edge_count
    succ_lo, succ_hi = scan.succ_lo, scan.succ_hi
    intervals, frontier = scan.intervals, scan.frontier

    e_dep_node = rep.e_dep_node
    e_arr_dep = rep.e_arr_dep
    tails, heads, deps, arrs = rep.tails, rep.heads, rep.deps, rep.arrs
    ws_cur = [0] * n
    we_cur = [-1] * n

    for k in range(m):
        u = tails[k]
        i = e_arr_dep[k]
        if i >= frontier[u]:
            finalise_up_to(scan, u, i)
        if u == source:
            # merge in the single-edge walk as one more candidate
            g = gammas[k]
            if not edge_count[k] or c_less(g, edge_cost[k]):
                edge_cost[k] = g
                edge_count[k] = 1
            elif c_eq(g, edge_cost[k]):
                edge_count[k] += 1
        if not edge_count[k]:
            continue

        v = heads[k]
        lst = e_dep_node[v]
        llen = len(lst)
        arr_k = arrs[k]

        ws = ws_cur[v]
        while ws < llen and deps[lst[ws]] < arr_k:
            ws += 1
        ws_cur[v] = ws
        if ws > frontier[v]:
            finalise_up_to(scan, v, ws - 1)
        if beta is None:
            we = llen - 1
        else:
            we = we_cur[v]
            if we < ws - 1:
                we = ws - 1
            reach = arr_k + beta
            while we + 1 < llen and deps[lst[we + 1]] <= reach:
                we += 1
            we_cur[v] = we
        if ws > we:
            succ_lo[k], succ_hi[k] = ws, ws - 1
            continue

        # Post-trim the whole list lies inside [ws, we]; merge by cost.
        # Fresh coverage must not reopen positions a tail-side pass of v
        # already finalised, hence the frontier clamp.
        ivs = intervals[v]
        ck = edge_cost[k]
        new_lo = ivs[-1].hi + 1 if ivs else max(ws, frontier[v])
        while ivs and c_less(ck, ivs[-1].cost):
            new_lo = ivs[-1].lo
            ivs.pop()
        if ivs and c_eq(ivs[-1].cost, ck):
            q = ivs[-1]
            q.hi = we
            q.preds.append(k)
            q.eta += edge_count[k]
            succ_lo[k], succ_hi[k] = q.lo, we
        elif new_lo <= we:
            ivs.append(Quintuple(new_lo, we, ck, deque([k]), edge_count[k]))
            scan.stats["quintuples"] += 1
            succ_lo[k], succ_hi[k] = new_lo, we
        else:
            # strictly worse than all live walks and no uncovered tail
            succ_lo[k], succ_hi[k] = we + 1, we
        if debug_invariants:
            scan.check_invariants()

    for v in range(n):
        if e_dep_node[v]:
            finalise_up_to(scan, v, len(e_dep_node[v]) - 1)

    return scan


def restless_backward(
    rep: SortedRepresentation,
    source: int,
    criterion: Criterion,
    fwd: RestlessScan,
    back: BackwardState,
    exact: bool = True,
) -> list:
    """Per-edge betweenness from the recorded successor windows.

    Window right ends never grow as the scan moves to earlier arrivals,
    so the per-node running sum mostly slides left; it is rebuilt when
    the scanned edge's walk cost differs from the window's current cost
    class (a successor must extend that exact cost, so sums for one
    class are useless for another).
    """
    graph = rep.graph
    n, m = graph.n, rep.m
    combine = criterion.cost.combine
    heads = rep.heads
    e_dep_node = rep.e_dep_node
    gammas = fwd.gammas

    edge_cost, edge_count = fwd.edge_cost, fwd.edge_count
    succ_lo, succ_hi = fwd.succ_lo, fwd.succ_hi
    edge_target_count, target_count = back.edge_target_count, back.target_count
    stats = fwd.stats
    stats.setdefault("window_ops", 0)

    zero = Fraction(0) if exact else 0.0
    edge_bc: list = [zero] * m
    delta: list = [zero] * n
    cur_lo = [0] * n
    cur_hi = [-1] * n
    cur_class: list = [None] * n
    has_class = [False] * n

    for k in range(m - 1, -1, -1):
        cnt = edge_count[k]
        if not cnt:
            continue
        v = heads[k]
        score = zero
        lo, hi = succ_lo[k], succ_hi[k]
        if lo <= hi:
            lst = e_dep_node[v]
            cls = edge_cost[k]
            d = delta[v]
            if not has_class[v] or cur_class[v] != cls or hi < cur_lo[v]:
                d = zero
                for pos in range(lo, hi + 1):
                    f = lst[pos]
                    if edge_count[f] and edge_cost[f] == combine(cls, gammas[f]):
                        d += edge_bc[f] / edge_count[f]
                stats["window_ops"] += hi - lo + 1
                cur_lo[v], cur_hi[v] = lo, hi
                cur_class[v] = cls
                has_class[v] = True
            else:
                while cur_hi[v] > hi:
                    pos = cur_hi[v]
                    f = lst[pos]
                    if edge_count[f] and edge_cost[f] == combine(cls, gammas[f]):
                        d -= edge_bc[f] / edge_count[f]
                    cur_hi[v] = pos - 1
                    stats["window_ops"] += 1
                while cur_lo[v] > lo:
                    pos = cur_lo[v] - 1
                    f = lst[pos]
                    if edge_count[f] and edge_cost[f] == combine(cls, gammas[f]):
                        d += edge_bc[f] / edge_count[f]
                    cur_lo[v] = pos
                    stats["window_ops"] += 1
            delta[v] = d
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
    beta: int | None,
    exact: bool = True,
    debug_invariants: bool = False,
) -> tuple[list, BackwardState]:
    """All three phases for one source under any criterion and bound."""
    fwd = restless_forward(rep, source, criterion, beta, debug_invariants)
    back = intermediate_phase(rep, fwd.edge_cost, fwd.edge_count, criterion)
    edge_bc = restless_backward(rep, source, criterion, fwd, back, exact)
    return edge_bc, back
