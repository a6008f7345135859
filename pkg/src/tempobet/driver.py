"""All-sources orchestration: per-source engine runs, node aggregation.

Node betweenness is assembled from per-source edge betweenness: a
node's score is, over every other source, the sum of scores of its
incoming edges minus that source's node-as-target share.  The share is
1 whenever the node is reachable, except under the latest-departure
criterion, where optimal walks may revisit their own target and the
share needs exact revisit counts (see revisit_continuations).

Sources can run in parallel workers; each worker owns its engine state
and shares only the immutable graph, and the merge is a plain sum in
fixed source order, so results are independent of the worker count.
"""
from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import nonrestless, restless
from .costs import ConfigError, Criterion, get_criterion
from .nonrestless import _ratio
from .graph import SortedRepresentation, TemporalGraph, build_sorted_representation


@dataclass
class NodeBetweenness:
    """Per-node scores plus the run's identity (criterion, beta, sources)."""

    labels: list[str]
    values: list
    criterion: str
    beta: int | None
    source_count: int
    mode: str = "exact"

    def as_dict(self) -> dict[str, object]:
        return dict(zip(self.labels, self.values))

    def ranking(self) -> list[tuple[str, object]]:
        return sorted(self.as_dict().items(), key=lambda kv: (-kv[1], kv[0]))


def _resolve_criterion(criterion: str | Criterion) -> Criterion:
    if isinstance(criterion, Criterion):
        return criterion
    return get_criterion(criterion)


def _pick_engine(criterion: Criterion, beta: int | None, engine: str) -> str:
    if engine == "auto":
        if beta is None and criterion.name in ("sh", "sfo"):
            return "nonrestless"
        return "restless"
    if engine == "nonrestless" and (beta is not None or criterion.name not in ("sh", "sfo")):
        raise ConfigError("nonrestless engine requires beta=inf and sh/sfo")
    return engine


def single_source_edge_betweenness(
    rep: SortedRepresentation,
    source: int,
    criterion: str | Criterion,
    beta: int | None,
    exact: bool = True,
    engine: str = "auto",
):
    """Edge betweenness and counts for one source, engine auto-selected."""
    crit = _resolve_criterion(criterion)
    which = _pick_engine(crit, beta, engine)
    if which == "nonrestless":
        return nonrestless.single_source_edge_betweenness(rep, source, crit, exact)
    return restless.single_source_edge_betweenness(rep, source, crit, beta, exact)


def revisit_continuations(rep: SortedRepresentation, beta: int | None) -> list[int]:
    """For each edge e, the number of walk continuations of e that end
    back at e's own head.

    Sums of per-edge betweenness over a node's incoming edges count the
    node-as-target share once per *occurrence* of the node in a walk.
    For every criterion except latest departure an optimal walk cannot
    revisit its own target (its prefix would beat it), so that share is
    exactly 1 per reachable source and subtracting the reachability
    indicator is enough.  Latest-departure walks keep their score when
    extended, so the node aggregation must subtract the exact share; the
    counts returned here (independent of the source) provide it.

    Counts are computed per head node with a right-to-left sliding
    window over extension edges, O(M) per distinct head.
    """
    m = rep.m
    deps, arrs, heads = rep.deps, rep.arrs, rep.heads
    e_dep_node = rep.e_dep_node
    k_table = [0] * m
    for u in set(heads):
        walks_to_u = [0] * m
        lo = [len(lst) for lst in e_dep_node]
        hi = [len(lst) - 1 for lst in e_dep_node]
        window_sum = [0] * rep.graph.n
        # reverse arrival order: every extension edge is processed first,
        # and per node both window ends only ever move left
        for k in range(m - 1, -1, -1):
            v = heads[k]
            lst = e_dep_node[v]
            arr_k = arrs[k]
            if beta is not None:
                reach = arr_k + beta
                h = hi[v]
                while h >= 0 and deps[lst[h]] > reach:
                    if h >= lo[v]:
                        window_sum[v] -= walks_to_u[lst[h]]
                    h -= 1
                hi[v] = h
            left = lo[v]
            h = hi[v]
            while left > 0 and deps[lst[left - 1]] >= arr_k:
                left -= 1
                if left <= h:
                    window_sum[v] += walks_to_u[lst[left]]
            lo[v] = left
            walks_to_u[k] = (1 if v == u else 0) + window_sum[v]
            if v == u:
                k_table[k] = window_sum[v]
    return k_table


def _source_contribution(
    rep: SortedRepresentation,
    source: int,
    crit: Criterion,
    beta: int | None,
    exact: bool,
    engine: str,
    revisit_table: list[int] | None = None,
) -> list:
    """This source's additive share of every node's betweenness."""
    edge_bc, back = single_source_edge_betweenness(rep, source, crit, beta, exact, engine)
    n = rep.graph.n
    zero = Fraction(0) if exact else 0.0
    contrib = [zero] * n
    heads = rep.heads
    for k, val in enumerate(edge_bc):
        if val:
            contrib[heads[k]] += val
    for u in range(n):
        if u != source and back.target_count[u] > 0:
            contrib[u] -= 1
    if revisit_table is not None:
        extra: dict[int, int] = {}
        for k, cont in enumerate(revisit_table):
            if cont and back.edge_target_count[k]:
                u = heads[k]
                extra[u] = extra.get(u, 0) + back.edge_target_count[k] * cont
        for u, mass in extra.items():
            if u != source:
                contrib[u] -= _ratio(mass, back.target_count[u], exact)
    contrib[source] = zero
    return contrib


_WORKER_STATE: dict = {}


def _worker_init(graph: TemporalGraph, crit_name: str, beta, exact: bool, engine: str) -> None:
    rep = build_sorted_representation(graph)
    crit = get_criterion(crit_name)
    _WORKER_STATE["rep"] = rep
    _WORKER_STATE["crit"] = crit
    _WORKER_STATE["beta"] = beta
    _WORKER_STATE["exact"] = exact
    _WORKER_STATE["engine"] = engine
    _WORKER_STATE["revisit"] = (
        revisit_continuations(rep, beta) if crit.name == "la" else None
    )


def _worker_run(source: int):
    st = _WORKER_STATE
    return source, _source_contribution(
        st["rep"], source, st["crit"], st["beta"], st["exact"], st["engine"],
        st["revisit"],
    )


def node_betweenness(
    graph: TemporalGraph,
    criterion: str | Criterion = "sh",
    beta: int | None = None,
    sources: Sequence[int] | None = None,
    mode: str = "exact",
    workers: int = 1,
    engine: str = "auto",
) -> NodeBetweenness:
    """Betweenness of every node, summed over the given sources.

    ``sources`` defaults to all nodes; passing a subset computes the
    partial sums over just those sources (the result is additive over
    disjoint source sets).  ``mode`` is "exact" (rationals) or "fast"
    (float accumulation; raises NumericOverflowError if walk counts
    exceed float range).
    """
    if mode not in ("exact", "fast"):
        raise ConfigError(f"unknown mode {mode!r}; expected exact or fast")
    if workers < 1:
        raise ConfigError("workers must be >= 1")
    crit = _resolve_criterion(criterion)
    _pick_engine(crit, beta, engine)
    exact = mode == "exact"
    src_list = list(range(graph.n)) if sources is None else list(sources)

    per_source: dict[int, list] = {}
    if workers == 1 or len(src_list) <= 1:
        rep = build_sorted_representation(graph)
        revisit = revisit_continuations(rep, beta) if crit.name == "la" else None
        for s in src_list:
            per_source[s] = _source_contribution(rep, s, crit, beta, exact, engine, revisit)
    else:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=workers,
            initializer=_worker_init,
            initargs=(graph, crit.name, beta, exact, engine),
        ) as pool:
            for s, contrib in pool.map(_worker_run, src_list, chunksize=8):
                per_source[s] = contrib

    zero = Fraction(0) if exact else 0.0
    values = [zero] * graph.n
    for s in sorted(per_source):
        contrib = per_source[s]
        for u in range(graph.n):
            values[u] += contrib[u]
    return NodeBetweenness(
        list(graph.labels), values, crit.name, beta, len(src_list), mode
    )
