"""Temporal graph model, edge-list ingestion, and sorted edge indexes.

A temporal edge (tail, head, dep, travel) can be traversed from its tail
starting at time ``dep`` and reaches its head at time ``dep + travel``.
Travel times are required to be >= 1, so every walk is strict (departure
times strictly increase along it).

The engines never look at the raw edge list directly; they work on a
SortedRepresentation that holds the edges sorted by arrival time plus,
per node, the outgoing edges sorted by departure time.  All derived
index lists identify an edge by its position in the by-arrival order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import TextIO

#: Waiting bound meaning "unrestricted"; kept as a distinct sentinel and
#: never used in arithmetic.
INFINITY = None


class ParseError(ValueError):
    """Raised for malformed edge-list input; carries the line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class TemporalEdge:
    """One temporal edge. ``arr`` is always ``dep + travel``."""

    tail: int
    head: int
    dep: int
    travel: int

    @property
    def arr(self) -> int:
        return self.dep + self.travel


@dataclass
class TemporalGraph:
    """A multigraph of temporal edges over dense 0-based node ids.

    ``beta`` is the maximum waiting time between consecutive edges of a
    walk; ``None`` means unrestricted waiting.  ``labels[i]`` holds the
    original string label of node ``i``.
    """

    n: int
    edges: list[TemporalEdge]
    beta: int | None = INFINITY
    labels: list[str] = field(default_factory=list)
    label_ids: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.labels:
            self.labels = [str(i) for i in range(self.n)]
        if not self.label_ids:
            self.label_ids = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def distinct_departures(self) -> int:
        return len({e.dep for e in self.edges})

    def with_beta(self, beta: int | None) -> "TemporalGraph":
        return TemporalGraph(self.n, self.edges, beta, self.labels, self.label_ids)


@dataclass
class StaticDigraph:
    """Directed static graph: node count plus distinct (tail, head) pairs."""

    n: int
    edges: list[tuple[int, int]]

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass
class SortedRepresentation:
    """Doubly-sorted edge indexes of a temporal graph.

    e_arr       -- original edge indices sorted by non-decreasing arrival.
    e_dep       -- by-departure order, stored as positions into e_arr.
    e_dep_node  -- per node, positions into e_arr of its outgoing edges,
                   sorted by non-decreasing departure.
    e_arr_dep   -- for the edge at e_arr position i, its index inside
                   e_dep_node[tail].

    The flat arrays (tails/heads/deps/arrs, indexed by e_arr position)
    are what the engines actually iterate over.
    """

    graph: TemporalGraph
    e_arr: list[int]
    e_dep: list[int]
    e_dep_node: list[list[int]]
    e_arr_dep: list[int]
    tails: list[int]
    heads: list[int]
    deps: list[int]
    arrs: list[int]

    @property
    def m(self) -> int:
        return len(self.e_arr)


def parse_edge_list(
    stream: TextIO | str,
    undirected: bool = False,
    default_travel: int = 1,
) -> TemporalGraph:
    """Parse whitespace-separated edge-list text into a TemporalGraph.

    Each non-empty, non-comment ('#') line holds 3 or 4 tokens:
    ``tail head dep [travel]``.  Labels are mapped to dense ids in first
    appearance order.  With ``undirected`` every line yields both edge
    orientations.  Raises ParseError with the offending line number for
    malformed lines, non-positive travel times, or self-loops.
    """
    if default_travel < 1:
        raise ValueError("default_travel must be >= 1")
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()

    labels: list[str] = []
    ids: dict[str, int] = {}
    edges: list[TemporalEdge] = []

    def node_id(token: str) -> int:
        nid = ids.get(token)
        if nid is None:
            nid = len(labels)
            ids[token] = nid
            labels.append(token)
        return nid

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) not in (3, 4):
            raise ParseError(line_no, f"expected 3 or 4 tokens, got {len(tokens)}")
        try:
            dep = int(tokens[2])
            travel = int(tokens[3]) if len(tokens) == 4 else default_travel
        except ValueError:
            raise ParseError(line_no, f"non-integer time field in {line!r}") from None
        if travel <= 0:
            raise ParseError(line_no, f"travel time must be positive, got {travel}")
        if tokens[0] == tokens[1]:
            raise ParseError(line_no, f"self-loop {tokens[0]!r} rejected")
        u, v = node_id(tokens[0]), node_id(tokens[1])
        edges.append(TemporalEdge(u, v, dep, travel))
        if undirected:
            edges.append(TemporalEdge(v, u, dep, travel))

    return TemporalGraph(len(labels), edges, INFINITY, labels, ids)


def to_edge_list(graph: TemporalGraph) -> str:
    """Serialize a graph back to edge-list text (one directed edge per line)."""
    out = []
    for e in graph.edges:
        out.append(f"{graph.labels[e.tail]} {graph.labels[e.head]} {e.dep} {e.travel}")
    return "\n".join(out) + ("\n" if out else "")


def build_sorted_representation(graph: TemporalGraph) -> SortedRepresentation:
    """Build all four sorted index lists; ties keep input order (stable)."""
    m = graph.m
    order_arr = sorted(range(m), key=lambda i: graph.edges[i].arr)
    pos_of = [0] * m
    for pos, orig in enumerate(order_arr):
        pos_of[orig] = pos
    order_dep = sorted(range(m), key=lambda i: graph.edges[i].dep)
    e_dep = [pos_of[i] for i in order_dep]

    e_dep_node: list[list[int]] = [[] for _ in range(graph.n)]
    e_arr_dep = [0] * m
    for pos in e_dep:
        tail = graph.edges[order_arr[pos]].tail
        e_arr_dep[pos] = len(e_dep_node[tail])
        e_dep_node[tail].append(pos)

    tails = [graph.edges[i].tail for i in order_arr]
    heads = [graph.edges[i].head for i in order_arr]
    deps = [graph.edges[i].dep for i in order_arr]
    arrs = [graph.edges[i].arr for i in order_arr]
    return SortedRepresentation(
        graph, order_arr, e_dep, e_dep_node, e_arr_dep, tails, heads, deps, arrs
    )


def underlying_graph(graph: TemporalGraph) -> StaticDigraph:
    """Collapse temporal edges to the distinct (tail, head) pairs."""
    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    for e in graph.edges:
        key = (e.tail, e.head)
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return StaticDigraph(graph.n, pairs)


def random_temporal_graph(
    n: int,
    m: int,
    t_max: int,
    seed: int,
    travel_max: int = 3,
) -> TemporalGraph:
    """Seeded Erdos-Renyi-style temporal graph for benchmarks and tests.

    Edges get uniform endpoints (tail != head), departure in [1, t_max],
    travel in [1, travel_max].
    """
    if m > 0 and n < 2:
        raise ValueError("need at least 2 nodes to place self-loop-free edges")
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        edges.append(TemporalEdge(u, v, rng.randint(1, t_max), rng.randint(1, travel_max)))
    return TemporalGraph(n, edges)
