"""Combined feedback-vertex-set / undirected-multiway-cut solving.

Given a mixed graph with a feedback vertex set ``s`` and a budget, find a
set of at most ``budget`` vertices, disjoint from ``s``, that kills every
cycle and at the same time disconnects every pair of ``s``-vertices in the
edge-only restriction.  After preprocessing (which forces away loops,
2-cycles through ``s`` and shared edge-neighbours), each compatible ordering
of ``s`` turns the question into one skew separator instance: the ordering's
vertices are exploded into aligned source/sink fans, and remaining edges
become antiparallel arc pairs.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from itertools import permutations

from .graph import MixedGraph, VertexId
from .result import SolveResult
from .skew import SkewInstance, solve_skew

Numbering = tuple[VertexId, ...]


@dataclass(frozen=True)
class FvsUmcInstance:
    graph: MixedGraph
    s: frozenset[VertexId]
    budget: int

    def validate(self) -> None:
        if not self.s <= self.graph.vertices:
            raise ValueError(f"vertices not in graph: {sorted(self.s - self.graph.vertices)}")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if not self.graph.is_fvs(self.s):
            raise ValueError("s must be a feedback vertex set")


@dataclass(frozen=True)
class PreprocessOutcome:
    """Reduced instance plus the vertices every solution must contain."""

    reduced: FvsUmcInstance | None
    forced: frozenset[VertexId]
    infeasible: bool


def preprocess_fvs_umc(inst: FvsUmcInstance) -> PreprocessOutcome:
    """Force away short cycles and shared edge-neighbours, or report a dead end.

    Infeasible when the subgraph induced by ``s`` has an edge or a cycle, or
    when a forced deletion is due but the budget is exhausted.  On success,
    the reduced graph has no cycle shorter than three and no vertex with
    edges to two distinct ``s``-vertices.
    """
    g, s, budget = inst.graph, frozenset(inst.s), inst.budget
    if not s <= g.vertices:
        raise ValueError(f"vertices not in graph: {sorted(s - g.vertices)}")
    if any(u in s and v in s for u, v in g.edges.values()):
        return PreprocessOutcome(None, frozenset(), True)
    if g.induced_subgraph(s).has_cycle():
        return PreprocessOutcome(None, frozenset(), True)
    forced: set[VertexId] = set()
    while True:
        v = _first_forced(g, s)
        if v is None:
            break
        if budget == 0:
            return PreprocessOutcome(None, frozenset(forced), True)
        forced.add(v)
        budget -= 1
        g = g.delete_vertices({v})
    return PreprocessOutcome(FvsUmcInstance(g, s, budget), frozenset(forced), False)


def _first_forced(g: MixedGraph, s: frozenset[VertexId]) -> VertexId | None:
    """Smallest non-s vertex that every solution must contain, if any."""
    loops: set[VertexId] = set()
    edge_links: dict[VertexId, dict[VertexId, int]] = {}
    arc_links: dict[tuple[VertexId, VertexId], int] = {}
    for u, v in g.edges.values():
        if u == v:
            loops.add(u)
            continue
        edge_links.setdefault(u, {}).setdefault(v, 0)
        edge_links.setdefault(v, {}).setdefault(u, 0)
        edge_links[u][v] += 1
        edge_links[v][u] += 1
    for u, v in g.arcs.values():
        if u == v:
            loops.add(u)
            continue
        arc_links[(u, v)] = arc_links.get((u, v), 0) + 1
    for v in sorted(g.vertices - s):
        if v in loops:
            return v
        s_edge_neighbours = 0
        for x, count in edge_links.get(v, {}).items():
            if x not in s:
                continue
            s_edge_neighbours += 1
            # 2-cycle with a marked vertex: parallel edges, or an edge plus
            # any arc between the pair, or antiparallel arcs.
            if count >= 2 or (v, x) in arc_links or (x, v) in arc_links:
                return v
        if s_edge_neighbours >= 2:
            return v
        for x in sorted(s):
            if (v, x) in arc_links and (x, v) in arc_links:
                return v
    return None


def arc_compatible_numberings(
    g: MixedGraph, s: Iterable[VertexId]
) -> Iterator[Numbering]:
    """Orderings of s with no arc from a later position to an earlier one,
    yielded in lexicographic id order."""
    ordered = sorted(frozenset(s))
    arc_pairs = {pair for pair in g.arcs.values()}
    for perm in permutations(ordered):
        if all(
            (perm[i], perm[j]) not in arc_pairs
            for i in range(len(perm))
            for j in range(i)
        ):
            yield perm


def build_skew_reduction(
    g: MixedGraph, s: Iterable[VertexId], numbering: Numbering, budget: int
) -> SkewInstance:
    """Skew separator instance equivalent to the FVS/UMC question under the
    given ordering of s.

    Position i's vertex v (edge degree d) is replaced by source fan
    s_i^1..s_i^{d+1} and sink fan t_i^1..t_i^{d+1}: out-arcs of v leave the
    last source, in-arcs of v enter the first sink, and the j-th incident
    edge vw (edges sorted so that precedence-smaller endpoints come first)
    becomes arcs from source j into w and from w into sink j+1.  Finally all
    remaining edges turn into antiparallel arc pairs.  Requires no edges
    inside s, no cycle shorter than three, and an arc-compatible numbering.
    """
    marked = frozenset(s)
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if not marked <= g.vertices:
        raise ValueError(f"vertices not in graph: {sorted(marked - g.vertices)}")
    if sorted(numbering) != sorted(marked):
        raise ValueError("numbering must be a permutation of s")
    if any(u in marked and v in marked for u, v in g.edges.values()):
        raise ValueError("edges inside the marked set")
    if _has_cycle_below_three(g):
        raise ValueError("graph has a loop or a 2-cycle")
    arc_pairs = set(g.arcs.values())
    for i in range(len(numbering)):
        for j in range(i):
            if (numbering[i], numbering[j]) in arc_pairs:
                raise ValueError("numbering is not arc-compatible")

    precedence = g.precedes_relation(marked)
    h = g.copy()
    sources: list[VertexId] = []
    sinks: list[VertexId] = []
    for v in numbering:
        incident = h.edges_at(v)
        other = {e: h._other_endpoint(e, v) for e in incident}
        position = {w: x for x, w in enumerate(precedence.linear_extension(other.values()))}
        ordered_edges = sorted(incident, key=lambda e: position[other[e]])
        d = len(ordered_edges)
        fan_sources = [h.add_vertex() for _ in range(d + 1)]
        fan_sinks = [h.add_vertex() for _ in range(d + 1)]
        for x, y in sorted(h.arcs.values()):
            if x == v and y not in marked:
                h.add_arc(fan_sources[d], y)
            elif y == v and x not in marked:
                h.add_arc(x, fan_sinks[0])
        for j, e in enumerate(ordered_edges):
            w = other[e]
            h.add_arc(fan_sources[j], w)
            h.add_arc(w, fan_sinks[j + 1])
        h = h.delete_vertices({v})
        sources.extend(fan_sources)
        sinks.extend(fan_sinks)
    for e in sorted(h.edges):
        x, y = h.edges[e]
        h.add_arc(x, y)
        h.add_arc(y, x)
    h.edges.clear()
    return SkewInstance(h, tuple(sources), tuple(sinks), budget)


def solve_fvs_umc(
    inst: FvsUmcInstance,
    skew_solver: Callable[[SkewInstance], SolveResult] = solve_skew,
) -> SolveResult:
    """Preprocess, then try every arc-compatible numbering through the skew
    reduction; first success wins.

    ``skew_solver`` exists as a safety switch: the brute-force separator
    oracle can be injected in place of the branching solver.
    """
    inst.validate()
    outcome = preprocess_fvs_umc(inst)
    if outcome.infeasible:
        return SolveResult.infeasible()
    reduced = outcome.reduced
    assert reduced is not None
    for numbering in arc_compatible_numberings(reduced.graph, reduced.s):
        skew_inst = build_skew_reduction(
            reduced.graph, reduced.s, numbering, reduced.budget
        )
        result = skew_solver(skew_inst)
        if result.feasible:
            return SolveResult.found(outcome.forced | result.vertices)
    return SolveResult.infeasible()


def _has_cycle_below_three(g: MixedGraph) -> bool:
    pair_edges: dict[frozenset[VertexId], int] = {}
    for u, v in g.edges.values():
        if u == v:
            return True
        key = frozenset((u, v))
        pair_edges[key] = pair_edges.get(key, 0) + 1
        if pair_edges[key] >= 2:
            return True
    arc_pairs: set[tuple[VertexId, VertexId]] = set()
    for u, v in g.arcs.values():
        if u == v:
            return True
        if (v, u) in arc_pairs:
            return True
        arc_pairs.add((u, v))
    for u, v in arc_pairs:
        if frozenset((u, v)) in pair_edges:
            return True
    return False
