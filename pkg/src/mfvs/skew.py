"""Skew separator solving on arc-only graphs.

An instance pairs an ordered source sequence with an equally long sink
sequence.  A separator is a vertex set, disjoint from all terminals, whose
removal leaves no path from source i to sink j whenever i >= j; only its
size is constrained (at most the budget), not minimality.

The solver processes source positions from the highest down.  The active
source must be cut from every remaining sink, so its part of the separator
is found by the standard bounded branching over important separators: pick
a vertex of the minimum cut pushed farthest toward the sinks and either
spend budget deleting it or commit it to the source side.  The source-side
commitment strictly raises the minimum cut, which bounds the branching
tree.  Once the active source is fully cut, its pair is retired and only
deletions remain, so the retired condition can never be re-violated.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import MixedGraph, VertexId
from .result import SolveResult

_INF = 10**9


@dataclass(frozen=True)
class SkewInstance:
    """Arc-only graph, aligned source/sink sequences, and a deletion budget."""

    graph: MixedGraph
    sources: tuple[VertexId, ...]
    sinks: tuple[VertexId, ...]
    budget: int

    def validate(self) -> None:
        if self.graph.edges:
            raise ValueError("skew instances must not contain undirected edges")
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")
        if len(self.sources) != len(self.sinks):
            raise ValueError("source and sink sequences must have equal length")
        terminals = list(self.sources) + list(self.sinks)
        if len(set(terminals)) != len(terminals):
            raise ValueError("terminals must be distinct")
        missing = set(terminals) - self.graph.vertices
        if missing:
            raise ValueError(f"terminals not in graph: {sorted(missing)}")
        indeg = {v: 0 for v in self.graph.vertices}
        outdeg = {v: 0 for v in self.graph.vertices}
        for u, v in self.graph.arcs.values():
            outdeg[u] += 1
            indeg[v] += 1
        bad_source = [s for s in self.sources if indeg[s]]
        bad_sink = [t for t in self.sinks if outdeg[t]]
        if bad_source:
            raise ValueError(f"sources with incoming arcs: {sorted(bad_source)}")
        if bad_sink:
            raise ValueError(f"sinks with outgoing arcs: {sorted(bad_sink)}")


def verify_skew(inst: SkewInstance, separator: Iterable[VertexId]) -> bool:
    """Check the separator property with one reachability sweep per source."""
    cut = frozenset(separator)
    terminals = frozenset(inst.sources) | frozenset(inst.sinks)
    if len(cut) > inst.budget:
        return False
    if cut & terminals or not cut <= inst.graph.vertices:
        return False
    h = inst.graph.delete_vertices(cut)
    for i, s in enumerate(inst.sources):
        reach = h.reachable_set(s)
        if any(t in reach for t in inst.sinks[: i + 1]):
            return False
    return True


def solve_skew(inst: SkewInstance) -> SolveResult:
    """A separator of size at most the budget, or infeasibility."""
    inst.validate()
    if not inst.sources:
        return SolveResult.found(frozenset())
    adj: dict[VertexId, tuple[VertexId, ...]] = {
        v: () for v in inst.graph.vertices
    }
    heads: dict[VertexId, set[VertexId]] = {}
    for u, v in inst.graph.arcs.values():
        heads.setdefault(u, set()).add(v)
    for u, hs in heads.items():
        adj[u] = tuple(sorted(hs))
    protected = frozenset(inst.sources) | frozenset(inst.sinks)

    def search(
        pair: int, side: frozenset[VertexId], removed: frozenset[VertexId]
    ) -> frozenset[VertexId] | None:
        while True:
            alive = inst.graph.vertices - removed
            cut = _farthest_min_cut(
                adj,
                alive,
                side,
                frozenset(inst.sinks[:pair]),
                protected,
                inst.budget - len(removed),
            )
            if cut is None:
                return None
            if not cut:
                pair -= 1
                if pair == 0:
                    return removed
                side = frozenset({inst.sources[pair - 1]})
                continue
            u = min(cut)
            found = search(pair, side, removed | {u})
            if found is not None:
                return found
            side = side | {u}  # second branch: u joins the source side

    found = search(
        len(inst.sources), frozenset({inst.sources[-1]}), frozenset()
    )
    if found is None:
        return SolveResult.infeasible()
    return SolveResult.found(found)


def _farthest_min_cut(
    adj: dict[VertexId, tuple[VertexId, ...]],
    alive: set[VertexId],
    side: frozenset[VertexId],
    sinks: frozenset[VertexId],
    protected: frozenset[VertexId],
    cap: int,
) -> frozenset[VertexId] | None:
    """Minimum vertex cut between ``side`` and ``sinks``, pushed toward the
    sinks.

    Returns the cut (empty when already separated), or None when every cut
    has size above ``cap`` -- including the un-cuttable case of a direct
    side-to-sink arc.  Unit-capacity vertex splitting makes the max-flow
    value equal the cut size; the residual vertices that still reach the
    super-sink identify the unique farthest minimum cut.
    """
    src = ("src",)
    snk = ("snk",)
    caps: dict[object, dict[object, int]] = {}

    def put(a: object, b: object, c: int) -> None:
        row = caps.setdefault(a, {})
        row[b] = min(_INF, row.get(b, 0) + c)
        caps.setdefault(b, {}).setdefault(a, 0)

    for v in alive:
        if v in side or v in sinks:
            continue
        put((v, 0), (v, 1), _INF if v in protected else 1)
    for u in alive:
        if u in sinks:
            continue
        for w in adj[u]:
            if w not in alive or w in side:
                continue
            if u in side:
                if w in sinks:
                    return None
                put(src, (w, 0), _INF)
            elif w in sinks:
                put((u, 1), snk, _INF)
            else:
                put((u, 1), (w, 0), _INF)

    flow = 0
    while True:
        parents: dict[object, object] = {src: src}
        queue = [src]
        while queue and snk not in parents:
            nxt: list[object] = []
            for a in queue:
                for b, c in caps.get(a, {}).items():
                    if c > 0 and b not in parents:
                        parents[b] = a
                        nxt.append(b)
            queue = nxt
        if snk not in parents:
            break
        path = []
        node = snk
        while node is not src:
            prev = parents[node]
            path.append((prev, node))
            node = prev
        bottleneck = min(caps[a][b] for a, b in path)
        if bottleneck >= _INF:
            return None  # a route with no cuttable vertex
        flow += bottleneck
        if flow > cap:
            return None
        for a, b in path:
            caps[a][b] -= bottleneck
            caps[b][a] += bottleneck
    if flow == 0:
        return frozenset()

    # Residual nodes that still reach the super-sink; crossing saturated
    # split arcs are exactly the farthest minimum cut.
    rev: dict[object, list[object]] = {}
    for a, row in caps.items():
        for b, c in row.items():
            if c > 0:
                rev.setdefault(b, []).append(a)
    reaches_sink = {snk}
    queue = [snk]
    while queue:
        b = queue.pop()
        for a in rev.get(b, ()):
            if a not in reaches_sink:
                reaches_sink.add(a)
                queue.append(a)
    cut = frozenset(
        v
        for v in alive
        if v not in side
        and v not in sinks
        and v not in protected
        and caps[(v, 0)][(v, 1)] == 0
        and (v, 0) not in reaches_sink
        and (v, 1) in reaches_sink
    )
    assert len(cut) == flow, "flow and farthest-cut size disagree"
    return cut
