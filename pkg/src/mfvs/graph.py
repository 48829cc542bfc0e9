"""Mixed multigraph with stable edge and arc identities.

Vertices, edges and arcs are dense integer ids handed out in insertion
order.  Edges are unordered endpoint pairs, arcs are ordered pairs; parallel
edges/arcs and loops are all representable.  Ids are never reused within one
graph lifetime: contraction re-points the endpoints of a surviving edge, it
never renames it.

Builder methods (``add_vertex``, ``add_edge``, ``add_arc``) mutate the graph
and are meant for construction.  Every other operation is a pure function
returning a fresh graph, so values can be shared across solver branches and
treated as frozen.  All "arbitrary" choices elsewhere in the package break
ties by smallest id, which is why the id order matters.
"""

from __future__ import annotations

import heapq
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

VertexId = int
EdgeId = int
ArcId = int


class MixedGraph:
    """Multigraph with undirected edges and directed arcs."""

    __slots__ = ("vertices", "edges", "arcs", "_next_vertex", "_next_edge", "_next_arc")

    def __init__(self) -> None:
        self.vertices: set[VertexId] = set()
        self.edges: dict[EdgeId, tuple[VertexId, VertexId]] = {}
        self.arcs: dict[ArcId, tuple[VertexId, VertexId]] = {}
        self._next_vertex: int = 1
        self._next_edge: int = 1
        self._next_arc: int = 1

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        arcs: Iterable[tuple[int, int]] = (),
    ) -> "MixedGraph":
        """Graph on vertices 1..n with the given edge and arc endpoint pairs.

        Ids are assigned in input order.  Raises ValueError on an endpoint
        outside 1..n.
        """
        g = cls()
        for _ in range(n):
            g.add_vertex()
        for u, v in edges:
            g.add_edge(u, v)
        for u, v in arcs:
            g.add_arc(u, v)
        return g

    # ------------------------------------------------------------------
    # builders (mutating; construction only)

    def add_vertex(self) -> VertexId:
        v = self._next_vertex
        self._next_vertex += 1
        self.vertices.add(v)
        return v

    def add_edge(self, u: VertexId, v: VertexId) -> EdgeId:
        self._check_vertex(u)
        self._check_vertex(v)
        e = self._next_edge
        self._next_edge += 1
        self.edges[e] = (u, v)
        return e

    def add_arc(self, u: VertexId, v: VertexId) -> ArcId:
        self._check_vertex(u)
        self._check_vertex(v)
        a = self._next_arc
        self._next_arc += 1
        self.arcs[a] = (u, v)
        return a

    def copy(self) -> "MixedGraph":
        g = MixedGraph()
        g.vertices = set(self.vertices)
        g.edges = dict(self.edges)
        g.arcs = dict(self.arcs)
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        g._next_arc = self._next_arc
        return g

    # ------------------------------------------------------------------
    # basic queries

    def edge_degree(self, v: VertexId) -> int:
        """Number of edge endpoints at v; a loop contributes two."""
        self._check_vertex(v)
        return sum((a == v) + (b == v) for a, b in self.edges.values())

    def in_degree(self, v: VertexId) -> int:
        self._check_vertex(v)
        return sum(1 for _, b in self.arcs.values() if b == v)

    def out_degree(self, v: VertexId) -> int:
        self._check_vertex(v)
        return sum(1 for a, _ in self.arcs.values() if a == v)

    def edges_at(self, v: VertexId) -> list[EdgeId]:
        """Ids of edges incident with v, ascending; a loop appears once."""
        self._check_vertex(v)
        return sorted(e for e, (a, b) in self.edges.items() if v in (a, b))

    def has_arc_at(self, v: VertexId) -> bool:
        self._check_vertex(v)
        return any(v in pair for pair in self.arcs.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.arcs == other.arcs
        )

    __hash__ = None  # type: ignore[assignment]  # mutable container

    def __repr__(self) -> str:
        return (
            f"MixedGraph(|V|={len(self.vertices)}, "
            f"|E|={len(self.edges)}, |A|={len(self.arcs)})"
        )

    # ------------------------------------------------------------------
    # pure operations

    def delete_vertices(self, drop: Iterable[VertexId]) -> "MixedGraph":
        """Graph with the given vertices and everything incident to them removed."""
        x = frozenset(drop)
        if not x <= self.vertices:
            raise ValueError(f"vertices not in graph: {sorted(x - self.vertices)}")
        g = MixedGraph()
        g.vertices = self.vertices - x
        g.edges = {e: uv for e, uv in self.edges.items() if uv[0] not in x and uv[1] not in x}
        g.arcs = {a: uv for a, uv in self.arcs.items() if uv[0] not in x and uv[1] not in x}
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        g._next_arc = self._next_arc
        return g

    def delete_edges(self, drop: Iterable[EdgeId]) -> "MixedGraph":
        """Graph with the given edges removed (vertices untouched)."""
        x = frozenset(drop)
        if not x <= self.edges.keys():
            raise ValueError(f"edges not in graph: {sorted(x - self.edges.keys())}")
        g = self.copy()
        for e in x:
            del g.edges[e]
        return g

    def induced_subgraph(self, keep: Iterable[VertexId]) -> "MixedGraph":
        x = frozenset(keep)
        if not x <= self.vertices:
            raise ValueError(f"vertices not in graph: {sorted(x - self.vertices)}")
        return self.delete_vertices(self.vertices - x)

    def undirected_restriction(self) -> "MixedGraph":
        """Drop all arcs, then every vertex left without an incident edge."""
        g = MixedGraph()
        g.edges = dict(self.edges)
        g.vertices = {v for uv in self.edges.values() for v in uv}
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        g._next_arc = self._next_arc
        return g

    def contract_edge(self, e: EdgeId) -> tuple["MixedGraph", VertexId]:
        """Merge the endpoints of a non-loop edge into a fresh vertex.

        Every other edge/arc keeps its id; endpoints equal to either merged
        vertex are re-pointed at the new one, so parallel edges, parallel
        arcs and loops may appear.
        """
        if e not in self.edges:
            raise ValueError(f"no such edge: {e}")
        u, v = self.edges[e]
        if u == v:
            raise ValueError("cannot contract a loop")
        g = self.copy()
        del g.edges[e]
        w = g.add_vertex()
        merged = (u, v)
        g.edges = {
            eid: (w if a in merged else a, w if b in merged else b)
            for eid, (a, b) in g.edges.items()
        }
        g.arcs = {
            aid: (w if a in merged else a, w if b in merged else b)
            for aid, (a, b) in g.arcs.items()
        }
        g.vertices.discard(u)
        g.vertices.discard(v)
        return g, w

    def suppress_vertex(self, u: VertexId) -> "MixedGraph":
        """Replace a degree-2 vertex and its two edges by one edge joining its
        neighbours (a loop when both neighbours coincide).

        Requires exactly two distinct non-loop incident edges and no incident
        arcs.
        """
        self._check_vertex(u)
        incident = self.edges_at(u)
        if len(incident) != 2 or any(self.edges[e][0] == self.edges[e][1] for e in incident):
            raise ValueError(f"vertex {u} does not have exactly two non-loop edges")
        if self.has_arc_at(u):
            raise ValueError(f"vertex {u} has incident arcs")
        e1, e2 = incident
        v = self._other_endpoint(e1, u)
        w = self._other_endpoint(e2, u)
        g = self.copy()
        del g.edges[e1]
        del g.edges[e2]
        g.vertices.remove(u)
        g.add_edge(v, w)
        return g

    # ------------------------------------------------------------------
    # decision procedures

    def has_cycle(self) -> bool:
        """True when any cycle exists: a loop, two distinct links usable in
        opposite directions between the same pair, or a longer closed walk
        whose arcs all point the same way."""
        return self._has_cycle_avoiding(frozenset())

    def is_fvs(self, candidate: Iterable[VertexId]) -> bool:
        """True when deleting the candidate set leaves the graph acyclic."""
        x = frozenset(candidate)
        if not x <= self.vertices:
            raise ValueError(f"vertices not in graph: {sorted(x - self.vertices)}")
        return not self._has_cycle_avoiding(x)

    def is_umc(self, marked: Iterable[VertexId], cut: Iterable[VertexId]) -> bool:
        """True when, in the edge-only restriction minus the cut, no two
        distinct marked vertices are connected."""
        s = frozenset(marked)
        c = frozenset(cut)
        if c & s:
            raise ValueError(f"cut intersects the marked set: {sorted(c & s)}")
        if not s <= self.vertices:
            raise ValueError(f"vertices not in graph: {sorted(s - self.vertices)}")
        parent = {v: v for v in self.vertices if v not in c}
        for u, v in self.edges.values():
            if u in parent and v in parent:
                ru, rv = _find(parent, u), _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
        roots = {_find(parent, v) for v in s}
        return len(roots) == len(s)

    def reachable_set(self, u: VertexId) -> set[VertexId]:
        """Vertices reachable from u along edges (both ways) and arcs (forward)."""
        self._check_vertex(u)
        adj = self._forward_adjacency()
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def precedes_relation(self, deleted: Iterable[VertexId]) -> "PrecedenceRelation":
        """Partial order on the surviving vertices: u comes before v exactly
        when v reaches u but u cannot reach v once ``deleted`` is removed."""
        s = frozenset(deleted)
        if not s <= self.vertices:
            raise ValueError(f"vertices not in graph: {sorted(s - self.vertices)}")
        h = self.delete_vertices(s)
        adj = h._forward_adjacency()
        reach: dict[VertexId, set[VertexId]] = {}
        for v in h.vertices:
            seen = {v}
            queue = deque([v])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            reach[v] = seen
        ground = tuple(sorted(h.vertices))
        pairs = frozenset(
            (u, v)
            for v in ground
            for u in reach[v]
            if u != v and v not in reach[u]
        )
        return PrecedenceRelation(ground, pairs)

    # ------------------------------------------------------------------
    # internals

    def _check_vertex(self, v: VertexId) -> None:
        if v not in self.vertices:
            raise ValueError(f"no such vertex: {v}")

    def _other_endpoint(self, e: EdgeId, v: VertexId) -> VertexId:
        a, b = self.edges[e]
        return b if a == v else a

    def _forward_adjacency(self) -> dict[VertexId, list[VertexId]]:
        adj: dict[VertexId, list[VertexId]] = {v: [] for v in self.vertices}
        for u, v in self.edges.values():
            adj[u].append(v)
            adj[v].append(u)
        for u, v in self.arcs.values():
            adj[u].append(v)
        return adj

    def _has_cycle_avoiding(self, removed: frozenset[VertexId]) -> bool:
        # Undirected part first: any loop or re-connection inside one edge
        # component is a cycle.
        parent = {v: v for v in self.vertices if v not in removed}
        for u, v in self.edges.values():
            if u in removed or v in removed:
                continue
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                return True
            parent[ru] = rv
        if not self.arcs:
            return False
        # Arcs act on the quotient of edge components: a closed directed walk
        # there lifts to a mixed cycle (shortcut within components) and every
        # mixed cycle with an arc projects to one.
        indeg: dict[VertexId, int] = {}
        out: dict[VertexId, list[VertexId]] = {}
        for u, v in self.arcs.values():
            if u in removed or v in removed:
                continue
            cu, cv = _find(parent, u), _find(parent, v)
            if cu == cv:
                return True
            out.setdefault(cu, []).append(cv)
            indeg[cv] = indeg.get(cv, 0) + 1
            indeg.setdefault(cu, 0)
        queue = deque(c for c, d in indeg.items() if d == 0)
        seen = 0
        while queue:
            c = queue.popleft()
            seen += 1
            for w in out.get(c, ()):
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen < len(indeg)


def _find(parent: dict[int, int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


@dataclass(frozen=True)
class PrecedenceRelation:
    """Queryable strict partial order produced by ``precedes_relation``."""

    elements: tuple[VertexId, ...]
    pairs: frozenset[tuple[VertexId, VertexId]]

    def precedes(self, u: VertexId, v: VertexId) -> bool:
        return (u, v) in self.pairs

    def linear_extension(self, subset: Iterable[VertexId] | None = None) -> list[VertexId]:
        """Order compatible with the relation (smaller elements first), ties
        broken by smallest id."""
        items = sorted(self.elements if subset is None else subset)
        member = set(items)
        blockers = {
            v: sum(1 for u in items if u != v and (u, v) in self.pairs) for v in items
        }
        ready = [v for v in items if blockers[v] == 0]
        heapq.heapify(ready)
        order: list[VertexId] = []
        while ready:
            v = heapq.heappop(ready)
            order.append(v)
            for w in items:
                if w in member and w != v and (v, w) in self.pairs:
                    blockers[w] -= 1
                    if blockers[w] == 0:
                        heapq.heappush(ready, w)
            member.discard(v)
        if len(order) != len(items):
            raise ValueError("relation is not acyclic on the given subset")
        return order
