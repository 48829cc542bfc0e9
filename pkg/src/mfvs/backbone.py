"""Backbone of a mixed graph relative to a feedback vertex set.

Starting from the edge-only restriction (with the marked vertices kept even
when isolated), non-marked vertices of edge degree at most one are deleted
and non-marked degree-2 vertices are suppressed, until every surviving
non-marked vertex has degree at least three.  Each surviving backbone edge
stands for one connection path of the original graph: an undirected path (or
cycle, for a loop) whose end vertices are terminals and whose interior is
not.  ``paths`` maps every backbone edge id to the original edge ids of its
connection path.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .graph import EdgeId, MixedGraph, VertexId


@dataclass(frozen=True)
class Backbone:
    """Reduced undirected multigraph plus the path bookkeeping behind it."""

    graph: MixedGraph
    paths: dict[EdgeId, frozenset[EdgeId]]
    branch_vertices: frozenset[VertexId]
    s: frozenset[VertexId]


def build_backbone(g: MixedGraph, s: Iterable[VertexId]) -> Backbone:
    """Backbone of g relative to the feedback vertex set s.

    Raises ValueError when s is not a subset of the vertices or not a
    feedback vertex set (the latter is what guarantees suppression never
    meets a loop on a non-marked vertex).
    """
    return _build_backbone(g, s, pick=min)


def connection_paths(b: Backbone) -> list[tuple[EdgeId, frozenset[EdgeId]]]:
    """The backbone's path map as (backbone edge id, original edge ids) pairs."""
    return sorted(b.paths.items())


def _build_backbone(
    g: MixedGraph,
    s: Iterable[VertexId],
    pick: Callable[[list[VertexId]], VertexId],
) -> Backbone:
    marked = frozenset(s)
    if not marked <= g.vertices:
        raise ValueError(f"vertices not in graph: {sorted(marked - g.vertices)}")
    if not g.is_fvs(marked):
        raise ValueError("the marked set is not a feedback vertex set")

    bb = g.undirected_restriction()
    for v in marked:  # kept even when isolated in the restriction
        bb.vertices.add(v)
    paths = {e: frozenset({e}) for e in bb.edges}

    while True:
        degree = {v: 0 for v in bb.vertices}
        for a, b in bb.edges.values():
            degree[a] += 1
            degree[b] += 1
        free = [v for v in bb.vertices if v not in marked]
        droppable = [v for v in free if degree[v] <= 1]
        if droppable:
            v = pick(droppable)
            for e in bb.edges_at(v):
                del paths[e]
            bb = bb.delete_vertices({v})
            continue
        reducible = [v for v in free if degree[v] == 2]
        if not reducible:
            break
        v = pick(reducible)
        e1, e2 = bb.edges_at(v)
        merged = paths.pop(e1) | paths.pop(e2)
        before = bb.edges.keys()
        bb = bb.suppress_vertex(v)
        (fresh,) = bb.edges.keys() - before
        paths[fresh] = merged

    return Backbone(
        graph=bb,
        paths=paths,
        branch_vertices=frozenset(bb.vertices - marked),
        s=marked,
    )
