"""Disjoint feedback vertex set via two-stage guessing over the backbone.

Given a feedback vertex set ``s``, look for a strictly smaller one disjoint
from it.  The budget is ``|s| - 1``.  Guessing happens on the backbone:
first which branching vertices are in the solution, then which surviving
backbone edges have their connection path hit internally.  Paths guessed to
be untouched are contracted into the terminals, leaving a combined
FVS/multiway-cut question on the contracted graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from .backbone import build_backbone
from .fvs_umc import FvsUmcInstance, solve_fvs_umc
from .graph import EdgeId, MixedGraph, VertexId
from .result import SolveResult


@dataclass(frozen=True)
class ContractedInstance:
    """Graph after path contractions, its merged terminal set, and the map
    from each surviving vertex back to the original vertices inside it."""

    graph: MixedGraph
    s: frozenset[VertexId]
    origin: dict[VertexId, frozenset[VertexId]]


def contract_uncut_paths(
    g: MixedGraph,
    removed_branch: Iterable[VertexId],
    s: Iterable[VertexId],
    path_edges: Iterable[EdgeId],
) -> ContractedInstance:
    """Delete the guessed branch vertices, then repeatedly contract any
    remaining path edge with an endpoint in the (growing) terminal set.

    Loop edges among the path edges are never contracted; they stay in the
    graph for the caller to judge.  Raises ValueError when a path edge does
    not survive the deletion.
    """
    removed = frozenset(removed_branch)
    terminals = set(s)
    cur = g.delete_vertices(removed)
    if not terminals <= cur.vertices:
        raise ValueError("terminal set overlaps the removed branch vertices")
    pending = frozenset(path_edges)
    missing = pending - cur.edges.keys()
    if missing:
        raise ValueError(f"path edges not present after deletion: {sorted(missing)}")
    origin = {v: frozenset({v}) for v in cur.vertices}
    while True:
        ready = [
            e
            for e in sorted(pending)
            if e in cur.edges
            and cur.edges[e][0] != cur.edges[e][1]
            and (cur.edges[e][0] in terminals or cur.edges[e][1] in terminals)
        ]
        if not ready:
            break
        e = ready[0]
        u, v = cur.edges[e]
        cur, w = cur.contract_edge(e)
        origin[w] = origin.pop(u) | origin.pop(v)
        terminals -= {u, v}
        terminals.add(w)
        pending -= {e}
    return ContractedInstance(cur, frozenset(terminals), origin)


def solve_s_disjoint_fvs(g: MixedGraph, s: Iterable[VertexId]) -> SolveResult:
    """A feedback vertex set smaller than ``s`` and disjoint from it, or
    infeasibility.  Requires ``s`` to be a feedback vertex set."""
    marked = frozenset(s)
    if not marked <= g.vertices:
        raise ValueError(f"vertices not in graph: {sorted(marked - g.vertices)}")
    if not g.is_fvs(marked):
        raise ValueError("s must be a feedback vertex set")
    budget = len(marked) - 1
    if budget < 0:
        return SolveResult.infeasible()

    bone = build_backbone(g, marked)
    branch = sorted(bone.branch_vertices)
    if len(branch) > 3 * budget:
        return SolveResult.infeasible()

    for picked_branch in _subsets_by_size(branch, budget):
        residual = budget - len(picked_branch)
        trimmed = bone.graph.delete_vertices(picked_branch)
        if len(trimmed.edges) > 3 * budget + residual:
            continue
        backbone_edges = sorted(trimmed.edges)
        for cut_edges in _subsets_by_size(backbone_edges, residual):
            if trimmed.delete_edges(cut_edges).has_cycle():
                continue
            spared: set[EdgeId] = set()
            for e in backbone_edges:
                if e not in cut_edges:
                    spared |= bone.paths[e]
            contracted = contract_uncut_paths(g, picked_branch, marked, spared)
            if _has_loop_at(contracted.graph, contracted.s):
                continue
            if residual == 0:
                if contracted.graph.is_fvs(frozenset()) and contracted.graph.is_umc(
                    contracted.s, frozenset()
                ):
                    return SolveResult.found(picked_branch)
                continue
            inner = solve_fvs_umc(
                FvsUmcInstance(contracted.graph, contracted.s, residual)
            )
            if inner.feasible:
                return SolveResult.found(inner.vertices | set(picked_branch))
    return SolveResult.infeasible()


def _subsets_by_size(items: list, max_size: int) -> Iterator[tuple]:
    for r in range(min(max_size, len(items)) + 1):
        yield from combinations(items, r)


def _has_loop_at(g: MixedGraph, vs: frozenset[VertexId]) -> bool:
    return any(u == v and u in vs for u, v in g.edges.values()) or any(
        u == v and u in vs for u, v in g.arcs.values()
    )
