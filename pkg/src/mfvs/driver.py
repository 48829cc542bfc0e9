"""Feedback vertex set by iterative compression.

``compress_fvs`` shrinks a given feedback vertex set by one if possible.
``solve_fvs`` grows the graph one vertex at a time in id order, keeping a
feedback set of size at most ``budget`` and compressing whenever it
overflows; a failed compression on an induced subgraph settles the whole
question, because feedback sets only get harder as vertices are added.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from .disjoint import solve_s_disjoint_fvs
from .graph import MixedGraph, VertexId
from .result import SolveResult


def compress_fvs(g: MixedGraph, s: Iterable[VertexId]) -> SolveResult:
    """A feedback vertex set of size |s| - 1, or infeasibility.

    Tries every nonempty split of ``s`` into a dropped part (replaced
    disjointly) and a kept part, smallest dropped parts first.
    """
    marked = frozenset(s)
    if not marked <= g.vertices:
        raise ValueError(f"vertices not in graph: {sorted(marked - g.vertices)}")
    if not g.is_fvs(marked):
        raise ValueError("s must be a feedback vertex set")
    ordered = sorted(marked)
    for size in range(1, len(ordered) + 1):
        for dropped in combinations(ordered, size):
            kept = marked - set(dropped)
            replaced = solve_s_disjoint_fvs(g.delete_vertices(kept), frozenset(dropped))
            if replaced.feasible:
                return SolveResult.found(replaced.vertices | kept)
    return SolveResult.infeasible()


def solve_fvs(g: MixedGraph, budget: int) -> SolveResult:
    """A feedback vertex set of size at most ``budget``, or infeasibility."""
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    order = sorted(g.vertices)
    seed = min(budget, len(order))
    current: set[VertexId] = set(order[:seed])
    for i in range(seed, len(order)):
        current.add(order[i])
        if len(current) == budget + 1:
            sub = g.induced_subgraph(order[: i + 1])
            compressed = compress_fvs(sub, frozenset(current))
            if not compressed.feasible:
                return SolveResult.infeasible()
            current = set(compressed.vertices)
    return SolveResult.found(current)
