"""Brute-force reference solvers used as ground truth in tests.

Deliberately simple subset enumeration, structurally unrelated to the main
pipeline: nothing here touches backbones or skew reductions, only the graph
primitives (plus the separator checker).  Hard size guards keep accidental
misuse from hanging a test run.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from .graph import MixedGraph, VertexId
from .result import SolveResult
from .skew import SkewInstance, verify_skew

MAX_VERTICES = 16
MAX_BUDGET = 6


def _guard(g: MixedGraph, budget: int) -> None:
    if len(g.vertices) > MAX_VERTICES:
        raise ValueError(f"brute force limited to {MAX_VERTICES} vertices")
    if budget > MAX_BUDGET:
        raise ValueError(f"brute force limited to budget {MAX_BUDGET}")


def _subsets_by_size(items: list[VertexId], max_size: int):
    for r in range(min(max_size, len(items)) + 1):
        yield from combinations(items, r)


def brute_min_fvs(g: MixedGraph, k_max: int) -> SolveResult:
    """A minimum feedback vertex set if its size is at most k_max, else
    infeasible (meaning: the minimum exceeds k_max)."""
    _guard(g, k_max)
    for x in _subsets_by_size(sorted(g.vertices), max(k_max, 0)):
        if g.is_fvs(x):
            return SolveResult.found(x)
    return SolveResult.infeasible()


def brute_skew_separator(inst: SkewInstance) -> SolveResult:
    inst.validate()
    _guard(inst.graph, inst.budget)
    terminals = set(inst.sources) | set(inst.sinks)
    candidates = sorted(inst.graph.vertices - terminals)
    for c in _subsets_by_size(candidates, inst.budget):
        if verify_skew(inst, c):
            return SolveResult.found(c)
    return SolveResult.infeasible()


def brute_s_disjoint_fvs(g: MixedGraph, s: Iterable[VertexId]) -> SolveResult:
    marked = frozenset(s)
    if not g.is_fvs(marked):
        raise ValueError("s must be a feedback vertex set")
    _guard(g, len(marked) - 1)
    candidates = sorted(g.vertices - marked)
    for x in _subsets_by_size(candidates, len(marked) - 1):
        if g.is_fvs(x):
            return SolveResult.found(x)
    return SolveResult.infeasible()


def brute_fvs_umc(g: MixedGraph, s: Iterable[VertexId], budget: int) -> SolveResult:
    marked = frozenset(s)
    if not g.is_fvs(marked):
        raise ValueError("s must be a feedback vertex set")
    _guard(g, budget)
    candidates = sorted(g.vertices - marked)
    for x in _subsets_by_size(candidates, budget):
        if g.is_fvs(x) and g.is_umc(marked, x):
            return SolveResult.found(x)
    return SolveResult.infeasible()
