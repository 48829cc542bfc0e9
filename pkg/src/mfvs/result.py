"""Uniform solver outcome shared by every solving layer."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field


@dataclass(frozen=True)
class SolveResult:
    """A witness vertex set (feedback set, separator or cut), or infeasibility."""

    feasible: bool
    vertices: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def found(cls, vertices: Iterable[int]) -> "SolveResult":
        return cls(True, frozenset(vertices))

    @classmethod
    def infeasible(cls) -> "SolveResult":
        return cls(False)
