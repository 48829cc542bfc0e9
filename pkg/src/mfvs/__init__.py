"""Exact feedback vertex set solving for mixed graphs.

A mixed graph carries both undirected edges and directed arcs; a cycle may
use both as long as its arcs all point one way.  The package provides the
multigraph core, the layered exact solvers (skew separators, combined
FVS/multiway-cut, disjoint replacement, iterative compression), brute-force
oracles for validation, and a text instance format with a CLI.
"""

from .backbone import Backbone, build_backbone, connection_paths
from .disjoint import ContractedInstance, contract_uncut_paths, solve_s_disjoint_fvs
from .driver import compress_fvs, solve_fvs
from .fvs_umc import (
    FvsUmcInstance,
    PreprocessOutcome,
    arc_compatible_numberings,
    build_skew_reduction,
    preprocess_fvs_umc,
    solve_fvs_umc,
)
from .graph import ArcId, EdgeId, MixedGraph, PrecedenceRelation, VertexId
from .instance_io import (
    FAMILIES,
    ParseError,
    generate_instance,
    parse_instance,
    serialize_instance,
)
from .result import SolveResult
from .skew import SkewInstance, solve_skew, verify_skew

__version__ = "0.1.0"

__all__ = [
    "ArcId",
    "Backbone",
    "ContractedInstance",
    "EdgeId",
    "FAMILIES",
    "FvsUmcInstance",
    "MixedGraph",
    "ParseError",
    "PrecedenceRelation",
    "PreprocessOutcome",
    "SkewInstance",
    "SolveResult",
    "VertexId",
    "arc_compatible_numberings",
    "build_backbone",
    "build_skew_reduction",
    "compress_fvs",
    "connection_paths",
    "contract_uncut_paths",
    "generate_instance",
    "parse_instance",
    "preprocess_fvs_umc",
    "serialize_instance",
    "solve_fvs",
    "solve_fvs_umc",
    "solve_s_disjoint_fvs",
    "solve_skew",
    "verify_skew",
]
