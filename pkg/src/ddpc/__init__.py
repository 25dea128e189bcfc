"""Disjoint directed path covers in semicomplete digraphs.

A toolkit for building, verifying, and stress-testing systems of k
internally disjoint paths from one source to k sinks that jointly cover
the whole vertex set.  The move engine grows partial systems one validated
rewrite at a time; the exhaustive oracle settles small instances exactly
and certifies the engine's answers; the harness runs seeded experiment
plans and audits the structural claims stuck systems are expected to obey.
"""

from .digraph import (
    DegreeReport,
    DgrFormatError,
    Digraph,
    degree_report,
    degree_threshold,
    format_dgr,
    induced_subdigraph,
    is_semicomplete,
    is_strong,
    is_tournament,
    parse_dgr,
    read_dgr,
    write_dgr,
)
from .engine import (
    AugmentResult,
    AugmentationMove,
    MoveRecord,
    SolveConfig,
    SolveResult,
    StaleMoveError,
    StalePartitionError,
    TEMPLATE_ORDER,
    apply_move,
    augment_to_cover,
    find_move_for_template,
    find_moves,
    format_trace,
    solve,
)
from .gen import GenSpec, Splitmix64, enumerate_small, generate
from .ham import (
    NotSemicompleteError,
    NotStrongError,
    TooFewVerticesError,
    hamiltonian_cycle,
    hamiltonian_path,
    hamiltonian_path_between,
    is_vertex_cycle,
    is_vertex_path,
)
from .oracle import (
    OracleVerdict,
    certify_maximal,
    exact_ddpc,
    exact_improvement,
    exact_max_system,
    exact_st_linkage,
)
from .path_system import (
    BoundaryPartition,
    LemmaClaim,
    LemmaReport,
    PathSystem,
    PsysFormatError,
    boundary_partition,
    format_psys,
    is_ddpc,
    lemma_report,
    parse_psys,
    read_psys,
    validate_system,
    write_psys,
)

__all__ = [
    "AugmentResult",
    "AugmentationMove",
    "BoundaryPartition",
    "DegreeReport",
    "DgrFormatError",
    "Digraph",
    "GenSpec",
    "LemmaClaim",
    "LemmaReport",
    "MoveRecord",
    "NotSemicompleteError",
    "NotStrongError",
    "OracleVerdict",
    "PathSystem",
    "PsysFormatError",
    "SolveConfig",
    "SolveResult",
    "Splitmix64",
    "StaleMoveError",
    "StalePartitionError",
    "TEMPLATE_ORDER",
    "TooFewVerticesError",
    "apply_move",
    "augment_to_cover",
    "boundary_partition",
    "certify_maximal",
    "degree_report",
    "degree_threshold",
    "enumerate_small",
    "exact_ddpc",
    "exact_improvement",
    "exact_max_system",
    "exact_st_linkage",
    "find_move_for_template",
    "find_moves",
    "format_dgr",
    "format_psys",
    "format_trace",
    "generate",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "hamiltonian_path_between",
    "induced_subdigraph",
    "is_ddpc",
    "is_semicomplete",
    "is_strong",
    "is_tournament",
    "is_vertex_cycle",
    "is_vertex_path",
    "lemma_report",
    "parse_dgr",
    "parse_psys",
    "read_dgr",
    "read_psys",
    "solve",
    "validate_system",
    "write_dgr",
    "write_psys",
]

__version__ = "0.1.0"
