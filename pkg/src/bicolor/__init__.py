"""Perfect matchings, inherited vertex colorings and fidelities of bi-colored graphs."""

from .fidelity import (
    FidelityReport,
    TargetSpec,
    UndefinedFidelity,
    general_fidelity,
    is_k_monochromatic_coloring,
    k_monochromatic_fidelity,
    monochromatic_fidelity,
    verify_k_monochromatic,
    verify_monochromatic,
    verify_target,
)
from .graph import BiColoredGraph, Edge, alternating_cycle, build_graph, k4_ghz
from .matching import PerfectMatching, enumerate_perfect_matchings, oracle_enumerate
from .state import StateMap, compute_state, inherited_coloring, weight_of_coloring

__all__ = [
    "BiColoredGraph",
    "Edge",
    "FidelityReport",
    "PerfectMatching",
    "StateMap",
    "TargetSpec",
    "UndefinedFidelity",
    "alternating_cycle",
    "build_graph",
    "compute_state",
    "enumerate_perfect_matchings",
    "general_fidelity",
    "inherited_coloring",
    "is_k_monochromatic_coloring",
    "k4_ghz",
    "k_monochromatic_fidelity",
    "monochromatic_fidelity",
    "oracle_enumerate",
    "verify_k_monochromatic",
    "verify_monochromatic",
    "verify_target",
    "weight_of_coloring",
]
