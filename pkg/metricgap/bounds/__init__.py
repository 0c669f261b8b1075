"""Closed-form inequalities on the gap, each checkable against exact values."""

__all__ = [
    "bipartite_identities",
    "BoundReport",
    "brute_force_max",
    "complete_comparison_bound",
    "denominator_bounds",
    "edge_addition_bounds",
    "feasible_vectors",
    "h_perturbation_ratio_bounds",
    "kn_minus_edge_check",
    "kn_minus_edge_sequence",
    "lower_bound_SG",
    "make_gap",
    "naive_lower",
    "naive_lower_regular",
    "opt_lemma_max",
    "regular_supergraph_bounds",
    "sg_constant",
    "subgraph_bound",
    "upper_bound_complete",
    "VolumeClassVector",
]

from .denominators import (
    brute_force_max,
    denominator_bounds,
    feasible_vectors,
    opt_lemma_max,
)
from .gap_bounds import (
    complete_comparison_bound,
    lower_bound_SG,
    naive_lower,
    naive_lower_regular,
    sg_constant,
    upper_bound_complete,
)
from .identities import (
    bipartite_identities,
    kn_minus_edge_check,
    kn_minus_edge_sequence,
)
from .relations import (
    edge_addition_bounds,
    h_perturbation_ratio_bounds,
    regular_supergraph_bounds,
    subgraph_bound,
)
from .report import BoundReport, make_gap, VolumeClassVector
