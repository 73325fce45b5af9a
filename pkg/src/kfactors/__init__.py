"""Toolkit for k-factorable graphic degree sequences.

Generate sequences guaranteed to have (or provably lack) connected
k-factors, realize them as labeled simple graphs, and compute a k-factor
by superposing realizations of d - k and n - 1 - d and switching away the
shared edges.
"""

__version__ = "0.1.0"

from .analysis import FactorReport, components, report
from .factor import (
    FactorComputation,
    Multigraph,
    SwitchCounters,
    SwitchStep,
    apply_switch,
    compute_k_factor,
    find_switch,
    shared_edges,
)
from .generators import (
    PRNG_ALGORITHM,
    FamilyParams,
    GenerationParams,
    family_sequence,
    family_x_bounds,
    generate_connected,
    generate_disconnected,
    generate_heuristic,
    packing_demo_sequence,
    validate_family,
)
from .graphs import SimpleGraph, to_dot
from .realization import (
    circulant_regular,
    packing_demo_realize,
    realize,
    realize_family,
    realize_family_minus_k,
)
from .sequences import (
    DegreeSequence,
    KabParams,
    RaoResult,
    in_kab,
    is_graphic_eg,
    is_k_factorable,
    rao_connected_predicate,
    subtract_k,
    zz_min_length,
)

__all__ = [
    "__version__",
    "DegreeSequence",
    "KabParams",
    "RaoResult",
    "in_kab",
    "is_graphic_eg",
    "is_k_factorable",
    "rao_connected_predicate",
    "subtract_k",
    "zz_min_length",
    "GenerationParams",
    "FamilyParams",
    "PRNG_ALGORITHM",
    "family_sequence",
    "family_x_bounds",
    "validate_family",
    "generate_connected",
    "generate_disconnected",
    "generate_heuristic",
    "packing_demo_sequence",
    "SimpleGraph",
    "to_dot",
    "realize",
    "circulant_regular",
    "realize_family",
    "realize_family_minus_k",
    "packing_demo_realize",
    "Multigraph",
    "SwitchStep",
    "SwitchCounters",
    "FactorComputation",
    "shared_edges",
    "find_switch",
    "apply_switch",
    "compute_k_factor",
    "FactorReport",
    "components",
    "report",
]
