"""Combinatorics of degree g-1 Brill-Noether loci on nodal curves."""

from .brill_noether import (
    ComponentLabel,
    Decomposition,
    InvariantViolation,
    Pair,
    classify,
    component_dimension,
    correspondence,
    enumerate_components,
    induced_restricted,
    s_set,
    twisted_abel_form,
)
from .curve import (
    NodalCurve,
    Subcurve,
    complement,
    connected_subcurves,
    edge_cut,
    n_components,
    subcurve_genus,
    total_genus,
)
from .errors import InvalidInputError
from .families import (
    CircularPattern,
    alternating_multidegree,
    circular_component_count,
    circular_curve,
    circular_semistable_multidegrees,
    two_component_classification,
    two_component_curve,
)
from .multidegree import (
    is_effective,
    is_semistable,
    is_semistable_g1,
    is_stable,
    omega_restricted_degree,
    restrict,
    total,
)
from .twister import normalize, solve_twister, support_subcurve, twister_multidegree

__version__ = "0.1.0"
