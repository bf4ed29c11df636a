"""Exact computation of first-cohomology jumping loci of rank-one local systems.

Spaces are given through presentations of their fundamental groups; twisted
cohomology at torsion characters is computed over cyclotomic fields, and
resonance (Aomoto) dimensions over Q.
"""

from .admiss import (
    exp_lift_candidates,
    find_zero_lift,
    generic_dim_criterion,
    inequality_audit,
    is_admissible,
)
from .charvar import (
    CurveDescriptor,
    TorusSpec,
    charvar_membership,
    component_dims,
    curve_h1_dim,
    full_torus,
    generic_h1_dim_along,
    jumping_points_1d,
    make_character,
    parse_torus,
    symmetry_check,
    twisted_h0_dim,
    twisted_h1_dim,
)
from .exactnum import CycloNum, character_order, cyclotomic_polynomial, root_order
from .fox import (
    Presentation,
    alexander_matrix,
    exponent_matrix,
    fox_derivative,
    parse_presentation,
    validate_character,
)
from .laurent import LaurentPoly, UniPoly
from .ringlow import aomoto_h1_dim, cup_data, resonance_dim_ge

__version__ = "0.1.0"

__all__ = [
    "alexander_matrix",
    "aomoto_h1_dim",
    "character_order",
    "charvar_membership",
    "component_dims",
    "cup_data",
    "curve_h1_dim",
    "CurveDescriptor",
    "CycloNum",
    "cyclotomic_polynomial",
    "exp_lift_candidates",
    "exponent_matrix",
    "find_zero_lift",
    "fox_derivative",
    "full_torus",
    "generic_dim_criterion",
    "generic_h1_dim_along",
    "inequality_audit",
    "is_admissible",
    "jumping_points_1d",
    "LaurentPoly",
    "make_character",
    "parse_presentation",
    "parse_torus",
    "Presentation",
    "resonance_dim_ge",
    "root_order",
    "symmetry_check",
    "TorusSpec",
    "twisted_h0_dim",
    "twisted_h1_dim",
    "UniPoly",
    "validate_character",
]
