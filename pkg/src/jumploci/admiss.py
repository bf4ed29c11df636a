"""1-admissibility audits for torsion characters.

A lift of a character ``q`` is a one-form ``alpha = q + z`` with ``z``
integral and ``E alpha = 0``; ``exp(2 pi i alpha)`` then recovers ``q``.
The character is 1-admissible when some lift has Aomoto dimension equal to
the twisted dimension.  Only lifts inside the box ``|z_i| <= R`` are
searched, so a negative answer is relative to the box.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import NamedTuple, Optional

from .charvar import generic_h1_dim_along, is_trivial, make_character, twisted_h1_dim
from .errors import NotALift, NotOnTorus
from .exactnum import root_of_unity
from .fox import exponent_matrix, first_betti
from .ringlow import aomoto_h1_dim, one_form

DEFAULT_BOX = 2


def box_offsets(n, radius):
    """Integer offsets with sup-norm <= radius: smallest norm first, lexicographic within a norm."""
    for s in range(radius + 1):
        for z in product(range(-s, s + 1), repeat=n):
            if max(map(abs, z), default=0) == s:
                yield z


def exp_lift_candidates(p, rho, radius=DEFAULT_BOX):
    if radius < 0:
        raise ValueError("box radius must be nonnegative")
    rho = make_character(p, rho)
    e = exponent_matrix(p)
    lifts = []
    for z in box_offsets(p.n, radius):
        alpha = tuple(q + k for q, k in zip(rho, z))
        if all(sum(a * b for a, b in zip(row, alpha)) == 0 for row in e):
            lifts.append(alpha)
    return lifts


@dataclass
class AdmissibilityReport:
    character: tuple
    lhs: int
    lifts: list = field(default_factory=list)    # (alpha, rhs) pairs
    admissible: bool = False
    witness: Optional[tuple] = None
    formal: bool = False
    box: int = DEFAULT_BOX


def is_admissible(p, rho, radius=DEFAULT_BOX):
    rho = make_character(p, rho)
    lhs = twisted_h1_dim(p, rho)
    report = AdmissibilityReport(rho, lhs, formal=p.formal, box=radius)
    if is_trivial(rho):
        zero = (Fraction(0),) * p.n
        report.lifts.append((zero, first_betti(p)))
        report.admissible, report.witness = True, zero
        return report
    for alpha in exp_lift_candidates(p, rho, radius):
        rhs = aomoto_h1_dim(p, alpha)
        report.lifts.append((alpha, rhs))
        if rhs == lhs and report.witness is None:
            report.admissible, report.witness = True, alpha
    return report


class InequalityAudit(NamedTuple):
    lhs: int
    rhs: int
    holds: bool
    diagnostic: Optional[str] = None


def inequality_audit(p, rho, alpha):
    """Compare ``dim H^1(G, C_rho)`` with the Aomoto dimension of a lift ``alpha``."""
    rho = make_character(p, rho)
    alpha = one_form(p, alpha)
    if tuple(root_of_unity(a) for a in alpha) != rho:
        raise NotALift("fractional parts of alpha differ from the character")
    lhs = twisted_h1_dim(p, rho)
    rhs = aomoto_h1_dim(p, alpha)
    holds = lhs >= rhs
    diagnostic = None
    if not holds and p.formal:
        diagnostic = "FORMALITY-VIOLATION"
    return InequalityAudit(lhs, rhs, holds, diagnostic)


def find_zero_lift(p, rho, radius=DEFAULT_BOX):
    """First lift in the box with vanishing Aomoto dimension, or ``None`` (inconclusive)."""
    for alpha in exp_lift_candidates(p, rho, radius):
        if aomoto_h1_dim(p, alpha) == 0:
            return alpha
    return None


class CriterionResult(NamedTuple):
    dim_at_rho: int
    generic_dim: int
    matches: bool


def generic_dim_criterion(p, rho, w):
    rho = make_character(p, rho)
    w.validate_for(p)
    if not w.contains(rho):
        raise NotOnTorus(f"character is not on torus {w.name!r}")
    here = twisted_h1_dim(p, rho)
    generic = generic_h1_dim_along(p, w)
    return CriterionResult(here, generic, here == generic)
