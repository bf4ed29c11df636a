"""The cohomology ring in degrees <= 2 and Aomoto (resonance) dimensions.

The ring is modelled on the presentation 2-complex: one 0-cell, a 1-cell
per generator, a 2-cell per relator.  ``H^1`` is the kernel of the exponent
matrix ``E`` and ``H^2`` is ``Q^m`` modulo the column space of ``E``.  The
cup product of two 1-cocycles, evaluated on relator ``r_j``, is
``alpha^T C_j beta`` where ``C_j[k][l]`` is the augmentation of the second
Fox derivative ``d/dx_l (d r_j / dx_k)``.

One-forms are kept over Q.  Cup product with ``alpha`` is linear in
``alpha``, so scaling a lift by ``2 pi i`` does not change any dimension
computed here.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidOneForm
from .fox import exponent_matrix, letters
from .linalg import Matrix, nullspace_over_field, rank_over_field

MODEL = "presentation 2-complex (group cohomology in degrees <= 2)"


def second_derivative_augmented(word, n):
    """``C[k][l] = eps(d/dx_l (d word / dx_k))`` as an ``n x n`` integer matrix."""
    c = [[0] * n for _ in range(n)]
    prefix = [0] * n
    for g, step in letters(word):
        if step > 0:
            for l in range(n):
                c[g][l] += prefix[l]
            prefix[g] += 1
        else:
            prefix[g] -= 1
            for l in range(n):
                c[g][l] -= prefix[l]
    return Matrix(c, n)


@dataclass(frozen=True)
class CupData:
    cup: tuple          # one n x n Matrix per relator
    exponents: Matrix   # E, m x n
    h1_basis: tuple     # basis of ker E
    h2_dual: tuple      # basis of the left kernel of E; v is exact iff every pairing vanishes

    @property
    def b1(self):
        return len(self.h1_basis)

    @property
    def b2(self):
        return len(self.h2_dual)

    def is_exact(self, v):
        """True iff the 2-cochain ``v`` lies in the column space of ``E``."""
        return all(sum(a * b for a, b in zip(w, v)) == 0 for w in self.h2_dual)

    def cup_values(self, alpha, beta):
        return [sum(alpha[k] * c[k][l] * beta[l]
                    for k in range(len(alpha)) for l in range(len(beta)) if c[k][l])
                for c in self.cup]

    def antisymmetric_form(self, j):
        """``C_j - C_j^T`` restricted to ``H^1`` in the stored basis."""
        c = self.cup[j]
        b = self.h1_basis
        return Matrix([[sum(u[k] * (c[k][l] - c[l][k]) * v[l]
                             for k in range(len(u)) for l in range(len(v)))
                        for v in b] for u in b], len(b))


@lru_cache(maxsize=64)
def cup_data(p):
    e = exponent_matrix(p)
    ef = e.map(Fraction)
    h1 = nullspace_over_field(ef)
    h2_dual = nullspace_over_field(ef.transpose(), p.m) if p.m else []
    return CupData(
        cup=tuple(second_derivative_augmented(r, p.n) for r in p.relators),
        exponents=e,
        h1_basis=tuple(tuple(v) for v in h1),
        h2_dual=tuple(tuple(v) for v in h2_dual),
    )


def one_form(p, coords):
    """Validate a degree-1 class: ``n`` rationals with ``E alpha = 0``."""
    alpha = tuple(Fraction(c) for c in coords)
    if len(alpha) != p.n:
        raise InvalidOneForm(f"expected {p.n} coordinates, got {len(alpha)}")
    for row in exponent_matrix(p):
        if sum(e * a for e, a in zip(row, alpha)) != 0:
            raise InvalidOneForm("E * alpha != 0: not a cohomology class")
    return alpha


def aomoto_h1_dim(p, alpha):
    """``dim H^1`` of the Aomoto complex ``(H^*, alpha ^)``."""
    alpha = one_form(p, alpha)
    data = cup_data(p)
    if not any(alpha):
        return data.b1
    # rows of alpha^T C_j give the map beta -> alpha u beta on 1-cochains
    amap = [[sum(alpha[k] * c[k][l] for k in range(p.n)) for l in range(p.n)]
            for c in data.cup]
    images = []
    for w in data.h2_dual:
        images.append([sum(w[j] * sum(amap[j][l] * v[l] for l in range(p.n))
                           for j in range(p.m)) for v in data.h1_basis])
    rank = rank_over_field(images, data.b1) if images else 0
    return data.b1 - rank - 1


def resonance_dim_ge(p, alpha, k):
    return aomoto_h1_dim(p, alpha) >= k


def parse_one_form(text):
    """``"1,0,-1/2"`` -> tuple of rationals."""
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InvalidOneForm(f"bad one-form {text!r}") from None
