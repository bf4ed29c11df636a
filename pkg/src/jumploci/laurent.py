"""Sparse multivariate Laurent polynomials and univariate polynomials.

Coefficients are either :class:`fractions.Fraction` or
:class:`~jumploci.exactnum.CycloNum`; both follow the ordinary numeric
protocol, so the arithmetic here is written once for both.
"""

import re
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, ParseError, VariableMismatch, ZeroPolynomial
from .exactnum import (
    CycloNum,
    character_order,
    cyclotomic_polynomial,
    format_rational,
    lcm,
    root_of_unity,
    totient,
)


def _coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def _format_coeff(c):
    if isinstance(c, CycloNum):
        if c.is_rational():
            return format_rational(c.to_rational())
        return f"({c})"
    return format_rational(c)


class LaurentPoly:
    """A Laurent polynomial in named variables.

    ``terms`` maps exponent tuples (negative entries allowed) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise DimensionMismatch(f"exponent vector {exps} for {n} variables")
            if c != 0:
                clean[exps] = _coeff(c)
        self.terms = clean

    @classmethod
    def constant(cls, vars, c):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def monomial(cls, vars, exps, c=1):
        return cls(vars, {tuple(exps): c})

    @classmethod
    def var(cls, vars, name, power=1):
        vars = tuple(vars)
        exps = [0] * len(vars)
        exps[vars.index(name)] = power
        return cls(vars, {tuple(exps): 1})

    # -- arithmetic ----------------------------------------------------------

    def _other(self, other):
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise VariableMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return LaurentPoly.constant(self.vars, other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return LaurentPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                terms[e] = terms[e] + c if e in terms else c
        return LaurentPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly(self.vars, {tuple(x * k for x in e): (1 / c) ** -k})
        result = LaurentPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = self._other(other)
            if other is None:
                return NotImplemented
        if self.vars != other.vars or self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[e] == c for e, c in other.terms.items())

    __hash__ = None

    # -- inspection ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_term(self):
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self):
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(min(col) for col in zip(*self.terms))

    def shift(self, exps):
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPoly(self.vars, {tuple(a + b for a, b in zip(e, exps)): c
                                       for e, c in self.terms.items()})

    def normalized(self):
        """Shift by a monomial so every exponent is >= 0 and some is 0 per variable."""
        return self.shift(tuple(-m for m in self.min_exponents()))

    def map_coeffs(self, fn):
        return LaurentPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def at_one(self):
        """Value at the point with all coordinates equal to 1."""
        return sum(self.terms.values(), Fraction(0))

    def to_unipoly(self):
        if len(self.vars) != 1:
            raise DimensionMismatch("to_unipoly needs a single variable")
        if any(e[0] < 0 for e in self.terms):
            raise ValueError("negative exponent; normalize first")
        deg = max((e[0] for e in self.terms), default=-1)
        coeffs = [Fraction(0)] * (deg + 1)
        for (k,), c in self.terms.items():
            coeffs[k] = c
        return UniPoly(coeffs, self.vars[0])

    def __repr__(self):
        return f"LaurentPoly({self.vars!r}, {self})"

    def __str__(self):
        return format_laurent(self)


def format_laurent(p):
    """Canonical text: exponent-lex descending terms, e.g. ``3/2*x1^-2*x2 - 1``."""
    if not p.terms:
        return "0"
    pieces = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        factors = []
        for name, k in zip(p.vars, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        mono = "*".join(factors)
        text = _format_coeff(c)
        if not mono:
            piece = text
        elif text == "1":
            piece = mono
        elif text == "-1":
            piece = "-" + mono
        else:
            piece = f"{text}*{mono}"
        pieces.append(piece)
    out = pieces[0]
    for piece in pieces[1:]:
        out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
    return out


_TERM_SPLIT = re.compile(r"(?<![\^*/])\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_laurent(text, vars):
    """Parse the canonical text form produced by :func:`format_laurent`."""
    vars = tuple(vars)
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    parts = _TERM_SPLIT.split(s)
    if parts[0] == "":
        parts = parts[1:]
    else:
        parts = ["+"] + parts
    result = LaurentPoly(vars)
    for sign, body in zip(parts[::2], parts[1::2]):
        body = body.strip()
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * len(vars)
        for factor in body.split("*"):
            factor = factor.strip()
            m = _FACTOR.match(factor)
            if m:
                if m.group(1) not in vars:
                    raise ParseError(f"unknown variable {m.group(1)!r}")
                exps[vars.index(m.group(1))] += int(m.group(2) or 1)
                continue
            try:
                coeff *= Fraction(factor)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad factor {factor!r}") from None
        result = result + LaurentPoly(vars, {tuple(exps): coeff})
    return result


def laurent_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def evaluate_at_character(p, rho):
    """Substitute ``x_i -> exp(2 pi i rho_i)``; the result lives at level ``order(rho)``."""
    if len(rho) != len(p.vars):
        raise DimensionMismatch(f"character has {len(rho)} coordinates, polynomial {len(p.vars)} variables")
    qs = [root_of_unity(q) for q in rho]
    n = character_order(qs)
    ks = [int(q * n) for q in qs]
    sums = [Fraction(0)] * n
    extra = CycloNum.constant(n, 0)
    for e, c in p.terms.items():
        j = sum(a * k for a, k in zip(e, ks)) % n
        if isinstance(c, CycloNum):
            extra = extra + c * CycloNum.zeta(n, j)
        else:
            sums[j] += c
    return CycloNum(n, sums) + extra


def substitute_monomial(p, exponents, translate, new_vars=None):
    """Substitute ``x_i -> zeta^(translate_i) * prod_k t_k^(exponents[i][k])``."""
    n = len(p.vars)
    if len(exponents) != n or len(translate) != n:
        raise DimensionMismatch(f"substitution needs {n} rows")
    d = len(exponents[0]) if exponents else 0
    if any(len(row) != d for row in exponents):
        raise DimensionMismatch("ragged exponent matrix")
    if new_vars is None:
        new_vars = ("t",) if d == 1 else tuple(f"t{k + 1}" for k in range(d))
    qs = [root_of_unity(q) for q in translate]
    level = character_order(qs)
    ks = [int(q * level) for q in qs]
    terms = {}
    for e, c in p.terms.items():
        new_e = tuple(sum(a * row[k] for a, row in zip(e, exponents)) for k in range(d))
        j = sum(a * k for a, k in zip(e, ks)) % level
        if level > 1:
            c = c * CycloNum.zeta(level, j)
        terms[new_e] = terms[new_e] + c if new_e in terms else c
    return LaurentPoly(new_vars, terms)


def exact_divide(a, b):
    """Quotient ``a / b`` of polynomials (no negative exponents); must be exact.

    Uses leading-term division in lex order, which is a well-order on
    nonnegative exponent vectors, so the loop terminates.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.vars != b.vars:
        raise VariableMismatch(f"{a.vars} vs {b.vars}")
    lb_e, lb_c = b.leading_term()
    inv_lb = 1 / lb_c
    quot = {}
    rem = a
    while rem.terms:
        le, lc = rem.leading_term()
        qe = tuple(x - y for x, y in zip(le, lb_e))
        if min(qe, default=0) < 0:
            raise ArithmeticError("inexact multivariate division")
        qc = lc * inv_lb
        quot[qe] = qc
        rem = rem - b * LaurentPoly(a.vars, {qe: qc})
    return LaurentPoly(a.vars, quot)


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var="t"):
        coeffs = [_coeff(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def cyclotomic(cls, n, var="t"):
        return cls(cyclotomic_polynomial(n), var)

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        return self.coeffs[-1]

    def _other(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            return UniPoly([other], self.var)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]), self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                if y != 0:
                    out[i + j] = out[i + j] + x * y
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UniPoly([1], self.var)
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv = 1 / other.lead()
        quot = [Fraction(0)] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = c * inv
            quot[i - db] = c
            for j, y in enumerate(other.coeffs):
                rem[i - db + j] = rem[i - db + j] - c * y
        return UniPoly(quot, self.var), UniPoly(rem[:db], self.var)

    def __floordiv__(self, other):
        return self.divmod(self._other(other))[0]

    def __mod__(self, other):
        return self.divmod(self._other(other))[1]

    def monic(self):
        if not self.coeffs:
            return self
        inv = 1 / self.lead()
        return UniPoly([c * inv for c in self.coeffs], self.var)

    def strip_variable_powers(self):
        """Divide out the largest power of the variable (zero is not on the torus)."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return UniPoly(self.coeffs[k:], self.var)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return (len(self.coeffs) == len(other.coeffs)
                and all(x == y for x, y in zip(self.coeffs, other.coeffs)))

    __hash__ = None

    def levels(self):
        return lcm(*(c.level for c in self.coeffs if isinstance(c, CycloNum)))

    def is_rational(self):
        return all(not isinstance(c, CycloNum) or c.is_rational() for c in self.coeffs)

    def to_rational(self):
        return UniPoly([c.to_rational() if isinstance(c, CycloNum) else c
                        for c in self.coeffs], self.var)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        exps = {(k,): c for k, c in enumerate(self.coeffs) if c != 0}
        return format_laurent(LaurentPoly((self.var,), exps))


def uni_gcd(f, g):
    """Monic gcd by Euclid's algorithm (zero only if both inputs are zero)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def cyclotomic_part(f):
    """Split ``f`` over Q into cyclotomic factors and a root-of-unity-free rest.

    Returns ``([(n, multiplicity), ...], remainder)``.  Every ``n`` with
    ``phi(n) <= deg f`` satisfies ``n <= 2 deg^2 + 1`` (from
    ``phi(n) >= sqrt(n/2)``), so scanning that range is complete.
    """
    if f.is_zero():
        raise ZeroPolynomial("cyclotomic_part of the zero polynomial")
    rem = f.to_rational()
    found = []
    bound = 2 * rem.degree() ** 2 + 1
    for n in range(1, bound + 1):
        if totient(n) > rem.degree():
            continue
        phi_n = UniPoly.cyclotomic(n, f.var)
        mult = 0
        while rem.degree() >= phi_n.degree():
            q, r = rem.divmod(phi_n)
            if not r.is_zero():
                break
            rem, mult = q, mult + 1
        if mult:
            found.append((n, mult))
    return found, rem


def norm_to_rationals(f, level=None):
    """Product of the Galois conjugates of ``f`` over ``Q(zeta_level)``.

    ``level`` defaults to the lcm of the coefficient levels.
    """
    if f.is_zero():
        raise ZeroPolynomial("norm of the zero polynomial")
    n = level or f.levels()
    coeffs = [c.embed(n) if isinstance(c, CycloNum) else CycloNum.constant(n, c)
              for c in f.coeffs]
    result = UniPoly([1], f.var)
    for k in range(1, max(n, 2)):
        if gcd(k, n) == 1:
            result = result * UniPoly([c.conjugate(k) for c in coeffs], f.var)
    if not result.is_rational():
        raise ArithmeticError("norm is not rational")
    return result.to_rational()
