"""Twisted first Betti numbers at torsion characters and along subtori.

For a character ``rho`` of order ``N`` the twisted cochain complex of the
presentation 2-complex is ``C -> C^n -> C^m`` with differentials the column
``(rho(x_i) - 1)`` and the Alexander matrix evaluated at ``rho``, all over
``Q(zeta_N)``.  Along a torus ``W`` given by a monomial parametrization the
same matrix is taken over the function field of the parameters.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (
    DegenerateCurve,
    InvalidCharacter,
    ParseError,
    RankDeficientSpec,
    RowCountMismatch,
    SpecMismatch,
)
from .exactnum import CycloNum, character_order, format_rational, root_of_unity, root_order
from .fox import alexander_matrix, exponent_matrix, validate_character
from .laurent import (
    UniPoly,
    cyclotomic_part,
    evaluate_at_character,
    norm_to_rationals,
    substitute_monomial,
)
from .linalg import (
    Matrix,
    generic_rank,
    integer_row_transform,
    minor_gcd_1d,
    rank_over_field,
    solve_over_field,
)


# -- characters ------------------------------------------------------------------

def make_character(p, coords):
    """Reduce coordinates to ``[0, 1)`` and check that they define a character of ``p``."""
    q = tuple(root_of_unity(c) for c in coords)
    if len(q) != p.n:
        raise InvalidCharacter(f"expected {p.n} coordinates, got {len(q)}")
    if not validate_character(p, q):
        raise InvalidCharacter("coordinates do not kill every relator")
    return q


def parse_character(text):
    try:
        return tuple(root_of_unity(Fraction(x.strip())) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InvalidCharacter(f"bad character {text!r}") from None


def format_character(q):
    return ",".join(format_rational(x) for x in q)


def is_trivial(q):
    return not any(q)


def inverse_character(q):
    return tuple(root_of_unity(-x) for x in q)


def twisted_h0_dim(p, rho):
    rho = make_character(p, rho)
    return 1 if is_trivial(rho) else 0


def evaluated_alexander(p, rho):
    j = alexander_matrix(p)
    return j.map(lambda x: evaluate_at_character(x, rho))


def twisted_h1_dim(p, rho):
    """``dim H^1(G, C_rho) = (n - rank d1) - rank J(rho)``."""
    rho = make_character(p, rho)
    d1 = 0 if is_trivial(rho) else 1
    if p.m == 0:
        return p.n - d1
    return p.n - d1 - rank_over_field(evaluated_alexander(p, rho))


def charvar_membership(p, rho, k):
    return twisted_h1_dim(p, rho) >= k


def symmetry_check(p, rho):
    rho = make_character(p, rho)
    a = twisted_h1_dim(p, rho)
    b = twisted_h1_dim(p, inverse_character(rho))
    return a, b, a == b


# -- tori ------------------------------------------------------------------------

@dataclass(frozen=True)
class TorusSpec:
    """``u -> translate + exponents @ u`` (mod 1): a ``d``-parameter monomial subtorus."""

    name: str
    translate: tuple
    exponents: tuple   # n rows of d integers

    def __post_init__(self):
        object.__setattr__(self, "translate", tuple(root_of_unity(q) for q in self.translate))
        object.__setattr__(self, "exponents", tuple(tuple(int(e) for e in r) for r in self.exponents))
        if len(self.translate) != len(self.exponents):
            raise RowCountMismatch(
                f"{len(self.exponents)} exponent rows but {len(self.translate)} translate coordinates")
        d = len(self.exponents[0]) if self.exponents else 0
        if any(len(r) != d for r in self.exponents):
            raise RowCountMismatch("exponent rows have different lengths")
        if d == 0 or rank_over_field(Matrix(self.exponents, d).map(Fraction)) != d:
            raise RankDeficientSpec(f"exponent matrix of {self.name!r} does not have rank {d}")

    @property
    def n(self):
        return len(self.exponents)

    @property
    def d(self):
        return len(self.exponents[0])

    def point(self, u):
        """Character at parameter ``u`` (a vector of rationals mod 1)."""
        return tuple(root_of_unity(t + sum(e * x for e, x in zip(row, u)))
                     for t, row in zip(self.translate, self.exponents))

    def parameters_of(self, q):
        """A rational ``u`` with ``point(u) == q``, or ``None``.

        With ``T`` unimodular and ``T A`` zero below its first ``d`` rows,
        ``A u = q - translate (mod Z^n)`` is solvable exactly when the lower
        entries of ``T (q - translate)`` are integers.
        """
        q = [root_of_unity(x) for x in q]
        if len(q) != self.n:
            return None
        t, h, rank = integer_row_transform(Matrix(self.exponents, self.d))
        diff = [a - b for a, b in zip(q, self.translate)]
        rhs = [sum(x * y for x, y in zip(row, diff)) for row in t]
        if any(Fraction(v).denominator != 1 for v in rhs[rank:]):
            return None
        top = [[Fraction(x) for x in h[i]] for i in range(rank)]
        u = solve_over_field(top, rhs[:rank])
        u = tuple(root_of_unity(x) for x in u)
        assert self.point(u) == tuple(q)
        return u

    def contains(self, q):
        return self.parameters_of(q) is not None

    def is_translated(self):
        """True when the trivial character is not on the torus."""
        return not self.contains((0,) * self.n)

    def restrict(self, name, translate, exponents):
        """Compose with a sub-parametrization ``v -> translate + exponents @ v`` of the parameters."""
        new_t = self.point(translate)
        new_e = [[sum(a * b for a, b in zip(row, col)) for col in zip(*exponents)]
                 for row in self.exponents]
        return TorusSpec(name, new_t, tuple(map(tuple, new_e)))

    def validate_for(self, p):
        if self.n != p.n:
            raise RowCountMismatch(f"torus {self.name!r} has {self.n} rows, group has {p.n} generators")
        e = exponent_matrix(p)
        for row in e:
            for k in range(self.d):
                if sum(x * r[k] for x, r in zip(row, self.exponents)) != 0:
                    raise SpecMismatch(f"E * exponents != 0 for torus {self.name!r}")
            if sum(x * q for x, q in zip(row, self.translate)).denominator != 1:
                raise SpecMismatch(f"translate of {self.name!r} is not a character of {p.name!r}")


def full_torus(p, name=None):
    """The identity component, parametrized by a Z-basis of ``ker E``."""
    e = exponent_matrix(p)
    if p.m == 0:
        cols = [[int(i == j) for j in range(p.n)] for i in range(p.n)]
    else:
        t, _, rank = integer_row_transform(e.transpose())
        cols = [list(r) for r in t.rows[rank:]]
    if not cols:
        raise RankDeficientSpec(f"{p.name!r} has b1 = 0; its identity component is a point")
    return TorusSpec(name or f"{p.name}-full", (0,) * p.n, tuple(zip(*cols)))


def parse_torus(text):
    """Parse a torus file::

        torus W
        params 1
        translate 0 1/2
        row 1
        row 0
    """
    name = params = translate = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        if keyword == "torus" and len(args) == 1:
            name = args[0]
        elif keyword == "params" and len(args) == 1:
            params = _number(int, args[0], lineno)
            if params < 1:
                raise ParseError("params must be positive", lineno)
        elif keyword == "translate":
            translate = [_number(Fraction, a, lineno) for a in args]
        elif keyword == "row":
            if params is not None and len(args) != params:
                raise RowCountMismatch(f"row has {len(args)} entries, expected {params}", lineno)
            rows.append([_number(int, a, lineno) for a in args])
        else:
            raise ParseError(f"unexpected line {line!r}", lineno, 1)
    if name is None or params is None or translate is None:
        raise ParseError("torus file needs 'torus', 'params' and 'translate' lines")
    if len(rows) != len(translate):
        raise RowCountMismatch(f"{len(rows)} rows but {len(translate)} translate coordinates")
    if any(len(r) != params for r in rows):
        raise RowCountMismatch(f"every row must have {params} entries")
    return TorusSpec(name, tuple(translate), tuple(map(tuple, rows)))


def _number(kind, text, lineno):
    try:
        return kind(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad number {text!r}", lineno) from None


def format_torus(w):
    lines = [f"torus {w.name}", f"params {w.d}",
             "translate " + " ".join(format_rational(q) for q in w.translate)]
    lines += ["row " + " ".join(str(e) for e in r) for r in w.exponents]
    return "\n".join(lines) + "\n"


def substituted_alexander(p, w):
    w.validate_for(p)
    names = ("t",) if w.d == 1 else tuple(f"t{k + 1}" for k in range(w.d))
    return alexander_matrix(p).map(
        lambda x: substitute_monomial(x, w.exponents, w.translate, names))


def generic_h1_dim_along(p, w):
    """Twisted ``dim H^1`` at a generic point of ``w``."""
    j = substituted_alexander(p, w)
    return p.n - 1 - generic_rank(j)


# -- jumping points along one-parameter tori -------------------------------------

@dataclass
class JumpPoint:
    param: Fraction           # t = exp(2 pi i param)
    param_order: int
    character: tuple = None
    character_order: int = None
    h1: int = None
    trivial: bool = False


@dataclass
class JumpReport:
    generic_rank: int
    minor_gcd: UniPoly
    norm: UniPoly
    cyclotomic_factors: list
    torsion_points: list
    non_torsion_factor: object = None   # UniPoly of positive degree, or None
    generic_h1: int = None
    trivial_char_params: list = field(default_factory=list)


def _roots_of_unity_of(g, level):
    """Certified roots of unity of ``g`` plus the non-cyclotomic part of its norm."""
    norm = norm_to_rationals(g, level) if g.degree() > 0 else UniPoly([1], g.var)
    if norm.degree() > 0:
        factors, rest = cyclotomic_part(norm)
    else:
        factors, rest = [], norm
    params = []
    for n, _ in factors:
        for k in range(n):
            if gcd(k, n) != 1:
                continue
            # candidates come from all Galois conjugates; keep the actual roots
            if g(CycloNum.zeta(n, k)) == 0:
                params.append(Fraction(k, n))
    remainder = rest.monic() if rest.degree() > 0 else None
    return params, norm, factors, remainder


def jumping_points_matrix(m, r=None, level=1):
    """Rank-drop points of a one-parameter Laurent matrix below rank ``r``.

    ``r`` defaults to the generic rank; ``level`` is the cyclotomic level of
    the coefficients.
    """
    if r is None:
        r = generic_rank(m)
    g = minor_gcd_1d(m, r)
    params, norm, factors, rest = _roots_of_unity_of(g, level)
    points = [JumpPoint(u, root_order(u)) for u in sorted(params)]
    return JumpReport(r, g, norm, factors, points, rest)


def _trivial_params(w):
    """Parameters ``u`` in ``[0, 1)`` where the one-parameter torus meets the trivial character."""
    col = [r[0] for r in w.exponents]
    pivot = next((i for i, a in enumerate(col) if a), None)
    a, t = col[pivot], w.translate[pivot]
    found = set()
    for j in range(abs(a)):
        u = root_of_unity((-t + j) / a)
        if is_trivial(w.point((u,))):
            found.add(u)
    return sorted(found)


def jumping_points_1d(p, w):
    if w.d != 1:
        raise SpecMismatch(f"jumping_points_1d needs a one-parameter torus, {w.name!r} has {w.d}")
    j = substituted_alexander(p, w)
    r = generic_rank(j)
    level = character_order(w.translate)
    if p.m == 0:
        report = JumpReport(0, UniPoly([1]), UniPoly([1]), [], [], None)
    else:
        report = jumping_points_matrix(j, r, level)
    report.generic_h1 = p.n - 1 - r
    for pt in report.torsion_points:
        pt.character = w.point((pt.param,))
        pt.character_order = character_order(pt.character)
        pt.trivial = is_trivial(pt.character)
        pt.h1 = twisted_h1_dim(p, pt.character)
    for u in _trivial_params(w):
        ch = w.point((u,))
        report.trivial_char_params.append(
            JumpPoint(u, root_order(u), ch, 1, twisted_h1_dim(p, ch), True))
    return report


# -- curves --------------------------------------------------------------------

@dataclass(frozen=True)
class CurveDescriptor:
    """A smooth curve of genus ``genus`` with ``punctures`` points removed."""

    genus: int
    punctures: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise DegenerateCurve("genus and punctures must be nonnegative")

    @property
    def proper(self):
        return self.punctures == 0

    @property
    def chi(self):
        return 2 - 2 * self.genus - self.punctures

    @property
    def b1(self):
        if self.proper:
            return 2 * self.genus
        return 2 * self.genus + self.punctures - 1


def component_dims(s):
    """``(dim W, generic dim H^1)`` for a component pulled back from the curve ``s``."""
    e = 2 if s.proper else 1
    dim_w = -s.chi + e
    if dim_w <= 0:
        raise DegenerateCurve(f"curve with chi = {s.chi} gives no positive-dimensional component")
    generic = -s.chi
    if not s.proper:
        assert dim_w == generic + 1
    return dim_w, generic


def curve_h1_dim(s, trivial):
    if trivial:
        return s.b1
    if s.b1 == 0:
        raise DegenerateCurve("a curve with b1 = 0 carries no nontrivial rank-one local system")
    return -s.chi
