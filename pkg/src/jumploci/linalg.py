"""Exact linear algebra over fields and over (Laurent) polynomial rings."""

from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch, RankTooLarge, SizeLimitExceeded
from .laurent import LaurentPoly, UniPoly, exact_divide, uni_gcd

MAX_MINOR_DIM = 12


class Matrix:
    """A rectangular matrix; ``ncols`` is kept explicitly so 0-row matrices have a width."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatch("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix")
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return self.nrows

    @property
    def shape(self):
        return self.nrows, self.ncols

    def columns(self):
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def transpose(self):
        return Matrix(self.columns(), self.nrows)

    T = property(transpose)

    def map(self, fn):
        return Matrix([[fn(x) for x in r] for r in self.rows], self.ncols)

    def submatrix(self, rows, cols):
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = other.columns()
        out = []
        for r in self.rows:
            out.append([sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols])
        return Matrix(out, other.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r}, ncols={self.ncols})"


def as_matrix(m, ncols=None):
    if isinstance(m, Matrix):
        return m
    return Matrix(m, ncols)


def _echelon(m):
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_over_field(m, ncols=None):
    """Exact rank of a matrix over Q or a cyclotomic field."""
    m = as_matrix(m, ncols)
    rows = [list(r) for r in m.rows if any(x != 0 for x in r)]
    rank = 0
    c = 0
    while rows and c < m.ncols:
        piv = next((i for i, r in enumerate(rows) if r[c] != 0), None)
        if piv is None:
            c += 1
            continue
        prow = rows.pop(piv)
        inv = None
        nxt = []
        for r in rows:
            if r[c] != 0:
                if inv is None:
                    inv = 1 / prow[c]
                f = r[c] * inv
                r = [x - f * y for x, y in zip(r, prow)]
            if any(x != 0 for x in r):
                nxt.append(r)
        rows = nxt
        rank += 1
        c += 1
    return rank


def nullspace_over_field(m, ncols=None):
    """Basis of the right kernel; ``len(basis) == ncols - rank``."""
    m = as_matrix(m, ncols)
    rows, pivots = _echelon(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def solve_over_field(rows, rhs):
    """One solution of ``A x = b`` or ``None`` when the system is inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = Matrix([list(r) + [b] for r, b in zip(rows, rhs)], n + 1)
    red, pivots = _echelon(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        x[p] = red[r][n]
    return x


# -- fraction-free elimination -------------------------------------------------

def _degree(x):
    if isinstance(x, LaurentPoly):
        return x.total_degree()
    if isinstance(x, UniPoly):
        return x.degree()
    return 0


def _divide(a, b):
    if isinstance(a, LaurentPoly):
        return exact_divide(a, b)
    if isinstance(a, UniPoly):
        q, r = a.divmod(b)
        if not r.is_zero():
            raise ArithmeticError("inexact univariate division")
        return q
    return a / b


def _bareiss(rows, one):
    """Fraction-free elimination with full pivoting.

    Pivots are chosen by smallest total degree, then earliest (row, col).
    Returns ``(rank, last_pivot, sign)``; for a square matrix of full rank
    ``sign * last_pivot`` is the determinant.
    """
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    prev = one
    sign = 1
    k = 0
    while k < min(nr, nc):
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                x = a[i][j]
                if x != 0:
                    key = (_degree(x), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, nr):
            for j in range(k + 1, nc):
                a[i][j] = _divide(piv * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = 0 * piv
        prev = piv
        k += 1
    return k, prev, sign


def _clear_laurent_units(m):
    """Shift each row by a monomial so every entry is an honest polynomial."""
    out = []
    for r in m.rows:
        nonzero = [x for x in r if not x.is_zero()]
        if not nonzero:
            out.append(list(r))
            continue
        nvars = len(nonzero[0].vars)
        low = [min(x.min_exponents()[v] for x in nonzero) for v in range(nvars)]
        out.append([x.shift([-e for e in low]) for x in r])
    return Matrix(out, m.ncols)


def generic_rank(m, ncols=None):
    """Rank over the rational function field of a matrix of Laurent polynomials."""
    m = as_matrix(m, ncols)
    if m.nrows == 0 or m.ncols == 0:
        return 0
    m = _clear_laurent_units(m)
    vars = next((x.vars for r in m.rows for x in r), ())
    return _bareiss(m.rows, LaurentPoly.constant(vars, 1))[0]


def determinant(m):
    """Determinant of a square matrix over a field or a polynomial ring."""
    m = as_matrix(m)
    if m.nrows != m.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    if m.nrows == 0:
        return Fraction(1)
    sample = m.rows[0][0]
    if isinstance(sample, UniPoly):
        one = UniPoly([1], sample.var)
    elif isinstance(sample, LaurentPoly):
        one = LaurentPoly.constant(sample.vars, 1)
    else:
        one = Fraction(1)
    rank, last, sign = _bareiss(m.rows, one)
    if rank < m.nrows:
        return 0 * one
    return last * sign


def _as_unipoly_matrix(m):
    if m.nrows and m.ncols and isinstance(m.rows[0][0], LaurentPoly):
        return _clear_laurent_units(m).map(lambda x: x.to_unipoly())
    return m


def minor_gcd_1d(m, r, ncols=None):
    """Monic gcd of all ``r x r`` minors of a one-parameter polynomial matrix.

    Powers of the parameter are divided out: the parameter never vanishes on
    the torus.  The roots of the result are exactly the torus points where
    the rank drops below ``r``.
    """
    m = _as_unipoly_matrix(as_matrix(m, ncols))
    if r < 0 or r > min(m.nrows, m.ncols):
        raise RankTooLarge(f"r = {r} exceeds the matrix dimensions {m.shape}")
    if max(m.nrows, m.ncols) > MAX_MINOR_DIM:
        raise SizeLimitExceeded(
            f"minor enumeration is limited to {MAX_MINOR_DIM}x{MAX_MINOR_DIM} matrices")
    var = next((x.var for row in m.rows for x in row), "t")
    if r == 0:
        return UniPoly([1], var)
    g = UniPoly([], var)
    for rows in combinations(range(m.nrows), r):
        for cols in combinations(range(m.ncols), r):
            det = determinant(m.submatrix(rows, cols))
            if det.is_zero():
                continue
            g = uni_gcd(g, det)
            if g.degree() == 0:
                return g
    if g.is_zero():
        raise RankTooLarge(f"generic rank is below {r}")
    return g.strip_variable_powers().monic()


def integer_row_transform(a, ncols=None):
    """Unimodular ``T`` with ``T @ A`` zero below its first ``rank`` rows.

    Integer row operations only, so ``T`` is invertible over the integers.
    Returns ``(T, TA, rank)``.
    """
    a = as_matrix(a, ncols)
    n = a.nrows
    h = [list(map(int, r)) for r in a.rows]
    t = [[int(i == j) for j in range(n)] for i in range(n)]
    row = 0
    for col in range(a.ncols):
        while True:
            live = [i for i in range(row, n) if h[i][col]]
            if not live:
                break
            p = min(live, key=lambda i: (abs(h[i][col]), i))
            h[row], h[p] = h[p], h[row]
            t[row], t[p] = t[p], t[row]
            done = True
            for i in range(row + 1, n):
                if h[i][col]:
                    f = h[i][col] // h[row][col]
                    h[i] = [x - f * y for x, y in zip(h[i], h[row])]
                    t[i] = [x - f * y for x, y in zip(t[i], t[row])]
                    if h[i][col]:
                        done = False
            if done:
                row += 1
                break
        if row == n:
            break
    return Matrix(t, n), Matrix(h, a.ncols), row
