"""Exact numbers: rationals, roots of unity and cyclotomic fields.

Rationals are :class:`fractions.Fraction`.  A root of unity is stored as a
rational ``q`` in ``[0, 1)`` standing for ``exp(2*pi*i*q)``.  Elements of
``Q(zeta_N)`` are :class:`CycloNum` values, kept in the power basis
``1, z, ..., z^(phi(N)-1)`` modulo the cyclotomic polynomial ``Phi_N``.
"""

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

Rational = Fraction


def parse_rational(text):
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def lcm(*values):
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


@lru_cache(maxsize=None)
def divisors(n):
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return tuple(sorted(set(small + [n // d for d in small])))


@lru_cache(maxsize=None)
def totient(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# -- integer polynomial helpers (coefficient lists, lowest degree first) ----

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _divide_exact_monic(num, den):
    """Quotient of ``num`` by the monic ``den``; the division must be exact."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Return the coefficients of ``Phi_n`` (lowest degree first, integers).

    Computed as ``(x^n - 1)`` divided by ``Phi_d`` for every proper divisor
    ``d`` of ``n``.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _divide_exact_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_mod_cyclotomic(vec, n):
    """Reduce an integer (or rational) power-basis vector modulo ``Phi_n``."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    vec = list(vec)
    if len(vec) < deg:
        return vec + [0] * (deg - len(vec))
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    vec[base + j] -= c * phi[j]
    return vec[:deg]


@lru_cache(maxsize=4096)
def _zeta_power_vector(n, j):
    vec = [0] * (j + 1)
    vec[j] = 1
    return tuple(_reduce_mod_cyclotomic(vec, n))


# -- roots of unity -----------------------------------------------------------

def root_of_unity(q):
    """Normalize ``q`` to the canonical representative in ``[0, 1)``."""
    return Fraction(q) % 1


def root_order(q):
    """Multiplicative order of ``exp(2*pi*i*q)``."""
    return root_of_unity(q).denominator


def character_order(qs):
    """Order of a torsion character given by its coordinates."""
    return lcm(*(root_order(q) for q in qs))


# -- rational polynomial helpers for inversion -------------------------------

def _qpoly_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = _trim(b)
    lead = Fraction(b[-1])
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _trim(quot), _trim(a[:db])


def _qpoly_sub_mul(a, b, c):
    """a - b*c on coefficient lists."""
    out = [Fraction(x) for x in a] + [Fraction(0)] * max(0, len(b) + len(c) - 1 - len(a))
    for i, x in enumerate(b):
        if x:
            for j, y in enumerate(c):
                out[i + j] -= x * y
    return _trim(out)


def _qpoly_inverse_mod(a, m):
    """Inverse of ``a`` modulo ``m`` over Q, by the extended Euclidean algorithm."""
    r0, r1 = _trim(m), _trim(a)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub_mul(s0, q, s1)
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


class CycloNum:
    """An element of the cyclotomic field ``Q(zeta_N)``.

    Coefficients are held as integer numerators over one common positive
    denominator.  Binary operations between different levels are carried out
    at the lcm of the levels; results are not pushed down to a smaller field.
    """

    __slots__ = ("level", "_num", "_den")

    def __init__(self, level, coeffs=()):
        if level < 1:
            raise ValueError("level must be positive")
        fr = [Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in fr)) if fr else 1
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._set(level, _reduce_mod_cyclotomic(nums, level), den)

    def _set(self, level, nums, den):
        g = gcd(den, *nums)
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        if not any(nums):
            den = 1
        self.level = level
        self._num = tuple(nums)
        self._den = den

    @classmethod
    def _raw(cls, level, nums, den):
        obj = cls.__new__(cls)
        obj._set(level, nums, den)
        return obj

    @classmethod
    def zeta(cls, level, power=1):
        """``zeta_level ** power``."""
        return cls._raw(level, _zeta_power_vector(level, power % level), 1)

    @classmethod
    def from_power_sums(cls, level, sums):
        """Build ``sum_j sums[j] * zeta^j`` from a length-``level`` vector of rationals."""
        return cls(level, sums)

    @classmethod
    def constant(cls, level, value):
        value = Fraction(value)
        nums = [0] * totient(level)
        nums[0] = value.numerator
        return cls._raw(level, nums, value.denominator)

    # -- inspection ----------------------------------------------------------

    @property
    def coeffs(self):
        return tuple(Fraction(x, self._den) for x in self._num)

    def is_zero(self):
        return not any(self._num)

    def __bool__(self):
        return any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational element")
        return Fraction(self._num[0], self._den)

    # -- level changes -------------------------------------------------------

    def embed(self, level):
        """Image in ``Q(zeta_level)``; ``level`` must be a multiple of ``self.level``."""
        if level == self.level:
            return self
        if level % self.level:
            raise ValueError(f"cannot embed level {self.level} into level {level}")
        k = level // self.level
        vec = [0] * (k * (len(self._num) - 1) + 1)
        for i, c in enumerate(self._num):
            vec[i * k] = c
        return CycloNum._raw(level, _reduce_mod_cyclotomic(vec, level), self._den)

    def restrict(self, level):
        """Inverse of :meth:`embed`; raises ``ValueError`` if not in the subfield."""
        if level == self.level:
            return self
        if self.level % level:
            raise ValueError(f"level {level} does not divide {self.level}")
        from .linalg import solve_over_field

        images = [CycloNum.zeta(level, i).embed(self.level).coeffs
                  for i in range(totient(level))]
        cols = [list(row) for row in zip(*images)]
        sol = solve_over_field(cols, list(self.coeffs))
        if sol is None:
            raise ValueError(f"element does not lie in Q(zeta_{level})")
        return CycloNum(level, sol)

    def conjugate(self, k):
        """Galois action ``zeta -> zeta^k`` with ``gcd(k, level) == 1``."""
        n = self.level
        if gcd(k, n) != 1:
            raise ValueError("Galois exponent must be a unit modulo the level")
        vec = [0] * n
        for i, c in enumerate(self._num):
            if c:
                vec[(i * k) % n] += c
        return CycloNum._raw(n, _reduce_mod_cyclotomic(vec, n), self._den)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.level == self.level:
                return self, other
            n = lcm(self.level, other.level)
            return self.embed(n), other.embed(n)
        if isinstance(other, (int, Fraction)):
            return self, CycloNum.constant(self.level, other)
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        den = a._den * b._den // gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        nums = [x * fa + y * fb for x, y in zip(a._num, b._num)]
        return CycloNum._raw(a.level, nums, den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.level, [-x for x in self._num], self._den)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloNum._raw(self.level, [x * other.numerator for x in self._num],
                                 self._den * other.denominator)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        an = [(i, x) for i, x in enumerate(a._num) if x]
        bn = [(j, y) for j, y in enumerate(b._num) if y]
        prod = [0] * (2 * len(a._num))
        for i, x in an:
            for j, y in bn:
                prod[i + j] += x * y
        return CycloNum._raw(a.level, _reduce_mod_cyclotomic(prod, a.level), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloNum.constant(self.level, 1 / self.to_rational())
        inv = _qpoly_inverse_mod(list(self._num), list(cyclotomic_polynomial(self.level)))
        return CycloNum(self.level, [c * self._den for c in inv])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        result = CycloNum.constant(self.level, 1)
        e = abs(e)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a._num == b._num and a._den == b._den

    __hash__ = None

    def __repr__(self):
        return f"CycloNum({self.level}, [{', '.join(map(format_rational, self.coeffs))}])"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(format_rational(c))
                continue
            mono = f"z{self.level}" + (f"^{i}" if i > 1 else "")
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def cyclo_arith(a, b, op):
    """Dispatch ``add``, ``mul`` or ``inv`` (``b`` ignored) on cyclotomic numbers."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")
