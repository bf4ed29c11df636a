"""Free-group words, group presentations and abelianized Fox calculus.

A word is a tuple of ``(generator_index, exponent)`` syllables in freely
reduced form: exponents are nonzero and neighbouring syllables use
different generators.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    EmptyGeneratorList,
    IndexOutOfRange,
    ParseError,
    UnknownGenerator,
)
from .exactnum import root_of_unity
from .laurent import LaurentPoly
from .linalg import Matrix, rank_over_field

_ID = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def reduce_word(syllables):
    """Freely reduce a sequence of ``(generator, exponent)`` pairs."""
    out = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((g, e))
    return tuple(out)


def letters(word):
    """Expand a word into single letters ``(generator, +1 or -1)``."""
    for g, e in word:
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            yield g, step


def inverse_word(word):
    return tuple((g, -e) for g, e in reversed(word))


def word_product(*words):
    return reduce_word(s for w in words for s in w)


def commutator(a, b):
    return word_product(a, b, inverse_word(a), inverse_word(b))


def exponent_sums(word, n):
    sums = [0] * n
    for g, e in word:
        sums[g] += e
    return sums


@dataclass(frozen=True)
class Presentation:
    """``<generators | relators>``, plus user assertions about the space it models.

    ``formal`` records that the presented group is 1-formal and
    ``quasi_projective`` that it is the fundamental group of a smooth
    quasi-projective variety.  Neither is checked.
    """

    name: str
    generators: tuple
    relators: tuple = ()
    formal: bool = False
    quasi_projective: bool = False

    def __post_init__(self):
        if not self.generators:
            raise EmptyGeneratorList("a presentation needs at least one generator")
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(reduce_word(r) for r in self.relators))
        n = len(self.generators)
        for r in self.relators:
            for g, _ in r:
                if not 0 <= g < n:
                    raise IndexOutOfRange(f"generator index {g} out of range for {n} generators")

    @property
    def n(self):
        return len(self.generators)

    @property
    def m(self):
        return len(self.relators)

    def word_text(self, word):
        return format_word(word, self.generators)


def free_group(n, name=None, names=None):
    names = names or tuple(f"x{i + 1}" for i in range(n))
    return Presentation(name or f"F{n}", tuple(names), (), formal=True, quasi_projective=True)


def fox_derivative(word, i, vars):
    """Abelianized Fox derivative of ``word`` with respect to generator ``i``.

    ``vars`` names the Laurent variables, one per generator.
    """
    n = len(vars)
    if not 0 <= i < n:
        raise IndexOutOfRange(f"generator index {i} out of range for {n} generators")
    prefix = [0] * n
    terms = {}

    def bump(exps, c):
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c

    for g, step in letters(word):
        if g >= n:
            raise IndexOutOfRange(f"generator index {g} out of range for {n} generators")
        if step > 0:
            if g == i:
                bump(prefix, 1)
            prefix[g] += 1
        else:
            prefix[g] -= 1
            if g == i:
                bump(prefix, -1)
    return LaurentPoly(vars, {e: Fraction(c) for e, c in terms.items()})


@lru_cache(maxsize=64)
def alexander_matrix(p):
    """``m x n`` matrix of abelianized Fox derivatives ``d r_j / d x_i``."""
    return Matrix([[fox_derivative(r, i, p.generators) for i in range(p.n)]
                   for r in p.relators], p.n)


@lru_cache(maxsize=64)
def exponent_matrix(p):
    return Matrix([exponent_sums(r, p.n) for r in p.relators], p.n)


@lru_cache(maxsize=64)
def first_betti(p):
    return p.n - rank_over_field(exponent_matrix(p).map(Fraction))


def validate_character(p, q):
    """True iff the coordinates ``q`` kill every relator (``E q = 0 mod 1``)."""
    if len(q) != p.n:
        return False
    q = [root_of_unity(x) for x in q]
    for row in exponent_matrix(p):
        if sum(e * x for e, x in zip(row, q)).denominator != 1:
            return False
    return True


# -- text format ---------------------------------------------------------------

def format_word(word, names):
    if not word:
        return "1"
    return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in word)


def parse_word(text, names, line=None, offset=0):
    """Parse ``x y^-2 z`` (or ``1`` for the empty word) over the given names."""
    index = {name: k for k, name in enumerate(names)}
    syllables = []
    pos = 0
    for tok in text.split():
        col = text.index(tok, pos)
        pos = col + len(tok)
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad token {tok!r}", line, offset + col + 1)
        name, exp = m.group(1), int(m.group(2) or 1)
        if name not in index:
            raise UnknownGenerator(f"unknown generator {name!r}", line, offset + col + 1)
        syllables.append((index[name], exp))
    return reduce_word(syllables)


def parse_presentation(text):
    """Parse the line-oriented presentation format.

    ::

        group T2
        gens x y
        rel x y x^-1 y^-1
        assert formal
        assert quasi-projective
    """
    name = None
    gens = None
    rels = []
    flags = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = line.strip().partition(" ")
        rest_col = indent + len(keyword) + 2  # 1-based column where ``rest`` starts
        if keyword == "group":
            if not rest.strip() or len(rest.split()) != 1:
                raise ParseError("expected 'group <name>'", lineno, 1)
            name = rest.strip()
        elif keyword == "gens":
            if gens is not None:
                raise ParseError("duplicate 'gens' line", lineno, 1)
            gens = rest.split()
            if not gens:
                raise EmptyGeneratorList("empty generator list", lineno, rest_col)
            for g in gens:
                if not _ID.match(g):
                    raise ParseError(f"bad generator name {g!r}", lineno,
                                     rest_col + rest.index(g))
            if len(set(gens)) != len(gens):
                raise ParseError("repeated generator name", lineno, rest_col)
        elif keyword == "rel":
            if gens is None:
                raise ParseError("'rel' before 'gens'", lineno, 1)
            if not rest.strip():
                raise ParseError("empty relator (write '1' for the trivial word)", lineno, rest_col)
            rels.append(parse_word(rest, gens, lineno, rest_col - 1))
        elif keyword == "assert":
            flag = rest.strip()
            if flag not in ("formal", "quasi-projective"):
                raise ParseError(f"unknown assertion {flag!r}", lineno, rest_col)
            flags.add(flag)
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, indent + 1)
    if name is None:
        raise ParseError("missing 'group' line")
    if gens is None:
        raise EmptyGeneratorList("missing 'gens' line")
    return Presentation(name, tuple(gens), tuple(rels),
                        formal="formal" in flags,
                        quasi_projective="quasi-projective" in flags)


def format_presentation(p):
    lines = [f"group {p.name}", "gens " + " ".join(p.generators)]
    lines += ["rel " + format_word(r, p.generators) for r in p.relators]
    if p.formal:
        lines.append("assert formal")
    if p.quasi_projective:
        lines.append("assert quasi-projective")
    return "\n".join(lines) + "\n"
