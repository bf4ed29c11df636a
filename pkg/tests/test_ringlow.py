import random
from fractions import Fraction

import pytest
import sympy

from jumploci.errors import InvalidOneForm
from jumploci.fox import Presentation, exponent_matrix, free_group, reduce_word
from jumploci.linalg import rank_over_field
from jumploci.ringlow import (
    MODEL,
    aomoto_h1_dim,
    cup_data,
    parse_one_form,
    resonance_dim_ge,
    second_derivative_augmented,
)

from .conftest import GROUPS, group, random_one_form


def random_presentation(rng, n=None, m=None, length=12):
    n = n or rng.randint(1, 4)
    m = m if m is not None else rng.randint(1, 3)
    rels = [reduce_word((rng.randrange(n), rng.choice((1, -1, 2, -2)))
                        for _ in range(rng.randint(1, length))) for _ in range(m)]
    return Presentation("R", tuple(f"x{i}" for i in range(n)), tuple(r for r in rels if r))


def random_class(rng, p, basis):
    coeffs = [Fraction(rng.randint(-3, 3)) for _ in basis]
    return tuple(sum((c * v[i] for c, v in zip(coeffs, basis)), Fraction(0)) for i in range(p.n))


def oracle_aomoto(p, alpha):
    """dim{beta in ker E : alpha u beta exact} - 1, via sympy on the block system
    [E 0; C_alpha -E] (beta, y) = 0, whose projection to beta has kernel {0} x ker E."""
    if not any(alpha):
        return p.n - sympy.Matrix(exponent_matrix(p).rows or [[0] * p.n]).rank()
    n, m = p.n, p.m
    e = [list(r) for r in exponent_matrix(p)]
    calpha = [[sum(alpha[k] * c[k][l] for k in range(n)) for l in range(n)] for c in cup_data(p).cup]
    top = [row + [0] * n for row in e]
    bottom = [calpha[j] + [-x for x in e[j]] for j in range(m)]
    block = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                           for x in row] for row in top + bottom])
    nullity = 2 * n - block.rank()
    rank_e = sympy.Matrix(e).rank()
    return nullity - (n - rank_e) - 1


# -- examples --------------------------------------------------------------------

def test_cup_data_free_group():
    d = cup_data(free_group(2))
    assert d.cup == () and d.b1 == 2 and d.b2 == 0


def test_symplectic_forms():
    assert rank_over_field(cup_data(group("genus2")).antisymmetric_form(0).map(Fraction)) == 4
    assert rank_over_field(cup_data(group("t2")).antisymmetric_form(0).map(Fraction)) == 2


@pytest.mark.parametrize("gname, alpha, expected", [
    ("f2", (1, 0), 1),
    ("genus2", (1, 0, 0, 0), 2),
    ("t2", (1, 0), 0),
])
def test_aomoto_examples(gname, alpha, expected):
    assert aomoto_h1_dim(group(gname), alpha) == expected


def test_resonance_examples():
    assert resonance_dim_ge(group("f2"), (1, 0), 1)
    assert not resonance_dim_ge(group("t2"), (1, 1), 1)
    for name in GROUPS:
        p = group(name)
        assert resonance_dim_ge(p, (0,) * p.n, cup_data(p).b1)


def test_invalid_one_forms():
    z2 = Presentation("Z2", ("x",), (((0, 2),),))
    with pytest.raises(InvalidOneForm):
        aomoto_h1_dim(z2, (1,))
    with pytest.raises(InvalidOneForm):
        aomoto_h1_dim(group("t2"), (1, 0, 0))
    with pytest.raises(InvalidOneForm):
        parse_one_form("1,a")
    assert parse_one_form("1, -1/2,0") == (1, Fraction(-1, 2), 0)


def test_model_is_reported():
    assert "presentation 2-complex" in MODEL


# -- properties --------------------------------------------------------------------

def test_scale_invariance(shipped_group, rng):
    p = shipped_group
    for _ in range(100):
        alpha = random_one_form(p, rng)
        c = Fraction(rng.choice((-1, 1)) * rng.randint(1, 20), rng.randint(1, 7))
        assert aomoto_h1_dim(p, tuple(c * a for a in alpha)) == aomoto_h1_dim(p, alpha)


def test_symmetric_part_identity_on_random_words():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 4)
        word = reduce_word((rng.randrange(n), rng.choice((1, -1))) for _ in range(rng.randint(0, 30)))
        c = second_derivative_augmented(word, n)
        e = [0] * n
        for g, k in word:
            e[g] += k
        for k in range(n):
            for l in range(n):
                assert c[k][l] + c[l][k] == e[k] * e[l] - (e[k] if k == l else 0)


def test_cup_is_antisymmetric_in_h2():
    rng = random.Random(9)
    for _ in range(100):
        p = random_presentation(rng)
        if not p.relators:
            continue
        d = cup_data(p)
        if not d.h1_basis:
            continue
        a, b = random_class(rng, p, d.h1_basis), random_class(rng, p, d.h1_basis)
        ab, ba = d.cup_values(a, b), d.cup_values(b, a)
        assert d.is_exact([x + y for x, y in zip(ab, ba)])
        assert d.is_exact(d.cup_values(a, a))


def test_aomoto_matches_block_oracle():
    rng = random.Random(10)
    checked = 0
    while checked < 60:
        p = random_presentation(rng)
        d = cup_data(p)
        if not d.h1_basis:
            continue
        alpha = random_class(rng, p, d.h1_basis)
        assert aomoto_h1_dim(p, alpha) == oracle_aomoto(p, alpha)
        checked += 1


def test_genus2_every_nonzero_form_has_dim_2(rng):
    p = group("genus2")
    for _ in range(50):
        assert aomoto_h1_dim(p, random_one_form(p, rng)) == 2
