from fractions import Fraction

import pytest

from jumploci.charvar import (
    CurveDescriptor,
    TorusSpec,
    charvar_membership,
    component_dims,
    curve_h1_dim,
    format_torus,
    full_torus,
    generic_h1_dim_along,
    inverse_character,
    jumping_points_1d,
    jumping_points_matrix,
    make_character,
    parse_character,
    parse_torus,
    symmetry_check,
    twisted_h0_dim,
    twisted_h1_dim,
)
from jumploci.errors import (
    DegenerateCurve,
    InvalidCharacter,
    ParseError,
    RankDeficientSpec,
    RowCountMismatch,
    SpecMismatch,
)
from jumploci.fox import Presentation, parse_presentation
from jumploci.laurent import UniPoly, parse_laurent

from .conftest import TORI, group, random_character, random_point_of_order, torus

h = Fraction(1, 2)
third = Fraction(1, 3)
Z2 = Presentation("Z2", ("x",), (((0, 2),),))


# -- characters ------------------------------------------------------------------

def test_h0_examples():
    assert twisted_h0_dim(group("t2"), (0, 0)) == 1
    assert twisted_h0_dim(group("f2"), (h, 0)) == 0
    assert twisted_h0_dim(Z2, (h,)) == 0


@pytest.mark.parametrize("gname, rho, expected", [
    ("f2", (h, third), 1),
    ("f2", (0, 0), 2),
    ("genus2", (third, 0, 0, 0), 2),
    ("t2", (h, h), 0),
])
def test_h1_examples(gname, rho, expected):
    assert twisted_h1_dim(group(gname), rho) == expected


def test_membership_examples(shipped_group):
    assert not charvar_membership(group("t2"), (h, h), 1)
    assert charvar_membership(group("f2"), (Fraction(1, 5), 0), 1)
    p = shipped_group
    assert charvar_membership(p, (0,) * p.n, twisted_h1_dim(p, (0,) * p.n))


def test_invalid_characters():
    with pytest.raises(InvalidCharacter):
        twisted_h1_dim(Z2, (third,))
    with pytest.raises(InvalidCharacter):
        twisted_h1_dim(group("t2"), (h,))
    with pytest.raises(InvalidCharacter):
        parse_character("1/2,x")
    assert parse_character("3/2, -1/3") == (h, Fraction(2, 3))
    assert make_character(Z2, (Fraction(3, 2),)) == (h,)


def test_symmetry_examples(shipped_group):
    assert symmetry_check(group("genus2"), (third, 0, 0, 0)) == (2, 2, True)
    assert symmetry_check(group("f2"), (Fraction(1, 5), Fraction(2, 5))) == (1, 1, True)
    assert inverse_character((third, 0)) == (Fraction(2, 3), 0)
    p = shipped_group
    b1 = twisted_h1_dim(p, (0,) * p.n)
    assert symmetry_check(p, (0,) * p.n) == (b1, b1, True)


def test_symmetry_on_random_characters(shipped_group, rng):
    p = shipped_group
    for _ in range(100):
        assert symmetry_check(p, random_character(p, rng))[2]


# -- tori ------------------------------------------------------------------------

@pytest.mark.parametrize("gname, expected", [("f2", 1), ("t2", 0), ("genus2", 2), ("xy2", 0)])
def test_generic_dim_on_full_torus(gname, expected):
    p = group(gname)
    assert generic_h1_dim_along(p, full_torus(p)) == expected
    assert generic_h1_dim_along(p, torus(f"{gname}-full")) == expected


@pytest.mark.parametrize("gname, tname", TORI)
def test_pointwise_symbolic_coherence(gname, tname, rng):
    p, w = group(gname), torus(tname)
    generic = generic_h1_dim_along(p, w)
    samples = [twisted_h1_dim(p, random_point_of_order(w, rng)) for _ in range(2)]
    assert samples == [generic, generic]


def test_shipped_tori_round_trip():
    for _, tname in TORI:
        w = torus(tname)
        assert parse_torus(format_torus(w)) == w


def test_torus_point_and_parameters(rng):
    w = torus("gamma")
    for _ in range(20):
        u = (Fraction(rng.randrange(30), 30), Fraction(rng.randrange(7), 7))
        q = w.point(u)
        assert w.contains(q)
        assert w.point(w.parameters_of(q)) == q
    assert not w.contains((h,) + (0,) * 7)
    assert not torus("t2-sub-translated").contains((0, 0))
    assert torus("t2-sub-translated").is_translated()
    assert not torus("t2-sub").is_translated()


def test_torus_spec_invariants():
    with pytest.raises(RankDeficientSpec):
        TorusSpec("bad", (0, 0), ((1, 2), (2, 4)))
    with pytest.raises(RowCountMismatch):
        TorusSpec("bad", (0,), ((1,), (0,)))
    x2y2 = parse_presentation("group G\ngens x y\nrel x^2 y^-2\n")
    with pytest.raises(SpecMismatch):
        TorusSpec("w", (0, 0), ((1,), (0,))).validate_for(x2y2)
    with pytest.raises(SpecMismatch):
        TorusSpec("w", (third, 0), ((1,), (1,))).validate_for(x2y2)
    TorusSpec("w", (h, 0), ((1,), (1,))).validate_for(x2y2)


def test_seven_rows_against_eight_generators():
    text = "torus W\nparams 1\ntranslate 0 0 0 0 0 0 0\n" + "row 1\n" * 7
    w = parse_torus(text)
    with pytest.raises(RowCountMismatch):
        w.validate_for(group("f8"))
    with pytest.raises(RowCountMismatch):
        parse_torus("torus W\nparams 1\ntranslate 0 0 0 0 0 0 0 0\n" + "row 1\n" * 7)


@pytest.mark.parametrize("text, exc, line", [
    ("torus W\nparams 2\ntranslate 0\nrow 1\n", RowCountMismatch, 4),
    ("torus W\nparams x\n", ParseError, 2),
    ("torus W\nparams 1\ntranslate 1/0\n", ParseError, 3),
    ("torus W\nparams 1\ntranslate 0\nrow 1\nbogus\n", ParseError, 5),
    ("torus W\nparams 0\n", ParseError, 2),
])
def test_torus_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_torus(text)
    assert info.value.line == line


def test_gamma_fixture():
    w = torus("gamma")
    assert w.exponents == ((0, 1), (1, 0), (-2, -2), (1, 0), (0, 1), (-1, -1), (2, 0), (-1, -1))
    assert not any(w.translate)
    w.validate_for(group("f8"))


# -- jumping points --------------------------------------------------------------

def test_jump_t2_subtorus():
    r = jumping_points_1d(group("t2"), torus("t2-sub"))
    assert r.generic_rank == 1
    assert r.minor_gcd == UniPoly([-1, 1])
    assert [(pt.param, pt.param_order, pt.trivial) for pt in r.torsion_points] == [(0, 1, True)]
    assert [pt.param for pt in r.trivial_char_params] == [0]
    assert r.non_torsion_factor is None


def test_jump_t2_translated_subtorus():
    r = jumping_points_1d(group("t2"), torus("t2-sub-translated"))
    assert r.generic_rank == 1
    assert r.minor_gcd == UniPoly([1])
    assert r.torsion_points == [] and r.trivial_char_params == []


def test_synthetic_pipeline():
    r = jumping_points_matrix([[parse_laurent("t^2 - 1", ("t",))]])
    assert [(pt.param, pt.param_order) for pt in r.torsion_points] == [(0, 1), (h, 2)]
    assert r.non_torsion_factor is None


def test_synthetic_non_torsion_factor():
    r = jumping_points_matrix([[parse_laurent("t^2 - 3*t + 1", ("t",))]])
    assert r.torsion_points == []
    assert r.non_torsion_factor == UniPoly([1, -3, 1])


def _one_param_tori():
    return [(g, t) for g, t in TORI if torus(t).d == 1]


@pytest.mark.parametrize("gname, tname", _one_param_tori())
def test_torsion_certification(gname, tname):
    p, w = group(gname), torus(tname)
    r = jumping_points_1d(p, w)
    if p.quasi_projective:
        assert r.non_torsion_factor is None
    for pt in r.torsion_points:
        assert pt.h1 > r.generic_h1 or pt.trivial


@pytest.mark.parametrize("gname, tname", _one_param_tori())
def test_jump_points_are_complete_for_small_orders(gname, tname):
    """Brute force over all parameters of order <= 12: exactly the reported ones jump."""
    p, w = group(gname), torus(tname)
    r = jumping_points_1d(p, w)
    reported = {pt.param for pt in r.torsion_points} | {pt.param for pt in r.trivial_char_params}
    for n in range(1, 13):
        for k in range(n):
            u = Fraction(k, n)
            jumps = twisted_h1_dim(p, w.point((u,))) != r.generic_h1
            assert jumps == (u in reported), (u, tname)


def test_xy2_subtorus_jumps_at_plus_minus_one():
    r = jumping_points_1d(group("xy2"), torus("xy2-sub"))
    assert [pt.param for pt in r.torsion_points] == [0, h]


# -- curves --------------------------------------------------------------------

@pytest.mark.parametrize("g, k, expected", [(0, 3, (2, 1)), (1, 1, (2, 1)), (2, 0, (4, 2))])
def test_component_dims_examples(g, k, expected):
    assert component_dims(CurveDescriptor(g, k)) == expected


def test_curve_h1_examples():
    assert curve_h1_dim(CurveDescriptor(1, 1), False) == 1
    assert curve_h1_dim(CurveDescriptor(2, 0), False) == 2
    assert curve_h1_dim(CurveDescriptor(0, 3), True) == 2


def test_affine_cross_check():
    for g in range(6):
        for k in range(1, 6):
            s = CurveDescriptor(g, k)
            try:
                dim_w, generic = component_dims(s)
            except DegenerateCurve:
                assert -s.chi + 1 <= 0
                continue
            assert dim_w == generic + 1


def test_degenerate_curves():
    with pytest.raises(DegenerateCurve):
        component_dims(CurveDescriptor(0, 0))
    with pytest.raises(DegenerateCurve):
        curve_h1_dim(CurveDescriptor(0, 1), False)
    with pytest.raises(DegenerateCurve):
        CurveDescriptor(-1, 0)


def test_curve_group_matches_formula():
    """A genus-g surface group and a free group on 2g + k - 1 letters realize the formulas."""
    p = group("genus2")
    assert twisted_h1_dim(p, (third, 0, 0, 0)) == curve_h1_dim(CurveDescriptor(2), False)
    for g, k in [(0, 3), (1, 1), (1, 2), (0, 4)]:
        s = CurveDescriptor(g, k)
        n = s.b1
        free = parse_presentation("group F\ngens " + " ".join(f"x{i}" for i in range(n)) + "\n")
        rho = (h,) + (0,) * (n - 1)
        assert twisted_h1_dim(free, rho) == curve_h1_dim(s, False)
        assert generic_h1_dim_along(free, full_torus(free)) == component_dims(s)[1]
