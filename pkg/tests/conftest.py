import random
from fractions import Fraction

import pytest

from jumploci.charvar import full_torus, parse_torus
from jumploci.cli import shipped_text
from jumploci.exactnum import character_order
from jumploci.fox import parse_presentation

GROUPS = ("f2", "t2", "genus2", "xy2", "f8")
FORMAL_GROUPS = ("f2", "t2", "genus2")

# (group, torus file) pairs shipped in the data directory
TORI = (
    ("f2", "f2-full"),
    ("t2", "t2-full"),
    ("genus2", "genus2-full"),
    ("xy2", "xy2-full"),
    ("t2", "t2-sub"),
    ("t2", "t2-sub-translated"),
    ("xy2", "xy2-sub"),
    ("xy2", "xy2-translated"),
    ("genus2", "genus2-sub"),
    ("f8", "gamma"),
    ("f8", "gamma-sub"),
)


def group(name):
    return parse_presentation(shipped_text(f"{name}.grp"))


def torus(name):
    return parse_torus(shipped_text(f"{name}.trs"))


def random_character(p, rng, max_order=12, nontrivial=True):
    """A valid torsion character, sampled on the identity component."""
    w = full_torus(p)
    while True:
        u = [Fraction(rng.randrange(n), n)
             for n in (rng.randint(1, max_order) for _ in range(w.d))]
        q = w.point(u)
        if not nontrivial or any(q):
            return q


def random_point_of_order(w, rng, lo=50, hi=100):
    """A point of the torus whose character order lies in ``[lo, hi]``."""
    while True:
        n = rng.randint(lo, hi)
        u = [Fraction(rng.randrange(n), n) for _ in range(w.d)]
        q = w.point(u)
        if lo <= character_order(q) <= hi:
            return q


def random_one_form(p, rng, lo=-5, hi=5, den=6):
    """A nonzero rational class in ``ker E`` (the shipped groups all have ``E = 0``)."""
    from jumploci.ringlow import cup_data

    basis = cup_data(p).h1_basis
    while True:
        coeffs = [Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den)) for _ in basis]
        alpha = tuple(sum((c * v[i] for c, v in zip(coeffs, basis)), Fraction(0))
                      for i in range(p.n))
        if any(alpha):
            return alpha


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=GROUPS)
def shipped_group(request):
    return group(request.param)


def evaluate_poly(p, u):
    """Evaluate a Laurent polynomial whose coefficients may already be cyclotomic."""
    from jumploci.exactnum import CycloNum

    n = character_order(u)
    total = CycloNum.constant(n, 0)
    for e, c in p.terms.items():
        j = sum(a * int((x % 1) * n) for a, x in zip(e, u)) % n
        total = total + c * CycloNum.zeta(n, j)
    return total


# -- acceptance summary ----------------------------------------------------------

ACCEPTANCE = {}


def pytest_runtest_makereport(item, call):
    number = getattr(item.function, "criterion", None)
    if number is not None and call.when == "call":
        ok = call.excinfo is None
        ACCEPTANCE[number] = (item.function.title, ok, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, duration = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title} ({duration:.2f}s)")
