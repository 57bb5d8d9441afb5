import random

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from fano3lab.errors import BothZero, NotDetNormalized
from fano3lab.exactfield import as_cyc, sqrt5, zeta
from fano3lab.polyalg import (
    BinaryForm,
    GroupElt2,
    MultiPoly,
    UniPoly,
    act,
    act_symbolic,
    act_pointed,
    factor_linear,
    field_roots,
    gcd_forms,
    proj_eq,
    resultant,
)
from fano3lab.autgrp import PHI12, icosahedral_generators
from fano3lab.v5 import phi6

from conftest import binary_forms, group_elements, rational_linear_forms

X, Y, T = sympy.symbols("x y t")


def to_sympy_scalar(c):
    """Only for conductors 1 and 4."""
    coords = c.embed(4).coords if c.conductor == 1 else c.coords
    return sympy.Rational(coords[0]) + sympy.Rational(coords[1]) * sympy.I


def to_sympy_form(f: BinaryForm):
    d = f.degree
    return sum(to_sympy_scalar(c) * X ** (d - k) * Y ** k for k, c in enumerate(f.coeffs))


def test_act_examples():
    swap = GroupElt2.of(0, 1, 1, 0)
    assert act(swap, phi6()) == -phi6()
    assert act(GroupElt2.identity(), phi6()) == phi6()
    u = 3
    shear = GroupElt2.of(1, u, 0, 1)
    # x(ux+y)(x^4 - (ux+y)^4)
    x, y = BinaryForm.x(), BinaryForm.y()
    lin = x * u + y
    assert act(shear, phi6()) == x * lin * (x ** 4 - lin ** 4)


@given(group_elements(), binary_forms(4))
def test_act_matches_sympy_substitution(g, f):
    a, b, c, d = (to_sympy_scalar(e) for e in g.entries)
    expected = to_sympy_form(f).subs({X: a * X + c * Y, Y: b * X + d * Y}, simultaneous=True)
    assert sympy.expand(expected - to_sympy_form(act(g, f))) == 0


def test_act_pointed():
    minus = GroupElt2.of(-1, 0, 0, -1, True)
    assert act_pointed(minus, PHI12, 1) == (PHI12, 1)
    s, _ = icosahedral_generators(5)
    assert act_pointed(s, PHI12.embed(5), 1) == (PHI12.embed(5), 1)
    with pytest.raises(NotDetNormalized):
        act_pointed(GroupElt2.of(zeta(4), 0, 0, 1), PHI12, 1)


def test_proj_eq_examples():
    x, y = BinaryForm.x(), BinaryForm.y()
    assert proj_eq(-phi6(), phi6())
    assert not proj_eq(x ** 6, x ** 5 * y)
    assert proj_eq(x * y * (x * x + y * y) * (x * x - y * y) * 8, phi6())
    with pytest.raises(BothZero):
        proj_eq(BinaryForm.zero(3), BinaryForm.zero(3))


def test_gcd_examples():
    x, y = BinaryForm.x(), BinaryForm.y()
    assert gcd_forms(x ** 5 * y, x * y ** 5) == x * y
    assert gcd_forms(phi6(), x ** 6) == x
    f = x * 3 + y * 6
    assert gcd_forms(f, BinaryForm.zero(2)) == f.normalized()


def test_resultant_examples():
    assert resultant(UniPoly([-1, 0, 1]), UniPoly([-1, 1])) == 0
    # Sylvester determinant with the rows of the first argument on top
    assert resultant(UniPoly([0, 1]), UniPoly([-1, 1])) == -1
    for a, b in [(2, 7), (-3, 5), (0, 1)]:
        assert resultant(UniPoly([-a, 0, 1]), UniPoly([-b, 0, 1])) == (a - b) ** 2


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5), st.lists(st.integers(-9, 9), min_size=2, max_size=5))
def test_resultant_matches_sylvester_determinant(fc, gc):
    assume(fc[-1] != 0 and gc[-1] != 0)
    m, n = len(fc) - 1, len(gc) - 1
    # Sylvester matrix with the rows of f on top, coefficients from the leading one down
    rows = [[0] * k + fc[::-1] + [0] * (n - 1 - k) for k in range(n)]
    rows += [[0] * k + gc[::-1] + [0] * (m - 1 - k) for k in range(m)]
    ours = resultant(UniPoly(fc), UniPoly(gc))
    assert ours == int(sympy.Matrix(rows).det())
    # sympy's own resultant uses a different sign convention in some degrees
    f = sum(c * T ** k for k, c in enumerate(fc))
    g = sum(c * T ** k for k, c in enumerate(gc))
    assert abs(ours.to_fraction()) == abs(int(sympy.resultant(f, g, T)))


def test_factor_linear_examples():
    x, y = BinaryForm.x(), BinaryForm.y()
    factors, rem = factor_linear(phi6().embed(4), 4)
    assert rem.degree == 0
    assert sorted(m for _, m in factors) == [1] * 6
    i = zeta(4)
    expected = [x, y, x - y, x + y, x - y * i, x + y * i]
    for e in expected:
        assert any(proj_eq(lin, e) for lin, _ in factors)
    factors, rem = factor_linear(x ** 5 * (x + y), 40)
    assert {(lin.normalized().to_str(), m) for lin, m in factors} == {("x", 5), ("x + y", 1)}
    factors, rem = factor_linear(x * x + y * y * 3, 4)
    assert factors == [] and rem == x * x + y * y * 3


@given(st.lists(rational_linear_forms(), min_size=1, max_size=5))
def test_factor_linear_recovers_known_roots(lins):
    f = lins[0]
    for lin in lins[1:]:
        f = f * lin
    factors, rem = factor_linear(f.embed(4), 4)
    assert rem.degree == 0
    total = sum(m for _, m in factors)
    assert total == len(lins)
    for lin in lins:
        assert any(proj_eq(lin.embed(4), g) for g, _ in factors)


def test_field_roots_quartic_of_sqrt5():
    # t^2 - 5 splits in conductor 5 and conductor 40, not in 4
    p = UniPoly([-5, 0, 1])
    roots40 = sorted(str(r) for r, _ in field_roots(p, 40))
    assert len(roots40) == 2
    assert all(r * r == 5 for r, _ in field_roots(p, 40))
    assert field_roots(p, 4) == []
    assert sqrt5(40) in [r for r, _ in field_roots(p, 40)]


def test_field_roots_random_gaussian(rng: random.Random):
    i = zeta(4)
    for _ in range(10):
        rs = [as_cyc(rng.randint(-4, 4)) + i * rng.randint(-4, 4) for _ in range(4)]
        p = UniPoly([1])
        for r in rs:
            p = p * UniPoly([-r, 1])
        found = {r: m for r, m in field_roots(p, 4)}
        for r in set(rs):
            assert found[r] == rs.count(r)


def test_multipoly_basics():
    x, y = MultiPoly.var("x", ("x", "y")), MultiPoly.var("y", ("x", "y"))
    p = (x + y) ** 3
    assert p.total_degree() == 3 and p.is_homogeneous()
    assert p.evaluate({"x": 1, "y": 2}) == 27
    assert p.diff("x") == (x + y) ** 2 * 3
    assert (p - p).is_zero()


def test_act_symbolic_with_parameters_in_the_form():
    # the form carries a parameter t; only its degree in x, y counts
    names = ("t", "x", "y")
    t, xv, yv = (MultiPoly.var(n, names) for n in names)
    lam = MultiPoly.var("lam")
    coeffs = act_symbolic([1, lam, 0, 1], t * yv * yv, ("x", "y"))
    assert len(coeffs) == 3
    tt = MultiPoly.var("t", ("lam", "t"))
    ll = MultiPoly.var("lam", ("lam", "t"))
    # y -> lam x + y
    assert coeffs[0] == tt * ll * ll and coeffs[1] == tt * ll * 2 and coeffs[2] == tt
