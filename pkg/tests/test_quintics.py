from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fano3lab.errors import DegenerateParameter, NoSuchFamily
from fano3lab.exactfield import zeta
from fano3lab.planecurves import PlaneCurve, PlanePoint
from fano3lab.polyalg import BinaryForm, GroupElt2, MultiPoly, proj_eq
from fano3lab.quintics import (
    INFINITE,
    ParamCurve,
    bisecant_report,
    build_z,
    contains_point,
    curve_degree,
    incidence_length,
    sigma_z,
    transform_curve,
)
from fano3lab.v5 import classify_point, line_from_sigma, ordinary_line, special_line

X, Y = sympy.symbols("x y")
x, y = BinaryForm.x(), BinaryForm.y()
SYM_PHI6 = X * Y * (X ** 4 - Y ** 4)


def sympy_orbit_point(label, u, s1, s2):
    """Independent expansion of the family member at (s1 : s2)."""
    if label == "M":
        base = SYM_PHI6.subs({Y: u * X + Y}, simultaneous=True)
        expr = base.subs({X: s1 * X, Y: s2 * Y}, simultaneous=True)
    elif label == "A":
        expr = SYM_PHI6.subs({X: s2 * X, Y: s1 * X + s2 * Y}, simultaneous=True)
    else:
        expr = (X * Y ** 5).subs({X: s2 * X, Y: s1 * X + s2 * Y}, simultaneous=True)
    poly = sympy.Poly(sympy.expand(expr), X, Y)
    return BinaryForm([Fraction(str(poly.coeff_monomial(X ** (6 - k) * Y ** k))) for k in range(7)])


def test_za_coefficients_in_affine_chart():
    z = build_z("A")
    for t in (Fraction(1, 3), 2, -5):
        expected = [t * (1 - t ** 4), 1 - 5 * t ** 4, -10 * t ** 3, -10 * t ** 2, -5 * t, -1, 0]
        assert proj_eq(z.point(t, 1), BinaryForm(expected))


@pytest.mark.parametrize("label,u", [("A", None), ("MU", None), ("M", 2), ("M", Fraction(1, 2))])
def test_family_matches_sympy_expansion(label, u):
    z = build_z(label, u)
    for s1, s2 in ((1, 1), (2, 3), (-1, 4), (5, -2)):
        assert proj_eq(z.point(s1, s2), sympy_orbit_point(label, sympy.Rational(str(u)) if u else None, s1, s2))


def test_degrees():
    assert curve_degree(build_z("MU")) == 5
    assert curve_degree(build_z("A")) == 5
    assert curve_degree(build_z("M", 2)) == 5
    sextic = ParamCurve.custom([BinaryForm.monomial(6, k, comb(6, k)) for k in range(7)])
    assert curve_degree(sextic) == 6


def test_degenerate_parameters():
    for u, factor in ((0, "u"), (1, "u^4-1"), (zeta(4), "u^4-1"), (-1, "u^4-1")):
        with pytest.raises(DegenerateParameter) as err:
            build_z("M", u)
        assert err.value.details["factor"] == factor
    for u in (Fraction(1, 2), 2, 3):
        assert build_z("M", u).degree == 5
    with pytest.raises(NoSuchFamily):
        build_z("Q")


def test_incidence_examples():
    za = build_z("A")
    assert incidence_length(za, special_line(x)) == 2
    assert incidence_length(za, line_from_sigma(x * (x + y))) == 1
    assert incidence_length(za, line_from_sigma(x * y)) == 1
    assert incidence_length(za, line_from_sigma(y * y)) == 0
    assert incidence_length(build_z("MU"), ordinary_line(x, y)) == 1


def test_incidence_infinite_for_a_curve_inside_a_line():
    # a degree-1 parameterization of the line spanned by x^6 and x^5 y
    forms = [BinaryForm([1, 0]), BinaryForm([0, 1])] + [BinaryForm.zero(1)] * 5
    z = ParamCurve.custom(forms)
    assert incidence_length(z, special_line(x)) is INFINITE


@pytest.mark.parametrize("label,u", [("A", None), ("MU", None), ("M", 2)])
def test_points_of_z_are_on_y_and_in_z(label, u):
    z = build_z(label, u)
    for s1, s2 in ((1, 2), (3, 1), (1, 0), (0, 1)):
        phi = z.point(s1, s2)
        assert contains_point(z, phi)
        classify_point(phi, 40)


def test_contains_point_rejects_other_points():
    z = build_z("A")
    assert not contains_point(z, x ** 6 + y ** 6)
    assert not contains_point(z, y ** 6)


def test_sigma_z_components():
    sa = sigma_z("A")
    c0, c1, c2 = (MultiPoly.var(n, ("c0", "c1", "c2")) for n in ("c0", "c1", "c2"))
    gamma1 = PlaneCurve(c1 ** 2 - c2 ** 2 * 4 - c0 * c2 * 4)
    gamma2 = PlaneCurve(c1 ** 2 + c2 ** 2 * 4 - c0 * c2 * 4)
    conics = [c for c, _ in sa.conic_components]
    assert any(c == gamma1 for c in conics) and any(c == gamma2 for c in conics)
    assert sa.line_component == PlaneCurve(c2)
    smu = sigma_z("MU")
    assert smu.conic_components == [(PlaneCurve(c1 ** 2 - c0 * c2 * 4), 2)]
    sm = sigma_z("M", 2)
    assert len(sm.conic_components) == 2
    for conic, mult in sm.conic_components:
        assert mult == 1 and conic(PlanePoint(1, 0, 0)).is_zero()
    for s in (sa, smu, sm):
        assert s.total_degree == 5


@pytest.mark.parametrize("label,u", [("A", None), ("MU", None), ("M", 2), ("M", 3)])
def test_bisecant(label, u):
    rep = bisecant_report(label, u)
    assert rep["length"] == 2
    assert rep["line"] == special_line(x)
    assert all(s["length"] == 1 for s in rep["samples"])
    assert rep["unique_among_samples"]


@given(st.integers(-5, 5), st.integers(1, 5))
def test_torus_preserves_zm(t_num, t_den):
    if t_num == 0:
        t_num = 1
    z = build_z("M", 2)
    moved = transform_curve(GroupElt2.of(Fraction(t_num, t_den), 0, 0, 1), z)
    for s1, s2 in ((1, 1), (2, -1)):
        assert contains_point(z, moved.point(s1, s2))
