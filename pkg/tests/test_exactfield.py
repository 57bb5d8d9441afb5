from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fano3lab.errors import ConductorMismatch, DivisionByZero, NotASubfield
from fano3lab.exactfield import CycNum, as_cyc, cyclotomic_polynomial, embed, project, sqrt5, totient, zeta

from conftest import cyc_40, cyc_small

t = sympy.symbols("t")


@pytest.mark.parametrize("n", [1, 2, 4, 5, 8, 12, 20, 24, 40])
def test_cyclotomic_matches_sympy(n):
    expected = sympy.Poly(sympy.cyclotomic_poly(n, t), t).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in expected]
    assert len(cyclotomic_polynomial(n)) == totient(n) + 1


def test_cyclotomic_small_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)


def test_cyclotomic_40_product_identity():
    prod = sympy.Integer(1)
    for d in sympy.divisors(40):
        coeffs = cyclotomic_polynomial(d)
        prod *= sum(c * t ** k for k, c in enumerate(coeffs))
    assert sympy.expand(prod - (t ** 40 - 1)) == 0
    assert len(cyclotomic_polynomial(40)) == 17


def test_basic_products():
    i = zeta(4)
    assert i * i == -1
    assert (zeta(5) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4)) ** 2 == 5
    assert zeta(8) ** 2 == embed(zeta(4), 8)
    assert sqrt5(40) ** 2 == 5


def test_embed_examples():
    assert embed(zeta(4), 40) == zeta(40, 10)
    assert embed(as_cyc(3, 1), 40) == 3
    assert embed(zeta(5), 40) == zeta(40, 8)
    assert project(zeta(40, 10), 4) == zeta(4)


def test_errors():
    with pytest.raises(DivisionByZero):
        zeta(4) / 0
    with pytest.raises(NotASubfield):
        embed(zeta(3), 40)
    with pytest.raises(ConductorMismatch):
        zeta(3) + zeta(5)


@pytest.mark.parametrize("n", [4, 5, 8, 20, 40])
def test_primitivity(n):
    z = zeta(n)
    assert z ** n == 1
    assert all(z ** k != 1 for k in range(1, n))


def _gauss(a: CycNum) -> tuple[Fraction, Fraction]:
    c = a.coords
    return (c[0], c[1] if len(c) > 1 else Fraction(0))


def _gauss_mul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


@given(cyc_small(), cyc_small())
def test_gaussian_rationals_oracle(a, b):
    # Q(i) arithmetic by hand, independent of the power-basis reduction
    pa, pb = _gauss(a), _gauss(b)
    assert _gauss(a * b) == _gauss_mul(pa, pb)
    assert _gauss(a + b) == (pa[0] + pb[0], pa[1] + pb[1])
    if not b.is_zero():
        assert _gauss((a / b) * b) == pa


@given(cyc_40(), cyc_40(), cyc_40())
def test_field_axioms_40(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1


@given(cyc_small(), cyc_small())
def test_embed_is_homomorphism(a, b):
    assert embed(a * b, 40) == embed(a, 40) * embed(b, 40)
    assert embed(a + b, 40) == embed(a, 40) + embed(b, 40)
    assert project(embed(a, 40), 4) == a


@given(st.integers(min_value=1, max_value=60))
def test_reduction_is_idempotent(n):
    a = CycNum(n, [Fraction(k % 5 - 2, 3) for k in range(totient(n))])
    again = CycNum(n, a.coords)
    assert again == a and again.coords == a.coords


def test_json_round_trip():
    a = zeta(40, 7) * Fraction(3, 7) + 2
    assert CycNum.from_json(a.to_json()) == a
