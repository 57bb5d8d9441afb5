import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fano3lab.autgrp import (
    PHI12,
    PHI12_AS_PRINTED,
    ProjMat2,
    SubgroupSpec,
    closure,
    family_preserves,
    icosahedral_generators,
    linear_closure,
    octahedral_generators,
    phi6,
    preserves_curve,
    special_aut_group,
    stabilizes_form,
    stabilizes_pointed,
)
from fano3lab.errors import CapExceeded, DegenerateParameter, NotDetNormalized
from fano3lab.exactfield import zeta
from fano3lab.polyalg import GroupElt2, MultiPoly
from fano3lab.quintics import build_z

X, Y = sympy.symbols("x y")


def test_closure_examples():
    i = zeta(4)
    assert len(closure([ProjMat2.of(i, 0, 0, 1), ProjMat2.of(1, 1, 1, -1)], 100)) == 24
    assert len(closure([ProjMat2.of(zeta(5), 0, 0, 1)], 100)) == 5
    with pytest.raises(CapExceeded):
        closure([ProjMat2.of(1, 1, 0, 1)], 10)


def test_octahedral_group_is_closed_and_stabilizes_phi6():
    group = closure(octahedral_generators(), 100)
    assert len(group) == 24
    members = set(group)
    for g in group:
        assert g.inverse() in members
        assert stabilizes_form(g, phi6())
        for h in octahedral_generators():
            assert g * h in members
    # one extra round adds nothing
    assert len(closure(group, 100)) == 24


def test_octahedral_group_is_s4():
    # element orders of S4: 1 identity, 9 of order 2, 8 of order 3, 6 of order 4
    orders = {}
    for g in closure(octahedral_generators(), 100):
        k = 1
        while not (g ** k).is_identity():
            k += 1
        orders[k] = orders.get(k, 0) + 1
    assert orders == {1: 1, 2: 9, 3: 8, 4: 6}


def test_icosahedral_group():
    s, t = icosahedral_generators()
    assert len(closure([s, t], 200)) == 60
    lifts = linear_closure([s, t], 200)
    assert len(lifts) == 120
    assert all(stabilizes_pointed(g, (PHI12.embed(5), 1)) for g in lifts)


def test_stabilizer_examples():
    assert stabilizes_form(ProjMat2.of(0, 1, 1, 0), phi6())
    assert stabilizes_form(ProjMat2.of(1, 1, 1, -1), phi6())
    assert not stabilizes_form(ProjMat2.of(zeta(5), 0, 0, 1), phi6())
    s, t = icosahedral_generators()
    assert stabilizes_pointed(s, (PHI12.embed(5), 1))
    assert stabilizes_pointed(t, (PHI12.embed(5), 1))
    z8 = zeta(8)
    assert not stabilizes_pointed(GroupElt2(z8, 0, 0, z8.inverse(), True), (PHI12.embed(8), 1))
    with pytest.raises(NotDetNormalized):
        stabilizes_pointed(GroupElt2.of(2, 0, 0, 1), (PHI12, 1))


def test_phi12_sign_choice():
    # the variant xy(x^10 + 11 x^5 y^5 + y^10) is not fixed by T; the invariant one has signs (1, -11, -1)
    _, t = icosahedral_generators()
    assert not stabilizes_form(t, PHI12_AS_PRINTED.embed(5))
    assert stabilizes_form(t, PHI12.embed(5))


def test_phi12_is_a_classical_invariant():
    # Klein's vertex form of the icosahedron, recomputed in sympy
    klein = sympy.expand(X * Y * (X ** 10 - 11 * X ** 5 * Y ** 5 - Y ** 10))
    poly = sympy.Poly(klein, X, Y)
    coeffs = [int(poly.coeff_monomial(X ** (12 - k) * Y ** k)) for k in range(13)]
    assert [c.to_fraction() for c in PHI12.coeffs] == coeffs


def test_preserves_curve_examples():
    tau = ProjMat2.of(zeta(4), 0, 0, 1)
    assert (tau ** 4).is_identity()
    assert preserves_curve(tau, build_z("A"))
    z = build_z("M", 2)
    assert preserves_curve(ProjMat2.of(7, 0, 0, 1), z)
    assert not preserves_curve(ProjMat2.of(0, 1, 1, 0), z)
    lam = MultiPoly.var("lam")
    assert family_preserves([lam, 0, 0, 1], z)
    assert not family_preserves([1, lam, 0, 1], z)


def test_special_aut_group_evidence():
    a = special_aut_group("A")
    assert a.group == "G_a x| mu_4"
    assert a.evidence["finite_part_order"] == 4
    assert a.evidence["tau_preserves"] and a.evidence["unipotent_family_symbolic"]
    assert all(a.evidence["unipotent_sampled"].values())
    m = special_aut_group("M", 2)
    assert m.evidence["torus_family_symbolic"] and all(m.evidence["torus_sampled"].values())
    assert any("not verified" in n for n in m.notes)
    mu = special_aut_group("MU")
    assert mu.group == "PGL2" and all(mu.evidence.values())
    with pytest.raises(DegenerateParameter):
        special_aut_group("M", 1)


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_borel_elements_preserve_z_mu(t, s):
    if t == 0:
        t = 1
    assert preserves_curve(ProjMat2.of(t, s, 0, 1), build_z("MU"))


@given(st.integers(1, 6))
def test_unipotent_elements_move_z_m(s):
    # only the torus and one involution preserve Z_m(u)
    assert not preserves_curve(ProjMat2.of(1, s, 0, 1), build_z("M", 2))


def test_subgroup_specs():
    assert len(closure(SubgroupSpec.octahedral().generators, 100)) == 24
    assert len(closure(SubgroupSpec.icosahedral().generators, 100)) == 60
    assert len(closure(SubgroupSpec.mu4().generators, 10)) == 4
    with pytest.raises(CapExceeded):
        closure(SubgroupSpec.borel().generators, 50)
    assert all(preserves_curve(g, build_z("M", 2)) for g in SubgroupSpec.torus(3).generators)
    assert SubgroupSpec.unipotent(2).to_json()["name"] == "U2(2)"
