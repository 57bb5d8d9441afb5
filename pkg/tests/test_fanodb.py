import jsonschema
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fano3lab.errors import (
    ConductorTooSmall,
    NoSuchFamily,
    NotCovered,
    NotEven,
    OutOfCorrespondence,
    OutOfRange,
    UnsupportedCombination,
)
from fano3lab.exactfield import zeta
from fano3lab.fanodb import (
    FERMAT_AUT_ORDER,
    all_families,
    aut_verdict,
    chi_normal_bundle,
    double_cover_data,
    fermat_cones,
    genus_from_K3,
    hilbert_verdict,
    index2_partner,
    load_schema,
    load_tables,
    lookup_family,
    mukai_numerology,
)


def test_tables_match_schema():
    jsonschema.validate(load_tables(), load_schema())


def test_lookup_examples():
    v22 = lookup_family(1, 12)
    assert (v22.degree, v22.h12, v22.m0) == (22, 0, 1)
    v5 = lookup_family(2, 5)
    assert (v5.h12, v5.m0) == (0, 1)
    assert "Gr(2,5)" in v5.description
    with pytest.raises(NoSuchFamily):
        lookup_family(1, 11)
    with pytest.raises(NoSuchFamily):
        lookup_family(5, 1)


def test_index_one_degree_is_twice_genus_minus_two():
    rows = [f for f in all_families() if f.index == 1]
    assert sorted(f.genus for f in rows) == [2, 3, 4, 5, 6, 7, 8, 9, 10, 12]
    for f in rows:
        assert f.degree == 2 * f.genus - 2


def test_index_two_and_higher_rows():
    keys = sorted((f.index, f.degree) for f in all_families() if f.index > 1)
    assert keys == [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (4, 1)]


def test_genus_from_k3():
    assert genus_from_K3(-22) == {"genus": 12, "dim_anticanonical_system": 13}
    assert genus_from_K3(-4)["genus"] == 3
    assert genus_from_K3(-2)["genus"] == 2
    with pytest.raises(NotEven):
        genus_from_K3(-7)
    with pytest.raises(OutOfRange):
        genus_from_K3(0)


@given(st.integers(2, 200).map(lambda g: -(2 * g - 2)))
def test_genus_formula(k3):
    g = genus_from_K3(k3)["genus"]
    assert 2 * g - 2 == -k3
    assert genus_from_K3(k3)["dim_anticanonical_system"] == g + 1


def test_index2_partner():
    assert {g: index2_partner(g)["partner_degree"] for g in (8, 10, 12)} == {8: 3, 10: 4, 12: 5}
    assert "K^2 = 45" in index2_partner(8)["hilbert_scheme"]
    for g in (7, 9, 11):
        with pytest.raises(OutOfCorrespondence):
            index2_partner(g)


def test_hilbert_verdicts():
    cubic = hilbert_verdict(2, 3)
    assert (cubic["irregularity"], cubic["geometric_genus"], cubic["K2"]) == (5, 10, 45)
    assert "simple rank 2" in hilbert_verdict(1, 9)["description"]
    with pytest.raises(NotCovered) as err:
        hilbert_verdict(1, 6)
    assert "may be singular and even reducible" in str(err.value)


def test_aut_verdicts():
    assert aut_verdict(2, 5)["verdict"] == "Infinite"
    assert aut_verdict(2, 5)["groups"] == ["PGL2"]
    v22 = aut_verdict(1, 12)
    assert v22["verdict"] == "Finite"
    assert v22["special_members"] == {"MU": "PGL2", "A": "G_a x| mu_4", "M(u)": "G_m x| mu_2"}
    assert aut_verdict(1, 10) == {"index": 1, "key": 10, "h12": 2, "verdict": "Finite", "groups": []}


def test_infinite_automorphisms_force_h12_zero():
    infinite = 0
    for f in all_families():
        key = f.genus if f.index == 1 else f.degree
        verdict = aut_verdict(f.index, key)
        if verdict["verdict"] == "Infinite":
            infinite += 1
            assert f.h12 == 0
    assert infinite == 3


def test_chi_examples():
    assert chi_normal_bundle(1, "line", 0)["chi"] == 1
    assert chi_normal_bundle(1, "reducible conic")["chi"] == 2
    assert chi_normal_bundle(1, "non-reduced conic")["chi"] == 2
    assert chi_normal_bundle(1, "non_reduced_conic")["chi"] == 2
    assert chi_normal_bundle(2, "line", 0)["chi"] == 2


@pytest.mark.parametrize("index", [1, 2])
@pytest.mark.parametrize("kind", ["line", "conic", "reducible conic", "non-reduced conic"])
def test_chi_does_not_depend_on_a(index, kind):
    values = {chi_normal_bundle(index, kind, a)["chi"] for a in range(6)}
    assert len(values) == 1


def test_chi_matches_splitting_type():
    # chi(O(a) + O(-1-a)) on P^1 for index 1; the index only shifts the degree
    for a in range(6):
        rec = chi_normal_bundle(1, "line", a)
        assert rec["splitting"] == [a, -1 - a]
        assert rec["chi"] == sum(d + 1 for d in rec["splitting"])


def test_chi_errors():
    with pytest.raises(UnsupportedCombination):
        chi_normal_bundle(3, "line")
    with pytest.raises(UnsupportedCombination):
        chi_normal_bundle(1, "twisted cubic")
    with pytest.raises(OutOfRange):
        chi_normal_bundle(1, "line", -1)


def test_mukai():
    m10 = mukai_numerology(10)
    assert (m10["c2_coefficient"], m10["h0"], m10["grassmannian"]) == (6, 7, "Gr(2,7)")
    m8 = mukai_numerology(8)
    assert m8["grassmannian"] == "Gr(2,6)" and "codimension 5" in m8["map"]
    assert mukai_numerology(6)["discriminant_coefficient"] == -16
    for g in (5, 7, 14):
        with pytest.raises(OutOfRange):
            mukai_numerology(g)


def test_double_covers():
    rows = double_cover_data()
    assert {(r["index"], r.get("degree", r.get("genus"))) for r in rows} == {(2, 1), (2, 2), (1, 2), (1, 3)}


def test_fermat_cones_match_independent_count():
    doc = fermat_cones(40)
    assert doc["count"] == 40 and doc["all_verified"]
    assert doc["aut_order"] == FERMAT_AUT_ORDER == 4 ** 4 * 120
    # vertices (e_i + w e_j) with w^4 = -1, one per pair i < j and per primitive 8th root
    expected = {((i, j), str(zeta(8, k).embed(40))) for i in range(5) for j in range(i + 1, 5) for k in (1, 3, 5, 7)}
    assert {(tuple(c["pair"]), c["omega"]) for c in doc["cones"]} == expected


def test_fermat_cone_identity_in_sympy():
    # F(lam P + mu q) = lam^4 F(P) + mu^4 F(q) for q supported off the pair, and F(P) = 1 + w^4 = 0
    lam, mu, q2, q3, q4 = sympy.symbols("lam mu q2 q3 q4")
    for k in (1, 3, 5, 7):
        w = sympy.exp(sympy.I * sympy.pi * k / 4)
        point = [lam, lam * w, mu * q2, mu * q3, mu * q4]
        value = sympy.expand(sum(c ** 4 for c in point))
        assert sympy.simplify(value - mu ** 4 * (q2 ** 4 + q3 ** 4 + q4 ** 4)) == 0


def test_fermat_needs_eighth_roots():
    with pytest.raises(ConductorTooSmall):
        fermat_cones(4)
    assert fermat_cones(8)["count"] == 40
