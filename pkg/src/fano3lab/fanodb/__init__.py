"""Classification data for Fano threefolds of Picard rank one and small calculators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations

from ..errors import (
    ConductorTooSmall,
    NoSuchFamily,
    NotCovered,
    NotEven,
    OutOfCorrespondence,
    OutOfRange,
    UnsupportedCombination,
)
from ..exactfield import DEFAULT_CONDUCTOR, as_cyc, zeta
from ..polyalg import MultiPoly


@lru_cache(maxsize=1)
def load_tables() -> dict:
    text = resources.files(__package__).joinpath("tables.json").read_text(encoding="utf-8")
    return json.loads(text)


def load_schema() -> dict:
    text = resources.files(__package__).joinpath("tables.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


@dataclass(frozen=True)
class FanoFamily:
    index: int
    degree: int
    h12: int
    m0: int
    description: str
    genus: int | None = None
    variants: tuple[dict, ...] = field(default=())

    def to_json(self) -> dict:
        out = {"rho": 1, "index": self.index, "degree": self.degree, "h12": self.h12, "m0": self.m0,
               "description": self.description}
        if self.genus is not None:
            out["genus"] = self.genus
        if len(self.variants) > 1:
            out["variants"] = [dict(v) for v in self.variants]
        return out


def all_families() -> list[FanoFamily]:
    t = load_tables()
    out = [FanoFamily(r["index"], r["degree"], r["h12"], r["m0"], r["description"]) for r in t["index_ge_2"]]
    for r in t["index_1"]:
        variants = tuple(r["variants"])
        desc = " | ".join(v["description"] for v in variants)
        out.append(FanoFamily(1, r["degree"], r["h12"], r["m0"], desc, r["genus"], variants))
    return out


def lookup_family(index: int, key: int) -> FanoFamily:
    """Index 1 rows are keyed by genus, the others by degree."""
    for fam in all_families():
        if fam.index != index:
            continue
        if (fam.genus if index == 1 else fam.degree) == key:
            return fam
    what = "genus" if index == 1 else "degree"
    raise NoSuchFamily(f"no family with index {index} and {what} {key}", index=index, key=key)


def double_cover_data() -> list[dict]:
    return [dict(r) for r in load_tables()["double_covers"]]


def genus_from_K3(k3: int) -> dict:
    """Genus g = -K^3/2 + 1 and dim |-K| = g + 1."""
    if k3 % 2:
        raise NotEven("K^3 must be even", K3=k3)
    if -k3 < 2:
        raise OutOfRange("-K^3 must be at least 2", K3=k3)
    g = -k3 // 2 + 1
    return {"genus": g, "dim_anticanonical_system": g + 1}


_PARTNER_SURFACES = {
    3: "minimal surface of general type, irregularity 5, geometric genus 10, K^2 = 45",
    4: "abelian surface",
    5: "P^2",
}


def index2_partner(g: int) -> dict:
    if g not in (8, 10, 12):
        raise OutOfCorrespondence("the correspondence covers genus 8, 10 and 12", genus=g)
    d = g // 2 - 1
    return {"genus": g, "partner_degree": d, "hilbert_scheme": _PARTNER_SURFACES[d]}


_LINES_INDEX2 = {
    3: {"type": "minimal surface of general type", "irregularity": 5, "geometric_genus": 10, "K2": 45},
    4: {"type": "abelian surface", "irregularity": 2},
    5: {"type": "P^2", "irregularity": 0, "geometric_genus": 0},
}

_CONICS_INDEX1 = {
    7: {"type": "symmetric square of a smooth genus 7 curve"},
    8: {"type": "minimal surface of general type", "irregularity": 5, "geometric_genus": 10, "K2": 45},
    9: {"type": "ruled surface", "description": "projectivization of a simple rank 2 vector bundle on a smooth genus 3 curve"},
    10: {"type": "abelian surface", "irregularity": 2},
    12: {"type": "P^2", "irregularity": 0, "geometric_genus": 0},
}


def hilbert_verdict(index: int, key: int) -> dict:
    """Lines for index 2 (keyed by degree), conics for index 1 (keyed by genus)."""
    lookup_family(index, key)
    if index == 2:
        if key not in _LINES_INDEX2:
            raise NotCovered("for small degree the Hilbert scheme of lines may be singular", index=2, degree=key)
        return {"index": 2, "degree": key, "scheme": "lines", "smooth_irreducible_surface": True,
                **_LINES_INDEX2[key]}
    if index == 1:
        if key not in _CONICS_INDEX1:
            raise NotCovered("for genus at most 6 the Hilbert scheme of conics may be singular and even reducible",
                             index=1, genus=key)
        return {"index": 1, "genus": key, "scheme": "conics", "smooth_irreducible_surface": True,
                **_CONICS_INDEX1[key]}
    raise NotCovered("only index 1 and 2 are described", index=index)


def aut_verdict(index: int, key: int) -> dict:
    fam = lookup_family(index, key)
    base = {"index": index, "key": key, "h12": fam.h12}
    if index == 4:
        return {**base, "verdict": "Infinite", "groups": ["PGL4"]}
    if index == 3:
        return {**base, "verdict": "Infinite", "groups": ["PSO5"]}
    if index == 2 and key == 5:
        return {**base, "verdict": "Infinite", "groups": ["PGL2"]}
    if index == 1 and key == 12:
        return {**base, "verdict": "Finite", "generic": "Finite",
                "groups": ["PGL2", "G_a x| mu_4", "G_m x| mu_2"],
                "special_members": {"MU": "PGL2", "A": "G_a x| mu_4", "M(u)": "G_m x| mu_2"}}
    return {**base, "verdict": "Finite", "groups": []}


# ---------------------------------------------------------------------------
# normal bundles


def _chi_line_bundle(k: int) -> int:
    return k + 1


def _h0_line_bundle(k: int) -> int:
    return max(k + 1, 0)


def _line_splitting(index: int, a: int) -> tuple[int, int]:
    return (a, -1 - a) if index == 1 else (a, -a)


def chi_normal_bundle(index: int, kind: str, a: int = 0) -> dict:
    """Euler characteristic of the normal bundle of a line or conic.

    Split cases come from the splitting type with parameter a; degenerate
    conics use the restriction sequences to the components (or to the
    reduced line), so they only need chi of the line's normal bundle.
    """
    if index not in (1, 2):
        raise UnsupportedCombination("only index 1 and 2 are supported", index=index, kind=kind)
    if a < 0:
        raise OutOfRange("the splitting parameter is nonnegative", a=a)
    kind = kind.replace("_", " ").replace("-", " ").strip().lower()
    if kind == "line":
        degs = _line_splitting(index, a)
    elif kind in ("conic", "smooth conic"):
        degs = (a, -a) if index == 1 else (1 + a, 1 - a)
    else:
        degs = None
    if degs is not None:
        return {"index": index, "kind": kind, "a": a, "splitting": list(degs),
                "chi": sum(_chi_line_bundle(k) for k in degs),
                "h0_lower_bound": sum(_h0_line_bundle(k) for k in degs)}
    chi_line = sum(_chi_line_bundle(k) for k in _line_splitting(index, a))
    if kind == "reducible conic":
        # 0 -> N_C -> N_C|L1 + N_C|L2 -> N_C|P -> 0 and 0 -> N_Li -> N_C|Li -> O_P -> 0
        restricted = chi_line + 1
        chi = 2 * restricted - 2
        steps = f"({chi_line} + 1) + ({chi_line} + 1) - 2 = {chi}"
    elif kind in ("non reduced conic", "nonreduced conic"):
        # 0 -> O_L(1) -> N_L -> N_C|L -> O_L(2) -> 0 and 0 -> N_C|L(-1) -> N_C -> N_C|L -> 0
        restricted = chi_line - _chi_line_bundle(1) + _chi_line_bundle(2)
        chi = restricted + (restricted - 2)
        steps = f"{chi_line} - 2 + 3 = {restricted}; {restricted} + ({restricted} - 2) = {chi}"
    else:
        raise UnsupportedCombination(f"unknown curve kind {kind!r}", index=index, kind=kind)
    return {"index": index, "kind": kind, "a": a, "chi": chi, "derivation": steps, "h0_lower_bound": None}


def mukai_numerology(g: int) -> dict:
    if g % 2 or g < 6 or g > 12:
        raise OutOfRange("the Mukai bundle is defined for even genus 6 to 12", genus=g)
    lookup_family(1, g)
    half = g // 2
    out = {"genus": g, "rank": 2, "c1": "H", "c2_coefficient": 1 + half, "h0": 2 + half,
           "grassmannian": f"Gr(2,{half + 2})", "discriminant_coefficient": -8 * (g - 4)}
    embedding = {
        6: "closed embedding as two hyperplanes and a quadric, or a double cover of a codimension 3 linear section",
        8: "closed embedding as a transverse linear section of codimension 5",
        10: "closed embedding into G2/P as a transverse linear section of codimension 2",
        12: "closed embedding; image not described",
    }
    out["map"] = embedding[g]
    return out


# ---------------------------------------------------------------------------
# cones on the Fermat quartic


FERMAT_AUT_ORDER = 4 ** 4 * 120


def _fermat(vars5: list[MultiPoly]) -> MultiPoly:
    total = MultiPoly(())
    for v in vars5:
        total = total + v ** 4
    return total


def fermat_cones(conductor: int = DEFAULT_CONDUCTOR) -> dict:
    """The 40 hyperplane sections of the Fermat quartic threefold that are cones.

    For a pair {i, j} and a root w of w^4 = -1 the vertex is P = e_i + w e_j
    and the base plane is {x_i = x_j = 0}; F(l P + m q) = l^4 F(P) + m^4 F(q)
    for q in the plane is checked as a polynomial identity.
    """
    if conductor % 8:
        raise ConductorTooSmall("fourth roots of -1 need 8 | conductor", conductor=conductor)
    names = ("lam", "mu", "q0", "q1", "q2")
    lam, mu, *qs = (MultiPoly.var(n, names) for n in names)
    roots = [zeta(8, k).embed(conductor) for k in (1, 3, 5, 7)]
    records = []
    for i, j in combinations(range(5), 2):
        free = [k for k in range(5) if k not in (i, j)]
        for w in roots:
            vertex = [as_cyc(0, conductor)] * 5
            vertex[i], vertex[j] = as_cyc(1, conductor), w
            q = [MultiPoly(names)] * 5
            for k, qv in zip(free, qs):
                q[k] = qv
            f_vertex = sum((c ** 4 for c in vertex), as_cyc(0, conductor))
            line = [lam * c + mu * qk for c, qk in zip(vertex, q)]
            lhs = _fermat(line)
            rhs = lam ** 4 * f_vertex + mu ** 4 * _fermat(q)
            records.append({
                "pair": [i, j],
                "omega": str(w),
                "vertex": [str(c) for c in vertex],
                "plane": f"x{i} = x{j} = 0",
                "vertex_on_X": f_vertex.is_zero(),
                "cone_identity": (lhs - rhs).is_zero(),
            })
    return {
        "count": len(records),
        "all_verified": all(r["vertex_on_X"] and r["cone_identity"] for r in records),
        "aut_order": FERMAT_AUT_ORDER,
        "cones": records,
    }
