"""Plane curves in P(M_2) = P^2 with coordinates (c0 : c1 : c2).

A quadratic c0 x^2 + c1 xy + c2 y^2 is the point (c0 : c1 : c2).  Curves are
homogeneous MultiPoly objects in c0, c1, c2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from . import linalg
from .errors import CommonComponent, NotAConic, NotASubfield, PointNotRational, SingularPoint
from .exactfield import DEFAULT_CONDUCTOR, CycNum, Scalar, as_cyc, project
from .polyalg import BinaryForm, MultiPoly, UniPoly, factor_linear, field_roots, gcd_forms, interpolate, poly_gcd
from .polyalg.unipoly import sylvester_matrix

COORDS = ("c0", "c1", "c2")


@dataclass(frozen=True, eq=False)
class PlanePoint:
    coords: tuple[CycNum, CycNum, CycNum]

    def __init__(self, c0: Scalar, c1: Scalar, c2: Scalar) -> None:
        cs = [as_cyc(c) for c in (c0, c1, c2)]
        lead = next((c for c in cs if not c.is_zero()), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a point")
        inv = lead.inverse()
        object.__setattr__(self, "coords", tuple(c * inv for c in cs))

    @classmethod
    def of_quadratic(cls, q: BinaryForm) -> "PlanePoint":
        return cls(*q.coeffs)

    def quadratic(self) -> BinaryForm:
        return BinaryForm(list(self.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def sort_key(self) -> tuple:
        return tuple(c.sort_key() for c in self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


def _primitive(form: MultiPoly) -> MultiPoly:
    """Projective representative: primitive integers when rational, else leading coefficient 1."""
    if form.is_zero():
        return form
    lead = max(form.terms)
    coeffs = list(form.terms.values())
    if all(c.is_rational() for c in coeffs):
        fr = [c.to_fraction() for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [int(f * den) for f in fr]
        g = 0
        for v in nums:
            g = gcd(g, v)
        scale = Fraction(den, g)
        if form.terms[lead].to_fraction() < 0:
            scale = -scale
        return form * scale
    return form.normalized()


class PlaneCurve:
    __slots__ = ("form", "degree")

    def __init__(self, form: MultiPoly) -> None:
        if set(form.used_variables()) - set(COORDS):
            raise ValueError("plane curves use the variables c0, c1, c2")
        form = form.with_variables(COORDS)
        if form.is_zero():
            raise ValueError("the zero form is not a curve")
        if not form.is_homogeneous():
            raise ValueError("plane curve equations must be homogeneous")
        self.form = _primitive(form)
        self.degree = form.total_degree()

    @classmethod
    def from_coefficients(cls, coeffs: dict[tuple[int, int, int], Scalar]) -> "PlaneCurve":
        return cls(MultiPoly(COORDS, coeffs))

    @classmethod
    def line(cls, a: Scalar, b: Scalar, c: Scalar) -> "PlaneCurve":
        return cls.from_coefficients({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    def __call__(self, p: PlanePoint) -> CycNum:
        return eval_at(self, p)

    def __mul__(self, other: "PlaneCurve") -> "PlaneCurve":
        return PlaneCurve(self.form * other.form)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneCurve):
            return NotImplemented
        return self.form.proj_eq(other.form)

    def __hash__(self) -> int:
        return hash(self.form.normalized())

    def gradient(self, p: PlanePoint) -> tuple[CycNum, CycNum, CycNum]:
        vals = dict(zip(COORDS, p.coords))
        return tuple(self.form.diff(v).evaluate(vals) for v in COORDS)  # type: ignore[return-value]

    def transformed(self, matrix: Sequence[Sequence[Scalar]]) -> "PlaneCurve":
        """The curve F(M c), i.e. the preimage of this curve under c -> M c."""
        cv = [MultiPoly.var(v, COORDS) for v in COORDS]
        img = {}
        for i, v in enumerate(COORDS):
            acc = MultiPoly(COORDS)
            for j in range(3):
                acc = acc + cv[j] * as_cyc(matrix[i][j])
            img[v] = acc
        return PlaneCurve(self.form.subs(img).with_variables(COORDS))

    def to_str(self) -> str:
        return str(self.form)

    __str__ = to_str

    def __repr__(self) -> str:
        return f"PlaneCurve({self.to_str()!r})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "equation": self.to_str(),
            "coefficients": {",".join(map(str, e)): str(c) for e, c in sorted(self.form.terms.items(), reverse=True)},
        }


def eval_at(curve: PlaneCurve, p: PlanePoint) -> CycNum:
    return curve.form.evaluate(dict(zip(COORDS, p.coords)))


def tangent_line(curve: PlaneCurve, p: PlanePoint) -> PlaneCurve:
    if not eval_at(curve, p).is_zero():
        raise ValueError("the point is not on the curve")
    grad = curve.gradient(p)
    if all(g.is_zero() for g in grad):
        raise SingularPoint("gradient vanishes", point=str(p))
    return PlaneCurve.line(*grad)


# ---------------------------------------------------------------------------
# intersections


def _coeffs_in_c2(f: MultiPoly, deg: int, values: dict) -> list[CycNum]:
    """Descending coefficients of f(c0, c1, c2) as a polynomial in c2, other variables fixed."""
    out = [as_cyc(0)] * (deg + 1)
    for e, c in f.terms.items():
        v = c
        for name, k in zip(COORDS[:2], e[:2]):
            if k:
                v = v * as_cyc(values[name]) ** k
        out[deg - e[2]] = out[deg - e[2]] + v
    return out


def _resultant_c2(f: MultiPoly, g: MultiPoly, c0: Scalar, c1: Scalar) -> CycNum:
    """Res_{c2} with the formal c2-degrees of f and g."""
    df, dg = f.degree_in("c2"), g.degree_in("c2")
    vals = {"c0": c0, "c1": c1}
    fd, gd = _coeffs_in_c2(f, df, vals), _coeffs_in_c2(g, dg, vals)
    if df == 0 and dg == 0:
        return as_cyc(1)
    return as_cyc(linalg.det(sylvester_matrix(fd, gd)))


def _affine_resultant(f: MultiPoly, g: MultiPoly) -> UniPoly:
    """R(u) = Res_{c2}(f(1, u, c2), g(1, u, c2)) by evaluation and interpolation."""
    bound = f.total_degree() * g.total_degree()
    pts = list(range(bound + 1))
    vals = [_resultant_c2(f, g, 1, u) for u in pts]
    return interpolate(pts, vals)


def _check_point_field(p: PlanePoint, conductor: int | None) -> None:
    if conductor is None:
        return
    for c in p.coords:
        try:
            project(c, gcd(c.conductor, conductor))
        except NotASubfield:
            raise PointNotRational("point is not defined over the field", point=str(p),
                                   conductor=conductor) from None


def _frame_matrix(p: PlanePoint) -> list[list[CycNum]]:
    """An invertible matrix whose first column is p."""
    cols = [list(p.coords)]
    for k in range(3):
        e = [as_cyc(int(i == k)) for i in range(3)]
        if linalg.rank(cols + [e]) == len(cols) + 1:
            cols.append(e)
        if len(cols) == 3:
            break
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def _only_at_p_on_axis(f: MultiPoly, g: MultiPoly) -> bool:
    """On the line c1 = 0 the two curves meet only at (1:0:0)."""
    fr = f.subs({"c1": 0})
    gr = g.subs({"c1": 0})
    forms = []
    for h, d in ((fr, f.total_degree()), (gr, g.total_degree())):
        if h.is_zero():
            forms.append(BinaryForm.zero(d))
        else:
            forms.append(BinaryForm.from_multipoly(h.with_variables(("c0", "c2")), ("c0", "c2"), d))
    if forms[0].is_zero() and forms[1].is_zero():
        return False
    common = gcd_forms(forms[0], forms[1])
    return all(c.is_zero() for c in common.coeffs[:-1])


def intersection_multiplicity(c1: PlaneCurve, c2: PlaneCurve, p: PlanePoint,
                              conductor: int | None = None) -> int:
    """Local intersection number at p by resultants after moving p to (1:0:0).

    The shear (c0, c1, c2) -> (c0 + a c2, c1 + b c2, c2) fixes (1:0:0); shears
    are tried in the order a + b = 0, 1, 2, ... (then by a) until both curves
    miss (0:0:1) and meet the line c1 = 0 only at (1:0:0).
    """
    _check_point_field(p, conductor)
    if not eval_at(c1, p).is_zero() or not eval_at(c2, p).is_zero():
        return 0
    frame = _frame_matrix(p)
    f0, g0 = c1.transformed(frame), c2.transformed(frame)
    total = 0
    while True:
        for a in range(total + 1):
            b = total - a
            shear = [[1, 0, a], [0, 1, b], [0, 0, 1]]
            f, g = f0.transformed(shear).form, g0.transformed(shear).form
            top = {"c0": 0, "c1": 0, "c2": 1}
            if f.evaluate(top).is_zero() or g.evaluate(top).is_zero():
                continue
            res = _affine_resultant(f, g)
            if res.is_zero():
                raise CommonComponent("the curves share a component", curve1=c1.to_str(), curve2=c2.to_str())
            if not _only_at_p_on_axis(f, g):
                continue
            k = 0
            while res.coeffs[k].is_zero():
                k += 1
            return k
        total += 1


def common_points(c1: PlaneCurve, c2: PlaneCurve, conductor: int = DEFAULT_CONDUCTOR) -> list[PlanePoint]:
    """Common points of two curves that are defined over Q(zeta_conductor)."""
    f, g = c1.form, c2.form
    found: set[PlanePoint] = set()
    # points at c0 = 0
    fr, gr = f.subs({"c0": 0}), g.subs({"c0": 0})
    if fr.is_zero() and gr.is_zero():
        raise CommonComponent("both curves contain the line c0 = 0")
    forms = []
    for h, d in ((fr, f.total_degree()), (gr, g.total_degree())):
        forms.append(BinaryForm.zero(d) if h.is_zero()
                     else BinaryForm.from_multipoly(h.with_variables(("c1", "c2")), ("c1", "c2"), d))
    common = gcd_forms(forms[0], forms[1])
    if common.degree > 0:
        for lin, _ in factor_linear(common, conductor)[0]:
            a, b = lin.coeffs  # a c1 + b c2 = 0
            found.add(PlanePoint(0, b, -a))
    # affine part c0 = 1
    if f.degree_in("c2") == 0 and g.degree_in("c2") == 0:
        fu = UniPoly(_coeffs_in_c1(f))
        gu = UniPoly(_coeffs_in_c1(g))
        if poly_gcd(fu, gu).degree > 0:
            raise CommonComponent("the curves share a line through (0:0:1)")
        return sorted(found, key=PlanePoint.sort_key)
    res = _affine_resultant(f, g)
    if res.is_zero():
        raise CommonComponent("the curves share a component", curve1=c1.to_str(), curve2=c2.to_str())
    if res.degree > 0:
        for alpha, _ in field_roots(res, conductor):
            fa = UniPoly(reversed(_coeffs_in_c2(f, f.degree_in("c2"), {"c0": 1, "c1": alpha})))
            ga = UniPoly(reversed(_coeffs_in_c2(g, g.degree_in("c2"), {"c0": 1, "c1": alpha})))
            h = poly_gcd(fa, ga) if not (fa.is_zero() and ga.is_zero()) else None
            if h is None or h.degree < 1:
                continue
            for beta, _ in field_roots(h, conductor):
                found.add(PlanePoint(1, alpha, beta))
    return sorted(found, key=PlanePoint.sort_key)


def _coeffs_in_c1(f: MultiPoly) -> list[CycNum]:
    """Ascending coefficients of f(1, c1, 0) for a form free of c2."""
    out = [as_cyc(0)] * (f.total_degree() + 1)
    for e, c in f.terms.items():
        out[e[1]] = out[e[1]] + c
    return out


# ---------------------------------------------------------------------------
# conics


def implicitize_conic(params: Sequence[BinaryForm]) -> PlaneCurve:
    """The conic through the image of (s1:s2) -> (q0(s) : q1(s) : q2(s))."""
    if len(params) != 3 or any(q.degree != 2 for q in params):
        raise ValueError("need three binary quadratics")
    monomials = [(a, b, 2 - a - b) for a in range(2, -1, -1) for b in range(2 - a, -1, -1)]
    cols = []
    for e in monomials:
        prod = BinaryForm([1])
        for q, k in zip(params, e):
            prod = prod * q ** k
        cols.append(prod.coeffs)
    matrix = [[cols[j][i] for j in range(6)] for i in range(5)]
    kernel = linalg.nullspace(matrix, 6)
    if len(kernel) != 1:
        raise NotAConic("the parameterization does not trace a unique conic", solutions=len(kernel))
    curve = PlaneCurve.from_coefficients(dict(zip(monomials, kernel[0])))
    # identical vanishing, as a polynomial identity in (s1, s2)
    sub = {v: q.to_multipoly(("s1", "s2")) for v, q in zip(COORDS, params)}
    if not curve.form.subs(sub).is_zero():
        raise NotAConic("implicit equation does not vanish on the parameterization")
    return curve


def conic_rank(curve: PlaneCurve) -> int:
    """Rank of the symmetric matrix of a ternary quadratic."""
    if curve.degree != 2:
        raise NotAConic("degree is not 2", degree=curve.degree)
    m = [[as_cyc(0)] * 3 for _ in range(3)]
    for e, c in curve.form.terms.items():
        idx = [i for i in range(3) for _ in range(e[i])]
        i, j = idx
        if i == j:
            m[i][i] = c
        else:
            m[i][j] = m[j][i] = c / 2
    return linalg.rank(m)


# ---------------------------------------------------------------------------
# the report on the family of lines of the genus 12 threefold


_VERDICTS = {
    "MU": "non-reduced, underlying smooth rational curve",
    "A": "two rational curves glued at one point, tangent there with multiplicity 4",
    "M": "two rational curves glued at two simple tangency points",
}


def sigma_x_report(label: str, u: Scalar | None = None, conductor: int = DEFAULT_CONDUCTOR) -> dict:
    from .quintics import sigma_z

    sz = sigma_z(label, u, conductor)
    conics = sz.conic_components
    pairs = []
    for (i, (ca, _)), (j, (cb, _)) in combinations(enumerate(conics), 2):
        pts = common_points(ca, cb, conductor)
        mults = [intersection_multiplicity(ca, cb, p) for p in pts]
        pairs.append({
            "components": [i, j],
            "common_points": [p.to_json() for p in pts],
            "multiplicities": mults,
        })
    key = "M" if str(label).upper().startswith("M(") or str(label).upper() == "M" else str(label).upper()
    return {
        "label": sz.label,
        "removed_line": sz.line_component.to_json(),
        "components": [{"conic": c.to_json(), "multiplicity": m} for c, m in conics],
        "intersections": pairs,
        "verdict": _VERDICTS[key],
    }
