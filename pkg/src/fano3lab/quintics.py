"""Rational quintic curves Z on Y and their incidence with lines.

A curve is stored as seven binary forms in the parameter pair (t0, t1), the
coefficients of the sextic Z(t0 : t1) in the usual x-descending order.  The
three special families are orbit closures:

* ``MU``: x (t0 x + t1 y)^5, the Borel orbit of xy^5
* ``A``: the unipotent orbit of phi6, value x^6 at (1 : 0)
* ``M(u)``: the torus orbit of (1 u; 0 1) . phi6, boundary values x^6 and xy^5
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Sequence

from . import linalg
from .errors import DegenerateParameter, NoSuchFamily
from .exactfield import DEFAULT_CONDUCTOR, CycNum, Scalar, as_cyc
from .planecurves import PlaneCurve, PlanePoint, implicitize_conic
from .polyalg import BinaryForm, GroupElt2, MultiPoly, act, act_matrix, act_symbolic, gcd_many
from .v5 import LineOnY, classify_point, lines_through_point, phi6, special_line, transform_line

PARAMS = ("t0", "t1")


@total_ordering
class _Infinite:
    """Length of Z cap L when Z lies inside L."""

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Infinite)

    def __lt__(self, other: object) -> bool:
        return False

    def __hash__(self) -> int:
        return hash("Infinite")

    def __repr__(self) -> str:
        return "Infinite"

    __str__ = __repr__


INFINITE = _Infinite()


# ---------------------------------------------------------------------------
# labels


def normalize_label(label: str) -> str:
    key = str(label).strip().upper()
    if key in ("MU", "A", "M"):
        return key
    if key.startswith("M(") and key.endswith(")"):
        return "M"
    raise NoSuchFamily(f"unknown curve label {label!r}", label=str(label))


def check_u(u: Scalar | None) -> CycNum:
    if u is None:
        raise ValueError("the M family needs a parameter u")
    u = as_cyc(u)
    for name, value in (("u", u), ("u^4-1", u ** 4 - 1), ("5u^4-1", u ** 4 * 5 - 1)):
        if value.is_zero():
            raise DegenerateParameter(f"{name} vanishes at u = {u}", u=str(u), factor=name)
    return u


def phi6_u(u: Scalar) -> BinaryForm:
    """(1 u; 0 1) . phi6 = x(ux + y)(x^4 - (ux + y)^4)."""
    return act(GroupElt2.of(1, u, 0, 1), phi6())


def _family(label: str, names: Sequence[str]) -> list[MultiPoly]:
    """Matrix entries (a, b, c, d) of the one-parameter family, homogenized."""
    p0, p1 = (MultiPoly.var(n, names) for n in names)
    zero = MultiPoly(names)
    if label == "M":
        return [p0, zero, zero, p1]
    return [p1, p0, zero, p1]


def base_point(label: str, u: Scalar | None = None) -> BinaryForm:
    label = normalize_label(label)
    if label == "MU":
        return BinaryForm.monomial(6, 5)
    if label == "A":
        return phi6()
    return phi6_u(check_u(u))


# ---------------------------------------------------------------------------
# parameterized curves


def _to_binary(p: MultiPoly, names: Sequence[str], degree: int) -> BinaryForm:
    if p.is_zero():
        return BinaryForm.zero(degree)
    return BinaryForm.from_multipoly(p.with_variables(tuple(names)), names, degree)


def _strip_common_factor(forms: Sequence[BinaryForm]) -> list[BinaryForm]:
    common = gcd_many(forms)
    if common is None:
        raise ValueError("all coefficient forms vanish")
    if common.degree == 0:
        return list(forms)
    return [f.exact_div(common) if not f.is_zero() else BinaryForm.zero(f.degree - common.degree) for f in forms]


@dataclass(frozen=True)
class ParamCurve:
    coeff_forms: tuple[BinaryForm, ...]
    label: str = "Custom"
    u: CycNum | None = field(default=None, compare=False)

    @classmethod
    def custom(cls, forms: Sequence[BinaryForm], label: str = "Custom") -> "ParamCurve":
        if len(forms) != 7:
            raise ValueError("a curve in P(M_6) needs seven coefficient forms")
        degree = max(f.degree for f in forms)
        padded = []
        for f in forms:
            if f.is_zero():
                padded.append(BinaryForm.zero(degree))
            elif f.degree != degree:
                raise ValueError("coefficient forms must share one degree")
            else:
                padded.append(f)
        return cls(tuple(_strip_common_factor(padded)), label)

    @property
    def degree(self) -> int:
        return self.coeff_forms[0].degree

    def point(self, t0: Scalar, t1: Scalar) -> BinaryForm:
        return BinaryForm([f(t0, t1) for f in self.coeff_forms])

    def coefficient_matrix(self) -> list[list[CycNum]]:
        """C with Z(t) = C . (t0^d, t0^(d-1) t1, ..., t1^d)."""
        return [list(f.coeffs) for f in self.coeff_forms]

    def symbolic_point(self, names: Sequence[str] = PARAMS) -> list[MultiPoly]:
        return [f.to_multipoly(names) for f in self.coeff_forms]

    def to_json(self) -> dict:
        out = {"label": self.label, "degree": self.degree,
               "coeff_forms": [f.to_str(PARAMS) for f in self.coeff_forms]}
        if self.u is not None:
            out["u"] = str(self.u)
        return out


def build_z(label: str, u: Scalar | None = None) -> ParamCurve:
    label = normalize_label(label)
    uu = check_u(u) if label == "M" else None
    coeffs = act_symbolic(_family(label, PARAMS), base_point(label, uu), ("x", "y"))
    forms = [_to_binary(c, PARAMS, 6) for c in coeffs]
    name = f"M({uu})" if label == "M" else label
    curve = ParamCurve(tuple(_strip_common_factor(forms)), name, uu)
    return curve


def curve_degree(z: ParamCurve) -> int:
    return max((f.degree for f in z.coeff_forms if not f.is_zero()), default=0)


def transform_curve(g: GroupElt2, z: ParamCurve) -> ParamCurve:
    """The curve t -> g . Z(t)."""
    m = act_matrix(g, 6)
    forms = []
    for row in m:
        acc = BinaryForm.zero(z.degree)
        for c, f in zip(row, z.coeff_forms):
            if not c.is_zero():
                acc = acc + f * c
        forms.append(acc)
    return ParamCurve(tuple(forms), "Custom")


# ---------------------------------------------------------------------------
# incidence


def incidence_length(z: ParamCurve, line: LineOnY) -> int | _Infinite:
    """Degree of the gcd of the 3x3 minors of (span; Z(t)) on the parameter line."""
    s0, s1 = line.span[0].coeffs, line.span[1].coeffs
    minors2 = {}
    for j in range(7):
        for k in range(j + 1, 7):
            minors2[j, k] = s0[j] * s1[k] - s0[k] * s1[j]
    zf = z.coeff_forms
    minors3 = []
    for i in range(7):
        for j in range(i + 1, 7):
            for k in range(j + 1, 7):
                acc = zf[i] * minors2[j, k] - zf[j] * minors2[i, k] + zf[k] * minors2[i, j]
                minors3.append(acc)
    common = gcd_many(minors3)
    if common is None:
        return INFINITE
    return common.degree


def contains_point(z: ParamCurve, phi: BinaryForm) -> bool:
    """Whether [phi] = Z(t) for some t, by the gcd of the 2x2 minors in t."""
    if phi.is_zero():
        raise ValueError("the zero form is not a point")
    minors = []
    for i in range(7):
        for j in range(i + 1, 7):
            minors.append(z.coeff_forms[j] * phi.coeffs[i] - z.coeff_forms[i] * phi.coeffs[j])
    common = gcd_many(minors)
    return common is None or common.degree >= 1


def contains_symbolic(z: ParamCurve, coords: Sequence[MultiPoly]) -> bool:
    """Membership of a point whose coordinates are polynomials in free parameters.

    Solves C a = phi with C the constant coefficient matrix and requires the
    Hankel matrix of a to have rank <= 1 identically, which are the equations
    of the rational normal curve in its span.
    """
    mat = z.coefficient_matrix()
    d = z.degree
    if linalg.rank(mat) != d + 1:
        raise ValueError("the curve does not span a P^d; use contains_point")
    rows: list[int] = []
    for i in range(7):
        if linalg.rank([mat[r] for r in rows + [i]]) == len(rows) + 1:
            rows.append(i)
        if len(rows) == d + 1:
            break
    inv = linalg.inverse([mat[r] for r in rows])
    phi = [coords[r] for r in rows]
    a = []
    for row in inv:
        acc = MultiPoly(())
        for c, p in zip(row, phi):
            if not as_cyc(c).is_zero():
                acc = acc + p * c
        a.append(acc)
    for i in range(7):
        if i in rows:
            continue
        check = MultiPoly(())
        for c, ai in zip(mat[i], a):
            if not c.is_zero():
                check = check + ai * c
        if not (check - coords[i]).is_zero():
            return False
    for i in range(d):
        for j in range(i + 1, d):
            if not (a[i] * a[j + 1] - a[j] * a[i + 1]).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# the curve of lines meeting Z


@dataclass(frozen=True)
class SigmaComponent:
    curve: PlaneCurve
    multiplicity: int
    parameterization: tuple[BinaryForm, BinaryForm, BinaryForm]
    source_line: LineOnY


@dataclass(frozen=True)
class SigmaZ:
    label: str
    line_component: PlaneCurve
    conic_components: list[tuple[PlaneCurve, int]]
    components: list[SigmaComponent]

    @property
    def total_degree(self) -> int:
        return self.line_component.degree + sum(c.degree * m for c, m in self.conic_components)

    def contains(self, p: PlanePoint) -> bool:
        return any(c.curve(p).is_zero() for c in self.components)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "line": self.line_component.to_json(),
            "conics": [{"curve": c.to_json(), "multiplicity": m} for c, m in self.conic_components],
            "total_degree": self.total_degree,
        }


def _implicitize_line(params: Sequence[BinaryForm]) -> PlaneCurve:
    rows = [list(q.coeffs) for q in params]
    kernel = linalg.nullspace([[rows[j][i] for j in range(3)] for i in range(2)], 3)
    if len(kernel) != 1:
        raise ValueError("degenerate linear parameterization")
    return PlaneCurve.line(*kernel[0])


def sigma_z(label: str, u: Scalar | None = None, conductor: int = DEFAULT_CONDUCTOR) -> SigmaZ:
    """Sigma points of the lines meeting Z, as a plane quintic.

    Lines through the generic point of Z are moved along the group family
    that sweeps out Z; each orbit of sigma points is a line or a conic.
    """
    key = normalize_label(label)
    uu = check_u(u) if key == "M" else None
    z = build_z(key, uu)
    point = classify_point(base_point(key, uu), conductor)
    names = ("s1", "s2")
    entries = _family(key, names)
    comps: list[SigmaComponent] = []
    for line in lines_through_point(point):
        coeffs = act_symbolic(entries, line.sigma_point, ("x", "y"))
        forms = _strip_common_factor([_to_binary(c, names, 2) for c in coeffs])
        deg = forms[0].degree
        if deg == 1:
            curve, mult = _implicitize_line(forms), 1
        elif deg == 2:
            curve = implicitize_conic(forms)
            disc = forms[1] * forms[1] - forms[0] * forms[2] * 4
            mult = 2 if disc.is_zero() else 1
        else:
            raise ValueError("sigma point orbit is not a curve")
        if any(c.curve == curve for c in comps):
            continue
        comps.append(SigmaComponent(curve, mult, tuple(forms), line))  # type: ignore[arg-type]
    lines = [c for c in comps if c.curve.degree == 1]
    conics = [c for c in comps if c.curve.degree == 2]
    if len(lines) != 1:
        raise ArithmeticError("expected exactly one line component")
    result = SigmaZ(z.label, lines[0].curve, [(c.curve, c.multiplicity) for c in conics], lines + conics)
    if result.total_degree != 5:
        raise ArithmeticError(f"sigma curve has degree {result.total_degree}, expected 5")
    return result


def _family_element(label: str, s1: Scalar, s2: Scalar) -> GroupElt2:
    if label == "M":
        return GroupElt2.of(s1, 0, 0, s2)
    return GroupElt2.of(s2, s1, 0, s2)


def bisecant_report(label: str, u: Scalar | None = None, conductor: int = DEFAULT_CONDUCTOR) -> dict:
    """The special line L_{x^2} and its length of contact with Z.

    One line per component of the sigma curve, away from P = (1:0:0), is
    sampled and its length checked to be below 2.
    """
    key = normalize_label(label)
    uu = check_u(u) if key == "M" else None
    z = build_z(key, uu)
    bisecant = special_line(BinaryForm.x())
    length = incidence_length(z, bisecant)
    sz = sigma_z(key, uu, conductor)
    p_special = PlanePoint(1, 0, 0)
    samples = []
    for comp in sz.components:
        for s1, s2 in ((1, 1), (1, 2), (2, 1), (1, 3)):
            g = _family_element(key, s1, s2)
            sample = transform_line(g, comp.source_line)
            if PlanePoint.of_quadratic(sample.sigma_point) != p_special:
                break
        samples.append({"sigma_point": sample.sigma_point.to_str(), "length": incidence_length(z, sample)})
    unique = all(s["length"] < 2 for s in samples)
    return {"label": z.label, "line": bisecant, "length": length, "samples": samples, "unique_among_samples": unique}
