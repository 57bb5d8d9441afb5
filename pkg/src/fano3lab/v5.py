"""The quintic del Pezzo threefold Y as a closed orbit closure in P(M_6).

Points of Y are sextic binary forms of three shapes:

* ``Orb1``: f^6
* ``Orb2``: f^5 g with f, g independent
* ``Orb3``: f g (s1 f^4 - s2 g^4) with s1 s2 != 0

Lines on Y are indexed by quadratics q in P(M_2): q = fg gives the pencil
fg(s1 f^4 - s2 g^4) and q = f^2 gives f^5 (s1 x + s2 y).  Coordinates on
P(M_2) are (c0 : c1 : c2) for q = c0 x^2 + c1 xy + c2 y^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import linalg
from .errors import RootsNotInField
from .exactfield import DEFAULT_CONDUCTOR, CycNum, Scalar, as_cyc
from .polyalg import BinaryForm, GroupElt2, UniPoly, act, factor_linear, field_roots, proj_eq


def phi6() -> BinaryForm:
    """xy(x^4 - y^4), the generator of the open orbit."""
    return BinaryForm([0, 1, 0, 0, 0, -1, 0])


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True, eq=False)
class PointOnY:
    form: BinaryForm
    orbit_tag: str
    witness: tuple
    roots: tuple[BinaryForm, ...] = field(default=(), repr=False)

    def witness_form(self) -> BinaryForm:
        """The form rebuilt from the witness; proj_eq to `form`."""
        if self.orbit_tag == "Orb1":
            (f,) = self.witness
            return f ** 6
        if self.orbit_tag == "Orb2":
            f, g = self.witness
            return f ** 5 * g
        f, g, s1, s2 = self.witness
        return f * g * ((f ** 4) * s1 - (g ** 4) * s2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointOnY):
            return NotImplemented
        return proj_eq(self.form, other.form)

    def __hash__(self) -> int:
        return hash(self.form.normalized())

    def to_json(self) -> dict:
        wit = []
        for w in self.witness:
            wit.append(w.to_str() if isinstance(w, BinaryForm) else str(w))
        return {"form": self.form.normalized().to_str(), "orbit": self.orbit_tag, "witness": wit}


@dataclass(frozen=True)
class NotOnY:
    form: BinaryForm
    reason: str

    def to_json(self) -> dict:
        return {"form": self.form.normalized().to_str(), "orbit": "NotOnY", "reason": self.reason}


def _solve_pencil(phi: BinaryForm, f: BinaryForm, g: BinaryForm) -> tuple[CycNum, CycNum] | None:
    """(s1, s2) with phi = fg(s1 f^4 - s2 g^4), or None."""
    fg = f * g
    try:
        q = phi.exact_div(fg)
    except ArithmeticError:
        return None
    f4, g4 = f ** 4, g ** 4
    cols = [f4.coeffs, (-g4).coeffs]
    rows = [[cols[0][i], cols[1][i]] for i in range(5)]
    sol = linalg.solve(rows, list(q.coeffs))
    if sol is None:
        return None
    s1, s2 = (as_cyc(v) for v in sol)
    if s1.is_zero() or s2.is_zero():
        return None
    return s1, s2


def _normalize_witness(f: BinaryForm, g: BinaryForm, s1: CycNum, s2: CycNum, n: int) -> tuple:
    """Rescale f by a fourth root of s1/s2 so that s1 = s2 = 1, if possible."""
    ratio = s1 / s2
    if ratio == 1:
        return (f, g, as_cyc(1, n), as_cyc(1, n))
    roots = field_roots(UniPoly([-ratio, 0, 0, 0, 1]), n)
    if not roots:
        return (f, g, s1, s2)
    alpha = max((r for r, _ in roots), key=lambda r: r.sort_key())
    return (f * alpha, g, as_cyc(1, n), as_cyc(1, n))


def classify_point(phi: BinaryForm, conductor: int = DEFAULT_CONDUCTOR) -> PointOnY | NotOnY:
    if phi.degree != 6:
        raise ValueError("points of Y are sextic forms")
    if phi.is_zero():
        raise ValueError("the zero form is not a point")
    phi = phi.embed(conductor)
    factors, rem = factor_linear(phi, conductor)
    if rem.degree > 0:
        raise RootsNotInField("the sextic does not split into linear factors", form=phi.to_str(),
                              conductor=conductor)
    roots = tuple(lin for lin, _ in factors)
    mults = sorted(m for _, m in factors)
    if mults == [6]:
        return PointOnY(phi, "Orb1", (roots[0],), roots)
    if mults == [1, 5]:
        f = next(lin for lin, m in factors if m == 5)
        g = next(lin for lin, m in factors if m == 1)
        return PointOnY(phi, "Orb2", (f, g), roots)
    if mults == [1] * 6:
        for i, j in combinations(range(6), 2):
            f, g = roots[i], roots[j]
            s = _solve_pencil(phi, f, g)
            if s is not None:
                return PointOnY(phi, "Orb3", _normalize_witness(f, g, s[0], s[1], conductor), roots)
        return NotOnY(phi, "six distinct roots but no pair gives the pencil shape")
    return NotOnY(phi, f"root multiplicities {mults} do not occur on Y")


def on_tangential_scroll(p: PointOnY) -> bool:
    return p.orbit_tag in ("Orb1", "Orb2")


# ---------------------------------------------------------------------------
# lines


def _other_axis(f: BinaryForm) -> BinaryForm:
    """y, unless f is proportional to y, in which case x."""
    return BinaryForm.x() if f.coeffs[0].is_zero() else BinaryForm.y()


@dataclass(frozen=True, eq=False)
class LineOnY:
    kind: str  # "Ordinary" or "Special"
    factors: tuple[BinaryForm, ...]
    span: tuple[BinaryForm, BinaryForm]
    sigma_point: BinaryForm

    def pencil_member(self, s1: Scalar, s2: Scalar) -> BinaryForm:
        """fg(s1 f^4 - s2 g^4) or f^5 (s1 x + s2 y)."""
        if self.kind == "Special":
            (f,) = self.factors
            return f ** 5 * BinaryForm([s1, s2])
        f, g = self.factors
        return f * g * ((f ** 4) * s1 - (g ** 4) * s2)

    def contains(self, phi: BinaryForm) -> bool:
        return linalg.rank([list(self.span[0].coeffs), list(self.span[1].coeffs), list(phi.coeffs)]) == 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LineOnY):
            return NotImplemented
        return proj_eq(self.sigma_point, other.sigma_point)

    def __hash__(self) -> int:
        return hash(self.sigma_point.normalized())

    def sort_key(self) -> tuple:
        return self.sigma_point.sort_key()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "factors": [f.to_str() for f in self.factors],
            "sigma_point": self.sigma_point.to_str(),
            "span": [b.to_str() for b in self.span],
        }

    def __str__(self) -> str:
        return f"L[{self.sigma_point.to_str()}]"


def ordinary_line(f: BinaryForm, g: BinaryForm) -> LineOnY:
    if proj_eq(f, g):
        raise ValueError("an ordinary line needs two independent linear forms")
    return LineOnY("Ordinary", (f, g), (f ** 5 * g, f * g ** 5), (f * g).normalized())


def special_line(f: BinaryForm) -> LineOnY:
    return LineOnY("Special", (f,), (f ** 6, f ** 5 * _other_axis(f)), (f * f).normalized())


def line_from_sigma(q: BinaryForm, conductor: int = DEFAULT_CONDUCTOR) -> LineOnY:
    if q.degree != 2 or q.is_zero():
        raise ValueError("sigma points are nonzero quadratic forms")
    factors, rem = factor_linear(q, conductor)
    if rem.degree > 0:
        raise RootsNotInField("the quadratic does not split", form=q.to_str(), conductor=conductor)
    if len(factors) == 1:
        return special_line(factors[0][0])
    return ordinary_line(factors[0][0], factors[1][0])


def is_special(line: LineOnY) -> bool:
    return line.kind == "Special"


def lines_through_point(p: PointOnY) -> list[LineOnY]:
    if p.orbit_tag == "Orb1":
        return [special_line(p.witness[0])]
    if p.orbit_tag == "Orb2":
        f, g = p.witness
        out = [ordinary_line(f, g), special_line(f)]
    else:
        out = []
        for f, g in combinations(p.roots, 2):
            line = ordinary_line(f, g)
            if line.contains(p.form):
                out.append(line)
    return sorted(out, key=LineOnY.sort_key)


def transform_line(g: GroupElt2, line: LineOnY) -> LineOnY:
    """g . L_q = L_{g.q}."""
    images = tuple(act(g, f).normalized() for f in line.factors)
    if line.kind == "Special":
        return special_line(images[0])
    return ordinary_line(*images)


@dataclass(frozen=True)
class LineIntersection:
    kind: str  # "Empty", "Point" or "Equal"
    form: BinaryForm | None = None
    point: PointOnY | NotOnY | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.form is not None:
            out["form"] = self.form.normalized().to_str()
        if self.point is not None:
            out["point"] = self.point.to_json()
        return out


def line_intersect(l1: LineOnY, l2: LineOnY, conductor: int = DEFAULT_CONDUCTOR) -> LineIntersection:
    vecs = [list(b.coeffs) for b in l1.span + l2.span]
    r = linalg.rank(vecs)
    if r == 4:
        return LineIntersection("Empty")
    if r == 2:
        return LineIntersection("Equal")
    # a v1 + b v2 = c w1 + d w2
    cols = [vecs[0], vecs[1], [-v for v in vecs[2]], [-v for v in vecs[3]]]
    kernel = linalg.nullspace([[cols[j][i] for j in range(4)] for i in range(7)], 4)
    a, b = kernel[0][0], kernel[0][1]
    form = (l1.span[0] * a + l1.span[1] * b).normalized()
    try:
        point: PointOnY | NotOnY | None = classify_point(form, conductor)
    except RootsNotInField:
        point = None
    return LineIntersection("Point", form, point)
