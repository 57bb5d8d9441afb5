"""Binary forms of fixed degree and the substitution action of GL2.

Convention: ``coeffs[k]`` multiplies ``x^(d-k) y^k``.  A matrix with entries
(a b; c d) acts by x -> a x + c y, y -> b x + d y, which makes
act(g h, f) = act(g, act(h, f)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import BothZero, NotDetNormalized
from ..exactfield import CycNum, Scalar, as_cyc
from .multipoly import MultiPoly
from .roots import field_roots
from .unipoly import UniPoly, poly_gcd


class BinaryForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar], degree: int | None = None) -> None:
        cs = tuple(as_cyc(c) for c in coeffs)
        if degree is None:
            degree = len(cs) - 1
        if degree < 0 or len(cs) != degree + 1:
            raise ValueError("a degree-d form needs exactly d+1 coefficients")
        self.degree = degree
        self.coeffs: tuple[CycNum, ...] = cs

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls([0] * (degree + 1))

    @classmethod
    def monomial(cls, degree: int, k: int, c: Scalar = 1) -> "BinaryForm":
        """c * x^(degree-k) * y^k"""
        cs: list[Scalar] = [0] * (degree + 1)
        cs[k] = c
        return cls(cs)

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "BinaryForm":
        return cls([a, b])

    @classmethod
    def x(cls) -> "BinaryForm":
        return cls([1, 0])

    @classmethod
    def y(cls) -> "BinaryForm":
        return cls([0, 1])

    @classmethod
    def from_unipoly(cls, p: UniPoly, degree: int) -> "BinaryForm":
        """Homogenize p(x) (dehomogenized at y = 1) to the given degree."""
        if p.degree > degree:
            raise ValueError("polynomial degree exceeds form degree")
        asc: list[Scalar] = list(p.coeffs) + [0] * (degree - max(p.degree, -1) - 1)
        return cls(list(reversed(asc)))

    @classmethod
    def from_multipoly(cls, p: MultiPoly, names: Sequence[str] = ("x", "y"), degree: int | None = None) -> "BinaryForm":
        p = p.with_variables(tuple(names)) if set(p.variables) <= set(names) else p
        if set(p.used_variables()) - set(names):
            raise ValueError("polynomial uses variables outside the binary pair")
        if not p.is_homogeneous():
            raise ValueError("polynomial is not homogeneous")
        p = p.with_variables(tuple(names))
        d = p.total_degree() if degree is None else degree
        if d < 0:
            d = 0
        cs: list[Scalar] = [0] * (d + 1)
        for (ex, ey), c in p.terms.items():
            cs[ey] = c
        return cls(cs)

    # arithmetic ---------------------------------------------------------
    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinaryForm":
        return BinaryForm([-c for c in self.coeffs])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __mul__(self, other: "BinaryForm | Scalar") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return BinaryForm([c * other for c in self.coeffs])
        out: list = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BinaryForm(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BinaryForm":
        result = BinaryForm([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def normalized(self) -> "BinaryForm":
        """Scale so the first nonzero coefficient (x-descending order) is 1."""
        for c in self.coeffs:
            if not c.is_zero():
                inv = c.inverse()
                return BinaryForm([v * inv for v in self.coeffs])
        return self

    def sort_key(self) -> tuple:
        return tuple(c.sort_key() for c in self.normalized().coeffs)

    def __call__(self, x: Scalar, y: Scalar) -> CycNum:
        x, y = as_cyc(x), as_cyc(y)
        acc = as_cyc(0)
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + c * x ** (d - k) * y ** k
        return acc

    def y_valuation(self) -> int:
        """Exponent of the largest power of y dividing the form."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        raise ValueError("zero form")

    def x_valuation(self) -> int:
        for k, c in enumerate(reversed(self.coeffs)):
            if not c.is_zero():
                return k
        raise ValueError("zero form")

    def dehomogenize(self) -> UniPoly:
        """f(x, 1) as a polynomial in x."""
        return UniPoly(list(reversed(self.coeffs)))

    def diff_x(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([0])
        return BinaryForm([c * (d - k) for k, c in enumerate(self.coeffs[:-1])])

    def diff_y(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm([0])
        return BinaryForm([c * k for k, c in enumerate(self.coeffs)][1:])

    def exact_div(self, other: "BinaryForm") -> "BinaryForm":
        """Quotient self / other, which must be exact."""
        vs, vo = self.y_valuation(), other.y_valuation()
        if vo > vs:
            raise ArithmeticError("inexact division of forms")
        a = BinaryForm(self.coeffs[vs:])
        b = BinaryForm(other.coeffs[vo:])
        q, r = a.dehomogenize().divmod(b.dehomogenize())
        if not r.is_zero():
            raise ArithmeticError("inexact division of forms")
        qd = self.degree - other.degree
        out = BinaryForm.from_unipoly(q, qd - (vs - vo))
        return BinaryForm([0] * (vs - vo) + list(out.coeffs))

    def to_multipoly(self, names: Sequence[str] = ("x", "y")) -> MultiPoly:
        d = self.degree
        return MultiPoly(tuple(names), {(d - k, k): c for k, c in enumerate(self.coeffs) if not c.is_zero()})

    def embed(self, conductor: int) -> "BinaryForm":
        return BinaryForm([as_cyc(c, conductor) for c in self.coeffs])

    def to_str(self, names: Sequence[str] = ("x", "y")) -> str:
        s = str(self.to_multipoly(names))
        return s

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"BinaryForm({self.degree}, {self.to_str()!r})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [c.to_json() for c in self.coeffs], "text": self.to_str()}


def proj_eq(f: BinaryForm, g: BinaryForm) -> bool:
    """Equality of points of P(M_d)."""
    if f.degree != g.degree:
        raise ValueError("proj_eq needs forms of equal degree")
    fz, gz = f.is_zero(), g.is_zero()
    if fz and gz:
        raise BothZero("both forms are zero")
    if fz or gz:
        return False
    return f.normalized() == g.normalized()


def gcd_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Normalized gcd; the power of y is handled before dehomogenizing."""
    fz, gz = f.is_zero(), g.is_zero()
    if fz and gz:
        raise BothZero("gcd of two zero forms")
    if fz:
        return g.normalized()
    if gz:
        return f.normalized()
    vf, vg = f.y_valuation(), g.y_valuation()
    h = poly_gcd(BinaryForm(f.coeffs[vf:]).dehomogenize(), BinaryForm(g.coeffs[vg:]).dehomogenize())
    core = BinaryForm.from_unipoly(h, h.degree)
    v = min(vf, vg)
    return BinaryForm([0] * v + list(core.coeffs))


def gcd_many(forms: Iterable[BinaryForm]) -> BinaryForm | None:
    """gcd of a family of forms; None when all of them vanish."""
    acc: BinaryForm | None = None
    for f in forms:
        if f.is_zero():
            continue
        acc = f.normalized() if acc is None else gcd_forms(acc, f)
        if acc.degree == 0:
            break
    return acc


def root_key(lin: BinaryForm) -> tuple:
    """Sort key of a linear form: its zero (x : y) = (b : -a), normalized.

    Ordering roots of P^1 this way lists x before y and x - z*y before
    x + z*y, which is the order used for witnesses and line factors.
    """
    a, b = lin.coeffs
    return BinaryForm([b, -a]).sort_key()


def factor_linear(f: BinaryForm, conductor: int) -> tuple[list[tuple[BinaryForm, int]], BinaryForm]:
    """Linear factors over Q(zeta_conductor) with multiplicities, plus the rest.

    f equals remainder * prod(factor^mult) exactly; factors are normalized
    and sorted by `root_key`.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero form")
    f = f.embed(conductor)
    v = f.y_valuation()
    factors: list[tuple[BinaryForm, int]] = []
    if v:
        factors.append((BinaryForm.y().embed(conductor), v))
    u = BinaryForm(f.coeffs[v:]).dehomogenize()
    rem = u
    for alpha, m in field_roots(u, conductor):
        factors.append((BinaryForm([as_cyc(1, conductor), -alpha]), m))
        rem = rem // (UniPoly([-alpha, 1]) ** m)
    factors.sort(key=lambda fm: root_key(fm[0]))
    return factors, BinaryForm.from_unipoly(rem, rem.degree)


@dataclass(frozen=True)
class GroupElt2:
    """A 2x2 invertible matrix (a b; c d) acting by x -> ax+cy, y -> bx+dy."""

    a: CycNum
    b: CycNum
    c: CycNum
    d: CycNum
    det_normalized: bool = False

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, as_cyc(getattr(self, name)))
        det = self.det
        if det.is_zero():
            raise ValueError("matrix is not invertible")
        if self.det_normalized and det != 1:
            raise NotDetNormalized("determinant is not 1", det=str(det))

    @classmethod
    def of(cls, a: Scalar, b: Scalar, c: Scalar, d: Scalar, det_normalized: bool = False) -> "GroupElt2":
        return cls(as_cyc(a), as_cyc(b), as_cyc(c), as_cyc(d), det_normalized)

    @classmethod
    def identity(cls) -> "GroupElt2":
        return cls.of(1, 0, 0, 1, True)

    @property
    def det(self) -> CycNum:
        return self.a * self.d - self.b * self.c

    @property
    def entries(self) -> tuple[CycNum, CycNum, CycNum, CycNum]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, o: "GroupElt2") -> "GroupElt2":
        return GroupElt2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.det_normalized and o.det_normalized,
        )

    def inverse(self) -> "GroupElt2":
        inv = self.det.inverse()
        return GroupElt2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv, self.det_normalized)

    def scaled(self, s: Scalar) -> "GroupElt2":
        return GroupElt2(self.a * s, self.b * s, self.c * s, self.d * s)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]

    def __str__(self) -> str:
        return f"(({self.a}, {self.b}), ({self.c}, {self.d}))"


def act(g: GroupElt2, f: BinaryForm) -> BinaryForm:
    """Substitute x <- a x + c y, y <- b x + d y."""
    d = f.degree
    l1 = BinaryForm([g.a, g.c])
    l2 = BinaryForm([g.b, g.d])
    p1 = [BinaryForm([1])]
    p2 = [BinaryForm([1])]
    for _ in range(d):
        p1.append(p1[-1] * l1)
        p2.append(p2[-1] * l2)
    out = BinaryForm.zero(d)
    for k, c in enumerate(f.coeffs):
        if not c.is_zero():
            out = out + (p1[d - k] * p2[k]) * c
    return out


def act_matrix(g: GroupElt2, degree: int) -> list[list[CycNum]]:
    """Matrix M with act(g, f).coeffs = M @ f.coeffs."""
    cols = [act(g, BinaryForm.monomial(degree, k)).coeffs for k in range(degree + 1)]
    return [[cols[j][i] for j in range(degree + 1)] for i in range(degree + 1)]


def act_pointed(g: GroupElt2, f: BinaryForm, c: Scalar) -> tuple[BinaryForm, CycNum]:
    """Action on M_d + M_0; needs a determinant-one representative."""
    if not g.det_normalized:
        raise NotDetNormalized("pointed action needs a det-1 representative")
    return act(g, f), as_cyc(c)


def act_symbolic(entries: Sequence[MultiPoly | Scalar], f: BinaryForm | MultiPoly,
                 names: Sequence[str] = ("x", "y")) -> list[MultiPoly]:
    """Act by a matrix whose entries may be polynomials in parameters.

    Returns the d+1 coefficients (as polynomials in the parameters) of the
    transformed form, in the usual x-descending order.
    """
    a, b, c, d = (e if isinstance(e, MultiPoly) else MultiPoly.const(e) for e in entries)
    xv, yv = MultiPoly.var(names[0]), MultiPoly.var(names[1])
    if isinstance(f, BinaryForm):
        deg = f.degree
        fp = f.to_multipoly(names)
    else:
        fp = f
        # degree in x, y only; the other variables are parameters
        deg = max((sum(k) for k in f.coefficients_in(names)), default=0)
    img = fp.subs({names[0]: a * xv + c * yv, names[1]: b * xv + d * yv})
    coll = img.coefficients_in(names)
    params = tuple(v for v in img.variables if v not in names)
    out = []
    for k in range(deg + 1):
        out.append(coll.get((deg - k, k), MultiPoly(params)))
    return out
