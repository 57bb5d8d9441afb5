"""Skew forms on a 6-space, Pfaffian lines, conic recovery and quadric pencils.

A skew form M on W = k^6 pairs vectors as u^T M v.  A pencil of skew forms
that all vanish on a common 4-dimensional W4 lies in the Pfaffian cubic;
restricting a 5-dimensional space A to W4 cuts the Plucker quadric of
Gr(2, W4) down to a plane conic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import (
    DegenerateConic,
    IdenticallyZero,
    NotInA,
    NotIsotropic,
    RankPattern,
    WrongImageDimension,
)
from .exactfield import DEFAULT_CONDUCTOR, CycNum, Scalar, as_cyc
from .planecurves import COORDS, PlaneCurve, conic_rank
from .polyalg import BinaryForm, MultiPoly, factor_linear, gcd_forms, interpolate

DIM = 6
Matrix = list[list[CycNum]]

# basis of Lambda^2 of a 4-space, in the order used for Plucker coordinates
PAIRS4 = tuple(combinations(range(4), 2))


def _cyc_matrix(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    return [[as_cyc(v) for v in row] for row in rows]


def canonical_basis(vectors: Sequence[Sequence[Scalar]]) -> list[list[CycNum]]:
    """Reduced row-echelon basis, so that equal subspaces compare equal."""
    return [[as_cyc(v) for v in row] for row in linalg.row_space_basis(_cyc_matrix(vectors))]


class SkewForm6:
    __slots__ = ("matrix",)

    def __init__(self, rows: Sequence[Sequence[Scalar]]) -> None:
        m = _cyc_matrix(rows)
        if len(m) != DIM or any(len(r) != DIM for r in m):
            raise ValueError("a skew form here is a 6x6 matrix")
        for i in range(DIM):
            if not m[i][i].is_zero():
                raise ValueError("skew forms have zero diagonal")
            for j in range(i + 1, DIM):
                if m[i][j] != -m[j][i]:
                    raise ValueError("matrix is not antisymmetric")
        self.matrix = m

    @classmethod
    def from_upper(cls, entries: dict[tuple[int, int], Scalar]) -> "SkewForm6":
        rows: list[list[Scalar]] = [[0] * DIM for _ in range(DIM)]
        for (i, j), v in entries.items():
            rows[i][j] = v
            rows[j][i] = -as_cyc(v)
        return cls(rows)

    def __add__(self, other: "SkewForm6") -> "SkewForm6":
        return SkewForm6([[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __mul__(self, c: Scalar) -> "SkewForm6":
        c = as_cyc(c)
        return SkewForm6([[a * c for a in r] for r in self.matrix])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewForm6) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(tuple(map(tuple, self.matrix)))

    def vector(self) -> list[CycNum]:
        """Upper-triangle coordinates, used for span and membership tests."""
        return [self.matrix[i][j] for i, j in combinations(range(DIM), 2)]

    def rank(self) -> int:
        return linalg.rank(self.matrix)

    def kernel(self) -> list[list[CycNum]]:
        return [[as_cyc(v) for v in vec] for vec in linalg.nullspace(self.matrix)]

    def restrict(self, basis: Sequence[Sequence[Scalar]]) -> Matrix:
        """Gram matrix B M B^T of the form on the span of the rows of B."""
        b = _cyc_matrix(basis)
        return _cyc_matrix(linalg.matmul(linalg.matmul(b, self.matrix), linalg.transpose(b)))

    def congruent(self, g: Sequence[Sequence[Scalar]]) -> "SkewForm6":
        """g^T M g, i.e. the form (u, v) -> M(g u, g v)."""
        g = _cyc_matrix(g)
        return SkewForm6(linalg.matmul(linalg.matmul(linalg.transpose(g), self.matrix), g))

    def to_json(self) -> list[dict]:
        return [v.to_json() for row in self.matrix for v in row]


def _pfaffian_rec(m: Sequence[Sequence], idx: tuple[int, ...]):
    if not idx:
        return 1
    first, rest = idx[0], idx[1:]
    total = 0
    for pos, j in enumerate(rest):
        entry = m[first][j]
        if entry == 0:
            continue
        term = entry * _pfaffian_rec(m, rest[:pos] + rest[pos + 1:])
        total = total + term if pos % 2 == 0 else total - term
    return total


def pfaffian_generic(m: Sequence[Sequence]):
    """Pfaffian of an even-size antisymmetric matrix over any ring (matching expansion)."""
    n = len(m)
    if n % 2:
        return 0
    return _pfaffian_rec(m, tuple(range(n)))


def pfaffian(form: SkewForm6 | Sequence[Sequence[Scalar]]) -> CycNum:
    m = form.matrix if isinstance(form, SkewForm6) else SkewForm6(form).matrix
    return as_cyc(pfaffian_generic(m))


# ---------------------------------------------------------------------------
# Pfaffian lines


@dataclass(frozen=True)
class PfaffianLineDatum:
    a2: tuple[SkewForm6, SkewForm6]
    w4: tuple[tuple[CycNum, ...], ...] | None = None

    def with_w4(self, basis: Sequence[Sequence[Scalar]]) -> "PfaffianLineDatum":
        return PfaffianLineDatum(self.a2, tuple(tuple(r) for r in canonical_basis(basis)))

    def to_json(self) -> dict:
        return {
            "a2": [f.to_json() for f in self.a2],
            "w4": None if self.w4 is None else [[v.to_json() for v in r] for r in self.w4],
        }


@dataclass(frozen=True)
class LineCheck:
    on_y: bool
    cubic: BinaryForm

    def to_json(self) -> dict:
        return {"on_Y": self.on_y, "pfaffian_cubic": self.cubic.to_json(),
                "pfaffian_cubic_str": self.cubic.to_str(("lam", "mu"))}


def _check_membership(a2: Sequence[SkewForm6], space: Sequence[SkewForm6]) -> None:
    base = [f.vector() for f in space]
    r = linalg.rank(base)
    for k, f in enumerate(a2):
        if linalg.rank(base + [f.vector()]) != r:
            raise NotInA("pencil generator is not in A", generator=k)


def pencil_cubic(a2: Sequence[SkewForm6]) -> BinaryForm:
    """Pf(lam a1 + mu a2) as a binary cubic in (lam, mu)."""
    names = ("lam", "mu")
    lam, mu = MultiPoly.var("lam", names), MultiPoly.var("mu", names)
    m = [[lam * a + mu * b for a, b in zip(r, s)] for r, s in zip(a2[0].matrix, a2[1].matrix)]
    pf = pfaffian_generic(m)
    if not isinstance(pf, MultiPoly):
        pf = MultiPoly.const(pf, names)
    return BinaryForm.from_multipoly(pf, names, degree=3)


def pencil_is_line_on_Y(datum: PfaffianLineDatum, space: Sequence[SkewForm6]) -> LineCheck:
    _check_membership(datum.a2, space)
    cubic = pencil_cubic(datum.a2)
    return LineCheck(cubic.is_zero(), cubic)


# ---------------------------------------------------------------------------
# recovering W4

SEARCH_SCHEDULE = tuple(range(10))


@dataclass(frozen=True)
class W4Result:
    basis: tuple[tuple[CycNum, ...], ...]
    parameters: tuple[int, int]
    ambiguous: bool = False

    def to_json(self) -> dict:
        return {"w4": [[v.to_json() for v in r] for r in self.basis],
                "w4_str": [[str(v) for v in r] for r in self.basis],
                "pencil_parameters": list(self.parameters), "ambiguous": self.ambiguous}


def is_isotropic(basis: Sequence[Sequence[Scalar]], forms: Sequence[SkewForm6]) -> bool:
    return all(all(v.is_zero() for row in f.restrict(basis) for v in row) for f in forms)


def recover_W4(a2: Sequence[SkewForm6]) -> W4Result:
    """Span of the kernels of two rank-4 members a1 + t a2, t = 0, 1, ..., 9.

    Every pair of rank-4 kernels is tried, so if two different isotropic
    4-spaces turn up the result is flagged as ambiguous.
    """
    a1, b1 = a2
    kernels: list[tuple[int, list[list[CycNum]]]] = []
    for t in SEARCH_SCHEDULE:
        member = a1 + b1 * t
        if member.rank() == 4:
            kernels.append((t, member.kernel()))
    if len(kernels) < 2:
        raise RankPattern("fewer than two rank-4 members in the pencil samples",
                          rank4_found=len(kernels), samples=len(SEARCH_SCHEDULE))
    found: list[tuple[tuple[tuple[CycNum, ...], ...], tuple[int, int]]] = []
    spanning_pair = False
    for (t1, k1), (t2, k2) in combinations(kernels, 2):
        basis = canonical_basis(k1 + k2)
        if len(basis) != 4:
            continue
        spanning_pair = True
        if not is_isotropic(basis, a2):
            continue
        key = tuple(tuple(r) for r in basis)
        if all(key != f[0] for f in found):
            found.append((key, (t1, t2)))
    if not spanning_pair:
        raise RankPattern("rank-4 kernels never span a 4-dimensional space", rank4_found=len(kernels))
    if not found:
        raise NotIsotropic("the kernel span is not isotropic for the pencil")
    basis, params = found[0]
    return W4Result(basis, params, ambiguous=len(found) > 1)


# ---------------------------------------------------------------------------
# conic from a line


def restrict_to_w4(form: SkewForm6, w4: Sequence[Sequence[Scalar]]) -> list[CycNum]:
    """Coordinates of the restriction in Lambda^2 W4^dual, ordered as PAIRS4."""
    gram = form.restrict(w4)
    return [as_cyc(gram[i][j]) for i, j in PAIRS4]


def plucker_quadric(p: Sequence) -> object:
    """p01 p23 - p02 p13 + p03 p12 for p indexed by PAIRS4."""
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]


@dataclass(frozen=True)
class ConicFromLine:
    conic: PlaneCurve
    rank: int
    kind: str
    plane: tuple[tuple[CycNum, ...], ...]
    w4: tuple[tuple[CycNum, ...], ...]
    components: tuple[PlaneCurve, ...] | None

    def to_json(self) -> dict:
        return {
            "conic": self.conic.to_json(),
            "rank": self.rank,
            "type": self.kind,
            "plane": [[str(v) for v in r] for r in self.plane],
            "components": None if self.components is None else [c.to_json() for c in self.components],
        }


CONIC_KINDS = {3: "smooth", 2: "reducible", 1: "non-reduced"}


def _gram3(conic: PlaneCurve) -> Matrix:
    m = [[as_cyc(0)] * 3 for _ in range(3)]
    for e, c in conic.form.terms.items():
        i, j = [k for k in range(3) for _ in range(e[k])]
        if i == j:
            m[i][i] = c
        else:
            m[i][j] = m[j][i] = c / 2
    return m


def _cross(u: Sequence[CycNum], v: Sequence[CycNum]) -> list[CycNum]:
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def conic_components(conic: PlaneCurve, conductor: int = DEFAULT_CONDUCTOR) -> tuple[PlaneCurve, ...] | None:
    """Lines making up a singular conic, or None if they are not defined over the field."""
    gram = _gram3(conic)
    r = linalg.rank(gram)
    if r == 3:
        return None
    if r == 1:
        row = next(row for row in gram if any(not v.is_zero() for v in row))
        return (PlaneCurve.line(*row),)
    (vertex,) = [[as_cyc(v) for v in vec] for vec in linalg.nullspace(gram)]
    k = next(i for i in range(3) if not vertex[i].is_zero())
    others = [i for i in range(3) if i != k]
    # restrict to the line c_k = 0, parameterized by the two other coordinates
    names = ("x", "y")
    sub = {COORDS[k]: 0, COORDS[others[0]]: MultiPoly.var("x", names), COORDS[others[1]]: MultiPoly.var("y", names)}
    binary = BinaryForm.from_multipoly(conic.form.subs(sub).with_variables(names), names, degree=2)
    factors, rem = factor_linear(binary.embed(conductor), conductor)
    if rem.degree > 0:
        return None
    lines = []
    for lin, _ in factors:
        a, b = lin.coeffs
        point = [as_cyc(0)] * 3
        point[others[0]], point[others[1]] = b, -a
        lines.append(PlaneCurve.line(*_cross(vertex, point)))
    return tuple(lines)


def conic_from_line(datum: PfaffianLineDatum, space: Sequence[SkewForm6],
                    conductor: int = DEFAULT_CONDUCTOR) -> ConicFromLine:
    if len(space) != 5:
        raise ValueError("A must be given by 5 forms")
    _check_membership(datum.a2, space)
    w4 = datum.w4 if datum.w4 is not None else recover_W4(datum.a2).basis
    if not is_isotropic(w4, datum.a2):
        raise NotIsotropic("W4 is not isotropic for the pencil")
    image = [restrict_to_w4(f, w4) for f in space]
    dim = linalg.rank(image)
    if dim != 3:
        raise WrongImageDimension("restriction of A to W4 must have a 3-dimensional image", dimension=dim)
    plane = [[as_cyc(v) for v in vec] for vec in linalg.nullspace(image)]
    coords = [MultiPoly.var(c, COORDS) for c in COORDS]
    omega = [sum((coords[k] * plane[k][idx] for k in range(3)), MultiPoly(COORDS)) for idx in range(len(PAIRS4))]
    quad = plucker_quadric(omega)
    if quad.is_zero():
        raise DegenerateConic("the plane lies inside the Grassmannian")
    conic = PlaneCurve(quad)
    rank = conic_rank(conic)
    comps = None if rank == 3 else conic_components(conic, conductor)
    return ConicFromLine(conic, rank, CONIC_KINDS[rank], tuple(tuple(r) for r in plane), tuple(tuple(r) for r in w4), comps)


# ---------------------------------------------------------------------------
# pencils of quadrics


@dataclass(frozen=True)
class PencilDiscriminant:
    form: BinaryForm
    members: tuple[tuple[tuple[CycNum, CycNum], int], ...]
    squarefree: bool
    splits: bool

    def to_json(self) -> dict:
        return {
            "discriminant": self.form.to_json(),
            "discriminant_str": self.form.to_str(("lam", "mu")),
            "degenerate_members": [{"point": [str(a), str(b)], "multiplicity": m} for (a, b), m in self.members],
            "squarefree": self.squarefree,
            "splits_over_field": self.splits,
        }


def _check_symmetric(m: Matrix) -> None:
    if len(m) != DIM or any(len(r) != DIM for r in m):
        raise ValueError("quadrics here are 6x6 symmetric matrices")
    if any(m[i][j] != m[j][i] for i in range(DIM) for j in range(i)):
        raise ValueError("matrix is not symmetric")


class QuadricPencil:
    """Two symmetric 6x6 matrices spanning the pencil lam Q1 + mu Q2."""

    __slots__ = ("q1", "q2")

    def __init__(self, q1: Sequence[Sequence[Scalar]], q2: Sequence[Sequence[Scalar]]) -> None:
        self.q1, self.q2 = _cyc_matrix(q1), _cyc_matrix(q2)
        _check_symmetric(self.q1)
        _check_symmetric(self.q2)


def pencil_discriminant(q1: Sequence[Sequence[Scalar]] | QuadricPencil, q2: Sequence[Sequence[Scalar]] | None = None,
                        conductor: int = DEFAULT_CONDUCTOR) -> PencilDiscriminant:
    """det(lam Q1 + mu Q2) as a binary sextic, found by interpolating det(Q1 + t Q2)."""
    pencil = q1 if isinstance(q1, QuadricPencil) else QuadricPencil(q1, q2)
    m1, m2 = pencil.q1, pencil.q2
    ts = list(range(DIM + 1))
    values = [linalg.det([[a + b * t for a, b in zip(r, s)] for r, s in zip(m1, m2)]) for t in ts]
    poly = interpolate(ts, values)
    coeffs = [poly.coeffs[k] if k < len(poly.coeffs) else 0 for k in range(DIM + 1)]
    form = BinaryForm(coeffs)
    if form.is_zero():
        raise IdenticallyZero("det(lam Q1 + mu Q2) vanishes identically")
    form = form.embed(conductor)
    squarefree = gcd_forms(form.diff_x(), form.diff_y()).degree == 0
    factors, rem = factor_linear(form, conductor)
    members = []
    for lin, mult in factors:
        a, b = lin.coeffs
        if not a.is_zero():
            a, b = as_cyc(1), b / a
        else:
            b = as_cyc(1)
        members.append(((b, -a), mult))
    return PencilDiscriminant(form, tuple(members), squarefree, rem.degree == 0)
