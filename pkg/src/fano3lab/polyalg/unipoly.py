"""Dense univariate polynomials over CycNum."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DivisionByZero
from ..exactfield import CycNum, Scalar, as_cyc
from .. import linalg


def _zero_like(c: CycNum) -> CycNum:
    return CycNum.rational(0, c.conductor)


class UniPoly:
    """Polynomial sum coeffs[k] * t^k with trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [as_cyc(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[CycNum, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> CycNum:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly | Scalar") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out: list = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        if len(rem) - 1 < dd:
            return UniPoly(), self
        inv_lc = other.lc.inverse()
        quot: list = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c * inv_lc
            quot[k - dd] = q
            for j, oc in enumerate(other.coeffs):
                if not oc.is_zero():
                    rem[k - dd + j] = rem[k - dd + j] - q * oc
        return UniPoly(quot), UniPoly(rem[:dd])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = self.lc.inverse()
        return UniPoly([c * inv for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Scalar) -> CycNum:
        acc: CycNum | int = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return as_cyc(acc)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def sylvester_matrix(f: Sequence[Scalar], g: Sequence[Scalar]) -> list[list[Scalar]]:
    """Sylvester matrix from descending coefficient lists; rows of f first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows: list[list[Scalar]] = []
    for i in range(n):
        rows.append([0] * i + list(f) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g) + [0] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly) -> CycNum:
    """Resultant as the Sylvester determinant with the rows of f on top."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if f.degree == 0 and g.degree == 0:
        return as_cyc(1)
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    return as_cyc(linalg.det(sylvester_matrix(fd, gd)))


def interpolate(points: Sequence[Scalar], values: Sequence[Scalar]) -> UniPoly:
    """Lagrange interpolation through distinct points."""
    result = UniPoly()
    for i, (xi, yi) in enumerate(zip(points, values)):
        if yi == 0:
            continue
        basis = UniPoly([1])
        denom: Scalar = 1
        for j, xj in enumerate(points):
            if j != i:
                basis = basis * UniPoly([-as_cyc(xj), 1])
                denom = denom * (as_cyc(xi) - xj)
        result = result + basis * (as_cyc(yi) / denom)
    return result
