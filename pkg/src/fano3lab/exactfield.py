"""Exact arithmetic in the cyclotomic fields Q(zeta_n).

An element is stored in the power basis 1, z, ..., z^(phi(n)-1), reduced
modulo the n-th cyclotomic polynomial.  Internally the coordinates are a
tuple of integers over one positive common denominator, which keeps the
hot paths (addition, multiplication) on machine-friendly ints.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import ConductorMismatch, DivisionByZero, NotASubfield

DEFAULT_CONDUCTOR = 40

Rat = Union[int, Fraction]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    result = n
    for p in _factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    fac = _factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    """Divide integer polynomials (ascending coefficients) by a monic divisor."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        quot[k - dd] = c
        if c:
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n in ascending degree order."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _Context:
    """Per-conductor tables: reduction data, powers of zeta, traces."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.phi = totient(n)
        self.cyclo = cyclotomic_polynomial(n)
        self.cyclo_nz = [(j, c) for j, c in enumerate(self.cyclo[: self.phi]) if c]
        pows = []
        cur = [0] * self.phi
        cur[0] = 1
        for _ in range(n):
            pows.append(tuple(cur))
            cur = self.reduce([0] + cur)
        self.zeta_pows = pows
        # trace of zeta^k over Q is the Ramanujan sum c_n(k)
        traces = []
        for k in range(self.phi):
            m = n // gcd(n, k)
            traces.append(mobius(m) * self.phi // totient(m))
        self.traces = traces

    def reduce(self, coeffs: list[int]) -> list[int]:
        phi = self.phi
        if len(coeffs) <= phi:
            return coeffs + [0] * (phi - len(coeffs))
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, phi - 1, -1):
            c = coeffs[k]
            if c:
                base = k - phi
                for j, cj in self.cyclo_nz:
                    coeffs[base + j] -= c * cj
        return coeffs[:phi]


@lru_cache(maxsize=None)
def _ctx(n: int) -> _Context:
    return _Context(n)


def _normalize(num: list[int] | tuple[int, ...], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = reduce(gcd, num, den)
    if g == 0:
        return tuple(num), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycNum:
    """An element of Q(zeta_n) for a fixed conductor n."""

    __slots__ = ("_n", "_num", "_den", "_hash")

    def __init__(self, conductor: int, coords: Iterable[Rat] = ()) -> None:
        if conductor < 1:
            raise ValueError("conductor must be positive")
        fr = [Fraction(c) for c in coords]
        den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fr), 1)
        ints = [f.numerator * (den // f.denominator) for f in fr]
        ctx = _ctx(conductor)
        # reduce modulo Phi_n via t^k for long input
        ints = ctx.reduce(ints) if len(ints) > ctx.phi else ints + [0] * (ctx.phi - len(ints))
        self._n = conductor
        self._num, self._den = _normalize(ints, den)
        self._hash = None

    @classmethod
    def _raw(cls, n: int, num: Sequence[int], den: int = 1, normalized: bool = False) -> "CycNum":
        obj = cls.__new__(cls)
        obj._n = n
        if normalized:
            obj._num, obj._den = tuple(num), den
        else:
            obj._num, obj._den = _normalize(num, den)
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def rational(cls, q: Rat, conductor: int = 1) -> "CycNum":
        q = Fraction(q)
        phi = _ctx(conductor).phi
        return cls._raw(conductor, [q.numerator] + [0] * (phi - 1), q.denominator, normalized=True)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        return cls._raw(n, _ctx(n).zeta_pows[k % n], 1, normalized=True)

    # basic accessors ----------------------------------------------------
    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coords

    # conductor handling -------------------------------------------------
    def embed(self, m: int) -> "CycNum":
        return embed(self, m)

    def _lift(self, other: object) -> tuple["CycNum", "CycNum"]:
        if isinstance(other, CycNum):
            if other._n == self._n:
                return self, other
            n1, n2 = self._n, other._n
            if n2 % n1 == 0:
                return embed(self, n2), other
            if n1 % n2 == 0:
                return self, embed(other, n1)
            raise ConductorMismatch(
                f"cannot combine conductors {n1} and {n2}", left=n1, right=n2
            )
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            phi = _ctx(self._n).phi
            return self, CycNum._raw(self._n, [q.numerator] + [0] * (phi - 1), q.denominator, True)
        return NotImplemented  # type: ignore[return-value]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: object) -> "CycNum":
        pair = self._lift(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        da, db = a._den, b._den
        if da == db:
            return CycNum._raw(a._n, [x + y for x, y in zip(a._num, b._num)], da)
        g = gcd(da, db)
        fa, fb = db // g, da // g
        return CycNum._raw(a._n, [x * fa + y * fb for x, y in zip(a._num, b._num)], da * fa)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum._raw(self._n, [-c for c in self._num], self._den, True)

    def __pos__(self) -> "CycNum":
        return self

    def __sub__(self, other: object) -> "CycNum":
        if not isinstance(other, (CycNum, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "CycNum":
        return (-self) + other

    def __mul__(self, other: object) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum._raw(self._n, [c * q.numerator for c in self._num], self._den * q.denominator)
        pair = self._lift(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        ctx = _ctx(a._n)
        if ctx.phi == 1:
            prod = [a._num[0] * b._num[0]]
        elif b.is_rational():
            prod = [c * b._num[0] for c in a._num]
        elif a.is_rational():
            prod = [c * a._num[0] for c in b._num]
        else:
            prod = [0] * (2 * ctx.phi - 1)
            bn = [(j, y) for j, y in enumerate(b._num) if y]
            for i, x in enumerate(a._num):
                if x:
                    for j, y in bn:
                        prod[i + j] += x * y
            prod = ctx.reduce(prod)
        return CycNum._raw(a._n, prod, a._den * b._den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycNum":
        """Image under the automorphism zeta -> zeta^k (k coprime to n)."""
        ctx = _ctx(self._n)
        if gcd(k, self._n) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        acc = [0] * ctx.phi
        for j, c in enumerate(self._num):
            if c:
                for idx, v in enumerate(ctx.zeta_pows[(j * k) % self._n]):
                    if v:
                        acc[idx] += c * v
        return CycNum._raw(self._n, acc, self._den)

    def conjugate(self) -> "CycNum":
        return self.galois(-1 % self._n if self._n > 1 else 1)

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            q = Fraction(self._den, self._num[0])
            return CycNum.rational(q, self._n)
        # product of the nontrivial conjugates, divided by the norm
        n = self._n
        acc = None
        for k in range(2, n):
            if gcd(k, n) == 1:
                c = self.galois(k)
                acc = c if acc is None else acc * c
        assert acc is not None
        norm = (self * acc).to_fraction()
        return acc * (1 / norm)

    def norm(self) -> Fraction:
        if self.is_rational():
            return Fraction(self._num[0], self._den) ** _ctx(self._n).phi
        acc = self
        for k in range(2, self._n):
            if gcd(k, self._n) == 1:
                acc = acc * self.galois(k)
        return acc.to_fraction()

    def trace(self) -> Fraction:
        tr = _ctx(self._n).traces
        return Fraction(sum(c * t for c, t in zip(self._num, tr)), self._den)

    def __truediv__(self, other: object) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, CycNum):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: object) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e: int) -> "CycNum":
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = CycNum.rational(1, self._n)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        if not isinstance(other, CycNum):
            return NotImplemented
        if other._n == self._n:
            return self._den == other._den and self._num == other._num
        m = self._n * other._n // gcd(self._n, other._n)
        a, b = embed(self, m), embed(other, m)
        return a._den == b._den and a._num == b._num

    def __ne__(self, other: object) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self) -> int:
        # normalized trace does not depend on the conductor we embed into
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash(self.trace() / _ctx(self._n).phi)
        return self._hash

    # display ------------------------------------------------------------
    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CycNum({self._n}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "conductor": self._n,
            "coords": [[c.numerator, c.denominator] for c in self.coords],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CycNum":
        return cls(int(data["conductor"]), [Fraction(a, b) for a, b in data["coords"]])


Scalar = Union[int, Fraction, CycNum]


def as_cyc(x: Scalar, conductor: int = 1) -> CycNum:
    """Coerce ints and Fractions into CycNum; embed CycNum into `conductor` if it divides."""
    if isinstance(x, CycNum):
        if x.conductor == conductor or conductor % x.conductor != 0:
            return x
        return embed(x, conductor)
    return CycNum.rational(x, conductor)


def embed(a: CycNum, m: int) -> CycNum:
    """Express ``a`` inside Q(zeta_m); requires conductor(a) | m."""
    n = a.conductor
    if m % n != 0:
        raise NotASubfield(f"conductor {n} does not divide {m}", source=n, target=m)
    if m == n:
        return a
    ctx = _ctx(m)
    step = m // n
    acc = [0] * ctx.phi
    for j, c in enumerate(a.numerators):
        if c:
            for idx, v in enumerate(ctx.zeta_pows[(step * j) % m]):
                if v:
                    acc[idx] += c * v
    return CycNum._raw(m, acc, a.denominator)


def project(a: CycNum, m: int) -> CycNum:
    """Express ``a`` at the smaller conductor m if it lies in Q(zeta_m)."""
    n = a.conductor
    if n % m != 0:
        raise NotASubfield(f"conductor {m} does not divide {n}", source=n, target=m)
    if m == n:
        return a
    big, small = _ctx(n), _ctx(m)
    step = n // m
    cols = [big.zeta_pows[(step * j) % n] for j in range(small.phi)]
    # solve sum_j c_j * cols[j] = a over Q by elimination on the augmented system
    rows = [[Fraction(cols[j][i]) for j in range(small.phi)] + [c] for i, c in enumerate(a.coords)]
    sol = _solve_fraction_system(rows, small.phi)
    if sol is None:
        raise NotASubfield(f"element does not lie in Q(zeta_{m})", source=n, target=m)
    return CycNum(m, sol)


def _solve_fraction_system(rows: list[list[Fraction]], nvars: int) -> list[Fraction] | None:
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for col in range(nvars):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    sol = [Fraction(0)] * nvars
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    return sol


def zeta(n: int, k: int = 1) -> CycNum:
    return CycNum.zeta(n, k)


def sqrt5(conductor: int = 5) -> CycNum:
    """The square root of 5 inside Q(zeta_5), expressed at ``conductor``."""
    z = [CycNum.zeta(5, k) for k in range(5)]
    return embed(z[1] - z[2] - z[3] + z[4], conductor)
