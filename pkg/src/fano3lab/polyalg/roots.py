"""Roots of univariate polynomials inside Q(zeta_n).

Method (all integer arithmetic):

1. reduce to a squarefree, monic, integral polynomial h over Z[zeta];
2. pick a prime p = 1 mod n, so p splits completely, and a prime ideal
   P = (p, zeta - r) above it; h mod P has simple roots in F_p;
3. Hensel-lift each simple root to P^k and recover the unique short
   element of Z[zeta] in that residue class with an LLL-reduced basis of
   the ideal lattice P^k and Babai rounding;
4. keep only candidates that are exact roots.

Step 3 provably finds a root whenever its coordinates are below the
bound B computed from the coefficients, because we only stop once the
reduced basis certifies unique decoding of every vector of length
sqrt(phi) * B (a posteriori check on the Gram-Schmidt norms).  Residues
that survive to that precision without producing a root do not lift.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

from ..exactfield import CycNum, _ctx, as_cyc, mobius, totient
from .unipoly import UniPoly, poly_gcd

IntVec = list[int]


# small number theory ----------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _primes_1_mod(n: int, start: int):
    p = max(start, 2)
    p += (1 - p) % n
    while True:
        if _is_prime(p):
            yield p
        p += n


def _root_of_unity_mod(n: int, p: int) -> int:
    """Smallest-generated element of exact order n in F_p^* (requires n | p-1)."""
    if n == 1:
        return 1
    qs = _prime_factors(n)
    for a in range(2, p):
        r = pow(a, (p - 1) // n, p)
        if all(pow(r, n // q, p) != 1 for q in qs):
            return r
    raise ArithmeticError("no primitive root found")


def _int_root_ceil(x: int, k: int) -> int:
    """Smallest r >= 0 with r**k >= x."""
    if x <= 0:
        return 0
    if k == 1:
        return x
    lo, hi = 0, 1 << ((x.bit_length() + k - 1) // k)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


# polynomial helpers over Z / p^k --------------------------------------------

def _eval_mod(coeffs: Sequence[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def _deriv(coeffs: Sequence[int]) -> list[int]:
    return [k * c for k, c in enumerate(coeffs)][1:]


def _hensel(coeffs: Sequence[int], r0: int, p: int, k: int) -> int:
    """Lift a simple root r0 of coeffs mod p to a root mod p^k (Newton)."""
    d = _deriv(coeffs)
    r, prec = r0, 1
    while prec < k:
        prec = min(2 * prec, k)
        m = p ** prec
        fx = _eval_mod(coeffs, r, m)
        dfx = _eval_mod(d, r, m)
        r = (r - fx * pow(dfx, -1, m)) % m
    return r


def _fp_poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    a = _fp_poly_trim([c % p for c in a])
    b = _fp_poly_trim([c % p for c in b])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - c * bj) % p
            _fp_poly_trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


# the ideal lattice P^k ------------------------------------------------------

class _IdealLattice:
    """LLL-reduced basis of P^k with exact Gram-Schmidt data."""

    def __init__(self, n: int, p: int, r: int, k: int) -> None:
        from sympy.polys.domains import ZZ
        from sympy.polys.matrices import DomainMatrix

        ctx = _ctx(n)
        self.phi = phi = ctx.phi
        self.modulus = pk = p ** k
        self.r_k = rk = _hensel(list(ctx.cyclo), r, p, k) if phi > 1 else r % pk
        rows = [[pk] + [0] * (phi - 1)]
        for j in range(1, phi):
            row = [0] * phi
            row[0] = -pow(rk, j, pk)
            row[j] = 1
            rows.append(row)
        if phi > 1:
            dm = DomainMatrix([[ZZ(v) for v in row] for row in rows], (phi, phi), ZZ)
            rows = [[int(v) for v in row] for row in dm.lll().to_Matrix().tolist()]
        self.basis: list[IntVec] = rows
        # Gram-Schmidt over Q
        gs: list[list[Fraction]] = []
        norms: list[Fraction] = []
        for b in rows:
            v = [Fraction(x) for x in b]
            for g, nn in zip(gs, norms):
                mu = sum(x * y for x, y in zip(b, g)) / nn
                if mu:
                    v = [x - mu * y for x, y in zip(v, g)]
            gs.append(v)
            norms.append(sum(x * x for x in v))
        self.gs = gs
        self.gs_norms = norms
        # any error vector with |e|^2 < min|b*|^2 / 4 is decoded exactly
        self.decodable_sq = min(norms) / 4

    def decode(self, residue: int) -> IntVec:
        """Short vector congruent to `residue` (a rational integer) mod P^k."""
        t = [residue % self.modulus] + [0] * (self.phi - 1)
        for i in range(self.phi - 1, -1, -1):
            g, nn = self.gs[i], self.gs_norms[i]
            mu = sum(x * y for x, y in zip(t, g)) / nn
            c = (2 * mu.numerator + mu.denominator) // (2 * mu.denominator)
            if c:
                b = self.basis[i]
                t = [x - c * y for x, y in zip(t, b)]
        return t


@lru_cache(maxsize=64)
def _lattice(n: int, p: int, r: int, k: int) -> _IdealLattice:
    return _IdealLattice(n, p, r, k)


@lru_cache(maxsize=None)
def _trace_gram_inverse_norm(n: int) -> Fraction:
    """Max row l1-norm of the inverse trace Gram matrix of the power basis."""
    from ..linalg import inverse

    ctx = _ctx(n)
    phi = ctx.phi
    if phi == 1:
        return Fraction(1)

    def tr(k: int) -> int:
        m = n // gcd(n, k % n)
        return mobius(m) * phi // totient(m)

    gram = [[Fraction(tr(j - i)) for j in range(phi)] for i in range(phi)]
    inv = inverse(gram)
    return max(sum(abs(x) for x in row) for row in inv)


# main entry points -----------------------------------------------------------

def _integral_monic(f: UniPoly, n: int) -> tuple[list[IntVec], int]:
    """Monic h in Z[zeta][s] with roots D*alpha for the roots alpha of f."""
    g = f.monic()
    m = g.degree
    cs = [as_cyc(c, n) for c in g.coeffs]
    D = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in cs), 1)
    h: list[IntVec] = []
    for i, c in enumerate(cs):
        scale = (D // c.denominator) * D ** (m - 1 - i) if i < m else 0
        h.append([v * scale for v in c.numerators] if i < m else [1] + [0] * (len(c.numerators) - 1))
    return h, D


def _coordinate_bound(h: list[IntVec], n: int) -> int:
    m = len(h) - 1
    phi = len(h[0])
    # Fujiwara-type bound on every complex embedding of a root
    radius = 0
    for k in range(1, m + 1):
        norm1 = sum(abs(v) for v in h[m - k])
        radius = max(radius, _int_root_ceil(norm1, k))
    radius = 2 * radius + 1
    bound = _trace_gram_inverse_norm(n) * phi * radius
    return int(bound) + 1


def _squarefree_roots(f: UniPoly, n: int) -> list[CycNum]:
    if f.degree < 1:
        return []
    if f.degree == 1:
        return [as_cyc(-f.coeffs[0] / f.coeffs[1], n)]
    phi = totient(n)
    h, D = _integral_monic(f, n)
    m = len(h) - 1
    bound = _coordinate_bound(h, n)
    target_sq = phi * bound * bound  # |e|^2 for any root's coordinate vector

    for p in _primes_1_mod(n, max(2 * m + 3, 11)):
        r = _root_of_unity_mod(n, p)
        hbar = [_eval_mod(c, r, p) for c in h]
        if _fp_gcd_degree(hbar, _deriv(hbar), p) != 0:
            continue
        residues = [x for x in range(p) if _eval_mod(hbar, x, p) == 0]
        break

    hpoly = UniPoly([CycNum._raw(n, c, 1) for c in h])
    found: list[CycNum] = []
    pending = residues
    # small precision first: most roots are short; double until certified
    k = 4
    while pending:
        lat = _lattice(n, p, r, k)
        pk = lat.modulus
        hk = [_eval_mod(c, lat.r_k, pk) for c in h]
        still = []
        for rho in pending:
            rho_k = _hensel(hk, rho, p, k)
            e = lat.decode(rho_k)
            beta = CycNum._raw(n, e, 1)
            if hpoly(beta).is_zero():
                found.append(beta * Fraction(1, D))
            else:
                still.append(rho)
        if lat.decodable_sq > target_sq:
            break  # certified: remaining residues have no root in the field
        pending = still
        k *= 2
    return found


def field_roots(f: UniPoly, conductor: int) -> list[tuple[CycNum, int]]:
    """All roots of f in Q(zeta_conductor) with multiplicities, sorted."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    f = UniPoly([as_cyc(c, conductor) for c in f.coeffs])
    if f.degree < 1:
        return []
    sqf = f // poly_gcd(f, f.derivative())
    out = []
    for alpha in _squarefree_roots(sqf, conductor):
        mult, g = 0, f
        lin = UniPoly([-alpha, 1])
        while True:
            q, rem = g.divmod(lin)
            if not rem.is_zero():
                break
            g, mult = q, mult + 1
        out.append((as_cyc(alpha, conductor), mult))
    out.sort(key=lambda pair: pair[0].sort_key())
    return out
