"""Exact dense linear algebra over CycNum (or any exact field type).

Matrices are lists of rows.  Nothing here ever compares against a
tolerance; pivots are chosen as the first nonzero entry.
"""

from __future__ import annotations

from typing import Any, Sequence

Matrix = list[list[Any]]


def _copy(m: Sequence[Sequence[Any]]) -> Matrix:
    return [list(r) for r in m]


def rref(m: Sequence[Sequence[Any]]) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns."""
    a = _copy(m)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence[Any]]) -> int:
    """Rank via forward elimination (no back substitution)."""
    a = _copy(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        for i in range(r + 1, nrows):
            if a[i][col] != 0:
                f = a[i][col] * inv
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        r += 1
    return r


def nullspace(m: Sequence[Sequence[Any]], ncols: int | None = None) -> list[list[Any]]:
    """Basis of {v : m v = 0}, one vector per free column."""
    if not m:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v: list[Any] = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def det(m: Sequence[Sequence[Any]]) -> Any:
    a = _copy(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    result: Any = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return a[0][0] * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        result = result * p
        inv = 1 / p
        for i in range(col + 1, n):
            if a[i][col] != 0:
                f = a[i][col] * inv
                a[i] = [v - f * w for v, w in zip(a[i], a[col])]
    return result if sign > 0 else -result


def solve(m: Sequence[Sequence[Any]], b: Sequence[Any]) -> list[Any] | None:
    """One solution of m x = b, or None when inconsistent."""
    aug = [list(r) + [bv] for r, bv in zip(m, b)]
    ncols = len(m[0])
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x: list[Any] = [0] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return x


def inverse(m: Sequence[Sequence[Any]]) -> Matrix:
    n = len(m)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc: Any = 0
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(a: Sequence[Sequence[Any]]) -> Matrix:
    return [list(c) for c in zip(*a)]


def row_space_basis(vectors: Sequence[Sequence[Any]]) -> Matrix:
    """Canonical (reduced row-echelon) basis of the span of `vectors`."""
    red, pivots = rref(vectors)
    return red[: len(pivots)]
