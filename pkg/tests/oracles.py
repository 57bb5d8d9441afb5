"""Constructive oracles shared by the unit tests and the acceptance suite."""

import random
from fractions import Fraction

import sympy

from fano3lab.linalgeom import PAIRS4, PfaffianLineDatum, SkewForm6, canonical_basis

# index of each pair (i, j), i < j < 4, in Plucker coordinates
_P = {pair: k for k, pair in enumerate(PAIRS4)}

# planes in Lambda^2 W4 whose section of Gr(2, W4) is a conic of the given rank
PLANES = {
    3: [{(0, 1): 1}, {(2, 3): 1}, {(0, 2): 1, (1, 3): 1}],
    2: [{(0, 1): 1}, {(2, 3): 1}, {(0, 3): 1}],
    1: [{(0, 1): 1, (2, 3): 1}, {(0, 2): 1}, {(0, 3): 1}],
}
OUTER_PAIRS = [(i, j) for i in range(6) for j in range(i + 1, 6) if j >= 4]


def _plane_matrix(rank: int) -> sympy.Matrix:
    rows = []
    for vec in PLANES[rank]:
        row = [0] * 6
        for pair, v in vec.items():
            row[_P[pair]] = v
        rows.append(row)
    return sympy.Matrix(rows)


def _random_outer(rng: random.Random) -> dict:
    return {pair: rng.randint(-3, 3) for pair in OUTER_PAIRS}


def random_invertible(rng: random.Random, n: int = 6) -> sympy.Matrix:
    while True:
        g = sympy.Matrix(n, n, lambda i, j: rng.randint(-2, 2))
        if g.det() != 0:
            return g


def hidden_w4_instance(rng: random.Random, rank: int):
    """A 5-space of skew forms whose line datum has a known W4 and conic rank.

    In the standard basis W4 = span(e0..e3).  Two forms vanish on W4 and make
    the pencil; three more restrict to a basis of the annihilator of the chosen
    plane.  Everything is then moved by a random congruence g, which carries
    W4 to g^-1 W4.
    """
    while True:
        a2 = []
        for _ in range(2):
            a2.append(SkewForm6.from_upper(_random_outer(rng)))
        annihilator = _plane_matrix(rank).nullspace()
        rest = []
        for vec in annihilator:
            # a random combination keeps the restrictions a basis of the annihilator
            entries = _random_outer(rng)
            for pair, k in _P.items():
                entries[pair] = Fraction(str(vec[k]))
            rest.append(SkewForm6.from_upper(entries))
        # rank-4 members with kernels spanning W4 need the 4x2 blocks to be generic
        blocks = [sympy.Matrix(4, 2, lambda i, j, f=f: int(f.matrix[i][4 + j].to_fraction())) for f in a2]
        ok = sum(1 for t in range(10) if (blocks[0] + t * blocks[1]).rank() == 2) >= 2
        if ok:
            break
    g = random_invertible(rng)
    gl = [[int(g[i, j]) for j in range(6)] for i in range(6)]
    space = [f.congruent(gl) for f in a2 + rest]
    ginv = g.inv()
    w4 = [[Fraction(str(ginv[i, j])) for i in range(6)] for j in range(4)]
    datum = PfaffianLineDatum((space[0], space[1]))
    return datum, space, canonical_basis(w4)


def random_skew(rng: random.Random, bound: int = 5) -> SkewForm6:
    return SkewForm6.from_upper({(i, j): rng.randint(-bound, bound) for i in range(6) for j in range(i + 1, 6)})
