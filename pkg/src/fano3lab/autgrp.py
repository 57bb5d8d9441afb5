"""Subgroups of PGL2 over cyclotomic fields and automorphisms of the special curves."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, NotDetNormalized
from .exactfield import DEFAULT_CONDUCTOR, CycNum, Scalar, as_cyc, sqrt5, zeta
from .polyalg import BinaryForm, GroupElt2, MultiPoly, act, act_symbolic, proj_eq
from .quintics import ParamCurve, build_z, check_u, contains_point, contains_symbolic, normalize_label


class ProjMat2:
    """An element of PGL2, stored with its first nonzero entry (row-major) equal to 1."""

    __slots__ = ("matrix",)

    def __init__(self, g: GroupElt2) -> None:
        lead = next(e for e in g.entries if not e.is_zero())
        self.matrix = g if lead == 1 else g.scaled(lead.inverse())

    @classmethod
    def of(cls, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> "ProjMat2":
        return cls(GroupElt2.of(a, b, c, d))

    @property
    def entries(self) -> tuple[CycNum, ...]:
        return self.matrix.entries

    def __mul__(self, other: "ProjMat2") -> "ProjMat2":
        return ProjMat2(self.matrix * other.matrix)

    def inverse(self) -> "ProjMat2":
        return ProjMat2(self.matrix.inverse())

    def __pow__(self, k: int) -> "ProjMat2":
        result = ProjMat2(GroupElt2.identity())
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjMat2):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def is_identity(self) -> bool:
        return self == ProjMat2(GroupElt2.identity())

    def __repr__(self) -> str:
        return f"ProjMat2{tuple(str(e) for e in self.entries)}"

    def to_json(self) -> list[str]:
        return [str(e) for e in self.entries]


def _as_proj(g: ProjMat2 | GroupElt2) -> ProjMat2:
    return g if isinstance(g, ProjMat2) else ProjMat2(g)


def closure(gens: Iterable[ProjMat2 | GroupElt2], cap: int) -> list[ProjMat2]:
    """Breadth-first closure of the generators under multiplication."""
    if cap < 1:
        raise ValueError("cap must be positive")
    gens = [_as_proj(g) for g in gens]
    identity = ProjMat2(GroupElt2.identity())
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        h = queue.popleft()
        for g in gens:
            prod = h * g
            if prod not in seen:
                seen.add(prod)
                order.append(prod)
                if len(order) > cap:
                    raise CapExceeded(f"more than {cap} elements", cap=cap)
                queue.append(prod)
    return order


def linear_closure(gens: Iterable[GroupElt2], cap: int) -> list[GroupElt2]:
    """Closure of matrices themselves (no projectivization), e.g. det-1 lifts."""
    gens = list(gens)
    identity = GroupElt2.identity()
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        h = queue.popleft()
        for g in gens:
            prod = h * g
            if prod not in seen:
                seen.add(prod)
                order.append(prod)
                if len(order) > cap:
                    raise CapExceeded(f"more than {cap} elements", cap=cap)
                queue.append(prod)
    return order


# ---------------------------------------------------------------------------
# invariant forms and generators


def phi6() -> BinaryForm:
    return BinaryForm([0, 1, 0, 0, 0, -1, 0])


def _xy_times(c10: int, c5: int, c0: int) -> BinaryForm:
    """xy (c10 x^10 + c5 x^5 y^5 + c0 y^10)."""
    cs = [0] * 13
    cs[1], cs[6], cs[11] = c10, c5, c0
    return BinaryForm(cs)


# Invariant of the icosahedral pair below.  The variant with +11 and +y^10
# (PHI12_AS_PRINTED) is not fixed by T.
PHI12 = _xy_times(1, -11, -1)
PHI12_AS_PRINTED = _xy_times(1, 11, 1)


def octahedral_generators(conductor: int = 4) -> list[ProjMat2]:
    i = zeta(4).embed(conductor) if conductor != 4 else zeta(4)
    return [ProjMat2.of(i, 0, 0, 1), ProjMat2.of(1, 1, 1, -1), ProjMat2.of(0, 1, 1, 0)]


def icosahedral_generators(conductor: int = 5) -> list[GroupElt2]:
    """Determinant-one lifts S, T of the standard icosahedral pair."""
    z = [zeta(5, k).embed(conductor) for k in range(5)]
    s5 = sqrt5(conductor)
    s = GroupElt2(z[3], as_cyc(0, conductor), as_cyc(0, conductor), z[2], True)
    a = (z[1] - z[4]) / s5
    b = (z[2] - z[3]) / s5
    t = GroupElt2(a, b, b, -a, True)
    return [s, t]


def stabilizes_form(g: ProjMat2 | GroupElt2, phi: BinaryForm) -> bool:
    m = g.matrix if isinstance(g, ProjMat2) else g
    return proj_eq(act(m, phi), phi)


def stabilizes_pointed(g: GroupElt2, upsilon: tuple[BinaryForm, Scalar]) -> bool:
    """The point (phi, c) of P(M_d + M_0) is fixed; with c != 0 this pins the scalar."""
    if not g.det_normalized:
        raise NotDetNormalized("pointed stabilizer check needs a det-1 representative")
    form, c = upsilon
    image = act(g, form)
    c = as_cyc(c)
    if c.is_zero():
        return proj_eq(image, form)
    return image == form


@dataclass(frozen=True)
class SubgroupSpec:
    """A named subgroup given by generators; one-parameter groups carry one sample member."""

    name: str
    generators: tuple[ProjMat2, ...]

    @classmethod
    def octahedral(cls, conductor: int = 4) -> "SubgroupSpec":
        return cls("Oct", tuple(octahedral_generators(conductor)))

    @classmethod
    def icosahedral(cls, conductor: int = 5) -> "SubgroupSpec":
        return cls("Icos", tuple(ProjMat2(g) for g in icosahedral_generators(conductor)))

    @classmethod
    def unipotent(cls, u: Scalar = 1) -> "SubgroupSpec":
        return cls(f"U2({u})", (ProjMat2.of(1, u, 0, 1),))

    @classmethod
    def torus(cls, t: Scalar) -> "SubgroupSpec":
        return cls(f"T2({t})", (ProjMat2.of(t, 0, 0, 1),))

    @classmethod
    def borel(cls) -> "SubgroupSpec":
        return cls("B2", (ProjMat2.of(2, 0, 0, 1), ProjMat2.of(1, 1, 0, 1)))

    @classmethod
    def mu4(cls, conductor: int = 4) -> "SubgroupSpec":
        return cls("Mu4", (ProjMat2.of(zeta(4).embed(conductor), 0, 0, 1),))

    def to_json(self) -> dict:
        return {"name": self.name, "generators": [g.to_json() for g in self.generators]}


# ---------------------------------------------------------------------------
# curves


# more samples than twice the degree: two distinct quintics meet in at most 10 points
_SAMPLES = [(1, k) for k in range(10)] + [(0, 1)]


def preserves_curve(g: ProjMat2 | GroupElt2, z: ParamCurve) -> bool:
    m = g.matrix if isinstance(g, ProjMat2) else g
    for t0, t1 in _SAMPLES:
        if not contains_point(z, act(m, z.point(t0, t1))):
            return False
    return True


def _generic_sextic(z: ParamCurve) -> MultiPoly:
    xy = ("x", "y")
    total = MultiPoly(())
    for k, f in enumerate(z.coeff_forms):
        mono = MultiPoly(xy, {(6 - k, k): 1})
        total = total + f.to_multipoly(("t0", "t1")) * mono
    return total


def family_preserves(entries: Sequence[MultiPoly | Scalar], z: ParamCurve) -> bool:
    """Symbolic check that every member of a matrix family preserves Z.

    `entries` are polynomials in free family parameters; the image of the
    generic point Z(t0 : t1) must satisfy the equations of Z identically.
    """
    coords = act_symbolic(entries, _generic_sextic(z), ("x", "y"))
    return contains_symbolic(z, coords)


@dataclass(frozen=True)
class AutDescriptor:
    label: str
    group: str
    generators: dict
    evidence: dict
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"label": self.label, "group": self.group, "generators": self.generators,
                "evidence": self.evidence, "notes": list(self.notes)}


def special_aut_group(label: str, u: Scalar | None = None, conductor: int = DEFAULT_CONDUCTOR) -> AutDescriptor:
    key = normalize_label(label)
    lam = MultiPoly.var("lam")
    if key == "MU":
        z = build_z("MU")
        borel = {"torus diag(lam, 1)": [lam, 0, 0, 1], "unipotent (1 lam; 0 1)": [1, lam, 0, 1]}
        evidence = {name: family_preserves(e, z) for name, e in borel.items()}
        samples = [ProjMat2.of(2, 0, 0, 1), ProjMat2.of(1, 3, 0, 1)]
        evidence["sampled"] = all(preserves_curve(g, z) for g in samples)
        return AutDescriptor("MU", "PGL2", {"borel": list(borel)}, evidence,
                             ("the Borel subgroup is verified; the full PGL2 is a known result recorded here",))
    if key == "A":
        z = build_z("A")
        i = zeta(4).embed(conductor)
        tau = ProjMat2.of(i, 0, 0, 1)
        finite = closure([tau], 16)
        sampled = {str(s): preserves_curve(ProjMat2.of(1, s, 0, 1), z) for s in (1, 2, 3)}
        return AutDescriptor(
            "A", "G_a x| mu_4",
            {"unipotent": "(1 s; 0 1)", "tau": tau.to_json()},
            {
                "unipotent_family_symbolic": family_preserves([1, lam, 0, 1], z),
                "unipotent_sampled": sampled,
                "tau_preserves": preserves_curve(tau, z),
                "finite_part_order": len(finite),
            },
        )
    uu = check_u(u)
    z = build_z("M", uu)
    sampled = {str(t): preserves_curve(ProjMat2.of(t, 0, 0, 1), z) for t in (2, 3, 5)}
    return AutDescriptor(
        z.label, "G_m x| mu_2",
        {"torus": "diag(t, 1)"},
        {"torus_family_symbolic": family_preserves([lam, 0, 0, 1], z), "torus_sampled": sampled},
        ("extra involution: known from the literature, not verified here",),
    )
