"""Sparse multivariate polynomials over CycNum with named variables."""

from __future__ import annotations

from typing import Mapping, Sequence

from ..exactfield import CycNum, Scalar, as_cyc

Exponent = tuple[int, ...]


class MultiPoly:
    """A polynomial as a map from exponent vectors to nonzero coefficients.

    Variables are an ordered tuple of names.  Binary operations between
    polynomials over different variable lists work on the ordered union.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Scalar] | None = None) -> None:
        self.variables: tuple[str, ...] = tuple(variables)
        clean: dict[Exponent, CycNum] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.variables):
                raise ValueError("exponent length does not match variables")
            c = as_cyc(c)
            if not c.is_zero():
                clean[tuple(e)] = c
        self.terms = clean

    # constructors -------------------------------------------------------
    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MultiPoly":
        vs = tuple(variables) if variables else (name,)
        e = tuple(1 if v == name else 0 for v in vs)
        return cls(vs, {e: 1})

    @classmethod
    def const(cls, c: Scalar, variables: Sequence[str] = ()) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    # alignment ----------------------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        idx = []
        for v in self.variables:
            if v not in variables:
                if any(e[self.variables.index(v)] for e in self.terms):
                    raise ValueError(f"variable {v} missing from target list")
                idx.append(None)
            else:
                idx.append(variables.index(v))
        out: dict[Exponent, CycNum] = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for k, i in zip(e, idx):
                if i is not None:
                    ne[i] = k
            out[tuple(ne)] = c
        res = MultiPoly.__new__(MultiPoly)
        res.variables, res.terms = variables, out
        return res

    def _align(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        if self.variables == other.variables:
            return self, other
        merged = list(self.variables)
        for v in other.variables:
            if v not in merged:
                merged.append(v)
        return self.with_variables(merged), other.with_variables(merged)

    def _lift(self, other: object) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, CycNum)) or hasattr(other, "numerator"):
            return MultiPoly.const(other, self.variables)  # type: ignore[arg-type]
        return NotImplemented  # type: ignore[return-value]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._align(o)
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        res = MultiPoly.__new__(MultiPoly)
        res.variables, res.terms = a.variables, out
        return res

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly.__new__(MultiPoly)
        res.variables, res.terms = self.variables, {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: object) -> "MultiPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, CycNum)) or hasattr(other, "numerator"):
                c = as_cyc(other)  # type: ignore[arg-type]
                if c.is_zero():
                    return MultiPoly(self.variables)
                res = MultiPoly.__new__(MultiPoly)
                res.variables, res.terms = self.variables, {e: v * c for e, v in self.terms.items()}
                return res
            return NotImplemented
        a, b = self._align(other)
        out: dict[Exponent, CycNum] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return MultiPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        result = MultiPoly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, CycNum)) or hasattr(other, "numerator"):
            other = MultiPoly.const(other, self.variables)  # type: ignore[arg-type]
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms))

    def constant_value(self) -> CycNum:
        """The value of a constant polynomial."""
        if any(any(e) for e in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.variables), as_cyc(0))

    # evaluation and substitution ---------------------------------------
    def evaluate(self, values: Mapping[str, Scalar]) -> CycNum:
        acc: CycNum = as_cyc(0)
        vals = [as_cyc(values[v]) if v in values else None for v in self.variables]
        for e, c in self.terms.items():
            term = c
            for k, val in zip(e, vals):
                if k:
                    if val is None:
                        raise KeyError("missing value for a used variable")
                    term = term * val ** k
            acc = acc + term
        return acc

    def subs(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Simultaneous substitution of polynomials (or scalars) for variables."""
        keep = [v for v in self.variables if v not in mapping]
        images: dict[str, MultiPoly] = {}
        for v in self.variables:
            if v in mapping:
                img = mapping[v]
                images[v] = img if isinstance(img, MultiPoly) else MultiPoly.const(img, ())
            else:
                images[v] = MultiPoly.var(v)
        cache: dict[tuple[str, int], MultiPoly] = {}

        def power(v: str, k: int) -> MultiPoly:
            key = (v, k)
            if key not in cache:
                cache[key] = images[v] ** k
            return cache[key]

        result = MultiPoly(keep)
        for e, c in self.terms.items():
            term = MultiPoly.const(c, ())
            for v, k in zip(self.variables, e):
                if k:
                    term = term * power(v, k)
            result = result + term
        return result

    def diff(self, name: str) -> "MultiPoly":
        if name not in self.variables:
            return MultiPoly(self.variables)
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(self.variables, out)

    def coefficients_in(self, names: Sequence[str]) -> dict[Exponent, "MultiPoly"]:
        """Collect by the monomials in `names`; coefficients live in the other variables."""
        names = tuple(names)
        rest = tuple(v for v in self.variables if v not in names)
        idx_n = [self.variables.index(v) if v in self.variables else None for v in names]
        idx_r = [self.variables.index(v) for v in rest]
        out: dict[Exponent, dict[Exponent, CycNum]] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] if i is not None else 0 for i in idx_n)
            out.setdefault(key, {})[tuple(e[i] for i in idx_r)] = c
        return {k: MultiPoly(rest, v) for k, v in out.items()}

    def normalized(self) -> "MultiPoly":
        """Scale so the coefficient of the largest exponent (lex order) is 1."""
        if not self.terms:
            return self
        lead = max(self.terms)
        return self * self.terms[lead].inverse()

    def proj_eq(self, other: "MultiPoly") -> bool:
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            return a.is_zero() and b.is_zero()
        return a.normalized() == b.normalized()

    # display ------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            neg = not c.is_rational() and str(c).startswith("-")
            if neg:
                c = -c
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.variables, e) if k
            )
            cs = str(c)
            if not mono:
                parts.append(cs if c.is_rational() else f"({cs})")
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif c.is_rational():
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
            if neg:
                parts[-1] = "-" + parts[-1]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {str(self)!r})"


def poly_vars(*names: str) -> list[MultiPoly]:
    """Convenience: the coordinate polynomials for the given variable names."""
    return [MultiPoly.var(n, names) for n in names]
