"""Textual expressions for scalars, forms and matrices.

Grammar: integers, ``a/b``, ``z`` (zeta_n of the ambient conductor),
variables, ``+ - * ^`` and parentheses.  Python's own ``ast`` module does
the tokenizing and precedence; we only walk a whitelisted node set.
"""

from __future__ import annotations

import ast
import re
from typing import Sequence

from .errors import ParseError
from .exactfield import CycNum
from .polyalg import BinaryForm, GroupElt2, MultiPoly

VARIABLES = frozenset(
    ["x", "y", "s", "t", "u", "s1", "s2", "t0", "t1", "c0", "c1", "c2"] + [f"x{i}" for i in range(5)]
)


def parse_expr(text: str, conductor: int) -> MultiPoly:
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _walk(tree.body, conductor, text)


def _walk(node: ast.AST, n: int, text: str) -> MultiPoly:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return MultiPoly.const(node.value)
    if isinstance(node, ast.Name):
        if node.id == "z":
            return MultiPoly.const(CycNum.zeta(n))
        if node.id in VARIABLES:
            return MultiPoly.var(node.id)
        raise ParseError(f"unknown symbol {node.id!r} in {text!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _walk(node.operand, n, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        left = _walk(node.left, n, text)
        if isinstance(node.op, ast.Pow):
            right = _walk(node.right, n, text)
            try:
                e = right.constant_value().to_fraction()
            except ValueError:
                raise ParseError(f"exponent must be an integer in {text!r}") from None
            if e.denominator != 1:
                raise ParseError(f"exponent must be an integer in {text!r}")
            k = int(e)
            if k < 0:
                try:
                    base = left.constant_value()
                except ValueError:
                    raise ParseError("negative powers only for scalars") from None
                return MultiPoly.const(base ** k)
            return left ** k
        right = _walk(node.right, n, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            try:
                d = right.constant_value()
            except ValueError:
                raise ParseError(f"division only by scalars in {text!r}") from None
            if d.is_zero():
                raise ParseError(f"division by zero in {text!r}")
            return left * d.inverse()
    raise ParseError(f"unsupported syntax in {text!r}")


def parse_scalar(text: str, conductor: int) -> CycNum:
    p = parse_expr(text, conductor)
    if p.used_variables():
        raise ParseError(f"{text!r} is not a scalar")
    c = p.constant_value()
    if conductor % c.conductor == 0:
        return c.embed(conductor)
    return c


def parse_binary_form(text: str, conductor: int, names: Sequence[str] = ("x", "y")) -> BinaryForm:
    p = parse_expr(text, conductor)
    extra = set(p.used_variables()) - set(names)
    if extra:
        raise ParseError(f"unexpected variables {sorted(extra)} in binary form {text!r}")
    if not p.is_homogeneous():
        raise ParseError(f"{text!r} is not homogeneous")
    return BinaryForm.from_multipoly(p.with_variables(tuple(names)), names)


def parse_ternary(text: str, conductor: int, names: Sequence[str] = ("c0", "c1", "c2")) -> MultiPoly:
    p = parse_expr(text, conductor)
    extra = set(p.used_variables()) - set(names)
    if extra:
        raise ParseError(f"unexpected variables {sorted(extra)} in {text!r}")
    if not p.is_homogeneous() or p.is_zero():
        raise ParseError(f"{text!r} is not a nonzero homogeneous form")
    return p.with_variables(tuple(names))


def split_list(text: str) -> list[str]:
    """Split on ':' ',' or ';' at top level (no nesting inside parentheses)."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ":,;" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_point(text: str, conductor: int, length: int) -> list[CycNum]:
    parts = split_list(text)
    if len(parts) != length:
        raise ParseError(f"expected {length} coordinates in {text!r}")
    return [parse_scalar(p, conductor) for p in parts]


def parse_matrix2(text: str, conductor: int, det_normalized: bool = False) -> GroupElt2:
    """A 2x2 matrix written 'a,b;c,d' (row-major)."""
    a, b, c, d = parse_point(text, conductor, 4)
    try:
        return GroupElt2(a, b, c, d, det_normalized)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_square_matrix(text: str, conductor: int, size: int) -> list[list[CycNum]]:
    """Rows separated by ';', entries by ','."""
    rows = [r for r in re.split(r";", text) if r.strip()]
    if len(rows) != size:
        raise ParseError(f"expected {size} rows")
    out = []
    for r in rows:
        entries = [e.strip() for e in r.split(",")]
        if len(entries) != size:
            raise ParseError(f"expected {size} entries per row")
        out.append([parse_scalar(e, conductor) for e in entries])
    return out
