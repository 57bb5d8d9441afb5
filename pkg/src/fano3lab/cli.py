"""Command-line front end.

Every invocation prints a single JSON document ``{verb, inputs, result}`` or
``{verb, inputs, error}``.  Exit codes: 0 success, 1 domain error, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import autgrp, fanodb, linalgeom, planecurves, quintics, v5
from .errors import Fano3LabError, ParseError
from .exactfield import DEFAULT_CONDUCTOR, CycNum
from .parse import parse_binary_form, parse_matrix2, parse_point, parse_scalar, parse_square_matrix, parse_ternary

ENV_CONDUCTOR = "FANO3LAB_CONDUCTOR"

# flags that are not echoed under "inputs"
_INTERNAL = {"verb", "action", "handler", "format"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def jsonable(obj: Any) -> Any:
    if isinstance(obj, (str, bool, int)) or obj is None:
        return obj
    if obj is quintics.INFINITE:
        return "Infinite"
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    return str(obj)


def default_conductor() -> int:
    raw = os.environ.get(ENV_CONDUCTOR)
    if raw is None:
        return DEFAULT_CONDUCTOR
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{ENV_CONDUCTOR} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"{ENV_CONDUCTOR} must be a positive integer, got {raw!r}")
    return n


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


# ---------------------------------------------------------------------------
# handlers: each takes the parsed namespace and returns a JSON-able result


def _u(args: argparse.Namespace) -> CycNum | None:
    return None if args.u is None else parse_scalar(args.u, args.conductor)


def _label(args: argparse.Namespace) -> str:
    return args.case.upper()


def h_classify_point(args):
    phi = parse_binary_form(args.form, args.conductor)
    p = v5.classify_point(phi, args.conductor)
    out = p.to_json()
    if isinstance(p, v5.PointOnY):
        out["on_tangential_scroll"] = v5.on_tangential_scroll(p)
    return out


def h_lines_through(args):
    phi = parse_binary_form(args.point, args.conductor)
    p = v5.classify_point(phi, args.conductor)
    if isinstance(p, v5.NotOnY):
        return {"point": p.to_json(), "lines": [], "sigma_points": []}
    lines = v5.lines_through_point(p)
    return {
        "point": p.to_json(),
        "lines": [ln.to_json() for ln in lines],
        "sigma_points": [ln.sigma_point.to_str() for ln in lines],
    }


def h_line_intersect(args):
    l1 = v5.line_from_sigma(parse_binary_form(args.sigma1, args.conductor), args.conductor)
    l2 = v5.line_from_sigma(parse_binary_form(args.sigma2, args.conductor), args.conductor)
    return v5.line_intersect(l1, l2, args.conductor)


def h_sigma_z(args):
    return quintics.sigma_z(_label(args), _u(args), args.conductor)


def h_sigma_x(args):
    return planecurves.sigma_x_report(_label(args), _u(args), args.conductor)


def h_incidence(args):
    label = quintics.normalize_label(_label(args))
    u = quintics.check_u(_u(args)) if label == "M" else None
    z = quintics.build_z(label, u)
    line = v5.line_from_sigma(parse_binary_form(args.sigma, args.conductor), args.conductor)
    return {"curve": z.label, "line": line, "length": quintics.incidence_length(z, line)}


def h_bisecant(args):
    return quintics.bisecant_report(_label(args), _u(args), args.conductor)


def h_imult(args):
    c1 = planecurves.PlaneCurve(parse_ternary(args.c1, args.conductor))
    c2 = planecurves.PlaneCurve(parse_ternary(args.c2, args.conductor))
    p = planecurves.PlanePoint(*parse_point(args.at, args.conductor, 3))
    return {"point": p, "multiplicity": planecurves.intersection_multiplicity(c1, c2, p, args.conductor)}


def h_closure(args):
    n = args.conductor
    if args.preset == "icos":
        lifts = autgrp.icosahedral_generators(n)
        linear = autgrp.linear_closure(lifts, args.cap)
        projective = {autgrp.ProjMat2(g) for g in linear}
        upsilon = (autgrp.PHI12.embed(n), 1)
        return {
            "preset": "icos",
            "linear_order": len(linear),
            "projective_order": len(projective),
            "all_fix_pointed_phi12": all(autgrp.stabilizes_pointed(g, upsilon) for g in linear),
        }
    if args.preset == "oct":
        gens = autgrp.octahedral_generators(n)
    else:
        if not args.gen:
            raise UsageError("closure needs --preset or at least one --gen")
        gens = [autgrp.ProjMat2(parse_matrix2(g, n)) for g in args.gen]
    elements = autgrp.closure(gens, args.cap)
    out: dict = {"order": len(elements), "elements": elements}
    if args.preset == "oct":
        out["preset"] = "oct"
        out["all_stabilize_phi6"] = all(autgrp.stabilizes_form(g, autgrp.phi6().embed(n)) for g in elements)
    return out


def h_stabilizer_check(args):
    n = args.conductor
    form = parse_binary_form(args.form, n)
    if args.pointed is None:
        g = parse_matrix2(args.matrix, n)
        return {"stabilizes": autgrp.stabilizes_form(g, form)}
    g = parse_matrix2(args.matrix, n, det_normalized=True)
    return {"stabilizes": autgrp.stabilizes_pointed(g, (form, parse_scalar(args.pointed, n)))}


def h_aut(args):
    return autgrp.special_aut_group(_label(args), _u(args), args.conductor)


def _fano_key(args) -> int:
    if args.index == 1:
        if args.genus is None:
            raise UsageError("index 1 families are keyed by --genus")
        return args.genus
    if args.degree is None:
        raise UsageError("families of index 2, 3, 4 are keyed by --degree")
    return args.degree


def h_fano(args):
    if args.action == "lookup":
        return fanodb.lookup_family(args.index, _fano_key(args))
    if args.action == "partner":
        return fanodb.index2_partner(args.genus)
    if args.action == "hilbert":
        return fanodb.hilbert_verdict(args.index, _fano_key(args))
    if args.action == "aut":
        return fanodb.aut_verdict(args.index, _fano_key(args))
    if args.action == "genus":
        return fanodb.genus_from_K3(args.K3)
    return fanodb.double_cover_data()


def h_chi_normal(args):
    return fanodb.chi_normal_bundle(args.index, args.kind, args.a)


def h_mukai(args):
    return fanodb.mukai_numerology(args.genus)


def h_fermat_cones(args):
    return fanodb.fermat_cones(args.conductor)


def _skew(text: str, n: int) -> linalgeom.SkewForm6:
    try:
        return linalgeom.SkewForm6(parse_square_matrix(text, n, 6))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _a2(args) -> tuple[linalgeom.SkewForm6, linalgeom.SkewForm6]:
    if len(args.a2) != 2:
        raise UsageError("--a2 must be given exactly twice")
    return _skew(args.a2[0], args.conductor), _skew(args.a2[1], args.conductor)


def _space(args) -> list[linalgeom.SkewForm6]:
    if len(args.a) != 5:
        raise UsageError("--a must be given exactly five times")
    return [_skew(t, args.conductor) for t in args.a]


def h_pfaffian(args):
    return {"pfaffian": linalgeom.pfaffian(_skew(args.matrix, args.conductor))}


def h_pf_line_check(args):
    return linalgeom.pencil_is_line_on_Y(linalgeom.PfaffianLineDatum(_a2(args)), _space(args))


def h_pf_recover_w4(args):
    return linalgeom.recover_W4(_a2(args))


def h_pf_conic(args):
    datum = linalgeom.PfaffianLineDatum(_a2(args))
    if args.w4 is not None:
        rows = [parse_point(r, args.conductor, 6) for r in args.w4.split(";") if r.strip()]
        datum = datum.with_w4(rows)
    return linalgeom.conic_from_line(datum, _space(args), args.conductor)


def h_pencil_disc(args):
    q1 = parse_square_matrix(args.q1, args.conductor, 6)
    q2 = parse_square_matrix(args.q2, args.conductor, 6)
    try:
        return linalgeom.pencil_discriminant(q1, q2, args.conductor)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# parser


def _common(conductor: int) -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--conductor", type=_positive, default=conductor,
                   help=f"ambient cyclotomic conductor (default {conductor}; env {ENV_CONDUCTOR})")
    p.add_argument("--format", choices=("json", "text"), default="json")
    return p


def _case(p: argparse.ArgumentParser) -> None:
    p.add_argument("--case", required=True, type=str.lower, choices=("mu", "a", "m"))
    p.add_argument("--u", help="parameter of the M(u) family")


def build_parser(conductor: int | None = None) -> argparse.ArgumentParser:
    common = _common(conductor if conductor is not None else DEFAULT_CONDUCTOR)
    parser = _Parser(prog="fano3lab", description="Exact computations on Fano threefolds of Picard rank one.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = verb("classify-point", h_classify_point, "orbit of a sextic form on the quintic del Pezzo threefold")
    p.add_argument("--form", required=True)
    p = verb("lines-through", h_lines_through, "lines through a point of the quintic del Pezzo threefold")
    p.add_argument("--point", required=True)
    p = verb("line-intersect", h_line_intersect, "intersection of two lines given by their quadratic labels")
    p.add_argument("--sigma1", required=True)
    p.add_argument("--sigma2", required=True)
    p = verb("sigma-z", h_sigma_z, "plane quintic of lines meeting a special rational quintic")
    _case(p)
    p = verb("sigma-x", h_sigma_x, "lines on a special genus 12 threefold")
    _case(p)
    p = verb("incidence", h_incidence, "length of the intersection of a special quintic with a line")
    _case(p)
    p.add_argument("--sigma", required=True)
    p = verb("bisecant", h_bisecant, "the distinguished bisecant line of a special quintic")
    _case(p)
    p = verb("imult", h_imult, "intersection multiplicity of two plane curves at a point")
    p.add_argument("--c1", "--curve1", dest="c1", required=True)
    p.add_argument("--c2", "--curve2", dest="c2", required=True)
    p.add_argument("--at", "--point", dest="at", required=True, help="point 'a:b:c'")
    p = verb("closure", h_closure, "closure of matrices in PGL2")
    p.add_argument("--preset", choices=("oct", "icos"))
    p.add_argument("--gen", action="append", help="generator 'a,b;c,d' (repeatable)")
    p.add_argument("--cap", type=_positive, default=1000)
    p = verb("stabilizer-check", h_stabilizer_check, "does a matrix fix a form (or a pointed form)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--pointed", help="scalar c of the pointed form (phi, c); requires a det-1 matrix")
    p = verb("aut", h_aut, "automorphism evidence for a special genus 12 threefold")
    _case(p)

    fano = sub.add_parser("fano", help="classification tables")
    fano_sub = fano.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for action in ("lookup", "hilbert", "aut"):
        fp = fano_sub.add_parser(action, parents=[common])
        fp.add_argument("--index", type=int, required=True)
        fp.add_argument("--genus", type=int)
        fp.add_argument("--degree", type=int)
    fp = fano_sub.add_parser("partner", parents=[common])
    fp.add_argument("--genus", type=int, required=True)
    fp = fano_sub.add_parser("genus", parents=[common])
    fp.add_argument("--K3", type=int, required=True)
    fano_sub.add_parser("double-covers", parents=[common])
    fano.set_defaults(handler=h_fano)

    p = verb("chi-normal", h_chi_normal, "Euler characteristic of a normal bundle")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--kind", required=True,
                   choices=("line", "conic", "smooth-conic", "reducible-conic", "non-reduced-conic"))
    p.add_argument("--a", type=int, default=0)
    p = verb("mukai", h_mukai, "numerical data of the Mukai bundle")
    p.add_argument("--genus", type=int, required=True)
    verb("fermat-cones", h_fermat_cones, "cones among hyperplane sections of the Fermat quartic")

    p = verb("pfaffian", h_pfaffian, "Pfaffian of a 6x6 skew matrix")
    p.add_argument("--matrix", required=True, help="rows separated by ';', entries by ','")
    p = verb("pf-line-check", h_pf_line_check, "is a pencil of skew forms a line in the Pfaffian cubic")
    p.add_argument("--a2", action="append", default=[], required=True)
    p.add_argument("--a", action="append", default=[], required=True)
    p = verb("pf-recover-w4", h_pf_recover_w4, "common isotropic 4-space of a pencil")
    p.add_argument("--a2", action="append", default=[], required=True)
    p = verb("pf-conic", h_pf_conic, "conic attached to a Pfaffian line")
    p.add_argument("--a2", action="append", default=[], required=True)
    p.add_argument("--a", action="append", default=[], required=True)
    p.add_argument("--w4", help="basis rows of W4 separated by ';'")
    p = verb("pencil-disc", h_pencil_disc, "degenerate members of a pencil of quadrics")
    p.add_argument("--q1", required=True)
    p.add_argument("--q2", required=True)
    return parser


def _inputs(args: argparse.Namespace) -> dict:
    return {k: v for k, v in vars(args).items() if k not in _INTERNAL and v is not None}


def argv_from_output(doc: dict) -> list[str]:
    """Rebuild an argument vector from the `verb` and `inputs` of an output document."""
    inputs = dict(doc["inputs"])
    argv = doc["verb"].split()
    for key, value in sorted(inputs.items()):
        flag = "--" + key.replace("_", "-")
        for v in value if isinstance(value, list) else [value]:
            argv += [flag, str(v)]
    return argv


def _render_text(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {v}")
        return lines
    if isinstance(value, list):
        lines = []
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}- {v}")
        return lines
    return [f"{pad}{value}"]


def _emit(doc: dict, fmt: str, stream) -> None:
    if fmt == "text":
        body = doc.get("result", doc.get("error"))
        head = doc["verb"] + (" error" if "error" in doc else "")
        stream.write("\n".join([head] + _render_text(body)) + "\n")
    else:
        stream.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def run(argv: Sequence[str] | None = None, stream=None) -> int:
    stream = stream if stream is not None else sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json"
    if "--format" in argv[:-1] and argv[argv.index("--format") + 1] == "text":
        fmt = "text"
    verb = " ".join(a for a in argv[:2] if not a.startswith("-")) or "?"
    try:
        parser = build_parser(default_conductor())
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit({"verb": verb, "inputs": {"argv": argv}, "error": {"kind": "UsageError", "message": str(exc)}},
              fmt, stream)
        return 2
    verb = args.verb + (f" {args.action}" if getattr(args, "action", None) else "")
    doc: dict = {"verb": verb, "inputs": _inputs(args)}
    code = 0
    try:
        doc["result"] = jsonable(args.handler(args))
    except (ParseError, UsageError, ValueError) as exc:
        kind = exc.kind if isinstance(exc, Fano3LabError) else type(exc).__name__
        doc["error"] = {"kind": kind, "message": str(exc)}
        code = 2
    except Fano3LabError as exc:
        doc["error"] = {"kind": exc.kind, "message": str(exc), "details": jsonable(exc.details)}
        code = 1
    _emit(doc, args.format, stream)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
