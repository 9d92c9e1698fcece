"""Command line interface.

Subcommands: lct, newton, normalize, bound, bracket, family, milnor,
check-nnd.  Results go to stdout as text (default) or JSON (--format
json); rationals in JSON are {"num": ..., "den": ...} in lowest terms.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 engine failure
(irrational factor, iteration cap, non-finite multiplicity, no bracket).

Passing "-" instead of an expression switches to batch mode: one
expression per line on stdin, one JSON object per line on stdout, lines
processed independently.  LCTKIT_MAX_BITS caps coefficient sizes during
expression expansion (default 10^6 bits).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from lctkit.engine import lct, lct_bracket, lct_product_sum, normalize, weight_bound
from lctkit.errors import (
    DomainError,
    InexactTruncationError,
    LctkitError,
    NonFiniteMultiplicityError,
    NormalizationError,
    ParseError,
)
from lctkit.expr import DEFAULT_MAX_BITS, parse
from lctkit.milnor import milnor_number
from lctkit.newton import diagonal_data, newton_polygon
from lctkit.poly import WeightVector
from lctkit.svgplot import polygon_svg
from lctkit.whfactor import is_newton_nondegenerate

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_ENGINE = 4


def _frac(value: Fraction) -> dict:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def _var_name(i: int, n: int) -> str:
    return ("x", "y")[i] if n <= 2 else f"x{i + 1}"


def _facet_json(facet) -> dict:
    out = {
        "normal": list(facet.normal.entries),
        "endpoints": [list(v) for v in facet.vertices],
    }
    if facet.ray is not None:
        out["ray"] = list(facet.ray)
    return out


def _steps_json(steps, n: int) -> list:
    return [
        {
            "target": _var_name(s.target, n),
            "source": _var_name(s.source, n),
            "exponent": s.exponent,
            "coeff": _frac(s.coeff),
        }
        for s in steps
    ]


def _max_bits() -> int:
    raw = os.environ.get("LCTKIT_MAX_BITS", "")
    if not raw:
        return DEFAULT_MAX_BITS
    try:
        bits = int(raw)
        if bits < 1:
            raise ValueError
    except ValueError:
        raise ParseError(f"LCTKIT_MAX_BITS must be a positive integer, got {raw!r}")
    return bits


# -- command implementations: each returns (json_payload, text) ---------------


def _cmd_lct(args, expr_text):
    f = parse(expr_text, max_bits=_max_bits())
    result = lct(
        f,
        max_iter=args.max_iter,
        trunc_degree=args.trunc,
        bracket_degree=args.bracket_degree,
    )
    cert = result.certificate
    payload = {
        "status": result.status,
        "value": _frac(result.value),
        "c": _frac(result.c),
        "clause": cert.clause,
        "steps": _steps_json(cert.steps, f.n),
    }
    if cert.facet is not None:
        payload["facet"] = _facet_json(cert.facet)
    if result.bracket is not None:
        payload["bracket"] = {
            "lo": _frac(result.bracket[0]),
            "hi": _frac(result.bracket[1]),
        }
    label = "lct" if result.status == "exact" else "lct <="
    text = f"{label} {result.value} ({result.status}, clause {cert.clause})"
    if result.bracket is not None:
        text += f"; bracket [{result.bracket[0]}, {result.bracket[1]}]"
    return payload, text


def _cmd_newton(args, expr_text):
    f = parse(expr_text, max_bits=_max_bits())
    polygon = newton_polygon(f)
    dd = diagonal_data(polygon)
    payload = {
        "vertices": [list(v) for v in polygon.vertices],
        "facets": [_facet_json(facet) for facet in polygon.facets],
        "c": _frac(dd.c),
        "is_corner": dd.is_corner,
    }
    if args.plot:
        with open(args.plot, "w", encoding="utf-8") as handle:
            handle.write(polygon_svg(polygon, title=expr_text))
        payload["plot"] = args.plot
    verts = " ".join(f"({x},{y})" for x, y in polygon.vertices)
    text = f"vertices {verts}; distance c = {dd.c}"
    if args.plot:
        text += f"; plot written to {args.plot}"
    return payload, text


def _cmd_normalize(args, expr_text):
    f = parse(expr_text, max_bits=_max_bits())
    g, trail = normalize(f, max_iter=args.max_iter, trunc_degree=args.trunc)
    payload = {
        "normalised": str(g),
        "steps": _steps_json(trail.steps, f.n),
        "vertices": [list(v) for v in newton_polygon(g).vertices],
    }
    if trail.trunc_degree is not None:
        payload["trunc_degree"] = trail.trunc_degree
    text = f"normalised: {g} ({len(trail.steps)} substitution(s))"
    return payload, text


def _cmd_bound(args, expr_text):
    f = parse(expr_text, max_bits=_max_bits())
    try:
        weights = [Fraction(w) for w in args.weights.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad weight list {args.weights!r}")
    if len(weights) != f.n:
        raise DomainError(
            f"expression has {f.n} variables but {len(weights)} weights given"
        )
    value = weight_bound(f, WeightVector(weights))
    return {"status": "upper-bound", "value": _frac(value)}, f"lct <= {value}"


def _cmd_bracket(args, expr_text):
    f = parse(expr_text, max_bits=_max_bits())
    lo, hi = lct_bracket(f, args.degree)
    payload = {
        "status": "bracket",
        "bracket": {"lo": _frac(lo), "hi": _frac(hi)},
        "degree": args.degree,
    }
    return payload, f"lct in [{lo}, {hi}] (truncation degree {args.degree})"


def _cmd_family(args, _expr_text):
    try:
        a = [int(v) for v in args.a.split(",")]
        b = [int(v) for v in args.b.split(",")]
    except ValueError:
        raise ParseError(f"bad exponent list: --a {args.a!r} --b {args.b!r}")
    value = lct_product_sum(a, b)
    return {"status": "exact", "value": _frac(value)}, f"lct = {value}"


def _cmd_milnor(args, expr_text):
    f = parse(expr_text, max_bits=_max_bits())
    mu = milnor_number(f)
    return {"milnor": mu}, f"milnor number = {mu}"


def _cmd_check_nnd(args, expr_text):
    f = parse(expr_text, max_bits=_max_bits())
    flag = is_newton_nondegenerate(f)
    return {"nondegenerate": flag}, (
        "Newton non-degenerate" if flag else "Newton degenerate"
    )


_HANDLERS = {
    "lct": _cmd_lct,
    "newton": _cmd_newton,
    "normalize": _cmd_normalize,
    "bound": _cmd_bound,
    "bracket": _cmd_bracket,
    "family": _cmd_family,
    "milnor": _cmd_milnor,
    "check-nnd": _cmd_check_nnd,
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lctkit",
        description="Exact log canonical thresholds from Newton polygons.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def with_common(p, expr=True):
        if expr:
            p.add_argument("expr", help="polynomial expression, or '-' for batch stdin")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", dest="format"
        )
        return p

    p = with_common(sub.add_parser("lct", help="log canonical threshold"))
    p.add_argument("--max-iter", type=int, default=64, dest="max_iter")
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--bracket-degree", type=int, default=None, dest="bracket_degree")

    p = with_common(sub.add_parser("newton", help="Newton polygon and distance"))
    p.add_argument("--plot", metavar="FILE.svg", default=None)

    p = with_common(sub.add_parser("normalize", help="normalising coordinate change"))
    p.add_argument("--max-iter", type=int, default=64, dest="max_iter")
    p.add_argument("--trunc", type=int, default=None)

    p = with_common(sub.add_parser("bound", help="weighted upper bound"))
    p.add_argument("--weights", required=True, help="comma separated, e.g. 3,1")

    p = with_common(sub.add_parser("bracket", help="truncation bracket"))
    p.add_argument("--degree", type=int, required=True)

    p = with_common(sub.add_parser("family", help="product-sum closed form"), expr=False)
    p.add_argument("--a", required=True, help="comma separated non-negative integers")
    p.add_argument("--b", required=True, help="comma separated positive integers")

    with_common(sub.add_parser("milnor", help="local Milnor number"))
    with_common(sub.add_parser("check-nnd", help="Newton non-degeneracy"))
    return top


def _exit_code_for(err: Exception) -> int:
    if isinstance(err, ParseError):
        return EXIT_PARSE
    if isinstance(
        err, (NormalizationError, NonFiniteMultiplicityError, InexactTruncationError)
    ):
        return EXIT_ENGINE
    if isinstance(err, (DomainError, ValueError)):
        return EXIT_DOMAIN
    raise err


def _run_single(args, expr_text) -> tuple[int, str]:
    payload, text = _HANDLERS[args.command](args, expr_text)
    return EXIT_OK, json.dumps(payload) if args.format == "json" else text


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    expr_text = getattr(args, "expr", None)

    if expr_text == "-":  # batch: one expression per line, JSON lines out
        worst = EXIT_OK
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            try:
                payload, _ = _HANDLERS[args.command](args, line)
            except LctkitError as err:
                code = _exit_code_for(err)
                payload = {"error": str(err), "exit_code": code}
                worst = max(worst, code)
            print(json.dumps(payload))
        return worst

    try:
        code, output = _run_single(args, expr_text)
    except (LctkitError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return _exit_code_for(err)
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
