"""Command-line front end.

Subcommands: ``eval`` (one exact computation), ``spreadpoly`` (coefficient
tables and factorizations), ``example paper`` (the built-in worked example
as a golden check), ``verify`` (randomized/exhaustive identity suites with
JSON reports), and ``batch`` (a file of eval requests, one per line).

Exit codes: 0 success, 1 verification/fixture failure, 2 usage or parse
error, 3 domain error (null point, bad field, and so on).
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import affine, chromo, isometry, projective, spreadpoly, verify
from .chromo import Color
from .errors import ParseError, QuadranceError
from .field import FieldContext, make_context
from .isometry import ProjMatrix
from .projective import Form, ProjPoint

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

EVAL_GRAMMAR = """\
eval requests:
  quad      --points X1 X2 [--field F]
  pquad     (--form D:E:F | --color C) --points [X:Y] [X:Y] [--field F]
  aclassify --points IMAGE0 IMAGE1 [--field F]      -> t:<shift> | r:<shift>
  pclassify --color C --matrix A,B;C,D [--field F]  -> rho:C:[a:b] | sigma:C:[a:b]
Field descriptors: rationals (default) or fp:<odd prime>.
"""


def parse_proj_point(ctx: FieldContext, text: str) -> ProjPoint:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError(f"point literal must look like [x:y], got {text!r}")
    parts = t[1:-1].split(":")
    if len(parts) != 2:
        raise ParseError(f"point literal must have two coordinates, got {text!r}")
    x, y = (ctx.parse(p) for p in parts)
    if x == 0 and y == 0:
        raise ParseError(f"projective point needs a nonzero coordinate: {text!r}")
    return ProjPoint(x, y)


def parse_form(ctx: FieldContext, text: str) -> Form:
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    parts = t.split(":")
    if len(parts) != 3:
        raise ParseError(f"form literal must look like d:e:f, got {text!r}")
    d, e, f = (ctx.parse(p) for p in parts)
    if d == 0 and e == 0 and f == 0:
        raise ParseError(f"form needs a nonzero coefficient: {text!r}")
    return Form(d, e, f)


def parse_matrix(ctx: FieldContext, text: str) -> ProjMatrix:
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise ParseError(f"matrix literal must look like a,b;c,d, got {text!r}")
    entries = []
    for row in rows:
        cols = row.split(",")
        if len(cols) != 2:
            raise ParseError(f"matrix rows need two entries, got {text!r}")
        entries.extend(ctx.parse(c) for c in cols)
    if all(v == 0 for v in entries):
        raise ParseError(f"matrix needs a nonzero entry: {text!r}")
    return ProjMatrix(*entries)


@dataclass
class EvalRequest:
    what: str
    field: str
    form: Optional[str]
    color: Optional[str]
    points: list[str]
    matrix: Optional[str]


_EVAL_KINDS = ("quad", "pquad", "aclassify", "pclassify")
_EVAL_FLAGS = ("--field", "--form", "--color", "--points", "--matrix")


def parse_eval_request(tokens: list[str], default_field: str = "rationals") -> EvalRequest:
    if not tokens:
        raise ParseError("empty request; expected one of: " + ", ".join(_EVAL_KINDS))
    what = tokens[0]
    if what not in _EVAL_KINDS:
        raise ParseError(f"unknown eval request {what!r}; expected one of: "
                         + ", ".join(_EVAL_KINDS))
    field = default_field
    form = color = matrix = None
    points: list[str] = []
    i = 1
    while i < len(tokens):
        flag = tokens[i]
        if flag == "--points":
            i += 1
            while i < len(tokens) and tokens[i] not in _EVAL_FLAGS:
                points.append(tokens[i])
                i += 1
            continue
        if flag not in ("--field", "--form", "--color", "--matrix"):
            raise ParseError(f"unknown flag {flag!r} in eval request")
        if i + 1 >= len(tokens):
            raise ParseError(f"flag {flag} needs a value")
        value = tokens[i + 1]
        if flag == "--field":
            field = value
        elif flag == "--form":
            form = value
        elif flag == "--color":
            color = value
        else:
            matrix = value
        i += 2
    if what in ("quad", "pquad", "aclassify") and len(points) != 2:
        raise ParseError(f"{what} needs exactly two --points values")
    if what == "pquad" and (form is None) == (color is None):
        raise ParseError("pquad needs exactly one of --form or --color")
    if what == "pclassify" and (matrix is None or color is None):
        raise ParseError("pclassify needs --color and --matrix")
    return EvalRequest(what, field, form, color, points, matrix)


def _parse_color(name: str) -> Color:
    try:
        return Color(name)
    except ValueError as exc:
        raise ParseError(f"unknown color {name!r}; expected blue, red, or green") from exc


def execute_eval_request(req: EvalRequest) -> str:
    ctx = make_context(req.field)
    if req.what == "quad":
        a1, a2 = (affine.AffinePoint(ctx.parse(p)) for p in req.points)
        return ctx.format(affine.quadrance(a1, a2))
    if req.what == "pquad":
        a1, a2 = (parse_proj_point(ctx, p) for p in req.points)
        if req.color is not None:
            value = chromo.colored_quadrance(_parse_color(req.color), a1, a2)
        else:
            value = projective.p_quadrance(parse_form(ctx, req.form), a1, a2)
        return ctx.format(value)
    if req.what == "aclassify":
        a1, a2 = (affine.AffinePoint(ctx.parse(p)) for p in req.points)
        iso = affine.isometry_classify(a1, a2)
        tag = "t" if iso.parity == 1 else "r"
        return f"{tag}:{ctx.format(iso.shift)}"
    iso = isometry.classify(parse_matrix(ctx, req.matrix), _parse_color(req.color))
    return f"{iso.kind}:{iso.color}:{iso.param}"


# -- subcommand drivers -------------------------------------------------------

def cmd_eval(args) -> int:
    print(execute_eval_request(parse_eval_request(args.request)))
    return EXIT_OK


def cmd_spreadpoly(args) -> int:
    if args.n < 0:
        raise ParseError("--n must be nonnegative")
    for k in range(args.n + 1):
        print(f"S_{k}: {spreadpoly.spread_poly(k)}")
    if args.factor:
        for k in spreadpoly.divisors(args.n) if args.n >= 1 else []:
            print(f"phi_{k}: {spreadpoly.spread_cyclotomic(k)}")
    return EXIT_OK


WORKED_EXAMPLE_POINTS = ((1, 0), (2, 3), (4, -1), (3, 5))
WORKED_EXAMPLE_VALUES = {
    "q12": Fraction(9, 13),
    "q23": Fraction(196, 221),
    "q34": Fraction(529, 578),
    "q14": Fraction(25, 34),
    "q13": Fraction(1, 17),
    "q24": Fraction(1, 442),
}


def cmd_example(args) -> int:
    if args.name != "paper":
        raise ParseError(f"unknown example {args.name!r}; available: paper")
    form = chromo.colored_form(Color.BLUE)
    pts = [ProjPoint(Fraction(x), Fraction(y)) for x, y in WORKED_EXAMPLE_POINTS]
    got = {
        "q12": projective.p_quadrance(form, pts[0], pts[1]),
        "q23": projective.p_quadrance(form, pts[1], pts[2]),
        "q34": projective.p_quadrance(form, pts[2], pts[3]),
        "q14": projective.p_quadrance(form, pts[0], pts[3]),
        "q13": projective.p_quadrance(form, pts[0], pts[2]),
        "q24": projective.p_quadrance(form, pts[1], pts[3]),
    }
    check = projective.projective_quadruple_check(form, *pts)
    ok = True
    for key in ("q12", "q23", "q34", "q14", "q13", "q24"):
        match = got[key] == WORKED_EXAMPLE_VALUES[key]
        ok = ok and match
        print(f"{key} = {got[key]}" + ("" if match else f"  MISMATCH (expected {WORKED_EXAMPLE_VALUES[key]})"))
    r_ok = check.value == 0
    ok = ok and r_ok
    print(f"R(q12, q23, q34, q14) = {check.value}" + ("" if r_ok else "  MISMATCH (expected 0)"))
    f13_ok = check.q13 == WORKED_EXAMPLE_VALUES["q13"]
    f24_ok = check.q24 == WORKED_EXAMPLE_VALUES["q24"]
    ok = ok and f13_ok and f24_ok
    print(f"q13 fraction = {check.q13}" + ("" if f13_ok else "  MISMATCH"))
    print(f"q24 fraction = {check.q24}" + ("" if f24_ok else "  MISMATCH"))
    print("worked example: OK" if ok else "worked example: FAILED")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    colors = None if args.color == "all" else [args.color]
    if args.suite == "isometry" and args.color == "general":
        raise ParseError("the isometry suite covers blue, red, and green only")
    if args.trials < 1:
        raise ParseError("--trials must be positive")
    if args.primes:
        try:
            primes = [int(p) for p in args.primes.split(",") if p.strip()]
        except ValueError as exc:
            raise ParseError(f"bad prime list {args.primes!r}") from exc
        if not primes:
            raise ParseError("empty prime list")
        reports = [
            verify.run_suite(args.suite, make_context(f"fp:{p}"),
                             trials=args.trials, seed=args.seed, colors=colors)
            for p in primes
        ]
        print(json.dumps([r.to_dict() for r in reports], indent=2))
        return EXIT_OK if all(r.failed == 0 for r in reports) else EXIT_VERIFY_FAILED
    ctx = make_context(args.field)
    report = verify.run_suite(args.suite, ctx, trials=args.trials,
                              seed=args.seed, colors=colors)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.failed == 0 else EXIT_VERIFY_FAILED


def cmd_batch(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        print(f"error: FileNotFound: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    worst = EXIT_OK
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            tokens = shlex.split(stripped)
            request = parse_eval_request(tokens, default_field=args.field)
            print(execute_eval_request(request))
        except ParseError as exc:
            print(f"line {lineno}: error: ParseError: {exc}")
            worst = max(worst, EXIT_USAGE)
        except QuadranceError as exc:
            print(f"line {lineno}: error: {type(exc).__name__}: {exc}")
            worst = max(worst, EXIT_DOMAIN)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadrance",
        description="Exact one-dimensional metrical geometry toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval", help="evaluate one request exactly",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EVAL_GRAMMAR,
    )
    p_eval.add_argument("request", nargs=argparse.REMAINDER,
                        help="request: quad|pquad|aclassify|pclassify plus flags")
    p_eval.set_defaults(func=cmd_eval)

    p_poly = sub.add_parser("spreadpoly", help="print spread polynomial coefficient rows")
    p_poly.add_argument("--n", type=int, required=True, help="largest index to print")
    p_poly.add_argument("--factor", action="store_true",
                        help="also print the factors phi_k for k dividing n")
    p_poly.set_defaults(func=cmd_spreadpoly)

    p_example = sub.add_parser("example", help="run a built-in worked example")
    p_example.add_argument("name", help="example name (available: paper)")
    p_example.set_defaults(func=cmd_example)

    p_verify = sub.add_parser("verify", help="run a verification suite, print a JSON report")
    p_verify.add_argument("--suite", required=True,
                          choices=list(verify.SUITE_NAMES) + ["all"])
    p_verify.add_argument("--field", default="rationals",
                          help="rationals or fp:<p> (default: rationals)")
    p_verify.add_argument("--primes",
                          help="comma-separated primes; runs the suite over each F_p")
    p_verify.add_argument("--trials", type=int, default=1000,
                          help="random trials over the rationals (default 1000)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="random seed, echoed in the report (default 0)")
    p_verify.add_argument("--color", default="all",
                          choices=["blue", "red", "green", "general", "all"],
                          help="narrow form-based suites to one form")
    p_verify.set_defaults(func=cmd_verify)

    p_batch = sub.add_parser("batch", help="run eval requests from a file, one per line")
    p_batch.add_argument("file", help="request file")
    p_batch.add_argument("--field", default="rationals",
                         help="default field for lines without --field")
    p_batch.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadranceError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
