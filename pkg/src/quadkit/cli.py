"""Command-line harness.

Subcommands:

    check    read quadruple records, evaluate the four-point identity and
             the decomposition equality per record, report residuals
    verify   randomized exact verification of an identity expression
    bary     barycentric coordinates and point-vs-triangle classification
    gen      seeded quadruple generators (records to stdout or a file)
    fig      SVG figure for one record

Exit codes: 0 all checks passed, 1 a check failed (nonzero residual or
refuted identity), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

from . import dsl, kernels, records
from .barycentric import barycentric_of, classify
from .figure import emit_svg
from .generators import KINDS, GeneratorSpec, generate_quads
from .geometry import Point2
from .identities import (
    QuadConfig,
    area_quadruple,
    decomposition_residual,
    jacobi_residual,
    quad_signed_area,
)
from .scalar import (
    BACKENDS,
    EXACT,
    FLOAT,
    ScalarParseError,
    ToleranceSpec,
    format_scalar,
    parse_scalar,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# Every parse/validation error in the package subclasses ValueError
# (RecordError, ScalarParseError, identity syntax/type errors,
# DegenerateTriangleError); a zero denominator raises ZeroDivisionError
# and values beyond double range raise OverflowError when rendered.
_USAGE_ERRORS = (ValueError, ZeroDivisionError, OverflowError)


@contextmanager
def _open_input(path: Optional[str]) -> Iterator[TextIO]:
    if path in (None, "-"):
        yield sys.stdin
    else:
        with open(path, "r", encoding="utf-8") as handle:
            yield handle


@contextmanager
def _open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            yield handle


def _is_int_text(text: str) -> bool:
    body = text[1:] if text[:1] in "+-" else text
    return body.isdigit()


def _half_text(doubled: int) -> str:
    """Exact text of doubled/2 without constructing a Fraction."""
    if doubled % 2 == 0:
        return str(doubled // 2)
    return f"{doubled}/2"


# --- check ------------------------------------------------------------------


def _check_line_exact(strings: tuple[str, ...]) -> tuple[bool, str]:
    if all(_is_int_text(s) for s in strings):
        coords = tuple(map(int, strings))
        (
            k2_bcd, k2_acd, k2_abd, k2_abc, k2_quad,
            jx2, jy2, dec2_bd, dec2_ac,
        ) = kernels.check_quad_ints(*coords)
        passed = jx2 == 0 and jy2 == 0 and dec2_bd == 0 and dec2_ac == 0
        detail = (
            f"areas=({_half_text(k2_bcd)}, {_half_text(k2_acd)}, "
            f"{_half_text(k2_abd)}, {_half_text(k2_abc)}) "
            f"quad={_half_text(k2_quad)} "
            f"jacobi=({_half_text(jx2)}, {_half_text(jy2)}) "
            f"decomposition=({_half_text(dec2_bd)}, {_half_text(dec2_ac)})"
        )
        return passed, detail

    values = [parse_scalar(s, EXACT) for s in strings]
    q = QuadConfig(*(Point2(values[i], values[i + 1]) for i in range(0, 8, 2)))
    ks = area_quadruple(q)
    k_quad = quad_signed_area(*q.points())
    jac = jacobi_residual(q)
    dec = decomposition_residual(q)
    passed = jac.dx == 0 and jac.dy == 0 and dec[0] == 0 and dec[1] == 0
    detail = (
        f"areas=({format_scalar(ks.k_bcd)}, {format_scalar(ks.k_acd)}, "
        f"{format_scalar(ks.k_abd)}, {format_scalar(ks.k_abc)}) "
        f"quad={format_scalar(k_quad)} "
        f"jacobi=({format_scalar(jac.dx)}, {format_scalar(jac.dy)}) "
        f"decomposition=({format_scalar(dec[0])}, {format_scalar(dec[1])})"
    )
    return passed, detail


def _check_line_float(
    strings: tuple[str, ...], tolerance: ToleranceSpec
) -> tuple[bool, str]:
    coords = tuple(parse_scalar(s, FLOAT) for s in strings)
    (
        k_bcd, k_acd, k_abd, k_abc, k_quad,
        jx, jy, dec_bd, dec_ac, jac_scale, dec_scale,
    ) = kernels.check_quad_floats(*coords)
    passed = (
        tolerance.within(jx, jac_scale)
        and tolerance.within(jy, jac_scale)
        and tolerance.within(dec_bd, dec_scale)
        and tolerance.within(dec_ac, dec_scale)
    )
    detail = (
        f"areas=({format_scalar(k_bcd)}, {format_scalar(k_acd)}, "
        f"{format_scalar(k_abd)}, {format_scalar(k_abc)}) "
        f"quad={format_scalar(k_quad)} "
        f"jacobi=({format_scalar(jx)}, {format_scalar(jy)}) "
        f"decomposition=({format_scalar(dec_bd)}, {format_scalar(dec_ac)})"
    )
    return passed, detail


def cmd_check(args: argparse.Namespace) -> int:
    tolerance = ToleranceSpec(args.epsilon)
    total = 0
    failures = 0
    with _open_input(args.input) as stream, _open_output(args.output) as out:
        for lineno, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                strings = records.coordinate_strings(line)
                if args.backend == EXACT:
                    passed, detail = _check_line_exact(strings)
                else:
                    passed, detail = _check_line_float(strings, tolerance)
            except (records.RecordError, ScalarParseError,
                    ZeroDivisionError) as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                return EXIT_USAGE
            total += 1
            status = "ok" if passed else "FAIL"
            out.write(f"line {lineno}: {detail} {status}\n")
            if not passed:
                failures += 1
        if failures:
            out.write(f"checked {total} records: {failures} failed\n")
        else:
            out.write(f"checked {total} records: all passed\n")
    return EXIT_FAIL if failures else EXIT_OK


# --- verify -----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    ast = dsl.parse_identity(args.identity)
    if ast.kind == dsl.VECTOR and not dsl.affine_balanced(ast, seed=args.seed):
        print(
            "warning: sides carry different total point weight; "
            "the identity is checked relative to the origin",
            file=sys.stderr,
        )
    report = dsl.verify_identity(
        ast,
        samples=args.samples,
        seed=args.seed,
        coordinate_range=args.range,
    )
    with _open_output(args.output) as out:
        out.write(report.to_text())
    return EXIT_OK if report.verified else EXIT_FAIL


# --- bary -------------------------------------------------------------------


def _parse_point(text: str, backend: str) -> Point2:
    x_text, sep, y_text = text.partition(",")
    if not sep or not x_text or not y_text:
        raise ScalarParseError(f"expected 'x,y', got {text!r}")
    return Point2(parse_scalar(x_text, backend), parse_scalar(y_text, backend))


def _bary_line(
    p: Point2, a: Point2, b: Point2, c: Point2,
    tolerance: Optional[ToleranceSpec],
) -> str:
    coords = barycentric_of(p, a, b, c)
    location = classify(p, a, b, c, tolerance=tolerance)
    return (
        f"{format_scalar(coords.la)} {format_scalar(coords.lb)} "
        f"{format_scalar(coords.lc)} {location}"
    )


def cmd_bary(args: argparse.Namespace) -> int:
    backend = args.backend
    tolerance = ToleranceSpec(args.epsilon) if backend == FLOAT else None
    with _open_output(args.output) as out:
        if args.points:
            if len(args.points) != 4:
                print(
                    "error: expected POINT A B C (four x,y arguments)",
                    file=sys.stderr,
                )
                return EXIT_USAGE
            p, a, b, c = (_parse_point(t, backend) for t in args.points)
            out.write(_bary_line(p, a, b, c, tolerance) + "\n")
            return EXIT_OK
        with _open_input(args.input) as stream:
            for lineno, line in enumerate(stream, start=1):
                if not line.strip():
                    continue
                fields = line.split()
                if len(fields) != 4:
                    print(
                        f"line {lineno}: expected four x,y fields",
                        file=sys.stderr,
                    )
                    return EXIT_USAGE
                p, a, b, c = (_parse_point(t, backend) for t in fields)
                out.write(_bary_line(p, a, b, c, tolerance) + "\n")
    return EXIT_OK


# --- gen --------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GeneratorSpec(
        kind=args.kind,
        count=args.count,
        seed=args.seed,
        coordinate_range=args.range,
    )
    spec.validate()
    with _open_output(args.output) as out:
        for q in generate_quads(spec):
            out.write(records.format_record(q) + "\n")
    return EXIT_OK


# --- fig --------------------------------------------------------------------


def cmd_fig(args: argparse.Namespace) -> int:
    with _open_input(args.input) as stream:
        line = next((l for l in stream if l.strip()), None)
    if line is None:
        print("error: no record in input", file=sys.stderr)
        return EXIT_USAGE
    q = records.parse_record(line, EXACT)
    svg = emit_svg(q)
    with _open_output(args.output) as out:
        out.write(svg)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadkit",
        description="Signed-area identity toolkit for planar quadruples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, input_help="input path ('-' for stdin)"):
        p.add_argument("--input", default=None, help=input_help)
        p.add_argument(
            "--output", default=None, help="output path ('-' for stdout)"
        )

    check = sub.add_parser(
        "check", help="verify identity residuals over quadruple records"
    )
    check.add_argument(
        "--backend", choices=BACKENDS, default=EXACT,
        help="arithmetic backend (default: exact)",
    )
    check.add_argument(
        "--epsilon", type=float, default=ToleranceSpec().relative_epsilon,
        help="relative tolerance for the float backend",
    )
    add_io(check)
    check.set_defaults(func=cmd_check)

    verify = sub.add_parser(
        "verify", help="randomized exact verification of an identity"
    )
    verify.add_argument("identity", help="identity expression text")
    verify.add_argument("--samples", type=int, default=dsl.DEFAULT_SAMPLES)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--range", type=int, default=dsl.DEFAULT_RANGE)
    verify.add_argument("--output", default=None)
    verify.set_defaults(func=cmd_verify)

    bary = sub.add_parser(
        "bary", help="barycentric coordinates of a point in a triangle"
    )
    bary.add_argument(
        "points", nargs="*",
        help="POINT A B C as x,y pairs (omit to read from --input)",
    )
    bary.add_argument(
        "--backend", choices=BACKENDS, default=EXACT,
        help="arithmetic backend (default: exact)",
    )
    bary.add_argument(
        "--epsilon", type=float, default=ToleranceSpec().relative_epsilon,
        help="boundary snapping tolerance for the float backend",
    )
    add_io(bary, input_help="file of 'P A B C' lines, points as x,y")
    bary.set_defaults(func=cmd_bary)

    gen = sub.add_parser("gen", help="generate quadruple records")
    gen.add_argument("--kind", choices=KINDS, default="random")
    gen.add_argument("--count", type=int, default=10)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--range", type=int, default=10**6)
    gen.add_argument("--output", default=None)
    gen.set_defaults(func=cmd_gen)

    fig = sub.add_parser("fig", help="render one record to SVG")
    add_io(fig, input_help="record file ('-' for stdin)")
    fig.set_defaults(func=cmd_fig)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
