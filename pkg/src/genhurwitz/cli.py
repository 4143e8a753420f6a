"""Command line interface: ``genhurwitz <command> ...``.

Exit codes: 0 success, 1 computation error or failed verification,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import FORMAT_VERSION, __version__
from .characters import DEFAULT_DEGREE_CAP, char_table
from .cutjoin import (
    DEFAULT_ORACLE_CAP,
    build_w,
    class_sum_oracle,
    normalize,
    op_to_json,
    render_differential,
    structure_constants,
)
from .errors import HurwitzError
from .genfun import direct_series, evolve, initial_value, make_marks
from .hurwitz import BUDGET_ENV, CoverSpec, default_budget, hurwitz_number, hurwitz_oracle, source_euler
from .laurent import format_fraction
from .partitions import Partition, parse_profiles
from .verify import VerifyReport, verify_all, verify_degree


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _profiles(text: str) -> list[Partition]:
    try:
        return parse_profiles(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genhurwitz",
        description="Hurwitz numbers, genus expanded cut-and-join operators and generating functions.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"genhurwitz {__version__} (json format {FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("char-table", help="character table of S_d")
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_DEGREE_CAP, help="largest allowed degree")
    _add_format(p)

    p = sub.add_parser("hurwitz", help="generalized Hurwitz number")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--profiles", type=_profiles, default=[], help='e.g. "(2,1);(3)"')
    p.add_argument("--oracle", action="store_true", help="count permutation tuples instead")
    p.add_argument("--budget", type=_positive, default=None, help=f"default: ${BUDGET_ENV} or 10^8")
    _add_format(p)

    cj = sub.add_parser("cutjoin", help="cut-and-join operators")
    cjsub = cj.add_subparsers(dest="action", required=True, metavar="ACTION")
    p = cjsub.add_parser("show", help="render W(D, z)")
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--z", type=_rational, default=None, help="evaluate the genus marker")
    _add_format(p)
    p = cjsub.add_parser("constants", help="structure constants of the class algebra")
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--oracle", action="store_true", help="multiply permutations instead")
    p.add_argument("--cap", type=_positive, default=DEFAULT_ORACLE_CAP)
    _add_format(p)
    p = cjsub.add_parser("verify", help="operator identities in one degree")
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=None)
    _add_format(p)

    p = sub.add_parser("genfun", help="genus graded generating function")
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--genus", type=_nonneg, default=0)
    p.add_argument("--marks", type=_profiles, required=True, help='e.g. "(2,1)" or "(2,1);(3)"')
    p.add_argument("--double", action="store_true", help="keep a second alphabet q")
    p.add_argument("--order", type=_nonneg, default=6)
    p.add_argument("--method", choices=("evolve", "direct"), default="evolve")
    _add_format(p)

    p = sub.add_parser("verify", help="run every identity for degrees 1..d")
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=None)
    _add_format(p)
    return parser


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_char_table(args) -> int:
    tab = char_table(args.degree, cap=args.cap)
    shapes = tab.shapes
    rows = tab.rows()
    width = max([len(str(s)) for s in shapes] + [len(str(x)) for r in rows for x in r])
    lines = [" " * width + " | " + " ".join(f"{str(c):>{width}}" for c in shapes)]
    for s, r in zip(shapes, rows):
        lines.append(f"{str(s):>{width}} | " + " ".join(f"{x:>{width}}" for x in r))
    payload = {
        "degree": tab.degree,
        "shapes": [list(s) for s in shapes],
        "classes": [list(s) for s in shapes],
        "dims": [tab.dims[s] for s in shapes],
        "table": rows,
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def _cmd_hurwitz(args) -> int:
    spec = CoverSpec(args.genus, args.degree, tuple(args.profiles))
    if args.oracle:
        value = hurwitz_oracle(spec, budget=args.budget)
        method = "enumeration"
    else:
        value = hurwitz_number(spec)
        method = "character"
    e = source_euler(spec).euler2h2
    text = f"{value} (2h-2 = {e})" if e is not None else f"{value} (2h-2 undefined: parity)"
    _emit(args, text, {"value": format_fraction(value), "euler2h2": e, "method": method})
    return 0


def _cmd_cutjoin(args) -> int:
    if args.action == "show":
        op = build_w(args.degree, args.partition)
        if args.normalized:
            op = normalize(op)
        text = render_differential(op, z=args.z)
        payload = op_to_json(op)
        if args.z is not None:
            payload["z"] = format_fraction(args.z)
            payload["evaluated"] = text
        _emit(args, text, payload)
        return 0
    if args.action == "constants":
        sc = class_sum_oracle(args.degree, cap=args.cap) if args.oracle else structure_constants(args.degree)
        items = sorted(sc.nonzero().items(), reverse=True)
        lines = [f"C^{c}_{a}{b} = {v}" for (a, b, c), v in items]
        payload = {
            "degree": sc.degree,
            "method": "class-sum" if args.oracle else "character",
            "constants": [
                {"d1": list(a), "d2": list(b), "d3": list(c), "value": format_fraction(v)}
                for (a, b, c), v in items
            ],
        }
        _emit(args, "\n".join(lines), payload)
        return 0
    checks = [
        c
        for c in verify_degree(args.degree, args.budget)
        if c.name
        in {
            "composition-law",
            "normalized-algebra-commutative",
            "class-sum-oracle",
            "z-grading",
            "classical-limit",
            "eigenfunctions",
            "schur-basis",
        }
    ]
    report = VerifyReport(checks)
    _emit(args, str(report), report.to_json())
    return 0 if report.ok else 1


def _cmd_genfun(args) -> int:
    marks = make_marks(args.marks)
    orders = [args.order] * len(marks)
    k = 1 if args.double else 0
    if args.method == "direct":
        series = direct_series(args.genus, args.degree, marks, orders, k)
    else:
        series = evolve(initial_value(args.genus, args.degree, k), marks, orders, genus=args.genus)
    _emit(args, str(series), series.to_json())
    return 0


def _cmd_verify(args) -> int:
    report = verify_all(args.degree, args.budget if args.budget is not None else default_budget())
    _emit(args, str(report), report.to_json())
    return 0 if report.ok else 1


COMMANDS = {
    "char-table": _cmd_char_table,
    "hurwitz": _cmd_hurwitz,
    "cutjoin": _cmd_cutjoin,
    "genfun": _cmd_genfun,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except HurwitzError as exc:
        print(f"genhurwitz: error: {exc}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
