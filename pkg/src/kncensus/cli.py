"""Command-line front end: classify / census / compare.

Exit codes: 0 success (compare: all predicted rows within tolerance),
1 tolerance exceeded, 2 usage error, 3 parameter-range overflow.

Heights accept exact integers and scientific notation; "1e18" is expanded
in exact integer arithmetic, never through a float, so the inclusive
boundary height <= X is handled exactly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from .asymptotics import compare, comparison_to_csv
from .census import (
    CensusOverflowError,
    CensusReport,
    CensusRequest,
    census,
    report_to_csv,
    report_to_json,
)
from .tate import LocalData, bad_primes, tate
from .weierstrass import SingularModelError, format_model, parse_model, parse_short

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3


def _parse_height(text: str) -> int:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse height {text!r}") from None
    if value.denominator != 1:
        raise ValueError(f"height {text!r} is not an integer")
    if value < 1:
        raise ValueError("height bound must be >= 1")
    return int(value)


def _default_threads() -> int:
    env = os.environ.get("KNCENSUS_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kncensus",
        description="Kodaira-Neron types and height censuses for j=0 / j=1728 curves over Q",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="local reduction data of one model")
    grp = p_classify.add_mutually_exclusive_group(required=True)
    grp.add_argument("--model", help="long model a1,a2,a3,a4,a6")
    grp.add_argument("--short", help="short model A,B")
    p_classify.add_argument("--prime", type=int, action="append",
                            help="prime to classify at (repeatable; default: all bad primes)")
    _output_flags(p_classify)

    p_census = sub.add_parser("census", help="exact count of minimal curves up to a height")
    _census_flags(p_census)
    _output_flags(p_census)

    p_compare = sub.add_parser("compare", help="census vs asymptotic predictions")
    _census_flags(p_compare)
    p_compare.add_argument("--torsion", choices=["trivial", "z2", "z3"],
                           help="restrict to one torsion row (implies torsion grouping)")
    p_compare.add_argument("--graph", choices=["t43", "l22"],
                           help="restrict to one graph row (implies graph grouping)")
    p_compare.add_argument("--tolerance", type=float, default=10.0,
                           help="tolerance coefficient C in C*X^(err-main) (default 10)")
    _output_flags(p_compare)
    return parser


def _census_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["j0", "j1728"], required=True)
    p.add_argument("--height", required=True, help="height bound X (integer or 1e18 style)")
    p.add_argument("--grouping", choices=["overall", "torsion", "graph"], default="overall")
    p.add_argument("--signs", choices=["both", "positive"], default=None,
                   help="parameter signs (default: both for j1728, positive for j0)")
    p.add_argument("--include-exceptional", action="store_true",
                   help="report the 32.a/64.a/36.a curves as a separate group")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="worker count (results are independent of this)")


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--unicode", action="store_true",
                   help="render In/In* indices as unicode subscripts")
    p.add_argument("--output", help="write to this path instead of stdout")


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _symbol(ld_or_kt, unicode_symbols: bool) -> str:
    kt = ld_or_kt.kodaira if isinstance(ld_or_kt, LocalData) else ld_or_kt
    return kt.unicode() if unicode_symbols else kt.ascii()


def _run_classify(args) -> int:
    model = parse_model(args.model) if args.model else parse_short(args.short).to_weierstrass()
    primes = args.prime if args.prime else bad_primes(model)
    data = [tate(model, p) for p in sorted(set(primes))]

    if args.format == "json":
        payload = {
            "model": format_model(model),
            "local_data": [
                {
                    "prime": ld.p,
                    "kodaira": _symbol(ld, False),
                    "reduction": ld.reduction,
                    "conductor_exponent": ld.conductor_exponent,
                    "tamagawa": ld.tamagawa,
                    "was_minimal": ld.was_minimal,
                    "scaling_exponent": ld.scaling_exponent,
                    "minimal_model": format_model(ld.minimal_model),
                }
                for ld in data
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
        return EXIT_OK

    if args.format == "csv":
        lines = ["prime,kodaira,reduction,conductor_exponent,tamagawa,was_minimal,scaling_exponent,minimal_model"]
        for ld in data:
            lines.append(
                f"{ld.p},{_symbol(ld, args.unicode)},{ld.reduction},{ld.conductor_exponent},"
                f'{ld.tamagawa},{str(ld.was_minimal).lower()},{ld.scaling_exponent},"{format_model(ld.minimal_model)}"'
            )
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK

    lines = [f"model: {format_model(model)}"]
    for ld in data:
        lines.append(
            f"p={ld.p}: {_symbol(ld, args.unicode)}  reduction={ld.reduction}  "
            f"f={ld.conductor_exponent}  c={ld.tamagawa}  minimal={'yes' if ld.was_minimal else 'no'}"
        )
        if not ld.was_minimal:
            lines.append(
                f"      minimal model: {format_model(ld.minimal_model)}"
                f"  (rescaled {ld.scaling_exponent}x)"
            )
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


_GROUPING = {"overall": "overall", "torsion": "by_torsion", "graph": "by_graph"}


def _request_from_args(args) -> CensusRequest:
    return CensusRequest(
        family=args.family,
        height_bound=_parse_height(args.height),
        grouping=_GROUPING[args.grouping],
        signs=args.signs,
        include_exceptional=args.include_exceptional,
    )


def _census_table(report: CensusReport, unicode_symbols: bool) -> str:
    req = report.request
    lines = [
        f"family={req.family}  X={req.height_bound}  grouping={req.grouping}  "
        f"signs={req.resolved_signs}",
        f"{'group':<12} {'kodaira':<6} {'count':>12}",
    ]
    for row in report.rows:
        lines.append(f"{row.group:<12} {_symbol(row.kodaira, unicode_symbols):<6} {row.count:>12}")
    lines.append(f"{'total':<12} {'':<6} {report.total:>12}")
    return "\n".join(lines) + "\n"


def _run_census(args) -> int:
    req = _request_from_args(args)
    report = census(req, workers=args.threads)
    if args.format == "csv":
        _emit(report_to_csv(report, unicode_symbols=args.unicode), args.output)
    elif args.format == "json":
        _emit(report_to_json(report) + "\n", args.output)
    else:
        _emit(_census_table(report, args.unicode), args.output)
    return EXIT_OK


def _run_compare(args) -> int:
    if args.torsion and args.graph:
        raise ValueError("--torsion and --graph are mutually exclusive")
    group_filter = None
    if args.torsion:
        args.grouping = "torsion"
        group_filter = {"trivial": "trivial", "z2": "Z2", "z3": "Z3"}[args.torsion]
    elif args.graph:
        args.grouping = "graph"
        group_filter = {"t43": "T43", "l22": "L22"}[args.graph]
    req = _request_from_args(args)
    report = census(req, workers=args.threads)
    rows = compare(report, tolerance_coeff=args.tolerance)
    if group_filter is not None:
        rows = [r for r in rows if r.group == group_filter]

    if args.format == "csv":
        _emit(comparison_to_csv(rows, req.family), args.output)
    elif args.format == "json":
        payload = [
            {
                "group": r.group,
                "kodaira": r.kodaira.ascii(),
                "observed": r.observed,
                "predicted": round(r.predicted, 1) if r.predicted is not None else None,
                "rel_error": r.rel_error,
                "within_tolerance": r.within,
            }
            for r in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [
            f"family={req.family}  X={req.height_bound}  signs={req.resolved_signs}  "
            f"tolerance=C*X^(err-main), C={args.tolerance:g}",
            f"{'group':<12} {'kodaira':<6} {'observed':>10} {'predicted':>12} {'rel_error':>10}  ",
        ]
        for r in rows:
            pred = f"{r.predicted:.1f}" if r.predicted is not None else "-"
            rel = f"{r.rel_error:+.6f}" if r.rel_error is not None else "-"
            mark = "" if r.within is None else ("ok" if r.within else "EXCEEDS")
            lines.append(
                f"{r.group:<12} {_symbol(r.kodaira, args.unicode):<6} {r.observed:>10} "
                f"{pred:>12} {rel:>10}  {mark}"
            )
        _emit("\n".join(lines) + "\n", args.output)

    if any(r.within is False for r in rows):
        return EXIT_TOLERANCE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "classify":
            return _run_classify(args)
        if args.command == "census":
            return _run_census(args)
        return _run_compare(args)
    except CensusOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (ValueError, SingularModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
