"""Command line interface with reproducible, byte-identical output.

Subcommands: bound, gs-min, dnk, construct, verify, survey, fixture-ex8.
Exit codes: 0 success (for verify with --k: nilpotency confirmed),
2 verify ran correctly but the degree-k component is non-zero,
1 usage, parse, or cap errors.  All configuration is via flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from nilquad.closed_forms import is_fibonacci, minimax_k4, minimax_k5
from nilquad.gsbound import TruncatedSeries, gs_min_relations, gs_series
from nilquad.minimax import minimax_bruteforce, minimax_exact
from nilquad.nilcheck import hilbert_report
from nilquad.presentation import (
    PresentationParseError,
    construct_presentation,
    fixture_ex8,
    parse,
    serialize,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_NILPOTENT = 2


class _ArgumentParser(argparse.ArgumentParser):
    """argparse, but usage errors exit 1 (2 is reserved for verify)."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _format_series(series: TruncatedSeries) -> str:
    parts = []
    for m, c in enumerate(series.coeffs):
        if m == 0:
            parts.append(str(c))
        elif m == 1:
            parts.append(f"{c} t")
        else:
            parts.append(f"{c} t^{m}")
    text = " + ".join(parts)
    if not series.complete:
        text += " + ..."
    return text


def _cmd_bound(args) -> int:
    series = gs_series(args.n, args.d, args.max_degree)
    print(_format_series(series))
    return EXIT_OK


def _cmd_gs_min(args) -> int:
    print(gs_min_relations(args.n, args.k))
    return EXIT_OK


def _cmd_dnk(args) -> int:
    result = minimax_exact(args.n, args.k)
    print(result.value)
    status = EXIT_OK
    if args.witness:
        print(f"witness: {' '.join(str(a) for a in result.witness.parts)}")
        print(f"costs: {' '.join(str(c) for c in result.per_j_costs)}")
    if args.closed_form:
        if args.k == 4:
            closed = minimax_k4(args.n)
        elif args.k == 5:
            closed = minimax_k5(args.n)
        else:
            print("error: --closed-form needs k = 4 or k = 5", file=sys.stderr)
            return EXIT_ERROR
        verdict = "match" if closed == result.value else "MISMATCH"
        print(f"closed-form: {closed} ({verdict})")
        if closed != result.value:
            status = EXIT_ERROR
    if args.brute_force:
        brute = minimax_bruteforce(args.n, args.k)
        verdict = "match" if brute.value == result.value else "MISMATCH"
        print(f"brute-force: {brute.value} ({verdict})")
        if brute.value != result.value:
            status = EXIT_ERROR
    return status


def _write_text(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(content)


def _cmd_construct(args) -> int:
    pres = construct_presentation(args.n, args.k, cover_cap=args.cover_cap)
    _write_text(args.output, serialize(pres))
    print(f"wrote {args.output}: {pres.d} relations on {pres.n} generators")
    return EXIT_OK


def _cmd_fixture_ex8(args) -> int:
    pres = fixture_ex8()
    _write_text(args.output, serialize(pres))
    print(f"wrote {args.output}: {pres.d} relations on {pres.n} generators")
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        pres = parse(handle.read())
    report = hilbert_report(
        pres,
        max_degree=args.max_degree,
        k=args.k,
        mod=args.mod,
        column_cap=args.column_cap,
    )
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text(), end="")
    if args.k is not None and not report.nilpotent:
        return EXIT_NOT_NILPOTENT
    return EXIT_OK


def _survey_rows(k: int, n_min: int, n_max: int) -> list[tuple[int, int, int, bool, str]]:
    rows = []
    for n in range(n_min, n_max + 1):
        if k == 4:
            value = minimax_k4(n)
            flag = str(is_fibonacci(n)[0]).lower()
        elif k == 5:
            value = minimax_k5(n)
            flag = str(n in (1, 2) or n % 6 == 0).lower()
        else:
            value = minimax_exact(n, k).value
            flag = ""
        gs_min = gs_min_relations(n, k)
        rows.append((n, value, gs_min, value == gs_min, flag))
    return rows


def _cmd_survey(args) -> int:
    if args.n_min < 1 or args.n_min > args.n_max:
        print("error: need 1 <= --n-min <= --n-max", file=sys.stderr)
        return EXIT_ERROR
    rows = _survey_rows(args.k, args.n_min, args.n_max)
    if args.csv:
        print("n,d_nk,gs_min,equal,flag")
        for n, value, gs_min, equal, flag in rows:
            print(f"{n},{value},{gs_min},{str(equal).lower()},{flag}")
    else:
        print(f"{'n':>6} {'d_nk':>12} {'gs_min':>12} {'equal':>5}  flag")
        for n, value, gs_min, equal, flag in rows:
            print(f"{n:>6} {value:>12} {gs_min:>12} {str(equal).lower():>5}  {flag}")
    return EXIT_OK


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="nilquad",
        description="Exact tools for k-step nilpotent quadratic algebras "
        "with minimal relation counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print the lower-bound series for (n, d)")
    p.add_argument("--n", type=int, required=True, help="number of generators")
    p.add_argument("--d", type=int, required=True, help="number of relations")
    p.add_argument("--max-degree", type=int, default=10, help="degree cap (default 10)")
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("gs-min", help="minimal d the bound permits for k-step nilpotency")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_gs_min)

    p = sub.add_parser("dnk", help="exact composition minimax d_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="print an optimal composition")
    p.add_argument("--closed-form", action="store_true", help="cross-check (k = 4 or 5)")
    p.add_argument("--brute-force", action="store_true", help="cross-check by enumeration")
    p.set_defaults(handler=_cmd_dnk)

    p = sub.add_parser("construct", help="write a minimal k-step nilpotent presentation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output", required=True, help="presentation file to write")
    p.add_argument("--cover-cap", type=int, default=5000, help="pair poset size cap")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", help="graded dimensions and nilpotency verdict")
    p.add_argument("--file", required=True, help="presentation file to check")
    p.add_argument("--k", type=int, default=None, help="nilpotency step to decide")
    p.add_argument("--max-degree", type=int, default=None, help="degrees to report (default k, else 6)")
    p.add_argument("--mod", type=int, default=None, help="compute over F_p instead of the rationals")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--column-cap", type=int, default=200_000, help="word count cap per degree")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("survey", help="per-n table of minimax vs bound ceiling")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="CSV instead of aligned text")
    p.set_defaults(handler=_cmd_survey)

    p = sub.add_parser("fixture-ex8", help="write the built-in 8-generator example")
    p.add_argument("-o", "--output", required=True, help="presentation file to write")
    p.set_defaults(handler=_cmd_fixture_ex8)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except PresentationParseError as exc:
        print(f"error: cannot parse presentation: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))
