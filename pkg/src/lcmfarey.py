#!/usr/bin/env python3
"""
lcmfarey: certified LCM(n) from Farey-indexed sine and Gamma products.

Usage:
    python src/lcmfarey.py [--format text|json|csv] [--workers N] [--max-bits N]
                           [--cache-dir PATH] [--log-level LEVEL] <command> ...

Commands:
    lcm N [--method oracle|sine|gamma] [--bits N]   LCM(1..N), certified for sine/gamma
    verify EQ --from A --to B                        check one catalog identity over a range
    farey N [--half]                                 list F(N), or its members in (0, 1/2]
    cyclo N [--at X]                                 Phi_N coefficients, or Phi_N(X)
    oeis-check A003418|A048671 [--upto N] [--offline] [--refresh]
    bench --eq EQ --from A --to B                    precision and timing per n

Examples:
    python src/lcmfarey.py lcm 10 --method sine
    python src/lcmfarey.py verify E13 --from 2 --to 20
    python src/lcmfarey.py --format csv verify E4 --from 0 --to 50
    python src/lcmfarey.py oeis-check A003418 --upto 200 --offline

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 OEIS/IO failure.
"""
import argparse
import csv
import json
import sys
import time
from typing import Dict, List, Optional, Sequence

from loguru import logger
from rich.console import Console
from rich.table import Table

try:
    from .bfile import SUPPORTED, BFileError, BFileStore, cross_check
    from .config import allow_big_int_text, configure_logging, create_config
    from .cyclotomic import cyclotomic_poly
    from .farey import farey_count, farey_half, farey_sequence
    from .identities import (
        CATALOG,
        IdentityReport,
        PrecisionPlan,
        Status,
        lcm_via_farey_gamma,
        lcm_via_farey_sine,
        lookup,
        verify_range,
    )
    from .numtheory import lcm_upto
except ImportError:
    from bfile import SUPPORTED, BFileError, BFileStore, cross_check
    from config import allow_big_int_text, configure_logging, create_config
    from cyclotomic import cyclotomic_poly
    from farey import farey_count, farey_half, farey_sequence
    from identities import (
        CATALOG,
        IdentityReport,
        PrecisionPlan,
        Status,
        lcm_via_farey_gamma,
        lcm_via_farey_sine,
        lookup,
        verify_range,
    )
    from numtheory import lcm_upto

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_EXTERNAL = 3

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class LcmFareyParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors map to exit 1."""

    def error(self, message):
        raise UsageError(message)


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the command from being reset by the
    # subcommand's copy of the same flag.
    common = LcmFareyParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-bits", dest="max_bits", type=int, default=argparse.SUPPRESS)
    common.add_argument("--cache-dir", dest="cache_dir", default=argparse.SUPPRESS)
    common.add_argument("--log-level", dest="log_level", default=argparse.SUPPRESS)
    return common


def build_parser() -> LcmFareyParser:
    common = _global_flags()
    parser = LcmFareyParser(prog="lcmfarey", description=__doc__.split("\n")[1],
                            parents=[common])
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("lcm", parents=[common], help="LCM(1..n)")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("oracle", "sine", "gamma"), default="oracle")
    p.add_argument("--bits", type=int, help="initial working precision")

    p = sub.add_parser("verify", parents=[common], help="verify an identity over a range of n")
    p.add_argument("equation")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)

    p = sub.add_parser("farey", parents=[common], help="list a Farey sequence")
    p.add_argument("n", type=int)
    p.add_argument("--half", action="store_true")

    p = sub.add_parser("cyclo", parents=[common], help="cyclotomic polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--at", type=int)

    p = sub.add_parser("oeis-check", parents=[common], help="cross-check an OEIS b-file")
    p.add_argument("sequence")
    p.add_argument("--upto", type=int, default=200)
    p.add_argument("--offline", action="store_true")
    p.add_argument("--refresh", action="store_true")

    p = sub.add_parser("bench", parents=[common], help="precision and timing table")
    p.add_argument("--eq", dest="equation", required=True)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    return parser


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def emit(command: str, columns: Sequence[str], rows: List[Dict], summary: Dict, fmt: str,
         out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump({"command": command, "rows": rows, "summary": summary}, out)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=list(columns), extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        table = Table(title=command)
        for column in columns:
            table.add_column(column, overflow="fold")
        for row in rows:
            table.add_row(*("" if row.get(c) is None else str(row.get(c)) for c in columns))
        console = Console(file=out, width=max(120, Console().width))
        console.print(table)
        console.print("  ".join(f"{k}={v}" for k, v in summary.items()))


REPORT_COLUMNS = ("n", "status", "value", "bits", "factors", "ms", "detail")
BENCH_COLUMNS = ("n", "status", "factor_count", "bits_used", "retries", "ms")


def _report_row(report: IdentityReport) -> Dict:
    data = report.to_dict()
    return {
        "n": report.n,
        "status": data["status"],
        "value": data["value"],
        "bits": report.bits_used,
        "factors": report.factor_count,
        "retries": report.retries,
        "ms": data["elapsed_ms"],
        "detail": report.detail,
    }


def _status_summary(reports: List[IdentityReport]) -> Dict:
    summary = {s.value: 0 for s in Status}
    for r in reports:
        summary[r.status.value] += 1
    summary["total"] = len(reports)
    return summary


def _exit_for(reports: List[IdentityReport]) -> int:
    return EXIT_FAILED if any(r.status == Status.FAILED for r in reports) else EXIT_OK


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _plan(args, initial_bits: Optional[int] = None) -> PrecisionPlan:
    try:
        return PrecisionPlan(initial_bits, getattr(args, "max_bits", None))
    except ValueError as e:
        raise UsageError(str(e))


def _under_plan(check, *check_args):
    """Run a check; a plan that cannot fit an n (max_bits below its start) is a usage error."""
    try:
        return check(*check_args)
    except ValueError as e:
        raise UsageError(str(e))


def cmd_lcm(args, config) -> int:
    fmt = config["OUTPUT_FORMAT"]
    if args.method == "oracle":
        if args.n < 0:
            raise UsageError("lcm needs n >= 0")
        value = lcm_upto(args.n)
        emit("lcm", ("n", "method", "value"), [{"n": args.n, "method": "oracle", "value": value}],
             {"status": Status.VERIFIED.value}, fmt)
        return EXIT_OK
    if args.n < 2:
        raise UsageError(f"lcm --method {args.method} needs n >= 2")
    check = lcm_via_farey_sine if args.method == "sine" else lcm_via_farey_gamma
    report = _under_plan(check, args.n, _plan(args, args.bits))
    row = _report_row(report)
    row["method"] = args.method
    emit("lcm", ("n", "method") + REPORT_COLUMNS[1:], [row], _status_summary([report]), fmt)
    return _exit_for([report])


def _identity(equation: str) -> str:
    try:
        return lookup(equation).equation_id
    except KeyError as e:
        raise UsageError(e.args[0])


def cmd_verify(args, config) -> int:
    equation = _identity(args.equation)
    reports = _under_plan(verify_range, equation, args.n_from, args.n_to, _plan(args),
                          int(config["WORKERS"]))
    summary = {"equation": equation, **_status_summary(reports)}
    emit("verify", REPORT_COLUMNS, [_report_row(r) for r in reports], summary, config["OUTPUT_FORMAT"])
    return _exit_for(reports)


def cmd_bench(args, config) -> int:
    equation = _identity(args.equation)
    start = time.perf_counter()
    reports = _under_plan(verify_range, equation, args.n_from, args.n_to, _plan(args),
                          int(config["WORKERS"]))
    rows = [{
        "n": r.n,
        "status": r.status.value,
        "factor_count": r.factor_count,
        "bits_used": r.bits_used,
        "retries": r.retries,
        "ms": round(r.elapsed * 1000, 3),
    } for r in reports]
    summary = {"equation": equation, "total": len(reports),
               "wall_ms": round((time.perf_counter() - start) * 1000, 3)}
    emit("bench", BENCH_COLUMNS, rows, summary, config["OUTPUT_FORMAT"])
    return _exit_for(reports)


def cmd_farey(args, config) -> int:
    if args.n < 1:
        raise UsageError("farey needs n >= 1")
    members = farey_half(args.n) if args.half else farey_sequence(args.n)
    rows = [{"index": i, "fraction": f"{r.numerator}/{r.denominator}"} for i, r in enumerate(members)]
    summary = {"order": args.n, "count": len(rows)}
    if not args.half:
        summary["expected_count"] = farey_count(args.n)
    emit("farey", ("index", "fraction"), rows, summary, config["OUTPUT_FORMAT"])
    return EXIT_OK


def cmd_cyclo(args, config) -> int:
    if args.n < 1:
        raise UsageError("cyclo needs n >= 1")
    poly = cyclotomic_poly(args.n)
    if args.at is not None:
        rows = [{"n": args.n, "x": args.at, "value": poly(args.at)}]
        emit("cyclo", ("n", "x", "value"), rows, {"degree": poly.degree}, config["OUTPUT_FORMAT"])
    else:
        rows = [{"degree": d, "coefficient": c} for d, c in enumerate(poly.coeffs)]
        emit("cyclo", ("degree", "coefficient"), rows,
             {"n": args.n, "degree": poly.degree, "coefficients": str(poly)}, config["OUTPUT_FORMAT"])
    return EXIT_OK


def cmd_oeis_check(args, config) -> int:
    sequence = args.sequence.upper()
    if sequence not in SUPPORTED:
        raise UsageError(f"unsupported sequence {args.sequence}; choose from {', '.join(SUPPORTED)}")
    bfile = BFileStore(config).load(sequence, offline=args.offline, refresh=args.refresh)
    checked, mismatches = cross_check(bfile, args.upto)
    rows = [{"index": m.index, "expected": m.expected, "found": m.found} for m in mismatches]
    summary = {"sequence": sequence, "checked": checked, "mismatches": len(mismatches),
               "source": "fixture" if args.offline else "oeis"}
    if mismatches:
        logger.warning(f"{sequence}: {len(mismatches)} mismatches in {checked} terms")
    emit("oeis-check", ("index", "expected", "found"), rows, summary, config["OUTPUT_FORMAT"])
    return EXIT_FAILED if mismatches else EXIT_OK


COMMANDS = {
    "lcm": cmd_lcm,
    "verify": cmd_verify,
    "farey": cmd_farey,
    "cyclo": cmd_cyclo,
    "oeis-check": cmd_oeis_check,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    allow_big_int_text()
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: " + ", ".join(COMMANDS))
        config = create_config({
            "OUTPUT_FORMAT": getattr(args, "format", None),
            "WORKERS": getattr(args, "workers", None),
            "CACHE_DIR": getattr(args, "cache_dir", None),
            "LOG_LEVEL": getattr(args, "log_level", None),
        })
        try:
            configure_logging(config["LOG_LEVEL"])
        except ValueError as e:
            raise UsageError(f"bad log level: {e}")
        return COMMANDS[args.command](args, config)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        print(f"catalog: {' '.join(CATALOG)}", file=sys.stderr)
        return EXIT_USAGE
    except BFileError as e:
        print(f"oeis error: {e}", file=sys.stderr)
        return EXIT_EXTERNAL


if __name__ == "__main__":
    sys.exit(main())
