"""Command line entry point: ``colgomory solve FILE [options]``.

Exit codes: 0 optimal, 2 integer infeasible, 3 limit reached, 64 usage
error, 65 parse/validation error, 70 internal invariant violation.
"""
from __future__ import annotations

import argparse
import sys

from . import driver
from .errors import (ColgomoryError, ContractViolation, InvariantViolation, TooLarge,
                     UnboundedRelaxation, ValidationError)
from .exact import format_mixed
from .oracle import brute_force_optimum
from .serialize import emit_report, format_vector, load_instance
from .simplex import BLAND, DANTZIG

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_LIMIT = 3
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_INTERNAL = 70

_STATUS_CODES = {
    driver.OPTIMAL: EXIT_OK,
    driver.INTEGER_INFEASIBLE: EXIT_INFEASIBLE,
    driver.LIMIT_REACHED: EXIT_LIMIT,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="colgomory", description="Column-generation Gomory cuts for dual-form integer programs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("solve", help="solve an instance document")
    s.add_argument("file")
    s.add_argument("--mode", choices=["lex", "plain"], default="lex")
    s.add_argument("--source", choices=["min", "all"], default=None,
                   help="source-index policy (plain mode only, default min)")
    s.add_argument("--entering", choices=[DANTZIG, BLAND], default=DANTZIG)
    s.add_argument("--trace", action="store_true", help="log PIVOT/CUT/OPT events to stdout")
    s.add_argument("--oracle-check", action="store_true", help="compare with brute-force enumeration")
    s.add_argument("--max-pivots", type=int, default=None)
    s.add_argument("--max-cuts", type=int, default=driver.DEFAULT_MAX_CUTS)
    s.add_argument("--json", action="store_true", help="machine-readable report")
    return p


def _trace_printer(out, names_base: int):
    def sink(ev: driver.TraceEvent):
        d = ev.data
        if ev.kind == "pivot":
            print("PIVOT enter=%d leave=%d z=%s" % (d["enter"], d["leave"], format_mixed(d["z"])), file=out)
        elif ev.kind == "cut":
            print("CUT [%d] %s" % (d["column"], d["text"]), file=out)
        elif ev.kind == "opt":
            print("OPT z=%s y=%s" % (format_mixed(d["z"]), format_vector(d["y"])), file=out)
    return sink


def _oracle_check(instance, report) -> dict:
    try:
        res = brute_force_optimum(instance)
    except (TooLarge, UnboundedRelaxation) as exc:
        return {"agrees": None, "reason": str(exc)}
    if report.status == driver.LIMIT_REACHED:
        return {"agrees": None, "reason": "solve hit a limit", "z": res.z}
    if report.status == driver.INTEGER_INFEASIBLE:
        agrees = not res.feasible
    elif report.mode == "lex":
        agrees = res.feasible and report.z_star == res.z and tuple(report.y_star) == res.lex_max
    else:
        agrees = res.feasible and report.z_star == res.z and tuple(report.y_star) in res.argmax
    return {"agrees": bool(agrees), "z": res.z,
            "lex_max": list(res.lex_max) if res.lex_max else None,
            "optimal_set_size": len(res.argmax)}


def run_cli(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.source is not None and args.mode != "plain":
            raise _UsageError("--source applies to --mode plain only")
    except _UsageError as exc:
        print("usage error: %s" % exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    try:
        instance = load_instance(args.file)
    except OSError as exc:
        print("error: %s" % exc, file=err)
        return EXIT_USAGE
    except ValidationError as exc:
        print("error: %s" % exc, file=err)
        return EXIT_DATA

    sink = _trace_printer(out, 1) if args.trace else None
    try:
        if args.mode == "lex":
            report = driver.solve_lex(instance, max_pivots=args.max_pivots, max_cuts=args.max_cuts,
                                      entering=args.entering, sink=sink)
        else:
            report = driver.solve_plain(instance, source=args.source or "min", entering=args.entering,
                                        max_pivots=args.max_pivots, max_cuts=args.max_cuts, sink=sink)
    except InvariantViolation as exc:
        print("internal error: %s" % exc, file=err)
        return EXIT_INTERNAL
    except (UnboundedRelaxation, ContractViolation) as exc:
        print("error: %s" % exc, file=err)
        return EXIT_DATA
    except ColgomoryError as exc:
        print("internal error: %s" % exc, file=err)
        return EXIT_INTERNAL

    oracle = _oracle_check(instance, report) if args.oracle_check else None
    print(emit_report(report, "json" if args.json else "text", oracle), file=out)
    if oracle is not None and oracle["agrees"] is False:
        print("internal error: solver disagrees with brute-force oracle", file=err)
        return EXIT_INTERNAL
    return _STATUS_CODES[report.status]


def main() -> None:
    sys.exit(run_cli())
