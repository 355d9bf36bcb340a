"""!
\file main.py The pylcm command line

Exit codes: 0 when everything passes, 1 on a property failure, 2 on usage,
parse or instance errors and 3 when an enumeration hits the ceiling.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from pylcm.cli.export import (
    germs_payload,
    matrix_payload,
    spectra_payload,
    value_matrix,
    write_json,
    write_matrix_csv,
)
from pylcm.cli.expression import eval_expr, format_value
from pylcm.cli.suites import SUITE_NAMES, SuiteRunner
from pylcm.config import DEFAULT_SETTINGS, Settings
from pylcm.errors import (
    InconclusiveError,
    InvalidTriple,
    ParseError,
    ResourceLimitError,
    UnsupportedInstance,
)
from pylcm.monoid.monoidops.instancefactory import make_monoid
from pylcm.operator.otype.deltatruncation import DeltaTruncation

logger = logging.getLogger("pylcm")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _settings(args: argparse.Namespace) -> Settings:
    overrides = {}
    if args.group_bound is not None:
        overrides["group_bound"] = args.group_bound
    if args.delta_depth is not None:
        overrides["delta_depth"] = args.delta_depth
    if args.seed is not None:
        overrides["seed"] = args.seed
    return DEFAULT_SETTINGS.replace(**overrides)


def _monoid(args: argparse.Namespace):
    return make_monoid(args.monoid, _settings(args))


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text + "\n")
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def cmd_eval(args: argparse.Namespace) -> int:
    M = _monoid(args)
    value = eval_expr(args.expr, M)
    if args.format == "json":
        write_json({"expr": args.expr, "instance": M.name(), "value": format_value(value)}, args.out)
    else:
        _emit(format_value(value), args.out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    M = _monoid(args)
    names: List[str] = []
    for item in args.suite:
        names += [n for n in item.split(",") if n]
    runner = SuiteRunner(M, args.depth, timing=args.timing)
    reports = runner.run(names)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        write_json(
            {"instance": M.name(), "suites": [r.to_dict() for r in reports], "ok": ok},
            args.out,
        )
    else:
        lines = []
        for r in reports:
            if r.skipped is not None:
                lines.append(r.suite + ": skipped (" + r.skipped + ")")
                continue
            for p in sorted(r.properties, key=lambda p: p.name):
                status = "ok" if p.ok else "FAILED"
                lines.append(
                    r.suite
                    + "/"
                    + p.name
                    + ": "
                    + status
                    + " passed="
                    + str(p.passed)
                    + " failed="
                    + str(p.failed)
                    + " skipped="
                    + str(p.skipped)
                )
                lines += ["    " + c for c in p.counterexamples]
            if r.wall_time is not None:
                lines.append(r.suite + ": " + format(r.wall_time, ".3f") + " s")
        lines.append("ok" if ok else "FAILED")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_matrix(args: argparse.Namespace) -> int:
    M = _monoid(args)
    value = eval_expr(args.expr, M)
    T = DeltaTruncation(M, M.settings.delta_depth)
    op = value_matrix(value, T)
    if args.format == "csv":
        if args.out is None:
            write_matrix_csv(op, T, sys.stdout)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                write_matrix_csv(op, T, fh)
    elif args.format == "json":
        write_json(matrix_payload(op, T), args.out)
    else:
        _emit(str(op), args.out)
    return EXIT_OK


def cmd_spectra(args: argparse.Namespace) -> int:
    M = _monoid(args)
    payload = spectra_payload(M, args.depth)
    if args.format == "json":
        write_json(payload, args.out)
    else:
        lines = []
        for part in ("right", "left", "product", "isg"):
            lines.append(
                part
                + ": "
                + str(payload[part]["filters"])
                + " filters, "
                + str(payload[part]["ultrafilters"])
                + " ultrafilters"
            )
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_groupoid(args: argparse.Namespace) -> int:
    M = _monoid(args)
    window = args.window if args.window is not None else args.depth
    payload = germs_payload(M, window, max_period=args.max_period)
    if args.format == "json":
        write_json(payload, args.out)
    else:
        _emit(json.dumps(payload["counts"], sort_keys=True), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--monoid",
        default="free:2",
        help="free:<k>, grid:<k>, odometer or automaton:<path>",
    )
    common.add_argument("--depth", type=int, default=2)
    common.add_argument("--group-bound", type=int, default=None)
    common.add_argument("--delta-depth", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=["json", "text", "csv"], default="text")
    common.add_argument("--out", default=None)
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument(
        "--timing", action="store_true", help="add wall time to reports"
    )

    ap = argparse.ArgumentParser(
        prog="pylcm",
        description="Inverse semigroups of LCM monoids and their shadows.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    e.add_argument("expr")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("check", parents=[common], help="run property suites")
    c.add_argument(
        "--suite",
        action="append",
        default=[],
        help="one of " + ", ".join(SUITE_NAMES + ("all",)) + "; repeatable",
    )
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("matrix", parents=[common], help="operator of an expression")
    m.add_argument("expr")
    m.set_defaults(func=cmd_matrix)

    s = sub.add_parser("spectra", parents=[common], help="filters and ultrafilters")
    s.set_defaults(func=cmd_spectra)

    g = sub.add_parser("groupoid", parents=[common], help="germs of the shift action")
    g.add_argument("--window", type=int, default=None)
    g.add_argument("--max-period", type=int, default=2)
    g.set_defaults(func=cmd_groupoid)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ResourceLimitError as e:
        logger.error("%s", e)
        return EXIT_RESOURCE
    except InconclusiveError as e:
        logger.error("%s", e)
        return EXIT_FAILURE
    except (ParseError, InvalidTriple, UnsupportedInstance, ValueError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except OSError as e:
        logger.error("%s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
