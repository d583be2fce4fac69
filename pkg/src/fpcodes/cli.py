"""The ``fpcodes`` command.

Exit status is 0 when a property holds (or a command succeeds), 1 when it
fails (or a reproduction does not match) and 2 on any error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from . import TwoLevelCode, __version__
from ._scan import default_jobs
from .budget import Budget
from .codefile import dumps, read_code, write_code
from .construction import construct_two_level
from .errors import (
    FingerprintCodeError,
    InfeasibleConstructionError,
    ParameterError,
)
from .fixtures import reproductions, run_repro
from .generators import PrimeField, gen_polynomial_fp_code, gen_random_code
from .picks import DeterministicPicks, SeededPicks
from .properties import properties, verify_all
from .report import FORMATS, render_construction, render_verdicts, to_json


__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_ERROR = 2


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("wrote %s", out)


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "poly":
        code = gen_polynomial_fp_code(
            PrimeField(args.q), args.length, args.t, args.points
        )
    else:
        code = gen_random_code(args.q, args.length, args.n, args.seed)
    logger.info("generated %r", code)
    _emit(dumps(code), args.out)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    source = Path(args.input)
    code = read_code(source)
    if isinstance(code, TwoLevelCode):
        logger.warning("%s is already grouped, using its words", source)
        code = code.base
    out = Path(args.out) if args.out else \
        source.with_name(f"{source.stem}.grouped.txt")
    report_path = Path(args.report) if args.report else \
        source.with_name(f"{source.stem}.report.json")

    if args.mode == "random":
        picks = SeededPicks(args.seed)
    else:
        if args.seed is not None:
            logger.warning("--seed has no effect with --mode det")
        picks = DeterministicPicks()

    try:
        result, _, report = construct_two_level(code, args.groups, picks=picks)
    except InfeasibleConstructionError as e:
        report_path.write_text(to_json(e.report.to_dict()), encoding="utf-8")
        logger.info("wrote partial report to %s", report_path)
        raise

    write_code(out, result)
    report_path.write_text(to_json(report.to_dict()), encoding="utf-8")
    logger.info("wrote %s and %s", out, report_path)
    sys.stdout.write(render_construction(report, args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    code = read_code(args.input)
    if args.T is not None and not isinstance(code, TwoLevelCode):
        raise ParameterError("--T needs a grouped code file")
    if args.T is None and isinstance(code, TwoLevelCode):
        code = code.base
    budget = Budget.from_env()
    if args.budget is not None:
        budget = budget.with_candidates(args.budget)
    options = {"budget": budget, "jobs": args.jobs}

    if args.prop == "all":
        verdicts = verify_all(code, args.t, args.T, **options)
    else:
        verdict = properties.lookup(args.prop).check(
            code, args.t, args.T, **options
        )
        verdicts = {verdict.kind: verdict}
    sys.stdout.write(render_verdicts(verdicts, args.format))
    return EXIT_OK if all(verdicts.values()) else EXIT_FAILS


def cmd_repro(args: argparse.Namespace) -> int:
    matched, expected, actual = run_repro(args.name)
    if args.format == "json":
        sys.stdout.write(to_json({
            "example": args.name,
            "matched": matched,
            "expected": expected,
            "actual": actual,
        }))
    else:
        for key, value in actual.items():
            sys.stdout.write(f"{key}: {value}\n")
        if matched:
            sys.stdout.write(f"{args.name}: matches\n")
        else:
            sys.stdout.write(f"{args.name}: MISMATCH\n")
            for key in expected.keys() | actual.keys():
                if expected.get(key) != actual.get(key):
                    sys.stdout.write(
                        f"  {key}: expected {expected.get(key)!r}, "
                        f"got {actual.get(key)!r}\n"
                    )
    return EXIT_OK if matched else EXIT_FAILS


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpcodes",
        description="Construct and verify two-level fingerprinting codes.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debugging output")
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="overrides -v")
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="write a code file")
    kinds = generate.add_subparsers(dest="kind", required=True)
    poly = kinds.add_parser("poly", help="polynomial evaluation code")
    poly.add_argument("--q", type=int, required=True, help="prime field size")
    poly.add_argument("--len", dest="length", type=int, required=True)
    poly.add_argument("--t", type=_positive, required=True)
    poly.add_argument("--points", type=int, nargs="+", default=None,
                      help="evaluation points (default 0 .. len-1)")
    rand = kinds.add_parser("random", help="uniformly random code")
    rand.add_argument("--q", type=int, required=True)
    rand.add_argument("--len", dest="length", type=int, required=True)
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--seed", type=int, default=None)
    for sub in (poly, rand):
        sub.add_argument("--out", default=None,
                         help="output file (default: standard output)")
    generate.set_defaults(handler=cmd_generate)

    construct = commands.add_parser(
        "construct", help="group a code by splitting and merging classes"
    )
    construct.add_argument("--in", dest="input", required=True)
    construct.add_argument("--groups", type=int, required=True)
    construct.add_argument("--mode", choices=["det", "random"], default="det")
    construct.add_argument("--seed", type=int, default=None)
    construct.add_argument("--out", default=None,
                           help="grouped code file (default <stem>.grouped.txt)")
    construct.add_argument("--report", default=None,
                           help="JSON report (default <stem>.report.json)")
    construct.add_argument("--format", choices=FORMATS, default="text")
    construct.set_defaults(handler=cmd_construct)

    verify = commands.add_parser("verify", help="decide a property")
    verify.add_argument("--in", dest="input", required=True)
    verify.add_argument("--prop", choices=[*properties, "all"], required=True)
    verify.add_argument("--t", type=_positive, required=True)
    verify.add_argument("--T", type=_positive, default=None,
                        help="group coalition bound (grouped files only)")
    verify.add_argument("--jobs", type=_positive, default=default_jobs())
    verify.add_argument("--budget", type=_positive, default=None,
                        help="ceiling on enumerated candidate words")
    verify.add_argument("--format", choices=FORMATS, default="text")
    verify.set_defaults(handler=cmd_verify)

    repro = commands.add_parser("repro", help="recompute a worked example")
    repro.add_argument("name", choices=list(reproductions))
    repro.add_argument("--format", choices=FORMATS, default="text")
    repro.set_defaults(handler=cmd_repro)

    return parser


def _log_level(args: argparse.Namespace) -> int:
    if args.log_level is not None:
        return getattr(logging, args.log_level)
    if args.verbose >= 2:
        return logging.DEBUG
    if args.verbose == 1:
        return logging.INFO
    return logging.WARNING


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=_log_level(args),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except (FingerprintCodeError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
