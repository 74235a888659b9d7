"""
Command-line front-end.

    kannanfix validate  FILE
    kannanfix analyze   FILE --map S [--aux T] [--exclude-clamp]
    kannanfix solve     FILE --map S --start X [--aux T] [--max-iter M]
                             [--check-bounds LAMBDA] [--window W]
    kannanfix search-t  FILE --map S --lambda-cap LAMBDA [--aux T]
                             [--search-space permutations|injections]
                             [--max-points N] [--exclude-clamp]

Every command prints a human-readable report to stdout; `--report PATH`
additionally writes the machine-readable JSON report. Exit codes:
0 success, 1 negative finding, 2 input error, 3 search budget exceeded.
"""

import argparse
import sys

from typing import Optional

from kannanfix.cli.commands import (EXIT_BUDGET, EXIT_INPUT, cmd_analyze,
                                    cmd_search_t, cmd_solve, cmd_validate,
                                    error_report, render)
from kannanfix.contraction.certificate import SearchSpace
from kannanfix.space.rational import parse_rational
from kannanfix.utility.boilerplate import create_logger
from kannanfix.utility.errors import DocumentError, SearchSpaceTooLarge


logger = create_logger("cli")


def rational_argument(text):

    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def positive_int(text):

    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, "
                                         f"got {value}")
    return value


def create_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog="kannanfix",
        description="Kannan-type contraction analysis on finite metric and "
                    "generalized metric spaces")

    subparsers = parser.add_subparsers(dest="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="space document (JSON)")
    common.add_argument("--report", metavar="PATH",
                        help="write the machine-readable report to PATH")

    subparsers.add_parser("validate", parents=[common],
                          help="check the axioms of the declared kind")

    analyze = subparsers.add_parser(
        "analyze", parents=[common],
        help="contraction constants and theorem applicability")
    analyze.add_argument("--map", required=True, help="self-map S")
    analyze.add_argument("--aux", help="auxiliary map T (default identity)")
    analyze.add_argument("--exclude-clamp", action="store_true",
                         help="leave out pairs touching a truncation clamp")

    solve = subparsers.add_parser("solve", parents=[common],
                                  help="Picard iteration")
    solve.add_argument("--map", required=True, help="self-map S")
    solve.add_argument("--start", required=True, help="starting point")
    solve.add_argument("--aux", help="auxiliary map T for the gap records")
    solve.add_argument("--max-iter", type=positive_int, default=None,
                       help="iteration cap")
    solve.add_argument("--check-bounds", type=rational_argument,
                       metavar="LAMBDA", default=None,
                       help="verify the convergence bounds for LAMBDA")
    solve.add_argument("--window", type=positive_int, default=None,
                       help="number of iterates in the tail check")

    search = subparsers.add_parser("search-t", parents=[common],
                                   help="search a certifying auxiliary map")
    search.add_argument("--map", required=True, help="self-map S")
    search.add_argument("--lambda-cap", type=rational_argument,
                        required=True, metavar="LAMBDA")
    search.add_argument("--aux", help="also verify this T at the cap")
    search.add_argument("--search-space", default="permutations",
                        choices=[s.value for s in SearchSpace])
    search.add_argument("--max-points", type=positive_int, default=None,
                        help="largest space the search accepts")
    search.add_argument("--exclude-clamp", action="store_true")
    search.add_argument("--verbose", action="store_true",
                        help="log search progress")

    return parser


def _run(args):

    if args.command == "validate":
        return cmd_validate(args.file)

    if args.command == "analyze":
        return cmd_analyze(args.file, args.map, args.aux, args.exclude_clamp)

    if args.command == "solve":
        return cmd_solve(args.file, args.map, args.start, args.aux,
                         args.max_iter, args.check_bounds, args.window)

    return cmd_search_t(args.file, args.map, args.lambda_cap, args.aux,
                        args.search_space, args.max_points,
                        args.exclude_clamp, args.verbose)


def main(argv: Optional[list] = None) -> int:

    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_INPUT

    inputs = {"file": args.file}

    try:
        report = _run(args)

    except DocumentError as e:
        logger.error(e.diagnostic())
        report = error_report(args.command, EXIT_INPUT, inputs, e)

    except SearchSpaceTooLarge as e:
        logger.error(str(e))
        report = error_report(args.command, EXIT_BUDGET, inputs, e)

    # MalformedSpace, LambdaOutOfRange and bad map tables
    except ValueError as e:
        logger.error(str(e))
        report = error_report(args.command, EXIT_INPUT, inputs, e)

    sys.stdout.write(render(report))

    if args.report is not None:
        try:
            report.write(args.report)
        except OSError as e:
            logger.error(f"cannot write report {args.report}: {e.strerror}")
            return EXIT_INPUT

    return report.exitCode


if __name__ == "__main__":
    sys.exit(main())
