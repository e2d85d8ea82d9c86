"""
Miura Curve Class Group Toolkit
Command-line entry point: run session scripts, an interactive prompt, or the elliptic crosscheck
"""
import argparse
import sys
from pathlib import Path

from config.settings import (
    EXIT_ASSERTION_FAILED, EXIT_ERROR, EXIT_OK, OUTPUT_FORMAT, OUTPUT_FORMATS, ORACLE_PRIMES, logger,
)
from src.crosscheck import crosscheck
from src.errors import MiuraError
from src.interpreter import repl, run_script
from src.script_parser import parse_script


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="miura", description="Divisor class group arithmetic on Miura curves.")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=OUTPUT_FORMAT, help="Transcript format.")
    parser.add_argument(
        "--check-nonsingular",
        action="store_true",
        help="Verify every declared curve with the affine Jacobian criterion.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Evaluate a script file.")
    run.add_argument("script", type=Path, help="Path to a .miura script.")

    commands.add_parser("repl", help="Evaluate statements typed at a prompt.")

    check = commands.add_parser("crosscheck", help="Compare class addition with the chord-tangent law.")
    check.add_argument("--primes", type=int, nargs="+", default=list(ORACLE_PRIMES), help="Primes to sweep.")
    check.add_argument("--lagrange", action="store_true", help="Also check that each point times the group order is trivial.")
    return parser.parse_args(argv)


def _run(args: argparse.Namespace) -> int:
    statements = parse_script(args.script.read_text(encoding="utf-8"))
    transcript = run_script(statements, args.format, args.check_nonsingular, echo=print)
    return transcript.exit_code


def _crosscheck(args: argparse.Namespace) -> int:
    df = crosscheck(args.primes, lagrange=args.lagrange)
    if args.format == "json":
        print(df.to_json(orient="records"))
    else:
        print(df.to_string(index=False))
    failed = df["mismatches"].sum() > 0
    if args.lagrange:
        failed = failed or df["lagrange_failures"].sum() > 0
    return EXIT_ASSERTION_FAILED if failed else EXIT_OK


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        if args.command == "run":
            return _run(args)
        if args.command == "repl":
            return repl(output_format=args.format, check_nonsingular=args.check_nonsingular)
        return _crosscheck(args)
    except MiuraError as e:
        logger.error(f"{e}")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"Cannot read script: {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
