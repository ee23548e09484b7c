#!/usr/bin/env python3
"""
Braided Algebra Checker - Command-Line Entry Point

Runs exact symbolic verifications of identities in braided matrix algebras.
Features:
  - Built-in braidings (flip, super-flip, Drinfeld-Jimbo) or R-matrix files
  - Reflection equation algebras: symmetric polynomials, Cayley-Hamilton,
    representations, braided Lie brackets
  - Braided Yangians and their q = 1 limit to Gaudin models
  - One JSON report per line on stdout, optional copy in a report file

Dependencies:
  - sympy
  - pandas
"""
import argparse
import os
import sys

# Add the src directory to the Python path for imports
current_dir = os.path.dirname(os.path.abspath(__file__))
src_dir = os.path.join(current_dir, 'src')
sys.path.insert(0, src_dir)

from src.config.constants import BRAIDING_FAMILIES, STATUS_FAIL
from src.core.checks import check_names, run_check, run_suite
from src.core.errors import UnknownCheckError
from src.core.reports import write_reports

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact verification of identities in braided matrix algebras.")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--check", metavar="NAME", help="run one named check")
    target.add_argument("--suite", choices=("quick", "full"), help="run a suite of checks")
    target.add_argument("--list", action="store_true", help="list the check names and exit")
    parser.add_argument("--family", choices=BRAIDING_FAMILIES, help="built-in braiding family")
    parser.add_argument("--n", type=int, help="dimension of V")
    parser.add_argument("--rmatrix", metavar="PATH", help="R-matrix file instead of a family")
    parser.add_argument("--level-cutoff", type=int, metavar="D", help="Yangian level cutoff")
    parser.add_argument("--sites", metavar="CSV", help="evaluation points, e.g. 1,2 or 1/2,3")
    parser.add_argument("--k", type=int, help="first order parameter")
    parser.add_argument("--l", type=int, help="second order parameter")
    parser.add_argument("--which", choices=("vector", "covector", "adjoint"),
                        help="representation to check")
    parser.add_argument("--element", choices=("e", "p"), help="symmetric element for centrality")
    parser.add_argument("--out", metavar="PATH", help="also write the reports to this file")
    parser.add_argument("--verbose", action="store_true", help="progress messages on stderr")
    return parser


def collect_params(args: argparse.Namespace) -> dict:
    """Parameters given on the command line, under their check names."""
    names = {"family": "family", "n": "n", "rmatrix": "rmatrix", "level_cutoff": "level-cutoff",
             "sites": "sites", "k": "k", "l": "l", "which": "which", "element": "element"}
    return {key: getattr(args, attr) for attr, key in names.items()
            if getattr(args, attr) is not None}


def main(argv=None) -> int:
    """Main command-line entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    if args.list:
        print("\n".join(check_names()))
        return EXIT_OK

    log_func = None
    if args.verbose:
        def log_func(message):
            print(message, file=sys.stderr, flush=True)

    params = collect_params(args)
    try:
        if args.check:
            reports = [run_check(args.check, params, log_func)]
        else:
            # suite entries keep their own braiding; only the truncation settings carry over
            overrides = {k: v for k, v in params.items() if k in ("level-cutoff", "sites")}
            reports = run_suite(args.suite, overrides, log_func)
    except UnknownCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    for report in reports:
        print(report.to_json(), flush=True)
    if args.out:
        write_reports(reports, args.out)
    return EXIT_OK if all(r.status != STATUS_FAIL for r in reports) else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
