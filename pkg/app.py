"""
Frobenius Verifier CLI
Runs the verification suites and prints a text or JSON report
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import config
from models.report import RunSummary
from repository.suites import VerificationRunner

logger = logging.getLogger(__name__)

SUBCOMMANDS = (
    "verify-discrete",
    "verify-homology-model",
    "verify-frob1",
    "qloc-dims",
    "verify-derham",
    "obstruction",
    "all",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobverify",
        description="Verify the cochain-level homotopy Frob1 structure on the circle and its genus-two obstruction",
    )
    parser.add_argument("command", choices=SUBCOMMANDS, help="Suite to run")
    parser.add_argument("--cells", type=int, default=config.DEFAULT_CELLS,
                        help=f"Cells in the circle subdivision (default: {config.DEFAULT_CELLS})")
    parser.add_argument("--ell", type=int, default=config.DEFAULT_ELL,
                        help=f"Quasilocality radius for qloc-dims (default: {config.DEFAULT_ELL})")
    parser.add_argument("--m", type=int, default=1, help="Number of inputs for qloc-dims (default: 1)")
    parser.add_argument("--n", type=int, default=1, help="Number of outputs for qloc-dims (default: 1)")
    parser.add_argument("--epsilon", type=float, default=config.DEFAULT_EPSILON,
                        help=f"Bump half-width (default: {config.DEFAULT_EPSILON})")
    parser.add_argument("--step-div", type=int, default=config.DEFAULT_STEP_DIV,
                        help=f"Grid step is epsilon/K (default: {config.DEFAULT_STEP_DIV})")
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED,
                        help=f"Seed for the randomized checks (default: {config.DEFAULT_SEED})")
    parser.add_argument("--json", action="store_true", help="Print a single JSON document")
    parser.add_argument("--fail-fast", action="store_true", help="With 'all', stop after the first failing suite")
    parser.add_argument("--out", type=Path, default=None, help="Also write the JSON report to this file")
    parser.add_argument("--log-level", default=config.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Log level for stderr")
    return parser


def run(args: argparse.Namespace) -> RunSummary:
    runner = VerificationRunner(
        cells=args.cells,
        ell=args.ell,
        epsilon=args.epsilon,
        step_div=args.step_div,
        seed=args.seed,
    )
    if args.command == "all":
        return runner.run_all(fail_fast=args.fail_fast)
    suites = {
        "verify-discrete": runner.verify_discrete,
        "verify-homology-model": runner.verify_homology_model,
        "verify-frob1": runner.verify_frob1,
        "qloc-dims": lambda: runner.qloc_dims(args.m, args.n),
        "verify-derham": runner.verify_derham,
        "obstruction": runner.obstruction,
    }
    return RunSummary(reports=[suites[args.command]()])


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logger.info(f"Running {args.command}")

    summary = run(args)
    document = summary.model_dump_json(indent=2)
    if args.json:
        print(document)
    else:
        print("\n\n".join(report.to_text() for report in summary.reports))
    if args.out is not None:
        args.out.write_text(document, encoding="utf-8")
        logger.info(f"Report written to {args.out}")

    if not summary.passed:
        for record in summary.failing():
            print(f"FAILED {record.to_text()}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
