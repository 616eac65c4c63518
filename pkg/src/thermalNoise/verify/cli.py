#!/usr/bin/env python3
"""
Command-line interface for the cross-representation check.
"""

import argparse
import logging
import sys

from thermalNoise.experiments.sweep import parse_grid
from thermalNoise.utils.config import DEFAULT_GRID, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, get_default_seed
from thermalNoise.utils.logging import setup_logging
from thermalNoise.verify.verify import DEFAULT_VERIFY_TOL, run_verification

# Configure logging
logger = logging.getLogger(__name__)


def add_arguments(parser):
    """Add the ``verify`` arguments to a parser."""
    parser.add_argument("--grid", default=DEFAULT_GRID, help=f"Values used for both p and gamma (default: {DEFAULT_GRID})")
    parser.add_argument("--seed", type=int, help="Seed of the random mixed input (default: THERMALNOISE_SEED or 0)")
    parser.add_argument("--tol", type=float, default=DEFAULT_VERIFY_TOL, help=f"Largest residual that passes (default: {DEFAULT_VERIFY_TOL:g})")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")


def parse_args(args=None):
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(description="Check that all thermal noise representations agree.")
    add_arguments(parser)
    return parser.parse_args(args)


def run_with_args(args):
    """Run the verification and print the largest residual."""
    # Set logging level
    if args.verbose:
        logging.getLogger("thermalNoise").setLevel(logging.DEBUG)

    try:
        grid = parse_grid(args.grid)
        seed = args.seed if args.seed is not None else get_default_seed()
        report = run_verification(grid, seed=seed, tol=args.tol)
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE

    print(f"max residual: {report.max_residual:.3e} ({report.n_cases} cases)")
    if not report.passed:
        logger.error(f"Verification failed: {report.summary()} exceeds {report.tol:g}")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main():
    """Main entry point for the script."""
    setup_logging()
    args = parse_args()
    return run_with_args(args)


if __name__ == "__main__":
    sys.exit(main())
