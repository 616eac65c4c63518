#!/usr/bin/env python3
"""
Command-line interface for parameter sweeps.
"""

import argparse
import logging
import sys

from thermalNoise.experiments.sweep import (
    PRESETS,
    SWEPT_PARAMETERS,
    SweepSpec,
    export_csv,
    format_csv,
    parse_grid,
    run_sweep,
)
from thermalNoise.states import parse_state_token
from thermalNoise.utils.config import (
    DEFAULT_GRID,
    EXIT_IO_ERROR,
    EXIT_OK,
    EXIT_USAGE,
    get_default_seed,
    resolve_output_path,
)
from thermalNoise.utils.logging import setup_logging

# Configure logging
logger = logging.getLogger(__name__)


def add_arguments(parser):
    """Add the ``sweep`` arguments to a parser."""
    parser.add_argument("--preset", choices=sorted(PRESETS), help="Start from a named sweep; other flags override it")
    parser.add_argument("--vary", choices=SWEPT_PARAMETERS, help="The parameter to sweep")
    parser.add_argument("--fixed", help="The other parameter, as NAME=VALUE (e.g. p=0.5) or a bare value")
    parser.add_argument("--input", help="Input state: 0, 1, +, -, +i, -i or re:im amplitudes (default: 0)")
    parser.add_argument("--reference", help="Measurement reference state (default: the input state)")
    parser.add_argument("--grid", default=DEFAULT_GRID, help=f"Grid as start:stop:step, both ends included (default: {DEFAULT_GRID})")
    parser.add_argument("--shots", type=int, default=0, help="Binomial shots per point; 0 disables sampling")
    parser.add_argument("--seed", type=int, help="RNG seed (default: THERMALNOISE_SEED or 0)")
    parser.add_argument("--workers", type=int, default=1, help="Threads evaluating grid points")
    parser.add_argument("--out", help="CSV file to write; relative paths resolve against THERMALNOISE_OUTPUT_DIR (default: print)")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")


def parse_args(args=None):
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(description="Sweep p or gamma and record overlap probabilities.")
    add_arguments(parser)
    return parser.parse_args(args)


def parse_fixed(text: str, vary: str) -> float:
    """
    Parse ``--fixed`` as ``NAME=VALUE`` or a bare value.

    Raises:
        ValueError: If the name is the swept parameter or the value is not a number
    """
    other = "gamma" if vary == "p" else "p"
    name, sep, value = text.partition("=")
    if not sep:
        name, value = other, text
    if name.strip() != other:
        raise ValueError(f"--fixed must set {other} when sweeping {vary}, got {text!r}")
    try:
        return float(value)
    except ValueError:
        raise ValueError(f"Malformed --fixed value {text!r}") from None


def build_spec(args) -> SweepSpec:
    """
    Build the sweep from the flags, starting from ``--preset`` when given.

    Raises:
        ValueError: If a required flag is missing or any value is invalid
    """
    preset = PRESETS[args.preset] if args.preset else None
    vary = args.vary or (preset.swept if preset else None)
    if vary is None:
        raise ValueError("Give --vary or --preset")

    if args.fixed is not None:
        fixed = parse_fixed(args.fixed, vary)
    elif preset is not None and preset.swept == vary:
        fixed = preset.fixed
    else:
        raise ValueError("Give --fixed")

    input_label = args.input or (preset.input_label if preset else "0")
    reference = parse_state_token(args.reference) if args.reference else None
    seed = args.seed if args.seed is not None else get_default_seed()
    keeps_curve = preset is not None and (vary, fixed, input_label) == (preset.swept, preset.fixed, preset.input_label)

    return SweepSpec(
        vary,
        parse_grid(args.grid),
        fixed,
        parse_state_token(input_label),
        reference_state=reference,
        shots=args.shots,
        seed=seed,
        input_label=input_label,
        curve=preset.curve if keeps_curve and reference is None else None,
    )


def run_with_args(args):
    """Run the sweep with the given arguments."""
    # Set logging level
    if args.verbose:
        logging.getLogger("thermalNoise").setLevel(logging.DEBUG)

    try:
        spec = build_spec(args)
        result = run_sweep(spec, workers=max(1, args.workers))
    except ValueError as e:
        logger.error(f"Invalid sweep: {e}")
        return EXIT_USAGE

    curve_error = result.max_curve_error()
    if curve_error is not None:
        logger.info(f"Max |exact - {args.preset} curve| = {curve_error:.3e}")
    sampling_error = result.max_sampling_error()
    if sampling_error is not None:
        logger.info(f"Max |sampled - exact| = {sampling_error:.3e} at {spec.shots} shots")

    if args.out is None:
        sys.stdout.write(format_csv(result))
        return EXIT_OK

    try:
        export_csv(result, resolve_output_path(args.out))
    except OSError as e:
        logger.error(str(e))
        return EXIT_IO_ERROR
    return EXIT_OK


def main():
    """Main entry point for the script."""
    setup_logging()
    args = parse_args()
    return run_with_args(args)


if __name__ == "__main__":
    sys.exit(main())
