#!/usr/bin/env python3
"""
Command-line interface for exporting the simulator circuit as OpenQASM 2.0.
"""

import argparse
import logging
import sys

from thermalNoise.channel import GadParams
from thermalNoise.circuit import Q_WIRE, gad_simulator_circuit
from thermalNoise.qasm.qasm import emit
from thermalNoise.utils.config import EXIT_IO_ERROR, EXIT_OK, EXIT_USAGE, resolve_output_path
from thermalNoise.utils.logging import setup_logging

# Configure logging
logger = logging.getLogger(__name__)


def add_arguments(parser):
    """Add the ``qasm`` arguments to a parser."""
    parser.add_argument("--p", type=float, required=True, help="Equilibrium ground-state probability p in [0, 1]")
    parser.add_argument("--gamma", type=float, required=True, help="Coupling factor gamma in [0, 1]")
    parser.add_argument("--out", help="File to write; relative paths resolve against THERMALNOISE_OUTPUT_DIR (default: print)")
    parser.add_argument("--measure", action="store_true", help="Append a measurement of the principal qubit")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")


def parse_args(args=None):
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(description="Emit the thermal noise simulator circuit as OpenQASM 2.0.")
    add_arguments(parser)
    return parser.parse_args(args)


def run_with_args(args):
    """Emit the circuit with the given arguments."""
    # Set logging level
    if args.verbose:
        logging.getLogger("thermalNoise").setLevel(logging.DEBUG)

    try:
        circuit = gad_simulator_circuit(GadParams(args.p, args.gamma))
        text = emit(circuit, measure=[Q_WIRE] if args.measure else None)
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE

    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK

    path = resolve_output_path(args.out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        logger.error(f"Cannot write QASM to {path}: {e}")
        return EXIT_IO_ERROR
    logger.info(f"Wrote {len(circuit)} gates to {path}")
    return EXIT_OK


def main():
    """Main entry point for the script."""
    setup_logging()
    args = parse_args()
    return run_with_args(args)


if __name__ == "__main__":
    sys.exit(main())
