"""
Main entry point for the thermalNoise package.
"""

import argparse
import logging
import sys

from thermalNoise.channel import cli as apply_cli
from thermalNoise.experiments import cli as sweep_cli
from thermalNoise.qasm import cli as qasm_cli
from thermalNoise.utils.config import EXIT_OK, EXIT_USAGE
from thermalNoise.utils.logging import setup_logging
from thermalNoise.verify import cli as verify_cli

# Configure logging
logger = logging.getLogger(__name__)

COMMANDS = {
    "apply": (apply_cli, "Apply the thermal noise to one input state"),
    "sweep": (sweep_cli, "Sweep p or gamma and write overlap probabilities as CSV"),
    "qasm": (qasm_cli, "Emit the simulator circuit as OpenQASM 2.0"),
    "verify": (verify_cli, "Check that all channel representations agree"),
}


def build_parser():
    """Build the argument parser with one subcommand per tool."""
    parser = argparse.ArgumentParser(
        description="thermalNoise - simulate the qubit thermal noise (generalized amplitude damping).",
        prog="thermalnoise"
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    for name, (module, help_text) in COMMANDS.items():
        module.add_arguments(subparsers.add_parser(name, help=help_text))
    return parser


def main(argv=None):
    """Main entry point for the package."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.command not in COMMANDS:
        parser.print_help()
        return EXIT_USAGE

    setup_logging(logging.DEBUG if getattr(args, "verbose", False) else logging.INFO)
    module, _ = COMMANDS[args.command]
    return module.run_with_args(args)


if __name__ == "__main__":
    sys.exit(main())
