#!/usr/bin/env python3
"""
Command-line interface for applying the thermal noise to one state.
"""

import argparse
import logging
import sys

import numpy as np

from thermalNoise.channel.channel import (
    GadParams,
    RelaxationSpec,
    ThermalBathSpec,
    apply_channel,
    gad_closed_form,
    gad_kraus,
    gamma_from_time,
    p_from_temperature,
)
from thermalNoise.circuit import gad_simulator_circuit, simulate_channel
from thermalNoise.dilation import attenuator_model, canonical_dilation, reduce
from thermalNoise.states import overlap_probability, parse_state_token, pure_to_density
from thermalNoise.utils.config import EXIT_OK, EXIT_USAGE
from thermalNoise.utils.logging import setup_logging

# Configure logging
logger = logging.getLogger(__name__)

METHODS = ("kraus", "closed-form", "dilation", "attenuator", "circuit")


def add_arguments(parser):
    """Add the ``apply`` arguments to a parser."""
    parser.add_argument("--p", type=float, help="Equilibrium ground-state probability p in [0, 1]")
    parser.add_argument("--gap", type=float, help="Energy gap E1 - E0, used with --temperature instead of --p")
    parser.add_argument("--temperature", type=float, help="Bath temperature, used with --gap instead of --p")
    parser.add_argument("--kb", type=float, default=1.0, help="Boltzmann constant for --gap/--temperature (default: 1)")
    parser.add_argument("--gamma", type=float, help="Coupling factor gamma in [0, 1]")
    parser.add_argument("--time", type=float, help="Interaction time, used with --tau1 instead of --gamma")
    parser.add_argument("--tau1", type=float, help="Relaxation time, used with --time instead of --gamma")
    parser.add_argument("--input", default="0", help="Input state: 0, 1, +, -, +i, -i or re:im amplitudes (default: 0)")
    parser.add_argument("--reference", help="Also print the overlap probability with this state")
    parser.add_argument("--method", choices=METHODS, default="kraus", help="Channel representation to use (default: kraus)")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")


def parse_args(args=None):
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(description="Apply the qubit thermal noise to one input state.")
    add_arguments(parser)
    return parser.parse_args(args)


def resolve_params(args) -> GadParams:
    """
    Turn the ``--p``/``--gap``/``--temperature`` and ``--gamma``/``--time``/``--tau1`` flags into parameters.

    Raises:
        ValueError: If neither or both forms of a parameter are given, or a value is invalid
    """
    by_temperature = args.gap is not None or args.temperature is not None
    if (args.p is None) == (not by_temperature):
        raise ValueError("Give either --p or both --gap and --temperature")
    if args.p is not None:
        p = args.p
    else:
        if args.gap is None or args.temperature is None:
            raise ValueError("--gap and --temperature must be given together")
        p = p_from_temperature(ThermalBathSpec(args.gap, args.temperature, args.kb))
        logger.info(f"Bath at T={args.temperature:g} gives p={p:.12g}")

    by_time = args.time is not None or args.tau1 is not None
    if (args.gamma is None) == (not by_time):
        raise ValueError("Give either --gamma or both --time and --tau1")
    if args.gamma is not None:
        gamma = args.gamma
    else:
        if args.time is None or args.tau1 is None:
            raise ValueError("--time and --tau1 must be given together")
        gamma = gamma_from_time(RelaxationSpec(args.time, args.tau1))
        logger.info(f"Interaction time t={args.time:g} gives gamma={gamma:.12g}")

    return GadParams(p, gamma)


def apply_method(method: str, params: GadParams, rho):
    """Apply the thermal noise through the named representation."""
    if method == "kraus":
        return apply_channel(gad_kraus(params), rho)
    if method == "closed-form":
        return gad_closed_form(params, rho)
    if method == "dilation":
        return reduce(canonical_dilation(gad_kraus(params)), rho)
    if method == "attenuator":
        return reduce(attenuator_model(params), rho)
    if method == "circuit":
        return simulate_channel(gad_simulator_circuit(params), rho)
    raise ValueError(f"Unknown method {method!r}; expected one of {', '.join(METHODS)}")


def run_with_args(args):
    """Apply the channel with the given arguments and print the output state."""
    # Set logging level
    if args.verbose:
        logging.getLogger("thermalNoise").setLevel(logging.DEBUG)

    try:
        params = resolve_params(args)
        state = parse_state_token(args.input)
        output = apply_method(args.method, params, pure_to_density(state))
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE

    print(f"{params!r} via {args.method}")
    print(np.array2string(output.matrix, precision=12, suppress_small=True))
    if args.reference is not None:
        try:
            reference = parse_state_token(args.reference)
            probability = overlap_probability(output, reference)
        except ValueError as e:
            logger.error(f"Invalid reference: {e}")
            return EXIT_USAGE
        print(f"Pr{{{args.reference}}} = {probability:.12g}")
    return EXIT_OK


def main():
    """Main entry point for the script."""
    setup_logging()
    args = parse_args()
    return run_with_args(args)


if __name__ == "__main__":
    sys.exit(main())
