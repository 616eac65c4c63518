#!/usr/bin/env python3
"""
Cross-Representation Verification

Evaluates the thermal noise on a grid of ``(p, gamma)`` values and a set of
input states in five independent ways and reports the largest entrywise
disagreement between any two of them:

- ``kraus``: the operator-sum over the four Kraus operators
- ``closed_form``: the matrix elements written out directly
- ``canonical_dilation``: the Stinespring unitary completed from the Kraus set
- ``attenuator``: the thermal attenuator with a purified environment
- ``circuit``: the dense simulation of the gate-level simulator circuit
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from thermalNoise.channel import GadParams, apply_channel, gad_closed_form, gad_kraus
from thermalNoise.circuit import gad_simulator_circuit, simulate_channel
from thermalNoise.dilation import attenuator_model, canonical_dilation, reduce
from thermalNoise.states import (
    DensityOperator,
    named_state,
    pure_to_density,
    random_density_operator,
)

# Configure logging
logger = logging.getLogger(__name__)

DEFAULT_VERIFY_TOL = 1e-10
REPRESENTATIONS = ("kraus", "closed_form", "canonical_dilation", "attenuator", "circuit")
DEFAULT_STATE_LABELS = ("0", "1", "+", "-", "+i")


class VerificationReport:
    """The largest pairwise residual over all cases and where it occurred."""

    def __init__(
        self,
        max_residual: float,
        worst_pair: Optional[Tuple[str, str]],
        worst_p: Optional[float],
        worst_gamma: Optional[float],
        worst_state: Optional[str],
        n_cases: int,
        pair_residuals: Dict[Tuple[str, str], float],
        tol: float = DEFAULT_VERIFY_TOL,
    ):
        self.max_residual = max_residual
        self.worst_pair = worst_pair
        self.worst_p = worst_p
        self.worst_gamma = worst_gamma
        self.worst_state = worst_state
        self.n_cases = n_cases
        self.pair_residuals = pair_residuals
        self.tol = tol

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    def summary(self) -> str:
        """Return a one-line human-readable summary."""
        text = f"max residual {self.max_residual:.3e} over {self.n_cases} cases"
        if self.worst_pair is not None:
            text += (
                f" (worst: {self.worst_pair[0]} vs {self.worst_pair[1]} at "
                f"p={self.worst_p:g}, gamma={self.worst_gamma:g}, state {self.worst_state})"
            )
        return text

    def __repr__(self) -> str:
        return f"VerificationReport(max_residual={self.max_residual:.3e}, n_cases={self.n_cases}, passed={self.passed})"


def default_states(seed: int = 0) -> List[Tuple[str, DensityOperator]]:
    """Return the named basis and superposition inputs plus one seeded random mixed state."""
    states = [(label, pure_to_density(named_state(label))) for label in DEFAULT_STATE_LABELS]
    rng = np.random.default_rng(seed)
    states.append((f"random(seed={seed})", random_density_operator(rng)))
    return states


def channel_outputs(params: GadParams, rho: DensityOperator) -> Dict[str, np.ndarray]:
    """Return the output matrix of every representation for one input state."""
    return _outputs(params, [("rho", rho)])["rho"]


def _outputs(
    params: GadParams, states: Sequence[Tuple[str, DensityOperator]]
) -> Dict[str, Dict[str, np.ndarray]]:
    kraus = gad_kraus(params)
    canonical = canonical_dilation(kraus)
    attenuator = attenuator_model(params)
    circuit = gad_simulator_circuit(params)

    outputs = {}
    for label, rho in states:
        outputs[label] = {
            "kraus": apply_channel(kraus, rho).matrix,
            "closed_form": gad_closed_form(params, rho).matrix,
            "canonical_dilation": reduce(canonical, rho).matrix,
            "attenuator": reduce(attenuator, rho).matrix,
            "circuit": simulate_channel(circuit, rho).matrix,
        }
    return outputs


def run_verification(
    grid: Optional[Sequence[float]] = None,
    seed: int = 0,
    tol: float = DEFAULT_VERIFY_TOL,
    states: Optional[Sequence[Tuple[str, DensityOperator]]] = None,
) -> VerificationReport:
    """
    Compare all representations pairwise on ``grid x grid`` and the input states.

    Args:
        grid: Values used for both ``p`` and ``gamma``; 0, 0.1, ..., 1 when omitted
        seed: Seed of the random mixed input state
        tol: Pass threshold on the largest residual
        states: Labelled input states; ``default_states(seed)`` when omitted

    Returns:
        The report; it passes when the largest residual is at most ``tol``
    """
    grid = [round(0.1 * i, 12) for i in range(11)] if grid is None else list(grid)
    states = default_states(seed) if states is None else list(states)
    pairs = list(combinations(REPRESENTATIONS, 2))
    pair_residuals = {pair: 0.0 for pair in pairs}
    worst = (0.0, None, None, None, None)
    n_cases = 0

    for p in grid:
        for gamma in grid:
            params = GadParams(p, gamma)
            for label, outputs in _outputs(params, states).items():
                n_cases += 1
                for first, second in pairs:
                    residual = float(np.max(np.abs(outputs[first] - outputs[second])))
                    if residual > pair_residuals[(first, second)]:
                        pair_residuals[(first, second)] = residual
                    if residual > worst[0]:
                        worst = (residual, (first, second), p, gamma, label)

    report = VerificationReport(*worst, n_cases=n_cases, pair_residuals=pair_residuals, tol=tol)
    logger.info(f"Verification: {report.summary()}")
    return report
