#!/usr/bin/env python3
"""
Thermal Noise Channel

The qubit thermal noise, also known as generalized amplitude damping (GAD),
with parameters ``p`` (ground-state population of the bath equilibrium) and
``gamma`` (coupling factor). This module builds its four Kraus operators,
applies channels in operator-sum form, evaluates the closed-form output and
maps bath temperature and interaction time onto ``(p, gamma)``.
"""

import logging
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from thermalNoise.linalg import as_matrix
from thermalNoise.states import DensityOperator, validate_probability

# Configure logging
logger = logging.getLogger(__name__)

COMPLETENESS_TOL = 1e-10
K_BOLTZMANN_SI = 1.380649e-23


class GadParams:
    """The ``(p, gamma)`` parameters of the thermal noise."""

    def __init__(self, p: float, gamma: float):
        """
        Initialize the parameters.

        Args:
            p: Equilibrium ground-state probability in [0, 1]
            gamma: Coupling factor in [0, 1]

        Raises:
            ValueError: If either value lies outside [0, 1]
        """
        self.p = validate_probability(p, "p")
        self.gamma = validate_probability(gamma, "gamma")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GadParams):
            return NotImplemented
        return (self.p, self.gamma) == (other.p, other.gamma)

    def __hash__(self) -> int:
        return hash((self.p, self.gamma))

    def __repr__(self) -> str:
        return f"GadParams(p={self.p!r}, gamma={self.gamma!r})"


class ThermalBathSpec:
    """A two-level system in contact with a bath at temperature ``T``."""

    def __init__(self, energy_gap: float, temperature: float, boltzmann_constant: float = 1.0):
        """
        Initialize the bath description.

        Args:
            energy_gap: ``E1 - E0``, in the energy unit of ``boltzmann_constant * T``
            temperature: Bath temperature ``T``
            boltzmann_constant: ``k_B``; 1 for dimensionless ratios,
                ``K_BOLTZMANN_SI`` for joules and kelvin

        Raises:
            ValueError: If any value is not a finite positive number
        """
        for name, value in (
            ("energy_gap", energy_gap),
            ("temperature", temperature),
            ("boltzmann_constant", boltzmann_constant),
        ):
            if not np.isfinite(value) or value <= 0:
                raise ValueError(f"{name} must be finite and positive, got {value}")
        self.energy_gap = float(energy_gap)
        self.temperature = float(temperature)
        self.boltzmann_constant = float(boltzmann_constant)

    def __repr__(self) -> str:
        return (
            f"ThermalBathSpec(energy_gap={self.energy_gap!r}, temperature={self.temperature!r}, "
            f"boltzmann_constant={self.boltzmann_constant!r})"
        )


class RelaxationSpec:
    """An interaction of duration ``t`` with a bath of relaxation time ``tau1``."""

    def __init__(self, interaction_time: float, tau1: float):
        """
        Initialize the relaxation description.

        Raises:
            ValueError: If ``interaction_time < 0`` or ``tau1 <= 0``
        """
        if not np.isfinite(interaction_time) or interaction_time < 0:
            raise ValueError(f"interaction_time must be finite and >= 0, got {interaction_time}")
        if not np.isfinite(tau1) or tau1 <= 0:
            raise ValueError(f"tau1 must be finite and > 0, got {tau1}")
        self.interaction_time = float(interaction_time)
        self.tau1 = float(tau1)

    def __repr__(self) -> str:
        return f"RelaxationSpec(interaction_time={self.interaction_time!r}, tau1={self.tau1!r})"


class KrausChannel:
    """An ordered list of Kraus operators acting on one square space."""

    def __init__(self, operators: Iterable, require_complete: bool = True, tol: float = COMPLETENESS_TOL):
        """
        Initialize the channel.

        Args:
            operators: The Kraus operators, all square and of the same dimension
            require_complete: Whether to enforce ``sum_k K_k^dagger K_k = I``
            tol: Tolerance of the completeness check

        Raises:
            ValueError: If the operators are inconsistent or, when required,
                incomplete
        """
        ops = [as_matrix(op, f"Kraus operator {i}").copy() for i, op in enumerate(operators)]
        if not ops:
            raise ValueError("A Kraus channel needs at least one operator")
        dim = ops[0].shape[0]
        for i, op in enumerate(ops):
            if op.shape != (dim, dim):
                raise ValueError(
                    f"Kraus operator {i} has shape {op.shape}, expected ({dim}, {dim})"
                )
            op.flags.writeable = False
        self.operators: Tuple[np.ndarray, ...] = tuple(ops)

        if require_complete:
            residual = completeness_residual(self.operators)
            if residual > tol:
                raise ValueError(f"Kraus operators are not complete: residual {residual:.3e}")

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]

    def __len__(self) -> int:
        return len(self.operators)

    def __iter__(self):
        return iter(self.operators)

    def __repr__(self) -> str:
        return f"KrausChannel(num_operators={len(self)}, dim={self.dim})"


class CPTPReport:
    """Outcome of a completeness check on a set of Kraus operators."""

    def __init__(self, residual: float, operator_norms: List[float], tol: float):
        self.residual = residual
        self.operator_norms = operator_norms
        self.tol = tol

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol

    def __repr__(self) -> str:
        return f"CPTPReport(residual={self.residual:.3e}, passed={self.passed})"


def completeness_residual(operators: Sequence[np.ndarray]) -> float:
    """Return ``max |sum_k K_k^dagger K_k - I|``."""
    dim = operators[0].shape[0]
    total = sum(np.conj(op.T) @ op for op in operators)
    return float(np.max(np.abs(total - np.eye(dim))))


def gad_kraus(params: GadParams) -> KrausChannel:
    """
    Build the four Kraus operators of the thermal noise.

    The order is fixed: the two amplitude-damping operators weighted by
    ``sqrt(p)`` (decay towards ``|0>``) followed by the two weighted by
    ``sqrt(1-p)`` (excitation towards ``|1>``). Zero operators are kept.

    Args:
        params: The noise parameters

    Returns:
        A complete four-operator channel on one qubit
    """
    p, gamma = params.p, params.gamma
    sp, sq = np.sqrt(p), np.sqrt(1.0 - p)
    sg, sd = np.sqrt(gamma), np.sqrt(1.0 - gamma)
    operators = [
        sp * np.array([[1.0, 0.0], [0.0, sd]]),
        sp * np.array([[0.0, sg], [0.0, 0.0]]),
        sq * np.array([[sd, 0.0], [0.0, 1.0]]),
        sq * np.array([[0.0, 0.0], [sg, 0.0]]),
    ]
    return KrausChannel(operators)


def amplitude_damping_kraus(gamma: float) -> KrausChannel:
    """
    Build the two Kraus operators of zero-temperature amplitude damping.

    These are the nonzero members of ``gad_kraus(GadParams(1, gamma))``.
    """
    gamma = validate_probability(gamma, "gamma")
    operators = [
        np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - gamma)]]),
        np.array([[0.0, np.sqrt(gamma)], [0.0, 0.0]]),
    ]
    return KrausChannel(operators)


def apply_channel(ch: KrausChannel, rho: DensityOperator) -> DensityOperator:
    """
    Apply a channel in operator-sum form, ``rho -> sum_k K_k rho K_k^dagger``.

    Raises:
        ValueError: If the channel and state dimensions differ
    """
    if ch.dim != rho.dim:
        raise ValueError(f"Dimension mismatch: channel acts on {ch.dim}, state has {rho.dim}")
    out = sum(op @ rho.matrix @ np.conj(op.T) for op in ch.operators)
    return DensityOperator(out)


def gad_closed_form(params: GadParams, rho: DensityOperator) -> DensityOperator:
    """
    Evaluate the thermal noise output directly from its matrix elements.

    The populations relax as ``rho00 -> (1-gamma) rho00 + gamma p`` and the
    coherence contracts as ``rho01 -> sqrt(1-gamma) rho01``.

    Raises:
        ValueError: If ``rho`` is not a single-qubit state
    """
    if rho.dim != 2:
        raise ValueError(f"The closed form acts on one qubit, got dimension {rho.dim}")
    p, gamma = params.p, params.gamma
    rho00 = rho.matrix[0, 0].real
    rho01 = rho.matrix[0, 1]
    contraction = np.sqrt(1.0 - gamma)
    out00 = (1.0 - gamma) * rho00 + gamma * p
    out = np.array(
        [
            [out00, contraction * rho01],
            [contraction * np.conj(rho01), 1.0 - out00],
        ]
    )
    return DensityOperator(out)


def p_from_temperature(bath: ThermalBathSpec) -> float:
    """
    Map a bath temperature onto the equilibrium ground-state probability.

    Uses the Boltzmann distribution of a two-level system,
    ``p = 1 / (1 + exp(-gap / (k_B T)))``; ``p`` falls from 1 towards 1/2 as
    ``T`` grows.
    """
    ratio = bath.energy_gap / (bath.boltzmann_constant * bath.temperature)
    return float(1.0 / (1.0 + np.exp(-ratio)))


def temperature_from_p(p: float, energy_gap: float, boltzmann_constant: float = 1.0) -> float:
    """
    Invert ``p_from_temperature`` for ``p`` in the open interval (1/2, 1).

    Raises:
        ValueError: If ``p`` lies outside (1/2, 1) or the gap is not positive
    """
    p = float(p)
    if not 0.5 < p < 1.0:
        raise ValueError(f"p must lie in (1/2, 1) to correspond to a finite temperature, got {p}")
    if energy_gap <= 0 or boltzmann_constant <= 0:
        raise ValueError("energy_gap and boltzmann_constant must be positive")
    return float(energy_gap / (boltzmann_constant * np.log(p / (1.0 - p))))


def gamma_from_time(rel: RelaxationSpec) -> float:
    """Return the coupling factor ``gamma = 1 - exp(-t / tau1)``."""
    return float(-np.expm1(-rel.interaction_time / rel.tau1))


def time_from_gamma(gamma: float, tau1: float) -> float:
    """
    Return the interaction time producing ``gamma`` for relaxation time ``tau1``.

    Raises:
        ValueError: If ``gamma`` lies outside [0, 1) or ``tau1 <= 0``
    """
    gamma = float(gamma)
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"gamma must lie in [0, 1) to correspond to a finite time, got {gamma}")
    if tau1 <= 0:
        raise ValueError(f"tau1 must be > 0, got {tau1}")
    return float(-tau1 * np.log1p(-gamma))


def compose_gamma(gamma1: float, gamma2: float) -> float:
    """Return the coupling factor of two successive thermal noises with the same ``p``."""
    gamma1 = validate_probability(gamma1, "gamma1")
    gamma2 = validate_probability(gamma2, "gamma2")
    return 1.0 - (1.0 - gamma1) * (1.0 - gamma2)


def validate_cptp(ch: KrausChannel, tol: float = COMPLETENESS_TOL) -> CPTPReport:
    """
    Report how far a Kraus set is from trace preservation.

    Args:
        ch: The channel to check; build it with ``require_complete=False`` to
            inspect sets that may fail
        tol: Pass threshold on the completeness residual

    Returns:
        A report with the residual and the spectral norm of each operator
    """
    residual = completeness_residual(ch.operators)
    norms = [float(np.linalg.norm(op, 2)) for op in ch.operators]
    report = CPTPReport(residual, norms, tol)
    logger.debug(f"CPTP check: {report}")
    return report
