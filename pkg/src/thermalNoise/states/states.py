#!/usr/bin/env python3
"""
Quantum States

Pure states and density operators on one to three qubits, the named reference
states used by the experiments, and the overlap probability
``<ref| rho |ref>`` measured on a noisy output.
"""

import logging
from typing import Optional, Sequence, Union

import numpy as np

from thermalNoise.linalg import (
    DEFAULT_HERMITIAN_TOL,
    DEFAULT_PSD_TOL,
    as_matrix,
    as_vector,
    is_hermitian,
    is_psd,
)

# Configure logging
logger = logging.getLogger(__name__)

NORM_TOL = 1e-10
TRACE_TOL = 1e-10
MAX_QUBITS = 3

# Overlaps further than this outside [0, 1] are errors, not rounding dust
PROBABILITY_SLACK = 1e-8

# Hand-typed amplitudes further than this from unit norm are reported
RENORMALIZE_WARN_TOL = 1e-6

_SQRT_HALF = 1 / np.sqrt(2)

NAMED_STATES = {
    "0": (1.0, 0.0),
    "1": (0.0, 1.0),
    "+": (_SQRT_HALF, _SQRT_HALF),
    "-": (_SQRT_HALF, -_SQRT_HALF),
    "+i": (_SQRT_HALF, 1j * _SQRT_HALF),
    "-i": (_SQRT_HALF, -1j * _SQRT_HALF),
}


def validate_probability(value: float, name: str = "p") -> float:
    """
    Check that a value lies in [0, 1] and return it as a float.

    Raises:
        ValueError: If the value is not a finite number in [0, 1]
    """
    value = float(value)
    if not np.isfinite(value) or value < 0.0 or value > 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")
    return value


def _num_qubits(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 2 or 2 ** n != dim or n > MAX_QUBITS:
        raise ValueError(f"Dimension {dim} is not 2^n for n in 1..{MAX_QUBITS}")
    return n


class PureState:
    """A normalized state vector on one to three qubits."""

    def __init__(self, amplitudes, tol: float = NORM_TOL):
        """
        Initialize the state.

        Args:
            amplitudes: The complex amplitudes in the computational basis
            tol: Tolerance on the unit norm

        Raises:
            ValueError: If the vector is not normalized or has the wrong dimension
        """
        vector = as_vector(amplitudes, "amplitudes").copy()
        self.num_qubits = _num_qubits(vector.shape[0])
        norm = np.linalg.norm(vector)
        if abs(norm - 1.0) > tol:
            raise ValueError(f"State vector must have unit norm, got {norm:.12g}")
        vector.flags.writeable = False
        self.vector = vector

    @property
    def dim(self) -> int:
        return self.vector.shape[0]

    def density(self) -> "DensityOperator":
        """Return the projector onto this state."""
        return pure_to_density(self)

    def tensor(self, other: "PureState") -> "PureState":
        """Return the product state with this state as the more significant factor."""
        return PureState(np.kron(self.vector, other.vector))

    def __repr__(self) -> str:
        return f"PureState({np.array2string(self.vector, precision=6)})"


class DensityOperator:
    """A trace-one, Hermitian, positive semidefinite matrix on one to three qubits."""

    def __init__(
        self,
        matrix,
        hermitian_tol: float = DEFAULT_HERMITIAN_TOL,
        trace_tol: float = TRACE_TOL,
        psd_tol: float = DEFAULT_PSD_TOL,
    ):
        """
        Initialize the density operator.

        Args:
            matrix: The square matrix in the computational basis
            hermitian_tol: Tolerance on ``rho = rho^dagger``
            trace_tol: Tolerance on ``tr(rho) = 1``
            psd_tol: Floor on the smallest eigenvalue

        Raises:
            ValueError: If any density-operator invariant is violated
        """
        matrix = as_matrix(matrix, "matrix").copy()
        if matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Density operator must be square, got shape {matrix.shape}")
        self.num_qubits = _num_qubits(matrix.shape[0])
        if not is_hermitian(matrix, hermitian_tol):
            raise ValueError("Density operator must be Hermitian")
        trace = np.trace(matrix)
        if abs(trace - 1.0) > trace_tol:
            raise ValueError(f"Density operator must have unit trace, got {trace:.12g}")
        if not is_psd(matrix, psd_tol):
            raise ValueError("Density operator must be positive semidefinite")
        matrix.flags.writeable = False
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"DensityOperator({np.array2string(self.matrix, precision=6)})"


def pure_to_density(s: PureState) -> DensityOperator:
    """Return ``|s><s|``."""
    return DensityOperator(np.outer(s.vector, np.conj(s.vector)))


def ket_p(p: float) -> PureState:
    """
    Return the control state ``sqrt(p)|0> + sqrt(1-p)|1>``.

    Raises:
        ValueError: If ``p`` lies outside [0, 1]
    """
    p = validate_probability(p, "p")
    return PureState([np.sqrt(p), np.sqrt(1.0 - p)])


def equilibrium_state(p: float) -> DensityOperator:
    """
    Return the thermalized state ``diag(p, 1-p)``.

    Raises:
        ValueError: If ``p`` lies outside [0, 1]
    """
    p = validate_probability(p, "p")
    return DensityOperator(np.diag([p, 1.0 - p]))


def purified_equilibrium(p: float) -> PureState:
    """
    Return the two-qubit purification ``sqrt(p)|00> + sqrt(1-p)|11>`` of ``diag(p, 1-p)``.

    Raises:
        ValueError: If ``p`` lies outside [0, 1]
    """
    p = validate_probability(p, "p")
    return PureState([np.sqrt(p), 0.0, 0.0, np.sqrt(1.0 - p)])


def basis_state(bits: str) -> PureState:
    """
    Return the computational basis state labelled by a bit string, e.g. ``"010"``.

    The leftmost bit addresses the most significant qubit.
    """
    if not bits or any(b not in "01" for b in bits):
        raise ValueError(f"Basis label must be a non-empty bit string, got {bits!r}")
    vector = np.zeros(2 ** len(bits), dtype=np.complex128)
    vector[int(bits, 2)] = 1.0
    return PureState(vector)


def named_state(label: str) -> PureState:
    """
    Return one of the named single-qubit states ``0, 1, +, -, +i, -i``.

    Raises:
        ValueError: If the label is unknown
    """
    try:
        return PureState(NAMED_STATES[label])
    except KeyError:
        raise ValueError(
            f"Unknown state {label!r}; expected one of {', '.join(NAMED_STATES)}"
        ) from None


def _parse_complex_token(token: str) -> complex:
    parts = token.strip().split(":")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"Malformed amplitude {token!r}; expected 're' or 're:im'")


def parse_state_token(text: str) -> PureState:
    """
    Parse a command-line state description.

    Accepts a named state (``0``, ``1``, ``+``, ``-``, ``+i``, ``-i``) or a
    comma-separated list of amplitudes written as ``re:im`` (or plain ``re``),
    e.g. ``0.6:0,0:0.8``. Explicit amplitudes are renormalized, with a warning
    when the supplied norm is off by more than ``RENORMALIZE_WARN_TOL``.

    Raises:
        ValueError: If the text is neither a named state nor a valid amplitude list
    """
    text = text.strip()
    if text in NAMED_STATES:
        return named_state(text)

    try:
        amplitudes = np.array([_parse_complex_token(t) for t in text.split(",")])
    except ValueError as e:
        raise ValueError(f"Cannot parse state {text!r}: {e}") from None

    norm = np.linalg.norm(amplitudes)
    if norm == 0.0:
        raise ValueError(f"State {text!r} has zero norm")
    if abs(norm - 1.0) > RENORMALIZE_WARN_TOL:
        logger.warning(f"State {text!r} has norm {norm:.6g}; normalizing")
    return PureState(amplitudes / norm)


def overlap_probability(
    state: DensityOperator, reference: Union[PureState, Sequence[complex]]
) -> float:
    """
    Return the probability ``<ref| state |ref>`` of finding ``state`` in ``reference``.

    The value is clamped to [0, 1] after checking that it lies within
    ``PROBABILITY_SLACK`` of that interval.

    Raises:
        ValueError: If the dimensions differ or the overlap lies clearly outside [0, 1]
    """
    if not isinstance(reference, PureState):
        reference = PureState(reference)
    if state.dim != reference.dim:
        raise ValueError(
            f"Dimension mismatch: state has dimension {state.dim}, reference {reference.dim}"
        )
    ref = reference.vector
    value = float(np.real(np.vdot(ref, state.matrix @ ref)))
    if value < -PROBABILITY_SLACK or value > 1.0 + PROBABILITY_SLACK:
        raise ValueError(f"Overlap {value} lies outside [0, 1]")
    return min(1.0, max(0.0, value))


def random_pure_state(rng: Optional[np.random.Generator] = None, dim: int = 2) -> PureState:
    """Draw a Haar-random pure state of the given dimension."""
    rng = rng if rng is not None else np.random.default_rng()
    vector = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return PureState(vector / np.linalg.norm(vector))


def random_density_operator(
    rng: Optional[np.random.Generator] = None, dim: int = 2
) -> DensityOperator:
    """Draw a full-rank random mixed state from the Ginibre ensemble."""
    rng = rng if rng is not None else np.random.default_rng()
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ np.conj(g.T)
    rho = (rho + np.conj(rho.T)) / 2
    return DensityOperator(rho / np.trace(rho).real)
