#!/usr/bin/env python3
"""
Stinespring Dilations

Unitary system-environment models of the thermal noise. A ``DilatedModel``
holds a pure initial environment state and a joint unitary; ``reduce`` evolves
``rho (x) |e0><e0|`` and traces the environment out again.

Two inequivalent models of the same channel are provided:

- ``canonical_dilation`` builds the joint unitary from any Kraus set, mapping
  ``|Q>|e0>`` to ``sum_k K_k|Q> (x) |e_k>`` on a ``K``-dimensional environment.
- ``attenuator_model`` couples the qubit to one environment qubit through the
  beamsplitter-like unitary ``u_thermal(gamma)`` and purifies the thermal
  environment state ``diag(p, 1-p)`` with an auxiliary qubit.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from thermalNoise.channel import GadParams, KrausChannel
from thermalNoise.linalg import (
    DEFAULT_UNITARY_TOL,
    as_matrix,
    complete_isometry_to_unitary,
    is_unitary,
    partial_trace,
    permute_subsystems,
)
from thermalNoise.states import (
    DensityOperator,
    PureState,
    equilibrium_state,
    purified_equilibrium,
    random_pure_state,
    validate_probability,
)

# Configure logging
logger = logging.getLogger(__name__)

ISOMETRY_TOL = 1e-12
SUBSPACE_TOL = 1e-12

# Basis kets (principal, E1, E2) the canonical image of a GAD channel never reaches
FORBIDDEN_KETS = ("011", "101")


class DilatedModel:
    """A pure environment state and a joint unitary on system (x) environment."""

    def __init__(
        self,
        environment_initial: PureState,
        joint_unitary,
        system_dims: Sequence[int],
        system_index: int = 0,
        tol: float = DEFAULT_UNITARY_TOL,
    ):
        """
        Initialize the model.

        Args:
            environment_initial: The environment state, over all subsystems
                except the principal one, in their natural order
            joint_unitary: The unitary acting on all subsystems
            system_dims: Dimensions of all subsystems, most significant first
            system_index: Which subsystem is the principal qubit
            tol: Tolerance of the unitarity check

        Raises:
            ValueError: If the unitary is not unitary or the dimensions disagree
        """
        unitary = as_matrix(joint_unitary, "joint_unitary").copy()
        dims = [int(d) for d in system_dims]
        if not 0 <= system_index < len(dims):
            raise ValueError(f"system_index {system_index} out of range for {len(dims)} subsystems")
        if unitary.shape != (int(np.prod(dims)),) * 2:
            raise ValueError(f"joint_unitary shape {unitary.shape} does not match dims {dims}")
        if not is_unitary(unitary, tol):
            raise ValueError("joint_unitary is not unitary")
        env_dim = int(np.prod([d for i, d in enumerate(dims) if i != system_index]))
        if environment_initial.dim != env_dim:
            raise ValueError(
                f"Environment state has dimension {environment_initial.dim}, expected {env_dim}"
            )
        unitary.flags.writeable = False
        self.environment_initial = environment_initial
        self.joint_unitary = unitary
        self.system_dims = dims
        self.system_index = system_index

    @property
    def environment_indices(self) -> List[int]:
        return [i for i in range(len(self.system_dims)) if i != self.system_index]

    def __repr__(self) -> str:
        return f"DilatedModel(system_dims={self.system_dims}, system_index={self.system_index})"


def _joint_input(model: DilatedModel, rho: np.ndarray) -> np.ndarray:
    env = model.environment_initial.vector
    joint = np.kron(rho, np.outer(env, np.conj(env)))
    order = [model.system_index] + model.environment_indices
    return permute_subsystems(joint, model.system_dims, order)


def reduce(model: DilatedModel, rho: DensityOperator) -> DensityOperator:
    """
    Evolve ``rho (x) |e0><e0|`` with the joint unitary and trace out the environment.

    Raises:
        ValueError: If ``rho`` does not match the principal subsystem
    """
    if rho.dim != model.system_dims[model.system_index]:
        raise ValueError(
            f"State dimension {rho.dim} does not match principal subsystem "
            f"dimension {model.system_dims[model.system_index]}"
        )
    joint = _joint_input(model, rho.matrix)
    u = model.joint_unitary
    evolved = u @ joint @ np.conj(u.T)
    return DensityOperator(partial_trace(evolved, model.system_dims, [model.system_index]))


def canonical_isometry(ch: KrausChannel) -> np.ndarray:
    """
    Return the isometry ``V|i> = sum_k K_k|i> (x) |e_k>`` as a ``(d*K) x d`` matrix.

    Environment basis states are indexed in Kraus order, so for four operators
    ``|e_1>..|e_4>`` are ``|00>, |01>, |10>, |11>``.
    """
    num_ops = len(ch)
    dim = ch.dim
    v = np.zeros((dim * num_ops, dim), dtype=np.complex128)
    for k, op in enumerate(ch.operators):
        v[k::num_ops, :] = op
    return v


def dilation_image(ch: KrausChannel, state: PureState) -> np.ndarray:
    """Return ``sum_k K_k|Q> (x) |e_k>`` for a principal state ``|Q>``."""
    if state.dim != ch.dim:
        raise ValueError(f"State dimension {state.dim} does not match channel dimension {ch.dim}")
    return canonical_isometry(ch) @ state.vector


def _pad_to_qubits(ch: KrausChannel) -> KrausChannel:
    num_ops = len(ch)
    padded = max(2, 1 << (num_ops - 1).bit_length())
    if padded == num_ops:
        return ch
    logger.debug(f"Padding {num_ops} Kraus operators with {padded - num_ops} zero operators")
    zero = np.zeros((ch.dim, ch.dim), dtype=np.complex128)
    return KrausChannel(list(ch.operators) + [zero] * (padded - num_ops), require_complete=False)


def canonical_dilation(ch: KrausChannel) -> DilatedModel:
    """
    Build the canonical Stinespring dilation of a Kraus channel.

    The environment has one basis state per Kraus operator and starts in
    ``|e0> = |0...0>``, which doubles as ``|e_1>``. The joint unitary agrees
    with the canonical isometry on ``{|i> (x) |e0>}``; its remaining columns
    carry no meaning beyond making it unitary.

    A Kraus set whose size is not a power of two is padded with zero operators
    up to the next one, so the environment is always a register of qubits.

    Raises:
        ValueError: If the Kraus set is not complete
    """
    ch = _pad_to_qubits(ch)
    v = canonical_isometry(ch)
    dim, num_ops = ch.dim, len(ch)
    gram_residual = np.max(np.abs(np.conj(v.T) @ v - np.eye(dim)))
    if gram_residual > ISOMETRY_TOL:
        raise ValueError(f"Kraus set is not complete: isometry residual {gram_residual:.3e}")

    completed = complete_isometry_to_unitary(v)
    # column i*K is the input |i>|e0>; every other column takes a completion vector
    targets = [i * num_ops for i in range(dim)]
    others = [c for c in range(dim * num_ops) if c not in targets]
    unitary = np.empty_like(completed)
    unitary[:, targets] = completed[:, :dim]
    unitary[:, others] = completed[:, dim:]

    system_dims = [dim] + [2] * (num_ops.bit_length() - 1)
    environment = np.zeros(num_ops, dtype=np.complex128)
    environment[0] = 1.0
    logger.debug(f"Canonical dilation with environment dims {system_dims[1:]}")
    return DilatedModel(PureState(environment), unitary, system_dims, system_index=0)


def u_tilde(gamma: float) -> np.ndarray:
    """Return the 2x2 rotation ``[[sqrt(1-g), sqrt(g)], [-sqrt(g), sqrt(1-g)]]``."""
    gamma = validate_probability(gamma, "gamma")
    c, s = np.sqrt(1.0 - gamma), np.sqrt(gamma)
    return np.array([[c, s], [-s, c]], dtype=np.complex128)


def u_thermal(gamma: float) -> np.ndarray:
    """
    Return the thermal-attenuator unitary on (principal, environment).

    It is the identity on ``|00>`` and ``|11>`` and the rotation ``u_tilde`` on
    ``span{|01>, |10>}``.

    Raises:
        ValueError: If ``gamma`` lies outside [0, 1]
    """
    u = np.eye(4, dtype=np.complex128)
    u[1:3, 1:3] = u_tilde(gamma)
    return u


def attenuator_model(params: GadParams) -> DilatedModel:
    """
    Build the purified thermal-attenuator dilation on (Q, E, A).

    The environment qubit ``E`` and auxiliary qubit ``A`` start in
    ``sqrt(p)|00> + sqrt(1-p)|11>``, so ``E`` alone is in ``diag(p, 1-p)``;
    the joint unitary is ``u_thermal(gamma) (x) I`` on ``(Q, E) (x) A``.
    """
    joint = np.kron(u_thermal(params.gamma), np.eye(2))
    return DilatedModel(purified_equilibrium(params.p), joint, [2, 2, 2], system_index=0)


def mixed_environment_reduce(params: GadParams, rho: DensityOperator) -> DensityOperator:
    """
    Apply the attenuator with a mixed thermal environment, ``tr_E[U (rho (x) rho_inf) U^dagger]``.

    This is not a Stinespring form, since the environment does not start pure;
    it serves as an independent reference for the thermal noise.
    """
    if rho.dim != 2:
        raise ValueError(f"The attenuator acts on one qubit, got dimension {rho.dim}")
    u = u_thermal(params.gamma)
    joint = np.kron(rho.matrix, equilibrium_state(params.p).matrix)
    evolved = u @ joint @ np.conj(u.T)
    return DensityOperator(partial_trace(evolved, [2, 2], [0]))


def check_subspace_property(
    ch: KrausChannel,
    states: Optional[Sequence[PureState]] = None,
    num_samples: int = 100,
    seed: int = 0,
    tol: float = SUBSPACE_TOL,
) -> bool:
    """
    Check that the canonical image of a qubit channel avoids ``|011>`` and ``|101>``.

    Args:
        ch: A four-operator qubit channel
        states: Principal states to test; ``num_samples`` seeded random states
            when omitted
        num_samples: Number of random states to draw
        seed: Seed of the random states
        tol: Largest amplitude tolerated on the forbidden kets

    Returns:
        True if every image has amplitude below ``tol`` on both kets
    """
    if ch.dim != 2 or len(ch) != 4:
        raise ValueError("The subspace property concerns four-operator qubit channels")
    if states is None:
        rng = np.random.default_rng(seed)
        states = [random_pure_state(rng) for _ in range(num_samples)]
    forbidden = [int(label, 2) for label in FORBIDDEN_KETS]
    worst = 0.0
    for state in states:
        image = dilation_image(ch, state)
        worst = max(worst, float(np.max(np.abs(image[forbidden]))))
    logger.debug(f"Largest amplitude on {FORBIDDEN_KETS}: {worst:.3e}")
    return worst < tol
