#!/usr/bin/env python3
"""
Gate-Level Circuits

A small gate-list circuit representation with dense simulation, and the
constructions that decompose the thermal noise into CNOT and R_y gates:

- ``purification_circuit``: prepares ``sqrt(p)|00> + sqrt(1-p)|11>``
- ``controlled_u_circuit``: a controlled ``u_tilde`` from two CNOTs and two R_y
- ``u_thermal_circuit``: the attenuator unitary as CNOT, controlled ``u_tilde``, CNOT
- ``gad_simulator_circuit``: the full three-qubit thermal noise simulator

Gates apply in list order, so the circuit unitary is ``G_n ... G_2 G_1``.
Wire 0 is the most significant tensor factor. The simulator uses the wires
``Q = 0`` (principal), ``E = 1`` (environment) and ``A = 2`` (auxiliary).
"""

import logging
from collections import Counter
from enum import Enum
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from thermalNoise.channel import GadParams
from thermalNoise.dilation import u_tilde
from thermalNoise.linalg import DEFAULT_UNITARY_TOL, as_matrix, is_unitary, partial_trace, permute_subsystems
from thermalNoise.states import DensityOperator, PureState, basis_state, validate_probability

# Configure logging
logger = logging.getLogger(__name__)

MAX_WIDTH = 3

Q_WIRE = 0
E_WIRE = 1
A_WIRE = 2

_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)


class GateKind(Enum):
    """The gate kinds a circuit can hold."""

    X = "x"
    RY = "ry"
    CNOT = "cx"
    CONTROLLED_U = "cu"


class Gate:
    """One gate on one or two wires."""

    def __init__(
        self,
        kind: GateKind,
        wires: Sequence[int],
        angle: Optional[float] = None,
        u: Optional[np.ndarray] = None,
    ):
        """
        Initialize the gate.

        Args:
            kind: The gate kind
            wires: The wires acted on; ``(control, target)`` for controlled gates
            angle: The rotation angle in radians, for ``RY``
            u: The 2x2 unitary applied to the target, for ``CONTROLLED_U``

        Raises:
            ValueError: If the wires, angle or unitary do not suit the kind
        """
        wires = tuple(int(w) for w in wires)
        expected = 1 if kind in (GateKind.X, GateKind.RY) else 2
        if len(wires) != expected:
            raise ValueError(f"{kind.name} acts on {expected} wire(s), got {wires}")
        if len(set(wires)) != len(wires):
            raise ValueError(f"{kind.name} wires must be distinct, got {wires}")
        if any(w < 0 for w in wires):
            raise ValueError(f"Wire indices must be non-negative, got {wires}")

        if kind is GateKind.RY:
            if angle is None or not np.isfinite(angle):
                raise ValueError(f"RY needs a finite angle, got {angle}")
            angle = float(angle)
        elif angle is not None:
            raise ValueError(f"{kind.name} takes no angle")

        if kind is GateKind.CONTROLLED_U:
            if u is None:
                raise ValueError("CONTROLLED_U needs a 2x2 unitary")
            u = as_matrix(u, "u").copy()
            if u.shape != (2, 2) or not is_unitary(u, DEFAULT_UNITARY_TOL):
                raise ValueError("CONTROLLED_U needs a 2x2 unitary")
            u.flags.writeable = False
        elif u is not None:
            raise ValueError(f"{kind.name} takes no matrix")

        self.kind = kind
        self.wires = wires
        self.angle = angle
        self.u = u

    @classmethod
    def x(cls, wire: int) -> "Gate":
        return cls(GateKind.X, (wire,))

    @classmethod
    def ry(cls, angle: float, wire: int) -> "Gate":
        return cls(GateKind.RY, (wire,), angle=angle)

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control, target))

    @classmethod
    def controlled_u(cls, control: int, target: int, u) -> "Gate":
        return cls(GateKind.CONTROLLED_U, (control, target), u=u)

    def matrix(self) -> np.ndarray:
        """Return the gate matrix on its own wires, in ``wires`` order."""
        if self.kind is GateKind.X:
            return _X.copy()
        if self.kind is GateKind.RY:
            return ry_matrix(self.angle)
        target_block = _X if self.kind is GateKind.CNOT else self.u
        out = np.eye(4, dtype=np.complex128)
        out[2:, 2:] = target_block
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gate):
            return NotImplemented
        if (self.kind, self.wires, self.angle) != (other.kind, other.wires, other.angle):
            return False
        if self.u is None or other.u is None:
            return self.u is other.u
        return bool(np.array_equal(self.u, other.u))

    def __repr__(self) -> str:
        if self.kind is GateKind.RY:
            return f"Gate(RY({self.angle!r}), wires={self.wires})"
        return f"Gate({self.kind.name}, wires={self.wires})"


class Circuit:
    """An immutable ordered gate list over ``width`` wires."""

    def __init__(self, width: int, gates: Iterable[Gate] = ()):
        """
        Initialize the circuit.

        Raises:
            ValueError: If the width is outside 1..3 or a gate does not fit
        """
        width = int(width)
        if not 1 <= width <= MAX_WIDTH:
            raise ValueError(f"Circuit width must lie in 1..{MAX_WIDTH}, got {width}")
        gates = tuple(gates)
        for gate in gates:
            if max(gate.wires) >= width:
                raise ValueError(f"{gate!r} does not fit a circuit of width {width}")
        self.width = width
        self.gates: Tuple[Gate, ...] = gates

    def then(self, other: "Circuit") -> "Circuit":
        """Return the circuit applying this one and then ``other``."""
        return Circuit(max(self.width, other.width), self.gates + other.gates)

    def gate_census(self) -> Dict[GateKind, int]:
        """Return the number of gates of each kind."""
        return dict(Counter(gate.kind for gate in self.gates))

    def __len__(self) -> int:
        return len(self.gates)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.width == other.width and self.gates == other.gates

    def __repr__(self) -> str:
        return f"Circuit(width={self.width}, gates={list(self.gates)!r})"


def ry_matrix(xi: float) -> np.ndarray:
    """Return ``R_y(xi) = [[cos(xi/2), -sin(xi/2)], [sin(xi/2), cos(xi/2)]]``."""
    c, s = np.cos(xi / 2), np.sin(xi / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def xi_from_gamma(gamma: float) -> float:
    """
    Return the rotation angle ``xi = -arcsin(sqrt(gamma))`` in [-pi/2, 0].

    ``u_tilde(gamma)`` equals ``R_y(2 xi)``.
    """
    gamma = validate_probability(gamma, "gamma")
    return float(-np.arcsin(np.sqrt(gamma)))


def xi_p_from_p(p: float) -> float:
    """
    Return the preparation angle ``xi_p = 2 arccos(sqrt(p))`` in [0, pi].

    ``R_y(xi_p)|0>`` is ``sqrt(p)|0> + sqrt(1-p)|1>``.
    """
    p = validate_probability(p, "p")
    return float(2.0 * np.arccos(np.sqrt(p)))


def _check_pair(first: int, second: int, width: int) -> None:
    if first == second:
        raise ValueError(f"Wires must be distinct, got {first} and {second}")
    for wire in (first, second):
        if not 0 <= wire < width:
            raise ValueError(f"Wire {wire} out of range for width {width}")


def controlled_u_circuit(xi: float, control: int = 0, target: int = 1, width: int = 2) -> Circuit:
    """
    Build a controlled ``R_y(2 xi)`` from two CNOTs and two R_y gates.

    The gates apply as CNOT, ``R_y(-xi)`` on the target, CNOT, ``R_y(xi)`` on
    the target, so the target sees ``R_y(xi) X R_y(-xi) X = R_y(2 xi)`` when the
    control is ``|1>`` and ``R_y(xi) R_y(-xi) = I`` when it is ``|0>``.

    Raises:
        ValueError: If the wires coincide or fall outside the width
    """
    _check_pair(control, target, width)
    gates = [
        Gate.cnot(control, target),
        Gate.ry(-xi, target),
        Gate.cnot(control, target),
        Gate.ry(xi, target),
    ]
    return Circuit(width, gates)


def u_thermal_circuit(gamma: float, qwire: int = Q_WIRE, ewire: int = E_WIRE, width: int = 2) -> Circuit:
    """
    Build the attenuator unitary ``u_thermal(gamma)`` on ``(qwire, ewire)``.

    A CNOT controlled by ``Q`` moves ``span{|01>, |10>}`` onto the ``E = 1``
    half, a controlled ``u_tilde`` rotates ``Q`` there, and the same CNOT moves
    the components back.
    """
    _check_pair(qwire, ewire, width)
    xi = xi_from_gamma(gamma)
    swap_in = Circuit(width, [Gate.cnot(qwire, ewire)])
    rotation = controlled_u_circuit(xi, control=ewire, target=qwire, width=width)
    return swap_in.then(rotation).then(swap_in)


def purification_circuit(p: float, control: int = 0, target: int = 1, width: int = 2) -> Circuit:
    """
    Build the circuit taking ``|0>|0>`` to ``sqrt(p)|00> + sqrt(1-p)|11>``.

    ``R_y(xi_p)`` prepares ``sqrt(p)|0> + sqrt(1-p)|1>`` on ``control`` and a
    CNOT copies it onto ``target``, which is then left in ``diag(p, 1-p)``.
    """
    _check_pair(control, target, width)
    gates = [Gate.ry(xi_p_from_p(p), control), Gate.cnot(control, target)]
    return Circuit(width, gates)


def gad_dilation_circuit(params: GadParams) -> Circuit:
    """
    Build the five-CNOT, two-R_y thermal noise circuit without state preparation.

    It expects the auxiliary wire to carry ``sqrt(p)|0> + sqrt(1-p)|1>`` and the
    environment wire ``|0>``, e.g. ``env_init = |0> (x) ket_p(p)`` on ``(E, A)``.
    """
    width = 3
    purify = Circuit(width, [Gate.cnot(A_WIRE, E_WIRE)])
    return purify.then(u_thermal_circuit(params.gamma, Q_WIRE, E_WIRE, width))


def gad_simulator_circuit(params: GadParams) -> Circuit:
    """
    Build the complete three-qubit thermal noise simulator on ``(Q, E, A)``.

    The auxiliary wire is prepared with ``R_y(xi_p)`` from ``|0>``, so the
    circuit acts on ``|Q>|0>|0>``. Beyond the preparation rotation it holds
    exactly five CNOT and two R_y gates.
    """
    prep = Circuit(3, [Gate.ry(xi_p_from_p(params.p), A_WIRE)])
    return prep.then(gad_dilation_circuit(params))


def gate_embedding(gate: Gate, width: int) -> np.ndarray:
    """Return the ``2^width`` matrix of a gate acting on a circuit of the given width."""
    others = [w for w in range(width) if w not in gate.wires]
    local = np.kron(gate.matrix(), np.eye(2 ** len(others)))
    order = list(gate.wires) + others
    return permute_subsystems(local, [2] * width, order)


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Return ``G_n ... G_2 G_1`` for the gates of ``c`` in application order."""
    unitary = np.eye(2 ** c.width, dtype=np.complex128)
    for gate in c.gates:
        unitary = gate_embedding(gate, c.width) @ unitary
    return unitary


def simulate_channel(
    c: Circuit,
    input_rho: DensityOperator,
    principal: int = Q_WIRE,
    env_init: Optional[PureState] = None,
) -> DensityOperator:
    """
    Run a circuit as a dilated channel on the principal wire.

    The input ``input_rho (x) |env_init><env_init|`` is placed on the wires,
    with ``env_init`` covering the non-principal wires in ascending order,
    conjugated by the circuit unitary and reduced to the principal wire.

    Args:
        c: The circuit
        input_rho: The single-qubit input state
        principal: The wire carrying the input
        env_init: The initial state of the other wires; all zeros when omitted

    Raises:
        ValueError: If the dimensions do not match the circuit width
    """
    if not 0 <= principal < c.width:
        raise ValueError(f"Principal wire {principal} out of range for width {c.width}")
    if input_rho.dim != 2:
        raise ValueError(f"The principal wire carries one qubit, got dimension {input_rho.dim}")
    others = [w for w in range(c.width) if w != principal]

    joint = input_rho.matrix
    if others:
        if env_init is None:
            env_init = basis_state("0" * len(others))
        if env_init.dim != 2 ** len(others):
            raise ValueError(
                f"Environment state has dimension {env_init.dim}, expected {2 ** len(others)}"
            )
        env = env_init.vector
        joint = np.kron(joint, np.outer(env, np.conj(env)))
        joint = permute_subsystems(joint, [2] * c.width, [principal] + others)

    u = circuit_unitary(c)
    evolved = u @ joint @ np.conj(u.T)
    return DensityOperator(partial_trace(evolved, [2] * c.width, [principal]))
