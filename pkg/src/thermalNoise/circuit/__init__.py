"""
Gate-level circuits and the thermal noise simulator construction.
"""

from .circuit import (
    A_WIRE,
    E_WIRE,
    Q_WIRE,
    Circuit,
    Gate,
    GateKind,
    circuit_unitary,
    controlled_u_circuit,
    gad_dilation_circuit,
    gad_simulator_circuit,
    gate_embedding,
    purification_circuit,
    ry_matrix,
    simulate_channel,
    u_thermal_circuit,
    xi_from_gamma,
    xi_p_from_p,
)

__all__ = [
    "A_WIRE",
    "E_WIRE",
    "Q_WIRE",
    "Circuit",
    "Gate",
    "GateKind",
    "circuit_unitary",
    "controlled_u_circuit",
    "gad_dilation_circuit",
    "gad_simulator_circuit",
    "gate_embedding",
    "purification_circuit",
    "ry_matrix",
    "simulate_channel",
    "u_thermal_circuit",
    "xi_from_gamma",
    "xi_p_from_p",
]
