"""
The qubit thermal noise channel: Kraus operators, closed form and parameter maps.
"""

from .channel import (
    K_BOLTZMANN_SI,
    CPTPReport,
    GadParams,
    KrausChannel,
    RelaxationSpec,
    ThermalBathSpec,
    amplitude_damping_kraus,
    apply_channel,
    compose_gamma,
    gad_closed_form,
    gad_kraus,
    gamma_from_time,
    p_from_temperature,
    temperature_from_p,
    time_from_gamma,
    validate_cptp,
)

__all__ = [
    "K_BOLTZMANN_SI",
    "CPTPReport",
    "GadParams",
    "KrausChannel",
    "RelaxationSpec",
    "ThermalBathSpec",
    "amplitude_damping_kraus",
    "apply_channel",
    "compose_gamma",
    "gad_closed_form",
    "gad_kraus",
    "gamma_from_time",
    "p_from_temperature",
    "temperature_from_p",
    "time_from_gamma",
    "validate_cptp",
]
