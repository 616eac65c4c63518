"""
Stinespring dilated models of the thermal noise.
"""

from .dilation import (
    FORBIDDEN_KETS,
    DilatedModel,
    attenuator_model,
    canonical_dilation,
    canonical_isometry,
    check_subspace_property,
    dilation_image,
    mixed_environment_reduce,
    reduce,
    u_thermal,
    u_tilde,
)

__all__ = [
    "FORBIDDEN_KETS",
    "DilatedModel",
    "attenuator_model",
    "canonical_dilation",
    "canonical_isometry",
    "check_subspace_property",
    "dilation_image",
    "mixed_environment_reduce",
    "reduce",
    "u_thermal",
    "u_tilde",
]
