"""
Pure states, density operators and overlap probabilities.
"""

from .states import (
    NAMED_STATES,
    DensityOperator,
    PureState,
    basis_state,
    equilibrium_state,
    ket_p,
    named_state,
    overlap_probability,
    parse_state_token,
    pure_to_density,
    purified_equilibrium,
    random_density_operator,
    random_pure_state,
    validate_probability,
)

__all__ = [
    "NAMED_STATES",
    "DensityOperator",
    "PureState",
    "basis_state",
    "equilibrium_state",
    "ket_p",
    "named_state",
    "overlap_probability",
    "parse_state_token",
    "pure_to_density",
    "purified_equilibrium",
    "random_density_operator",
    "random_pure_state",
    "validate_probability",
]
