"""
Cross-checks of the five thermal noise representations.
"""

from .verify import (
    DEFAULT_VERIFY_TOL,
    REPRESENTATIONS,
    VerificationReport,
    channel_outputs,
    default_states,
    run_verification,
)

__all__ = [
    "DEFAULT_VERIFY_TOL",
    "REPRESENTATIONS",
    "VerificationReport",
    "channel_outputs",
    "default_states",
    "run_verification",
]
