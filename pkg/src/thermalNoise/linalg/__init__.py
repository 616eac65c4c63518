"""
Dense complex linear algebra for small multi-qubit systems.
"""

from .linalg import (
    DEFAULT_HERMITIAN_TOL,
    DEFAULT_PSD_TOL,
    DEFAULT_UNITARY_TOL,
    adjoint,
    as_matrix,
    as_vector,
    complete_isometry_to_unitary,
    is_hermitian,
    is_psd,
    is_unitary,
    kron,
    matmul,
    partial_trace,
    permute_subsystems,
)

__all__ = [
    "DEFAULT_HERMITIAN_TOL",
    "DEFAULT_PSD_TOL",
    "DEFAULT_UNITARY_TOL",
    "adjoint",
    "as_matrix",
    "as_vector",
    "complete_isometry_to_unitary",
    "is_hermitian",
    "is_psd",
    "is_unitary",
    "kron",
    "matmul",
    "partial_trace",
    "permute_subsystems",
]
