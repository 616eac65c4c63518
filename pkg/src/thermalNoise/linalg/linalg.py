#!/usr/bin/env python3
"""
Dense Complex Linear Algebra

This module provides the small set of dense complex matrix operations the
simulator is built on: products, adjoints, Kronecker products, partial traces,
subsystem permutations, property checks and the completion of an isometry to a
unitary. Matrices are plain ``numpy`` arrays of dtype ``complex128``.

Tensor ordering follows the ket notation: the leftmost factor of a Kronecker
product is the most significant index block, so ``kron(a, b)[i * db + j, ...]``
addresses subsystem ``a`` by ``i`` and subsystem ``b`` by ``j``.
"""

import logging
import string
from typing import Iterable, List, Sequence

import numpy as np

# Configure logging
logger = logging.getLogger(__name__)

DEFAULT_UNITARY_TOL = 1e-10
DEFAULT_HERMITIAN_TOL = 1e-10
DEFAULT_PSD_TOL = 1e-9

# Gram-Schmidt candidates with a smaller residual are linearly dependent
ISOMETRY_RESIDUAL_FLOOR = 1e-8


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """
    Convert the input to a two-dimensional complex array and validate it.

    Args:
        m: Anything ``numpy.asarray`` understands
        name: The name used in error messages

    Returns:
        A ``complex128`` array with ``ndim == 2``

    Raises:
        ValueError: If the input is not two-dimensional or holds NaN/Inf entries
    """
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must be a non-empty 2-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr


def as_vector(v, name: str = "vector") -> np.ndarray:
    """
    Convert the input to a one-dimensional complex array and validate it.

    Raises:
        ValueError: If the input is not one-dimensional or holds NaN/Inf entries
    """
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1 or arr.shape[0] == 0:
        raise ValueError(f"{name} must be a non-empty 1-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr


def _require_square(m: np.ndarray, name: str = "matrix") -> None:
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")


def matmul(a, b) -> np.ndarray:
    """
    Multiply two matrices.

    Raises:
        ValueError: If ``a.cols != b.rows``
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Return the conjugate transpose of a matrix."""
    return np.conj(as_matrix(a, "a").T)


def kron(a, b, *rest) -> np.ndarray:
    """
    Kronecker product with ``a`` as the most significant factor.

    Further factors are appended to the right, so ``kron(a, b, c)`` is
    ``kron(kron(a, b), c)``.
    """
    result = np.kron(as_matrix(a, "a"), as_matrix(b, "b"))
    for i, factor in enumerate(rest):
        result = np.kron(result, as_matrix(factor, f"factor {i + 2}"))
    return result


def _check_dims(m: np.ndarray, dims: Sequence[int]) -> List[int]:
    dims = [int(d) for d in dims]
    if not dims or any(d <= 0 for d in dims):
        raise ValueError(f"Subsystem dimensions must be positive, got {dims}")
    if int(np.prod(dims)) != m.shape[0]:
        raise ValueError(
            f"Product of subsystem dimensions {dims} does not match matrix size {m.shape[0]}"
        )
    return dims


def partial_trace(m, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """
    Trace out every subsystem not listed in ``keep``.

    Args:
        m: A square matrix over the composite system
        dims: The subsystem dimensions, most significant first
        keep: Indices of the subsystems to keep

    Returns:
        The reduced matrix over the kept subsystems, in their original order

    Raises:
        ValueError: If ``m`` is not square, ``dims`` does not factor ``m`` or
            ``keep`` is empty or out of range
    """
    m = as_matrix(m, "m")
    _require_square(m, "m")
    dims = _check_dims(m, dims)
    n = len(dims)

    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep indices {keep} out of range for {n} subsystems")

    letters = string.ascii_letters
    row_idx = [letters[i] for i in range(n)]
    col_idx = [letters[n + i] if i in keep else letters[i] for i in range(n)]
    out_idx = [row_idx[i] for i in keep] + [col_idx[i] for i in keep]
    subscripts = f"{''.join(row_idx)}{''.join(col_idx)}->{''.join(out_idx)}"

    tensor = m.reshape(dims + dims)
    reduced = np.einsum(subscripts, tensor)
    kept_dim = int(np.prod([dims[i] for i in keep]))
    return reduced.reshape(kept_dim, kept_dim)


def permute_subsystems(m, dims: Sequence[int], order: Sequence[int]) -> np.ndarray:
    """
    Reorder the tensor factors of a square matrix or a state vector.

    ``m`` is a matrix (or vector) whose i-th factor is subsystem ``order[i]`` of
    the target layout; the result has the subsystems in natural order
    ``0, 1, ..., n-1``. ``dims`` lists the subsystem dimensions in the natural
    order.

    Raises:
        ValueError: If ``order`` is not a permutation of the subsystem indices
    """
    dims = [int(d) for d in dims]
    n = len(dims)
    order = [int(o) for o in order]
    if sorted(order) != list(range(n)):
        raise ValueError(f"order {order} is not a permutation of {list(range(n))}")

    arr = np.asarray(m, dtype=np.complex128)
    current_dims = [dims[o] for o in order]
    position = [order.index(w) for w in range(n)]
    total = int(np.prod(dims))

    if arr.ndim == 1:
        if arr.shape[0] != total:
            raise ValueError(f"Vector of size {arr.shape[0]} does not match dims {dims}")
        return arr.reshape(current_dims).transpose(position).reshape(total)

    arr = as_matrix(arr, "m")
    _require_square(arr, "m")
    if arr.shape[0] != total:
        raise ValueError(f"Matrix of size {arr.shape[0]} does not match dims {dims}")
    axes = position + [n + p for p in position]
    return arr.reshape(current_dims + current_dims).transpose(axes).reshape(total, total)


def is_unitary(m, tol: float = DEFAULT_UNITARY_TOL) -> bool:
    """
    Check whether ``m^dagger m`` equals the identity within ``tol`` (max norm).

    Raises:
        ValueError: If ``m`` is not square
    """
    m = as_matrix(m, "m")
    _require_square(m, "m")
    residual = np.max(np.abs(np.conj(m.T) @ m - np.eye(m.shape[0])))
    return bool(residual <= tol)


def is_hermitian(m, tol: float = DEFAULT_HERMITIAN_TOL) -> bool:
    """
    Check whether ``m`` equals its adjoint within ``tol`` (max norm).

    Raises:
        ValueError: If ``m`` is not square
    """
    m = as_matrix(m, "m")
    _require_square(m, "m")
    return bool(np.max(np.abs(m - np.conj(m.T))) <= tol)


def is_psd(m, tol: float = DEFAULT_PSD_TOL) -> bool:
    """
    Check whether every eigenvalue of the Hermitian part of ``m`` is at least ``-tol``.

    Raises:
        ValueError: If ``m`` is not square
    """
    m = as_matrix(m, "m")
    _require_square(m, "m")
    hermitian_part = (m + np.conj(m.T)) / 2
    eigenvalues = np.linalg.eigvalsh(hermitian_part)
    return bool(eigenvalues.min() >= -tol)


def complete_isometry_to_unitary(v, tol: float = DEFAULT_UNITARY_TOL) -> np.ndarray:
    """
    Extend a matrix with orthonormal columns to a square unitary.

    The first ``v.cols`` columns of the result are the columns of ``v``. The
    remaining columns come from modified Gram-Schmidt over the canonical basis
    vectors taken in index order, skipping candidates whose residual norm falls
    below ``ISOMETRY_RESIDUAL_FLOOR``. The construction is deterministic.

    Args:
        v: A ``d x k`` matrix (or a length-``d`` vector, read as one column)
        tol: Tolerance on ``v^dagger v = I``

    Returns:
        A ``d x d`` unitary matrix

    Raises:
        ValueError: If the columns of ``v`` are not orthonormal within ``tol``
    """
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    arr = as_matrix(arr, "v")
    dim, k = arr.shape
    if k > dim:
        raise ValueError(f"An isometry cannot have more columns ({k}) than rows ({dim})")

    gram_residual = np.max(np.abs(np.conj(arr.T) @ arr - np.eye(k)))
    if gram_residual > tol:
        raise ValueError(f"Columns are not orthonormal: max |v^dagger v - I| = {gram_residual:.3e}")

    columns = [arr[:, j].copy() for j in range(k)]
    for index in range(dim):
        if len(columns) == dim:
            break
        candidate = np.zeros(dim, dtype=np.complex128)
        candidate[index] = 1.0
        # two sweeps keep the new column orthogonal to machine precision
        for _ in range(2):
            for q in columns:
                candidate = candidate - q * np.vdot(q, candidate)
        norm = np.linalg.norm(candidate)
        if norm < ISOMETRY_RESIDUAL_FLOOR:
            continue
        columns.append(candidate / norm)

    unitary = np.column_stack(columns)
    logger.debug(f"Completed a {dim}x{k} isometry with {dim - k} Gram-Schmidt columns")
    return unitary
