"""Checks on matrices and state vectors before they enter a computation."""

"""
# File: check_data.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

import logging
from typing import Type

import numpy as np

from checks.exceptions import DimensionMismatchError
from checks.exceptions import NonFiniteError
from checks.exceptions import NonHermitianError
from checks.exceptions import NonNormalizedStateError
from checks.exceptions import NonPowerOfTwoDimError
from checks.exceptions import NonSkewHermitianError
from checks.exceptions import NonSquareError
from checks.exceptions import NonUnitaryError
from checks.exceptions import NumericError


logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-10
UNITARY_TOL = 1e-8
STATE_NORM_TOL = 1e-12


def _fail(error_cls: Type[NumericError], msg: str) -> None:
    logger.error(msg)
    raise error_cls(msg)


def check_finite(A: np.ndarray, name: str = "matrix") -> None:
    """Checks that all entries are finite.

    Args:
        A (np.ndarray): the array.
        name (str): name used in the message.

    Raises:
        NonFiniteError: if an entry is NaN or Inf.
    """
    if not np.all(np.isfinite(A)):
        _fail(NonFiniteError, f"{name} contains NaN or Inf entries.")


def check_square(A: np.ndarray, name: str = "matrix") -> int:
    """Checks that A is a finite square matrix and returns its dimension.

    Args:
        A (np.ndarray): the matrix.
        name (str): name used in the message.

    Returns:
        int: the dimension D.
    """
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        _fail(NonSquareError, f"{name} is not square, shape {A.shape}.")
    check_finite(A, name)
    return A.shape[0]


def check_hermitian(H: np.ndarray, name: str = "matrix") -> int:
    """Checks ‖H − H†‖_F ≤ 1e-10·max(1, ‖H‖_F).

    Args:
        H (np.ndarray): the matrix.
        name (str): name used in the message.

    Returns:
        int: the dimension D.
    """
    dim = check_square(H, name)
    asym = np.linalg.norm(H - H.conj().T)
    if asym > HERMITIAN_TOL * max(1.0, np.linalg.norm(H)):
        _fail(NonHermitianError, f"{name} is not Hermitian (‖H − H†‖_F = {asym:.3e}).")
    return dim


def check_skew_hermitian(Omega: np.ndarray, name: str = "Omega") -> int:
    """Checks ‖Ω + Ω†‖_F ≤ 1e-10·max(1, ‖Ω‖_F)."""
    dim = check_square(Omega, name)
    sym_part = np.linalg.norm(Omega + Omega.conj().T)
    if sym_part > HERMITIAN_TOL * max(1.0, np.linalg.norm(Omega)):
        _fail(
            NonSkewHermitianError,
            f"{name} is not skew-Hermitian (‖Ω + Ω†‖_F = {sym_part:.3e}).",
        )
    return dim


def check_unitary(
    U: np.ndarray,
    name: str = "matrix",
    error_cls: Type[NumericError] = NonUnitaryError,
    tol: float = UNITARY_TOL,
) -> int:
    """Checks ‖U†U − I‖_F ≤ tol.

    Args:
        U (np.ndarray): the matrix.
        name (str): name used in the message.
        error_cls (Type[NumericError]): the exception raised on failure.
        tol (float): the tolerance.

    Returns:
        int: the dimension D.
    """
    dim = check_square(U, name)
    defect = np.linalg.norm(U.conj().T @ U - np.eye(dim))
    if defect > tol:
        _fail(error_cls, f"{name} is not unitary (‖U†U − I‖_F = {defect:.3e}).")
    return dim


def check_state(phi: np.ndarray, dim: int = None, name: str = "state") -> int:
    """Checks a unit state vector, optionally of a given dimension."""
    if phi.ndim != 1:
        _fail(DimensionMismatchError, f"{name} is not a vector, shape {phi.shape}.")
    if dim is not None and phi.shape[0] != dim:
        _fail(
            DimensionMismatchError,
            f"{name} has dimension {phi.shape[0]}, expected {dim}.",
        )
    check_finite(phi, name)
    norm_sq = float(np.vdot(phi, phi).real)
    if abs(norm_sq - 1.0) > STATE_NORM_TOL:
        _fail(NonNormalizedStateError, f"{name} is not normalized (‖φ‖² = {norm_sq!r}).")
    return phi.shape[0]


def check_power_of_two(dim: int) -> int:
    """Returns n with dim = 2ⁿ.

    Raises:
        NonPowerOfTwoDimError: if dim is not a power of two.
    """
    if dim < 2 or dim & (dim - 1):
        _fail(NonPowerOfTwoDimError, f"Dimension {dim} is not a power of two.")
    return dim.bit_length() - 1


def check_same_dim(dim_a: int, dim_b: int, what: str) -> None:
    if dim_a != dim_b:
        _fail(DimensionMismatchError, f"{what}: dimensions {dim_a} and {dim_b} differ.")
