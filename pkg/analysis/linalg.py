"""Dense complex double-precision kernel: eigendecomposition, polar factor and norms."""

"""All matrices are numpy complex128 arrays. Hermitian inputs are symmetrized before
eigendecomposition; eigenvector bases inside degenerate clusters are arbitrary, so
callers work with projectors.

"""

"""
# File: linalg.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

import logging
from typing import Tuple

import numpy as np
import scipy.linalg
from scipy.stats import unitary_group

from checks import check_data
from checks.exceptions import RankDeficientError
from preparation.check_decorator import finite_result_decorator


logger = logging.getLogger(__name__)

RANK_TOL = 1e-12


def dagger(A: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return A.conj().T


def sym(M: np.ndarray) -> np.ndarray:
    """Hermitian part (M + M†)/2."""
    return 0.5 * (M + M.conj().T)


@finite_result_decorator
def herm_eig(H: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Args:
        H (np.ndarray): square Hermitian matrix.

    Raises:
        NonSquareError: if H is not square.
        NonHermitianError: if ‖H − H†‖_F > 1e-10·max(1, ‖H‖_F).

    Returns:
        Tuple[np.ndarray, np.ndarray]: ascending eigenvalues and the eigenvectors as columns.
    """
    check_data.check_hermitian(np.asarray(H), "H")
    energies, vectors = scipy.linalg.eigh(sym(np.asarray(H, dtype=complex)))
    return energies, vectors


@finite_result_decorator
def polar_unitary(A: np.ndarray) -> np.ndarray:
    """Unitary polar factor Q = A(A†A)^{-1/2}, the closest unitary to A in Frobenius norm.

    Args:
        A (np.ndarray): square full-rank matrix.

    Raises:
        RankDeficientError: if the smallest singular value is ≤ 1e-12 times the largest.

    Returns:
        np.ndarray: the unitary factor.
    """
    check_data.check_square(np.asarray(A), "A")
    W, s, Vh = scipy.linalg.svd(np.asarray(A, dtype=complex))
    if s[-1] <= RANK_TOL * s[0]:
        msg = f"Matrix is rank deficient (σ_min/σ_max = {s[-1] / s[0]:.3e})."
        logger.error(msg)
        raise RankDeficientError(msg)
    return W @ Vh


@finite_result_decorator
def inverse_sqrt_hpd(S: np.ndarray) -> np.ndarray:
    """S^{-1/2} of a Hermitian positive definite matrix through its eigendecomposition."""
    w, V = scipy.linalg.eigh(sym(S))
    return (V / np.sqrt(w)) @ dagger(V)


def spectral_norm(A: np.ndarray) -> float:
    """Largest singular value.

    Args:
        A (np.ndarray): a finite matrix.

    Returns:
        float: ‖A‖₂.
    """
    A = np.asarray(A)
    check_data.check_finite(A, "A")
    return float(scipy.linalg.svdvals(A)[0])


def basis_state(dim: int, k: int = 0) -> np.ndarray:
    """Computational basis vector e_k of dimension dim."""
    phi = np.zeros(dim, dtype=complex)
    phi[k] = 1.0
    return phi


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary."""
    if dim == 1:
        return np.exp(2j * np.pi * rng.random()) * np.ones((1, 1))
    return unitary_group.rvs(dim, random_state=rng)


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Hermitian matrix with standard complex Gaussian entries."""
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return sym(G)


def random_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Uniformly random unit vector."""
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)
