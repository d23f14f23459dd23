"""Tests the dense linear algebra kernel."""

import numpy as np
import pytest

from analysis import linalg
from checks.exceptions import NonFiniteError
from checks.exceptions import NonHermitianError
from checks.exceptions import NonSquareError
from checks.exceptions import RankDeficientError


def test_herm_eig_diagonal(diag_matrix) -> None:
    """Tests that a diagonal matrix gives its diagonal as ascending spectrum."""
    energies, vectors = linalg.herm_eig(diag_matrix[::-1, ::-1])
    np.testing.assert_allclose(energies, [1.0, 2.0, 3.0, 4.0], atol=1e-14)
    np.testing.assert_allclose(
        linalg.dagger(vectors) @ vectors, np.eye(4), atol=1e-12
    )


def test_herm_eig_matches_numpy(random_hermitian) -> None:
    """Tests the eigenvalues against numpy and the reconstruction V·diag(E)·V†."""
    energies, vectors = linalg.herm_eig(random_hermitian)
    np.testing.assert_allclose(energies, np.linalg.eigvalsh(random_hermitian), atol=1e-12)
    rebuilt = (vectors * energies) @ linalg.dagger(vectors)
    np.testing.assert_allclose(rebuilt, random_hermitian, atol=1e-12)


def test_herm_eig_rejects_bad_input() -> None:
    """Tests the errors for non-square and non-Hermitian matrices."""
    with pytest.raises(NonSquareError):
        linalg.herm_eig(np.ones((2, 3)))
    with pytest.raises(NonHermitianError):
        linalg.herm_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_polar_unitary_recovers_factor(rng) -> None:
    """Tests that the polar factor of Q·S with S positive definite is Q."""
    Q = linalg.random_unitary(4, rng)
    B = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    S = np.eye(4) + B @ linalg.dagger(B)
    np.testing.assert_allclose(linalg.polar_unitary(Q @ S), Q, atol=1e-10)


def test_polar_unitary_is_closest_unitary(rng) -> None:
    """Tests that no random unitary is closer to A than its polar factor."""
    A = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    Q = linalg.polar_unitary(A)
    np.testing.assert_allclose(linalg.dagger(Q) @ Q, np.eye(3), atol=1e-12)
    best = np.linalg.norm(A - Q)
    for _ in range(20):
        assert np.linalg.norm(A - linalg.random_unitary(3, rng)) >= best - 1e-12


def test_polar_unitary_rank_deficient() -> None:
    """Tests the error for a singular matrix."""
    with pytest.raises(RankDeficientError):
        linalg.polar_unitary(np.diag([1.0, 0.0]))


def test_polar_unitary_non_finite() -> None:
    """Tests the error for NaN entries."""
    with pytest.raises(NonFiniteError):
        linalg.polar_unitary(np.array([[1.0, np.nan], [0.0, 1.0]]))


def test_inverse_sqrt_hpd(rng) -> None:
    """Tests that S^{-1/2}·S·S^{-1/2} is the identity."""
    B = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    S = np.eye(5) + B @ linalg.dagger(B)
    X = linalg.inverse_sqrt_hpd(S)
    np.testing.assert_allclose(X @ S @ X, np.eye(5), atol=1e-10)


def test_spectral_norm(random_hermitian) -> None:
    """Tests that the spectral norm of a Hermitian matrix is its largest |eigenvalue|."""
    expected = np.max(np.abs(np.linalg.eigvalsh(random_hermitian)))
    assert linalg.spectral_norm(random_hermitian) == pytest.approx(expected, rel=1e-12)


def test_random_helpers(rng) -> None:
    """Tests the random unitary, Hermitian and state generators."""
    U = linalg.random_unitary(4, rng)
    np.testing.assert_allclose(linalg.dagger(U) @ U, np.eye(4), atol=1e-12)
    H = linalg.random_hermitian(4, rng)
    np.testing.assert_allclose(H, linalg.dagger(H), atol=0)
    phi = linalg.random_state(4, rng)
    assert np.vdot(phi, phi).real == pytest.approx(1.0, abs=1e-14)
    e2 = linalg.basis_state(4, 2)
    assert e2[2] == 1 and np.count_nonzero(e2) == 1


def test_polar_unitary_maximizes_real_trace(rng) -> None:
    """Tests Re trace(R†A) ≥ Re trace(V†A) for 20 random unitaries V, with equality at the nuclear norm."""
    A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    R = linalg.polar_unitary(A)
    best = np.trace(linalg.dagger(R) @ A).real
    assert best == pytest.approx(np.linalg.svd(A, compute_uv=False).sum(), rel=1e-12)
    for _ in range(20):
        V = linalg.random_unitary(4, rng)
        assert np.trace(linalg.dagger(V) @ A).real <= best + 1e-12
