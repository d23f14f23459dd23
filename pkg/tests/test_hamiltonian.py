"""Tests the Hamiltonian builders, spectral analysis and circuit energies."""

import math
import os

import numpy as np
import pytest
from pytest import LogCaptureFixture

from analysis import hamiltonian
from analysis import linalg
from analysis import pauli
from checks.exceptions import DimensionMismatchError
from checks.exceptions import GaplessSpectrumError
from checks.exceptions import IndexOutOfRangeError
from checks.exceptions import NonUnitaryLayerError
from checks.exceptions import TooFewDistinctStringsError
from preparation import read_system_config


def test_tfim_terms(tfim2) -> None:
    """Tests the field terms followed by the coupling terms."""
    assert [str(s) for s in tfim2.strings] == ["XI", "IX", "ZZ"]
    np.testing.assert_array_equal(tfim2.coefficients, [-0.5, -0.5, -1.0])
    assert len(hamiltonian.tfim(4)) == 4 + 3
    with pytest.raises(ValueError):
        hamiltonian.tfim(1)


def test_tfim2_closed_form_spectrum(tfim2_spectrum) -> None:
    """Tests the two-qubit TFIM spectrum {−√2, −1, 1, √2}."""
    sqrt2 = math.sqrt(2.0)
    np.testing.assert_allclose(tfim2_spectrum.energies, [-sqrt2, -1.0, 1.0, sqrt2], atol=1e-12)
    assert tfim2_spectrum.s == 1
    assert tfim2_spectrum.gap == pytest.approx(sqrt2 - 1.0, abs=1e-12)
    assert tfim2_spectrum.ground_energy == pytest.approx(-sqrt2, abs=1e-12)


def test_analyze_spectrum_degenerate_ground() -> None:
    """Tests the ground-space index and projector for a twofold ground level."""
    spec = hamiltonian.analyze_spectrum(np.diag([0.0, 0.0, 1.0, 2.0]))
    assert spec.s == 2
    assert spec.gap == pytest.approx(1.0)
    np.testing.assert_allclose(spec.ground_projector, np.diag([1.0, 1.0, 0.0, 0.0]), atol=1e-14)


def test_analyze_spectrum_cluster_tolerance() -> None:
    """Tests that levels within the cluster tolerance count as ground."""
    H = np.diag([0.0, 1e-12, 1.0, 1.0])
    assert hamiltonian.analyze_spectrum(H).s == 2
    assert hamiltonian.analyze_spectrum(H, cluster_tol=1e-13).s == 1


def test_analyze_spectrum_gapless(caplog: LogCaptureFixture) -> None:
    """Tests the error and logged message for a multiple of the identity."""
    with pytest.raises(GaplessSpectrumError):
        hamiltonian.analyze_spectrum(3.0 * np.eye(4))
    assert caplog.text.find("ERROR") != -1


def test_random_pauli_hamiltonian(rng) -> None:
    """Tests distinct strings and unit coefficient norm."""
    ph = hamiltonian.random_pauli_hamiltonian(3, 20, rng)
    assert len(ph) == 20
    assert len(set(ph.strings)) == 20
    assert np.sum(ph.coefficients**2) == pytest.approx(1.0, abs=1e-14)


def test_random_pauli_hamiltonian_equal_coefficients(rng) -> None:
    """Tests the ±1/√L coefficient variant."""
    ph = hamiltonian.random_pauli_hamiltonian(2, 9, rng, equal_coefficients=True)
    np.testing.assert_allclose(np.abs(ph.coefficients), 1.0 / 3.0, atol=1e-15)


def test_random_pauli_hamiltonian_too_many_terms(rng) -> None:
    """Tests that more terms than the 4ⁿ strings are rejected."""
    assert len(hamiltonian.random_pauli_hamiltonian(1, 4, rng)) == 4
    with pytest.raises(TooFewDistinctStringsError):
        hamiltonian.random_pauli_hamiltonian(1, 5, rng)


def test_circuit_order(rng, phi0_2q) -> None:
    """Tests that the last layer acts first on φ₀."""
    U1 = linalg.random_unitary(4, rng)
    U2 = linalg.random_unitary(4, rng)
    circuit = hamiltonian.circuit_from_layers([U1, U2], phi0_2q)
    np.testing.assert_allclose(circuit.state(), U1 @ (U2 @ phi0_2q), atol=1e-14)
    np.testing.assert_allclose(circuit.product(), U1 @ U2, atol=1e-14)
    assert circuit.n_layers == 2 and circuit.dim == 4


def test_energy(tfim2_matrix, phi0_2q, rng) -> None:
    """Tests the energy at identity layers and after a random unitary."""
    identity = hamiltonian.single_layer(np.eye(4), phi0_2q)
    assert hamiltonian.energy(tfim2_matrix, identity) == pytest.approx(-1.0, abs=1e-15)
    U = linalg.random_unitary(4, rng)
    phi = U @ phi0_2q
    expected = np.vdot(phi, tfim2_matrix @ phi).real
    assert hamiltonian.energy(
        tfim2_matrix, hamiltonian.single_layer(U, phi0_2q)
    ) == pytest.approx(expected, abs=1e-14)


def test_energy_errors(tfim2_matrix, phi0_2q) -> None:
    """Tests the errors for a non-unitary layer and a dimension mismatch."""
    with pytest.raises(NonUnitaryLayerError):
        hamiltonian.energy(tfim2_matrix, hamiltonian.single_layer(2.0 * np.eye(4), phi0_2q))
    with pytest.raises(DimensionMismatchError):
        hamiltonian.energy(
            tfim2_matrix, hamiltonian.single_layer(np.eye(2), linalg.basis_state(2))
        )


def test_excited_weight(tfim2_spectrum) -> None:
    """Tests p = 0 for the ground state and p = 1 for an excited eigenvector."""
    V = tfim2_spectrum.eigvecs
    assert hamiltonian.excited_weight(tfim2_spectrum, V[:, 0]) == pytest.approx(0.0, abs=1e-14)
    assert hamiltonian.excited_weight(tfim2_spectrum, V[:, 2]) == pytest.approx(1.0, abs=1e-14)


def test_block_reduced_problem(tfim2_matrix, phi0_2q, rng) -> None:
    """Tests that the reduced problem of layer h reproduces the full energy."""
    layers = [linalg.random_unitary(4, rng) for _ in range(3)]
    circuit = hamiltonian.circuit_from_layers(layers, phi0_2q)
    full = hamiltonian.energy(tfim2_matrix, circuit)
    for h in (1, 2, 3):
        H_red, phi_red = hamiltonian.block_reduced_problem(tfim2_matrix, circuit, h)
        phi = layers[h - 1] @ phi_red
        assert np.vdot(phi, H_red @ phi).real == pytest.approx(full, abs=1e-12)
    with pytest.raises(IndexOutOfRangeError):
        hamiltonian.block_reduced_problem(tfim2_matrix, circuit, 4)


def test_reconstructed_tfim_matches_text_file() -> None:
    """Tests that the example input file holds the two-qubit TFIM."""
    filepath = os.path.join(read_system_config.ROOT_DIR, "input", "tfim_2.txt")
    with open(filepath, encoding="utf-8") as file:
        ph = pauli.parse_hamiltonian_text(file.read())
    np.testing.assert_array_equal(
        pauli.reconstruct(ph), pauli.reconstruct(hamiltonian.tfim(2))
    )


def test_energy_global_phase_invariance(rng) -> None:
    """Tests f(e^{iθ}U) = f(U) for every layer of a three-layer circuit."""
    H = linalg.random_hermitian(8, rng)
    phi0 = linalg.random_state(8, rng)
    layers = [linalg.random_unitary(8, rng) for _ in range(3)]
    reference = hamiltonian.energy(H, hamiltonian.circuit_from_layers(layers, phi0))
    for h in range(3):
        for theta in rng.uniform(0.0, 2.0 * np.pi, size=5):
            phased = list(layers)
            phased[h] = np.exp(1j * theta) * layers[h]
            value = hamiltonian.energy(H, hamiltonian.circuit_from_layers(phased, phi0))
            assert abs(value - reference) <= 1e-12 * max(1.0, linalg.spectral_norm(H))


def test_energy_variational_principle(rng) -> None:
    """Tests E₀ ≤ f(U) ≤ E_max for random circuits on random Hamiltonians."""
    for dim in (2, 4, 8, 16):
        H = linalg.random_hermitian(dim, rng)
        spec = hamiltonian.analyze_spectrum(H)
        phi0 = linalg.basis_state(dim, 0)
        for n_layers in (1, 2, 4):
            layers = [linalg.random_unitary(dim, rng) for _ in range(n_layers)]
            value = hamiltonian.energy(H, hamiltonian.circuit_from_layers(layers, phi0))
            assert spec.ground_energy - 1e-12 <= value <= spec.energies[-1] + 1e-12


def test_build_dispatches_by_name() -> None:
    """Tests the builder registry and the error for an unknown name."""
    assert hamiltonian.build("tfim", 3) == hamiltonian.tfim(3)
    with pytest.raises(ValueError):
        hamiltonian.build("heisenberg", 3)
