"""Problem construction and spectral analysis: TFIM and random-Pauli builders, spectral gap,
ground-space index, circuits and energy evaluation."""

"""
# File: hamiltonian.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from dataclasses import dataclass
import logging
from typing import Callable
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from analysis import linalg
from analysis import pauli
from checks import check_data
from checks.exceptions import GaplessSpectrumError
from checks.exceptions import IndexOutOfRangeError
from checks.exceptions import NonUnitaryLayerError
from checks.exceptions import TooFewDistinctStringsError
from preparation import log_decorator


logger = logging.getLogger(__name__)

TFIM_FIELD = -0.5
TFIM_COUPLING = -1.0


@dataclass(frozen=True)
class SpectralData:
    """Eigen-information of a Hamiltonian.

    Attributes:
        energies (np.ndarray): eigenvalues E₀ ≤ E₁ ≤ ….
        eigvecs (np.ndarray): eigenvectors as columns.
        s (int): index of the first energy strictly above E₀ (ground degeneracy).
        gap (float): Δ₁ = E_s − E₀.
        ground_projector (np.ndarray): P₀ onto the ground space.
    """

    energies: np.ndarray
    eigvecs: np.ndarray
    s: int
    gap: float
    ground_projector: np.ndarray

    @property
    def ground_energy(self) -> float:
        return float(self.energies[0])

    @property
    def dim(self) -> int:
        return self.energies.shape[0]


@dataclass(frozen=True)
class CircuitState:
    """Ordered unitary layers U₁…U_N and the reference state φ₀.

    The circuit output is U₁⋯U_N|φ₀⟩: the last layer acts first.
    """

    layers: Tuple[np.ndarray, ...]
    phi0: np.ndarray

    @property
    def n_layers(self) -> int:
        return len(self.layers)

    @property
    def dim(self) -> int:
        return self.phi0.shape[0]

    def state(self) -> np.ndarray:
        """Output state, applying the layers right-to-left to φ₀."""
        phi = self.phi0
        for U in reversed(self.layers):
            phi = U @ phi
        return phi

    def product(self) -> np.ndarray:
        """Collapsed unitary U₁⋯U_N."""
        W = np.eye(self.dim, dtype=complex)
        for U in self.layers:
            W = W @ U
        return W


def single_layer(U: np.ndarray, phi0: np.ndarray) -> CircuitState:
    """Circuit with the one layer U."""
    return CircuitState(layers=(np.asarray(U, dtype=complex),), phi0=phi0)


def validate_circuit(circuit: CircuitState, dim: Optional[int] = None) -> None:
    """Checks dimensions, unit reference state and unitarity (1e-8) of every layer."""
    dim = circuit.dim if dim is None else dim
    check_data.check_state(circuit.phi0, dim, "phi0")
    for h, U in enumerate(circuit.layers, start=1):
        layer_dim = check_data.check_square(U, f"layer {h}")
        check_data.check_same_dim(layer_dim, dim, f"layer {h}")
        check_data.check_unitary(U, f"layer {h}", NonUnitaryLayerError)


@log_decorator.log_factory(__name__)
def analyze_spectrum(H: np.ndarray, cluster_tol: Optional[float] = None) -> SpectralData:
    """Spectrum, ground-space index s, gap Δ₁ and ground projector of H.

    Args:
        H (np.ndarray): Hermitian matrix.
        cluster_tol (float, optional): energies within this distance of E₀ count as ground.
            Defaults to 1e-8·max(1, ‖H‖).

    Raises:
        GaplessSpectrumError: if every eigenvalue lies within cluster_tol of E₀.

    Returns:
        SpectralData: the spectral data.
    """
    energies, vectors = linalg.herm_eig(H)
    if cluster_tol is None:
        cluster_tol = 1e-8 * max(1.0, float(np.max(np.abs(energies))))
    if cluster_tol <= 0:
        raise ValueError(f"cluster_tol must be positive, got {cluster_tol}.")

    above = np.nonzero(energies - energies[0] >= cluster_tol)[0]
    if above.size == 0:
        msg = "Spectrum is gapless: all eigenvalues coincide with the ground energy."
        logger.error(msg)
        raise GaplessSpectrumError(msg)
    s = int(above[0])
    ground = vectors[:, :s]
    return SpectralData(
        energies=energies,
        eigvecs=vectors,
        s=s,
        gap=float(energies[s] - energies[0]),
        ground_projector=ground @ linalg.dagger(ground),
    )


@log_decorator.log_factory(__name__)
def tfim(n: int) -> pauli.PauliHamiltonian:
    """Open-boundary transverse-field Ising model −0.5·Σ X_k − Σ Z_k Z_{k+1}.

    Args:
        n (int): qubit count, at least 2.

    Returns:
        pauli.PauliHamiltonian: n field terms followed by n−1 coupling terms.
    """
    if n < 2:
        raise ValueError(f"TFIM needs at least 2 qubits, got {n}.")
    terms = []
    for k in range(n):
        letters = ["I"] * n
        letters[k] = "X"
        terms.append((TFIM_FIELD, pauli.PauliString("".join(letters))))
    for k in range(n - 1):
        letters = ["I"] * n
        letters[k] = letters[k + 1] = "Z"
        terms.append((TFIM_COUPLING, pauli.PauliString("".join(letters))))
    return pauli.PauliHamiltonian(n=n, terms=tuple(terms))


BUILDERS: dict[str, Callable[[int], pauli.PauliHamiltonian]] = {"tfim": tfim}


def build(builder: str, n: int) -> pauli.PauliHamiltonian:
    """Named Hamiltonian builder on n qubits.

    Args:
        builder (str): a key of BUILDERS.
        n (int): qubit count.

    Raises:
        ValueError: unknown builder.

    Returns:
        pauli.PauliHamiltonian: the built Hamiltonian.
    """
    if builder not in BUILDERS:
        raise ValueError(f"Unknown builder {builder!r}, choose from {sorted(BUILDERS)}.")
    return BUILDERS[builder](n)


@log_decorator.log_factory(__name__)
def random_pauli_hamiltonian(
    n: int, L: int, rng: np.random.Generator, equal_coefficients: bool = False
) -> pauli.PauliHamiltonian:
    """L distinct uniformly sampled Pauli strings with Gaussian weights normalized to Σα² = 1.

    Args:
        n (int): qubit count.
        L (int): term count.
        rng (np.random.Generator): the seeded generator.
        equal_coefficients (bool): use ±1/√L with random signs instead of Gaussian weights.

    Raises:
        TooFewDistinctStringsError: if L > 4ⁿ.

    Returns:
        pauli.PauliHamiltonian: the Hamiltonian.
    """
    if L < 1:
        raise ValueError(f"Term count must be at least 1, got {L}.")
    if L > 4**n:
        raise TooFewDistinctStringsError(
            f"Cannot draw {L} distinct Pauli strings on {n} qubits.", key="L"
        )
    strings = []
    seen = set()
    while len(strings) < L:
        candidate = pauli.sample_random_pauli(n, rng)
        if candidate not in seen:
            seen.add(candidate)
            strings.append(candidate)

    if equal_coefficients:
        alphas = rng.choice([-1.0, 1.0], size=L) / np.sqrt(L)
    else:
        alphas = rng.standard_normal(L)
        alphas = alphas / np.linalg.norm(alphas)
    return pauli.PauliHamiltonian(
        n=n, terms=tuple((float(a), s) for a, s in zip(alphas, strings))
    )


def energy(H: np.ndarray, circuit: CircuitState) -> float:
    """Objective ⟨φ₀|U_N†⋯U₁† H U₁⋯U_N|φ₀⟩.

    Args:
        H (np.ndarray): Hamiltonian.
        circuit (CircuitState): layers and reference state.

    Raises:
        DimensionMismatchError: if dimensions disagree.
        NonUnitaryLayerError: if a layer is not unitary within 1e-8.

    Returns:
        float: the energy, imaginary round-off discarded.
    """
    dim = check_data.check_square(H, "H")
    validate_circuit(circuit, dim)
    return state_energy(H, circuit.state())


def state_energy(H: np.ndarray, phi: np.ndarray) -> float:
    """⟨φ|H|φ⟩ without validation."""
    return float(np.vdot(phi, H @ phi).real)


def excited_weight(spec: SpectralData, phi: np.ndarray) -> float:
    """p = ‖(I − P₀)φ‖², the weight outside the ground space."""
    ground_part = spec.ground_projector @ phi
    return float(max(0.0, 1.0 - np.vdot(ground_part, ground_part).real))


def block_reduced_problem(
    H: np.ndarray, circuit: CircuitState, h: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Single-layer problem seen by layer h with the other layers frozen.

    Args:
        H (np.ndarray): Hamiltonian.
        circuit (CircuitState): the circuit.
        h (int): layer index, 1-based.

    Returns:
        Tuple[np.ndarray, np.ndarray]: H̃ = L†HL with L = U₁⋯U_{h−1}, and φ̃₀ = U_{h+1}⋯U_N φ₀.
    """
    if not 1 <= h <= circuit.n_layers:
        raise IndexOutOfRangeError(f"Layer index {h} outside 1..{circuit.n_layers}.")
    left = CircuitState(layers=circuit.layers[: h - 1], phi0=circuit.phi0).product()
    right = CircuitState(layers=circuit.layers[h:], phi0=circuit.phi0).state()
    return linalg.dagger(left) @ H @ left, right


def circuit_from_layers(layers: Sequence[np.ndarray], phi0: np.ndarray) -> CircuitState:
    return CircuitState(layers=tuple(layers), phi0=phi0)
