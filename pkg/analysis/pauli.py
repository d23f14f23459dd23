"""Pauli-string algebra: dense expansion, decomposition H = Σ α_k P_k, reconstruction and sampling."""

"""Qubit ordering: the leftmost letter acts on the highest-order tensor factor (qubit 0),
so "XZ" expands to X⊗Z.

Text Hamiltonian format, one term per line:

    # comment
    -0.5 XI
    -1.0 ZZ

"""

"""
# File: pauli.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from dataclasses import dataclass
from dataclasses import field
import functools
import itertools
import logging
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from checks import check_data
from checks.exceptions import HamiltonianFormatError
from checks.exceptions import TooManyQubitsError
from preparation import log_decorator


logger = logging.getLogger(__name__)

LETTERS = "IXYZ"
MAX_DENSE_QUBITS = 10
PRUNE_TOL = 1e-12

PAULI_MATRICES = {
    "I": np.array([[1, 0], [0, 1]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# (4, 2, 2) stack in LETTERS order
_PAULI_STACK = np.stack([PAULI_MATRICES[letter] for letter in LETTERS])


@dataclass(frozen=True)
class PauliString:
    """A tensor product of single-qubit Pauli operators, e.g. ``PauliString("XIZ")``."""

    letters: str

    def __post_init__(self):
        if not self.letters or any(c not in LETTERS for c in self.letters):
            raise ValueError(f"Invalid Pauli string '{self.letters}'.")

    @property
    def n(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class PauliHamiltonian:
    """Weighted Pauli strings on n qubits. Coefficients are real; strings are distinct."""

    n: int
    terms: Tuple[Tuple[float, PauliString], ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for coef, string in self.terms:
            if string.n != self.n:
                raise HamiltonianFormatError(
                    f"Pauli string '{string}' has {string.n} qubits, expected {self.n}."
                )
            if not np.isfinite(coef):
                raise HamiltonianFormatError(f"Coefficient of '{string}' is not finite.")
            if string in seen:
                raise HamiltonianFormatError(f"Pauli string '{string}' occurs twice.")
            seen.add(string)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([coef for coef, _ in self.terms], dtype=float)

    @property
    def strings(self) -> List[PauliString]:
        return [string for _, string in self.terms]

    def __len__(self) -> int:
        return len(self.terms)


def dense(p: PauliString) -> np.ndarray:
    """Kronecker product of the single-qubit Paulis in qubit order.

    Args:
        p (PauliString): the string.

    Raises:
        TooManyQubitsError: for more than 10 qubits.

    Returns:
        np.ndarray: the 2ⁿ×2ⁿ matrix.
    """
    if p.n > MAX_DENSE_QUBITS:
        raise TooManyQubitsError(
            f"Dense expansion limited to {MAX_DENSE_QUBITS} qubits, got {p.n}.", key="n"
        )
    return functools.reduce(
        np.kron, [PAULI_MATRICES[c] for c in p.letters], np.ones((1, 1), dtype=complex)
    )


@log_decorator.log_factory(__name__)
def decompose(H: np.ndarray) -> PauliHamiltonian:
    """Pauli decomposition with α_k = trace(P_k H)/2ⁿ, pruning |α_k| ≤ 1e-12.

    All 4ⁿ coefficients are obtained at once by contracting each qubit's row and
    column index of H with the stack of single-qubit Paulis.

    Args:
        H (np.ndarray): Hermitian matrix of dimension 2ⁿ.

    Returns:
        PauliHamiltonian: the terms in lexicographic IXYZ order.
    """
    H = np.asarray(H, dtype=complex)
    dim = check_data.check_square(H, "H")
    n = check_data.check_power_of_two(dim)
    check_data.check_hermitian(H, "H")

    # axes: rows of qubits q..n-1, columns of qubits q..n-1, then Pauli indices a_0..a_{q-1}
    tensor = H.reshape([2] * (2 * n))
    for q in range(n):
        remaining = n - q
        tensor = np.tensordot(tensor, _PAULI_STACK, axes=([0, remaining], [2, 1]))
    coefficients = tensor.reshape(-1).real / dim

    terms = []
    for index, letters in enumerate(itertools.product(LETTERS, repeat=n)):
        coef = float(coefficients[index])
        if abs(coef) > PRUNE_TOL:
            terms.append((coef, PauliString("".join(letters))))
    logger.debug(f"Decomposition of a {dim}x{dim} matrix has {len(terms)} terms.")
    return PauliHamiltonian(n=n, terms=tuple(terms))


def reconstruct(ph: PauliHamiltonian) -> np.ndarray:
    """Dense matrix Σ α_k·dense(P_k); an empty term list gives the zero matrix of dimension 2ⁿ."""
    dim = 2**ph.n
    H = np.zeros((dim, dim), dtype=complex)
    for coef, string in ph.terms:
        H += coef * dense(string)
    return H


def sample_random_pauli(n: int, rng: np.random.Generator) -> PauliString:
    """Uniformly random string from {I, X, Y, Z}ⁿ.

    Args:
        n (int): qubit count, at least 1.
        rng (np.random.Generator): the seeded generator.

    Returns:
        PauliString: the sampled string.
    """
    if n < 1:
        raise ValueError(f"Qubit count must be at least 1, got {n}.")
    indices = rng.integers(0, 4, size=n)
    return PauliString("".join(LETTERS[i] for i in indices))


def parse_hamiltonian_text(text: str, n: Optional[int] = None) -> PauliHamiltonian:
    """Parses the text Hamiltonian format.

    Args:
        text (str): file content.
        n (int, optional): expected qubit count, required when the file has no terms.

    Raises:
        HamiltonianFormatError: on malformed lines, mixed lengths or duplicate strings.

    Returns:
        PauliHamiltonian: the parsed Hamiltonian.
    """
    terms = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise HamiltonianFormatError(
                f"Line {line_number}: expected '<coefficient> <string>', got '{raw.strip()}'."
            )
        try:
            coef = float(parts[0])
            string = PauliString(parts[1].upper())
        except ValueError as e:
            raise HamiltonianFormatError(f"Line {line_number}: {e}") from e
        terms.append((coef, string))

    if not terms:
        if n is None:
            raise HamiltonianFormatError("Hamiltonian file contains no terms.")
        return PauliHamiltonian(n=n)

    lengths = {string.n for _, string in terms}
    if len(lengths) > 1:
        raise HamiltonianFormatError(f"Pauli strings of mixed length {sorted(lengths)}.")
    return PauliHamiltonian(n=lengths.pop(), terms=tuple(terms))


def format_hamiltonian_text(ph: PauliHamiltonian) -> str:
    """Writes one '<coefficient> <string>' line per term, coefficients as round-trip reprs."""
    return "".join(f"{coef!r} {string}\n" for coef, string in ph.terms)
