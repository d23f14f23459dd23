"""Finite-shot measurement simulation for Pauli-decomposed Hamiltonians."""

"""Each term P_k is measured M_k times; the +1 count is Binomial(M_k, (1 + ⟨P_k⟩)/2) and
the estimate is ĝ = Σ α_k(2f_k⁺/M_k − 1). Noise enters the reported objective only; the
optimizer itself uses exact statevector gradients.

"""

"""
# File: measurement.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from dataclasses import dataclass
import logging
import math
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from analysis import hamiltonian
from analysis import optimizer
from analysis import pauli
from analysis.hamiltonian import CircuitState
from analysis.hamiltonian import SpectralData
from checks import check_data
from checks.exceptions import AllZeroCoefficientsError
from checks.exceptions import BudgetTooSmallError
from preparation import log_decorator


logger = logging.getLogger(__name__)

STEADY_STATE_FRACTION = 0.1


@dataclass(frozen=True)
class ShotAllocation:
    """Shots M_k per Hamiltonian term, each at least one."""

    shots: Tuple[int, ...]

    def __post_init__(self):
        if any(m < 1 for m in self.shots):
            raise ValueError("Every term needs at least one shot.")

    @property
    def total(self) -> int:
        return int(sum(self.shots))

    def as_array(self) -> np.ndarray:
        return np.array(self.shots, dtype=np.int64)


@dataclass(frozen=True)
class NoisyEstimate:
    """Noisy objective ĝ, its error η = ĝ − g and the per-term (f_k⁺, M_k)."""

    value: float
    noise: float
    per_term: Tuple[Tuple[int, int], ...]


def exact_expectations(ph: pauli.PauliHamiltonian, circuit: CircuitState) -> np.ndarray:
    """⟨φ_N|P_k|φ_N⟩ for every term at the circuit output φ_N.

    Args:
        ph (pauli.PauliHamiltonian): the Hamiltonian.
        circuit (CircuitState): the circuit.

    Raises:
        DimensionMismatchError: if 2ⁿ differs from the circuit dimension.

    Returns:
        np.ndarray: expectations in [−1, 1], one per term.
    """
    check_data.check_same_dim(2**ph.n, circuit.dim, "Hamiltonian and circuit")
    hamiltonian.validate_circuit(circuit)
    phi = circuit.state()
    values = np.array(
        [np.vdot(phi, pauli.dense(string) @ phi).real for string in ph.strings], dtype=float
    )
    return np.clip(values, -1.0, 1.0)


def _check_budget(L: int, M_tot: int) -> None:
    if L < 1:
        raise ValueError("Need at least one term.")
    if M_tot < L:
        raise BudgetTooSmallError(
            f"Budget of {M_tot} shots is smaller than the {L} terms.", key="M_tot"
        )


def uniform_allocation(L: int, M_tot: int) -> ShotAllocation:
    """⌊M_tot/L⌋ shots per term, the remainder going to the first terms.

    Raises:
        BudgetTooSmallError: if M_tot < L.
    """
    _check_budget(L, M_tot)
    base, remainder = divmod(M_tot, L)
    return ShotAllocation(tuple(base + 1 if k < remainder else base for k in range(L)))


def allocation_error(alphas: Sequence[float], alloc: ShotAllocation) -> float:
    """Σ α_k²/M_k."""
    a = np.asarray(alphas, dtype=float)
    return float(np.sum(a**2 / alloc.as_array()))


@log_decorator.log_factory(__name__)
def adaptive_allocation(alphas: Sequence[float], M_tot: int) -> ShotAllocation:
    """Shots proportional to |α_k|, rounded to integers of at least one.

    Largest-remainder rounding of M̂_k = |α_k|/Σ|α_j|·M_tot with a floor of one shot,
    followed by single-shot transfers while they strictly lower Σα_k²/M_k.

    Args:
        alphas (Sequence[float]): the Pauli coefficients.
        M_tot (int): the total budget.

    Raises:
        BudgetTooSmallError: if M_tot < L.
        AllZeroCoefficientsError: if every α_k is zero.

    Returns:
        ShotAllocation: the allocation.
    """
    a = np.abs(np.asarray(alphas, dtype=float))
    L = a.shape[0]
    _check_budget(L, M_tot)
    if not np.any(a > 0):
        raise AllZeroCoefficientsError("All Pauli coefficients are zero.", key="alphas")

    target = a / a.sum() * M_tot
    shots = np.maximum(np.floor(target).astype(np.int64), 1)
    remainder = target - shots
    missing = M_tot - int(shots.sum())
    # stable sort keeps ties in term order, so equal weights reproduce the uniform split
    order = np.argsort(-remainder, kind="stable")
    for k in order[:max(missing, 0)]:
        shots[k] += 1
    while shots.sum() > M_tot:
        removable = np.nonzero(shots > 1)[0]
        cost = a[removable] ** 2 / (shots[removable] - 1) - a[removable] ** 2 / shots[removable]
        shots[removable[np.argmin(cost)]] -= 1

    a_sq = a**2
    while True:
        gain = a_sq / shots - a_sq / (shots + 1)
        loss = np.where(shots > 1, a_sq / np.maximum(shots - 1, 1) - a_sq / shots, np.inf)
        receiver = int(np.argmax(gain))
        loss[receiver] = np.inf
        donor = int(np.argmin(loss))
        if not gain[receiver] - loss[donor] > 1e-15 * max(1.0, float(np.sum(a_sq / shots))):
            break
        shots[receiver] += 1
        shots[donor] -= 1
    return ShotAllocation(tuple(int(m) for m in shots))


def statistical_error_bound(
    alphas: Sequence[float], alloc: ShotAllocation, gamma: float
) -> float:
    """Hoeffding bound √(2 log(1/γ))·√(Σ α_k²/M_k) on the one-sided estimation error.

    Args:
        alphas (Sequence[float]): the coefficients.
        alloc (ShotAllocation): the allocation.
        gamma (float): failure probability in (0, 1).

    Returns:
        float: the bound.
    """
    if not 0 < gamma < 1:
        raise ValueError(f"gamma must lie in (0, 1), got {gamma}.")
    return math.sqrt(2.0 * math.log(1.0 / gamma)) * math.sqrt(allocation_error(alphas, alloc))


def sample_noisy_from_expectations(
    alphas: Sequence[float],
    expectations: Sequence[float],
    alloc: ShotAllocation,
    rng: np.random.Generator,
) -> NoisyEstimate:
    """Binomial shot sampling given exact expectations ⟨P_k⟩."""
    a = np.asarray(alphas, dtype=float)
    e = np.asarray(expectations, dtype=float)
    shots = alloc.as_array()
    if not a.shape[0] == e.shape[0] == shots.shape[0]:
        raise ValueError("Coefficients, expectations and allocation differ in length.")
    p_plus = np.clip(0.5 * (1.0 + e), 0.0, 1.0)
    counts = rng.binomial(shots, p_plus)
    estimate = float(np.sum(a * (2.0 * counts / shots - 1.0)))
    exact = float(np.sum(a * e))
    return NoisyEstimate(
        value=estimate,
        noise=estimate - exact,
        per_term=tuple((int(f), int(m)) for f, m in zip(counts, shots)),
    )


def sample_noisy_objective(
    ph: pauli.PauliHamiltonian,
    circuit: CircuitState,
    alloc: ShotAllocation,
    rng: np.random.Generator,
) -> NoisyEstimate:
    """Finite-shot estimate ĝ of the energy at the circuit output.

    Args:
        ph (pauli.PauliHamiltonian): the Hamiltonian.
        circuit (CircuitState): the circuit.
        alloc (ShotAllocation): shots per term.
        rng (np.random.Generator): the generator.

    Returns:
        NoisyEstimate: the estimate.
    """
    if len(alloc.shots) != len(ph):
        raise ValueError(f"Allocation has {len(alloc.shots)} entries for {len(ph)} terms.")
    return sample_noisy_from_expectations(
        ph.coefficients, exact_expectations(ph, circuit), alloc, rng
    )


@log_decorator.log_factory(__name__)
def rgd_noisy(
    ph: pauli.PauliHamiltonian,
    phi0: np.ndarray,
    circuit0: CircuitState,
    cfg: optimizer.OptimizerConfig,
    alloc: ShotAllocation,
    gamma: float,
    rng: np.random.Generator,
    spectrum: Optional[SpectralData] = None,
) -> optimizer.RunTrace:
    """Product-unitary RGD whose reported objective is the finite-shot estimate.

    Args:
        ph (pauli.PauliHamiltonian): the Hamiltonian.
        phi0 (np.ndarray): reference state.
        circuit0 (CircuitState): start layers.
        cfg (optimizer.OptimizerConfig): run settings.
        alloc (ShotAllocation): shots per term at every reported iterate.
        gamma (float): failure probability of the noise floor.
        rng (np.random.Generator): the generator.
        spectrum (SpectralData, optional): precomputed spectrum.

    Returns:
        optimizer.RunTrace: trace with noisy_objective, noise_floor and steady_state_from.
    """
    H = pauli.reconstruct(ph)
    alphas = ph.coefficients
    strings = [pauli.dense(s) for s in ph.strings]
    noisy = []

    def observe(t: int, circuit: CircuitState) -> None:
        phi = circuit.state()
        expectations = np.clip(
            [np.vdot(phi, P @ phi).real for P in strings], -1.0, 1.0
        )
        noisy.append(sample_noisy_from_expectations(alphas, expectations, alloc, rng).value)

    trace = optimizer.rgd_product(H, phi0, circuit0, cfg, spectrum, observer=observe)
    trace.noisy_objective = noisy
    trace.noise_floor = statistical_error_bound(alphas, alloc, gamma)
    for record in trace.iterations:
        if record.objective_gap < STEADY_STATE_FRACTION * trace.noise_floor:
            trace.steady_state_from = record.t
            break
    return trace
