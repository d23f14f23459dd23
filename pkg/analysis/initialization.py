"""Small-angle random Pauli-rotation initialization, its high-probability error bound and
the feasible range of the angle variance σ²."""

"""
# File: initialization.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from dataclasses import dataclass
import logging
import math
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from analysis import linalg
from analysis import pauli
from analysis.hamiltonian import CircuitState
from checks.exceptions import InvalidConstantsError
from preparation import log_decorator


logger = logging.getLogger(__name__)

DEFAULT_CONSTANTS = (1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0)
EXACT_GRID_POINTS = 4001


@dataclass(frozen=True)
class InitConfig:
    """Initialization settings.

    Attributes:
        sigma (float): standard deviation of the rotation angles in radians.
        n_layers (int): layer count N.
        pauli_choices (Sequence[PauliString], optional): fixed P_h per layer; None draws
            each P_h uniformly at random.
        seed (int, optional): seed used when no generator is passed.
    """

    sigma: float
    n_layers: int
    pauli_choices: Optional[Sequence[pauli.PauliString]] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if not (np.isfinite(self.sigma) and self.sigma >= 0):
            raise ValueError(f"sigma must be finite and non-negative, got {self.sigma}.")
        if self.n_layers < 1:
            raise ValueError(f"Layer count must be at least 1, got {self.n_layers}.")
        if self.pauli_choices is not None and len(self.pauli_choices) < self.n_layers:
            raise ValueError("Fewer Pauli choices than layers.")


@dataclass(frozen=True)
class InitBoundInputs:
    """Right-hand-side quantities of the initialization bound."""

    ref_energy: float
    ground_energy: float
    h_norm: float
    gap: float
    n_layers: int
    sigma: float
    delta: float

    def __post_init__(self):
        if self.ref_energy < self.ground_energy - 1e-9:
            raise ValueError("Reference energy lies below the ground energy.")
        if self.h_norm < abs(self.ground_energy) - 1e-12:
            raise ValueError("‖H‖ is smaller than |E₀|.")
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}.")
        if self.n_layers < 1 or self.sigma < 0:
            raise ValueError("Need N ≥ 1 and sigma ≥ 0.")

    @property
    def ref_gap(self) -> float:
        return self.ref_energy - self.ground_energy

    @property
    def top_gap(self) -> float:
        return self.h_norm - self.ground_energy


@dataclass(frozen=True)
class SigmaInterval:
    """Closed interval [lo, hi] of admissible σ²."""

    lo: float
    hi: float

    def contains(self, sigma: float) -> bool:
        return self.lo <= sigma**2 <= self.hi

    def midpoint_sigma(self) -> float:
        return math.sqrt(0.5 * (self.lo + self.hi))


def contraction_factor(sigma: float) -> float:
    """A = (1 + e^{−2σ²})/2, the expected value of cos²θ for θ ~ N(0, σ²)."""
    return 0.5 * (1.0 + math.exp(-2.0 * sigma**2))


def pauli_rotation(theta: float, P: np.ndarray) -> np.ndarray:
    """e^{−iθP} = cos θ·I − i sin θ·P for a Pauli matrix P."""
    return math.cos(theta) * np.eye(P.shape[0], dtype=complex) - 1j * math.sin(theta) * P


def sample_rotation_parameters(
    cfg: InitConfig, n: int, rng: np.random.Generator
) -> Tuple[np.ndarray, List[pauli.PauliString]]:
    """Draws (P_h, θ_h) layer by layer; θ_h ~ N(0, σ²) without wrapping."""
    thetas = np.empty(cfg.n_layers)
    strings = []
    for h in range(cfg.n_layers):
        if cfg.pauli_choices is None:
            strings.append(pauli.sample_random_pauli(n, rng))
        else:
            strings.append(cfg.pauli_choices[h])
        thetas[h] = rng.normal(0.0, cfg.sigma)
    return thetas, strings


def sample_initial_layers(
    cfg: InitConfig,
    n: int,
    rng: Optional[np.random.Generator] = None,
    phi0: Optional[np.ndarray] = None,
) -> CircuitState:
    """Initial circuit with layers cos(θ_h)I − i sin(θ_h)P_h.

    Args:
        cfg (InitConfig): the settings.
        n (int): qubit count.
        rng (np.random.Generator, optional): generator; defaults to one seeded with cfg.seed.
        phi0 (np.ndarray, optional): reference state; defaults to e₀.

    Returns:
        CircuitState: the sampled circuit.
    """
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    dim = 2**n
    phi0 = phi0 if phi0 is not None else linalg.basis_state(dim, 0)
    thetas, strings = sample_rotation_parameters(cfg, n, rng)
    layers = tuple(
        pauli_rotation(theta, pauli.dense(string)) for theta, string in zip(thetas, strings)
    )
    return CircuitState(layers=layers, phi0=phi0)


def init_error_bound(inputs: InitBoundInputs) -> float:
    """A^N(⟨φ₀|H|φ₀⟩ − E₀) + (1 − A^N)(‖H‖ − E₀) + 2‖H‖σ√(2N log(2/δ)).

    Args:
        inputs (InitBoundInputs): the quantities of the bound.

    Returns:
        float: the bound, holding with probability at least 1 − δ.
    """
    a_n = contraction_factor(inputs.sigma) ** inputs.n_layers
    noise = (
        2.0
        * inputs.h_norm
        * inputs.sigma
        * math.sqrt(2.0 * inputs.n_layers * math.log(2.0 / inputs.delta))
    )
    return a_n * inputs.ref_gap + (1.0 - a_n) * inputs.top_gap + noise


def _check_constants(constants: Sequence[float]) -> None:
    if len(constants) != 3 or any(not c > 0 for c in constants):
        raise InvalidConstantsError("Constants c1, c2, c3 must be three positive numbers.", key="c")
    if abs(sum(constants) - 0.5) > 1e-12:
        raise InvalidConstantsError(f"Constants must sum to 1/2, got {sum(constants)}.", key="c")


def check_sigma_requirements(
    inputs: InitBoundInputs, sigma_sq: float, constants: Sequence[float] = DEFAULT_CONSTANTS
) -> Tuple[bool, bool, bool]:
    """The three term-wise requirements with the exact factor A^N.

    Returns:
        Tuple[bool, bool, bool]: whether each term is at most c_i·Δ₁.
    """
    c1, c2, c3 = constants
    sigma = math.sqrt(sigma_sq)
    a_n = contraction_factor(sigma) ** inputs.n_layers
    noise = 2.0 * inputs.h_norm * sigma * math.sqrt(
        2.0 * inputs.n_layers * math.log(2.0 / inputs.delta)
    )
    return (
        a_n * inputs.ref_gap <= c1 * inputs.gap,
        (1.0 - a_n) * inputs.top_gap <= c2 * inputs.gap,
        noise <= c3 * inputs.gap,
    )


@log_decorator.log_factory(__name__)
def feasible_sigma_interval(
    inputs: InitBoundInputs,
    constants: Sequence[float] = DEFAULT_CONSTANTS,
    exact: bool = False,
) -> Optional[SigmaInterval]:
    """Range of σ² for which the bound stays below Δ₁/2, using A^N ≈ e^{−Nσ²}.

    Args:
        inputs (InitBoundInputs): the bound quantities (sigma is ignored).
        constants (Sequence[float]): positive c1, c2, c3 summing to ½.
        exact (bool): additionally scan σ² on a grid with the exact A^N and return the
            hull of the grid points satisfying all three requirements.

    Raises:
        InvalidConstantsError: if the constants are invalid.

    Returns:
        Optional[SigmaInterval]: the interval, None when it is empty.
    """
    _check_constants(constants)
    if not inputs.gap > 0:
        raise ValueError("Spectral gap must be positive.")
    c1, c2, c3 = constants
    N = inputs.n_layers

    if inputs.ref_gap <= c1 * inputs.gap:
        lo = 0.0
    else:
        lo = math.log(inputs.ref_gap / (c1 * inputs.gap)) / N
    slack = inputs.top_gap - c2 * inputs.gap
    hi_mixing = math.log(inputs.top_gap / slack) / N if slack > 0 else math.inf
    hi_noise = c3**2 * inputs.gap**2 / (8.0 * N * inputs.h_norm**2 * math.log(2.0 / inputs.delta))
    hi = min(hi_mixing, hi_noise)

    if not exact:
        if lo > hi:
            logger.info(f"Feasible σ² interval is empty (lo={lo:.3e} > hi={hi:.3e}).")
            return None
        return SigmaInterval(lo=lo, hi=hi)

    upper = 4.0 * max(lo, hi)
    grid = np.linspace(0.0, upper, EXACT_GRID_POINTS)
    feasible = [s for s in grid if all(check_sigma_requirements(inputs, s, constants))]
    if not feasible:
        logger.info("No grid point satisfies the exact σ² requirements.")
        return None
    return SigmaInterval(lo=float(feasible[0]), hi=float(feasible[-1]))


def empirical_expectation_recursion(
    H: np.ndarray,
    phi0: np.ndarray,
    pauli_list: Sequence[pauli.PauliString],
    sigma: float,
    N: int,
) -> float:
    """E[g(U⁰)] through H_k = αH_{k−1} + βP_kH_{k−1}P_k, α = (1+e^{−2σ²})/2, β = (1−e^{−2σ²})/2.

    Layer h of the circuit uses pauli_list[h−1]; the outermost layer is averaged first.

    Returns:
        float: ⟨φ₀|H_N|φ₀⟩.
    """
    if len(pauli_list) < N:
        raise ValueError(f"Need {N} Pauli strings, got {len(pauli_list)}.")
    alpha = contraction_factor(sigma)
    beta = 1.0 - alpha
    H_k = np.asarray(H, dtype=complex)
    for k in range(N):
        P = pauli.dense(pauli_list[k])
        H_k = alpha * H_k + beta * (P @ H_k @ P)
    return float(np.vdot(phi0, H_k @ phi0).real)
