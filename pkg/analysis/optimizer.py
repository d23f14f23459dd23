"""Riemannian gradient descent for single- and product-unitary objectives, step-size policies,
basin check, linear-rate certificates and the depth lower bound."""

"""
# File: optimizer.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from dataclasses import dataclass
from dataclasses import field
import logging
import math
from typing import Callable
from typing import List
from typing import Optional

import numpy as np
import pandas as pd

from analysis import hamiltonian
from analysis import manifold
from analysis.hamiltonian import CircuitState
from analysis.hamiltonian import SpectralData
from checks import check_data
from checks.exceptions import InvalidOptimizerConfigError
from checks.exceptions import RateOutOfRangeError
from preparation import log_decorator


logger = logging.getLogger(__name__)

DESCENT_SLACK = 1e-10

Observer = Callable[[int, CircuitState], None]


@dataclass(frozen=True)
class OptimizerConfig:
    """Settings of one RGD run.

    Attributes:
        max_iters (int): iteration limit.
        step_size (float, optional): μ; None selects default_step_size.
        grad_tol (float): stop when Σ_h‖grad_h‖²_F < grad_tol².
        gap_tol (float): stop when f − E₀ < gap_tol.
        record_every (int): keep every record_every-th iteration in the trace.
    """

    max_iters: int = 50_000
    step_size: Optional[float] = None
    grad_tol: float = 1e-10
    gap_tol: float = 1e-8
    record_every: int = 1

    def __post_init__(self):
        if self.max_iters < 1:
            raise InvalidOptimizerConfigError("max_iters must be at least 1.", key="max_iters")
        if self.record_every < 1:
            raise InvalidOptimizerConfigError(
                "record_every must be at least 1.", key="record_every"
            )
        for key in ("grad_tol", "gap_tol"):
            if not getattr(self, key) > 0:
                raise InvalidOptimizerConfigError(f"{key} must be positive.", key=key)
        if self.step_size is not None and not self.step_size > 0:
            raise InvalidOptimizerConfigError("step_size must be positive.", key="step_size")


@dataclass
class IterationRecord:
    t: int
    objective_gap: float
    grad_norm_sq: float
    certificate_ratio: float


@dataclass
class RunTrace:
    """Per-iteration record of one run.

    certificate_ratio of record t is gap_{t+1}/gap_t; it is NaN for the final record.
    Noisy runs additionally carry the reported estimates and the predicted noise floor.
    """

    iterations: List[IterationRecord] = field(default_factory=list)
    converged: bool = False
    stop_reason: str = "max_iters"
    final_circuit: Optional[CircuitState] = None
    step_size: float = float("nan")
    theoretical_rate: float = float("nan")
    flagged: bool = False
    noisy_objective: List[float] = field(default_factory=list)
    noise_floor: Optional[float] = None
    steady_state_from: Optional[int] = None

    def gaps(self) -> np.ndarray:
        return np.array([record.objective_gap for record in self.iterations])

    def ratios(self) -> np.ndarray:
        return np.array([record.certificate_ratio for record in self.iterations])

    def to_frame(self) -> pd.DataFrame:
        """Iteration records as a DataFrame, with the noisy estimates when present."""
        df = pd.DataFrame(
            {
                "t": [r.t for r in self.iterations],
                "objective_gap": [r.objective_gap for r in self.iterations],
                "grad_norm_sq": [r.grad_norm_sq for r in self.iterations],
                "certificate_ratio": [r.certificate_ratio for r in self.iterations],
            }
        )
        if self.noisy_objective:
            df["noisy_objective"] = self.noisy_objective
        return df


def default_step_size(h_norm: float, N: int) -> float:
    """μ = 1/((8N+1)‖H‖); 1/(9‖H‖) for a single layer.

    Args:
        h_norm (float): spectral norm of H.
        N (int): layer count.

    Returns:
        float: the step size.
    """
    if not h_norm > 0 or N < 1:
        raise ValueError(f"Need h_norm > 0 and N ≥ 1, got {h_norm} and {N}.")
    return 1.0 / ((8 * N + 1) * h_norm)


def theoretical_rate(gap: float, h_norm: float, mu: float) -> float:
    """Per-step contraction 1 − Δ₁²μ/(32‖H‖), clamped to [0, 1).

    Raises:
        RateOutOfRangeError: if the formula is not positive.
    """
    if not (mu > 0 and gap > 0 and h_norm > 0):
        raise ValueError(f"Need μ, Δ₁, ‖H‖ > 0, got {mu}, {gap}, {h_norm}.")
    rate = 1.0 - gap**2 * mu / (32.0 * h_norm)
    if rate <= 0:
        msg = f"Rate formula gives {rate} ≤ 0 for Δ₁={gap}, ‖H‖={h_norm}, μ={mu}."
        logger.error(msg)
        raise RateOutOfRangeError(msg)
    return min(rate, math.nextafter(1.0, 0.0))


def in_basin(objective_gap: float, gap: float) -> bool:
    """True iff f − E₀ ≤ Δ₁/2."""
    if not gap > 0:
        raise ValueError(f"Spectral gap must be positive, got {gap}.")
    return objective_gap <= gap / 2.0


def required_depth(d_target: int, p: int) -> int:
    """⌈d_target/p⌉ layers needed to reach a target manifold of dimension d_target."""
    if d_target < 0 or p < 1:
        raise ValueError(f"Need d_target ≥ 0 and p ≥ 1, got {d_target} and {p}.")
    return -(-d_target // p)


def theoretical_iteration_bound(gap0: float, rate: float, threshold: float) -> int:
    """Smallest t with rateᵗ·gap0 ≤ threshold."""
    if gap0 <= threshold:
        return 0
    return math.ceil(math.log(threshold / gap0) / math.log(rate))


def iterations_to_gap(trace: RunTrace, threshold: float) -> Optional[int]:
    """First recorded t with objective gap ≤ threshold, None if never reached."""
    for record in trace.iterations:
        if record.objective_gap <= threshold:
            return record.t
    return None


def _run(
    H: np.ndarray,
    circuit0: CircuitState,
    cfg: OptimizerConfig,
    spectrum: Optional[SpectralData],
    observer: Optional[Observer],
) -> RunTrace:
    dim = check_data.check_hermitian(H, "H")
    hamiltonian.validate_circuit(circuit0, dim)
    spec = spectrum if spectrum is not None else hamiltonian.analyze_spectrum(H)
    h_norm = float(np.max(np.abs(spec.energies)))
    n_layers = circuit0.n_layers
    mu = cfg.step_size if cfg.step_size is not None else default_step_size(h_norm, n_layers)
    e0 = spec.ground_energy
    phi0 = circuit0.phi0

    trace = RunTrace(step_size=mu)
    try:
        trace.theoretical_rate = theoretical_rate(spec.gap, h_norm, mu)
    except RateOutOfRangeError:
        logger.warning(f"No rate certificate for step size {mu}.")

    layers = list(circuit0.layers)
    gap_t = hamiltonian.state_energy(H, CircuitState(tuple(layers), phi0).state()) - e0
    t = 0
    while True:
        gradients = manifold.layer_gradients(H, phi0, layers)
        grad_sq = manifold.gradient_norm_sq(gradients)

        stop = None
        if gap_t < cfg.gap_tol:
            stop = "gap_tol"
        elif grad_sq < cfg.grad_tol**2:
            stop = "grad_tol"
        elif t >= cfg.max_iters:
            stop = "max_iters"

        if stop is not None:
            trace.iterations.append(IterationRecord(t, gap_t, grad_sq, float("nan")))
            if observer is not None:
                observer(t, CircuitState(tuple(layers), phi0))
            trace.stop_reason = stop
            trace.converged = stop != "max_iters"
            break

        new_layers = [
            manifold.retract(manifold.TangentVector(U, -mu * g))
            for U, g in zip(layers, gradients)
        ]
        new_gap = hamiltonian.state_energy(H, CircuitState(tuple(new_layers), phi0).state()) - e0
        ratio = new_gap / gap_t if gap_t != 0 else float("nan")
        if new_gap > gap_t + DESCENT_SLACK and not trace.flagged:
            trace.flagged = True
            logger.warning(
                f"Objective increased at t={t} ({gap_t:.3e} -> {new_gap:.3e}); "
                f"step size {mu:.3e} is too large."
            )

        if t % cfg.record_every == 0:
            trace.iterations.append(IterationRecord(t, gap_t, grad_sq, ratio))
            if observer is not None:
                observer(t, CircuitState(tuple(layers), phi0))
        layers = new_layers
        gap_t = new_gap
        t += 1

    trace.final_circuit = CircuitState(tuple(layers), phi0)
    logger.debug(
        f"RGD with N={n_layers} stopped at t={t} ({trace.stop_reason}), gap {gap_t:.3e}."
    )
    return trace


@log_decorator.log_factory(__name__)
def rgd_single(
    H: np.ndarray,
    phi0: np.ndarray,
    U0: np.ndarray,
    cfg: OptimizerConfig,
    spectrum: Optional[SpectralData] = None,
    observer: Optional[Observer] = None,
) -> RunTrace:
    """RGD U^{t+1} = Retr(−μ·grad f(U^t)) on a single unitary.

    Args:
        H (np.ndarray): Hermitian Hamiltonian.
        phi0 (np.ndarray): reference state.
        U0 (np.ndarray): unitary start.
        cfg (OptimizerConfig): run settings.
        spectrum (SpectralData, optional): precomputed spectrum of H.
        observer (Observer, optional): called with (t, circuit) at every recorded iterate.

    Returns:
        RunTrace: the trace.
    """
    return _run(H, hamiltonian.single_layer(U0, phi0), cfg, spectrum, observer)


@log_decorator.log_factory(__name__)
def rgd_product(
    H: np.ndarray,
    phi0: np.ndarray,
    circuit0: CircuitState,
    cfg: OptimizerConfig,
    spectrum: Optional[SpectralData] = None,
    observer: Optional[Observer] = None,
) -> RunTrace:
    """Simultaneous RGD update of all N layers from gradients at the current iterate.

    Args:
        H (np.ndarray): Hermitian Hamiltonian.
        phi0 (np.ndarray): reference state, replacing the one stored in circuit0.
        circuit0 (CircuitState): start layers.
        cfg (OptimizerConfig): run settings.
        spectrum (SpectralData, optional): precomputed spectrum of H.
        observer (Observer, optional): called with (t, circuit) at every recorded iterate.

    Returns:
        RunTrace: the trace.
    """
    circuit = CircuitState(layers=tuple(circuit0.layers), phi0=phi0)
    return _run(H, circuit, cfg, spectrum, observer)
