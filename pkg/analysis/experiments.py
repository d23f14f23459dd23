"""Subcommands: the three simulation sweeps, the landscape report and Pauli decomposition."""

"""Every sweep fans its independent trials out to utility.run_trials. Trial i of sweep
point j draws from utility.trial_rng(seed, j, i), so the output does not depend on the
number of workers.
"""

"""
# File: experiments.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

import logging
import time
from typing import Any
from typing import Optional

import numpy as np
import pandas as pd

import analysis
from analysis import hamiltonian
from analysis import initialization
from analysis import linalg
from analysis import manifold
from analysis import measurement
from analysis import optimizer
from analysis import pauli
from checks.check_config import ExperimentConfig
from checks.exceptions import ConfigError
from preparation import log_decorator
from preparation import read_user_config
from preparation import utility


logger = logging.getLogger(__name__)

CONVERGENCE_COLUMNS = ["N", "t", "mean_gap", "std_gap", "theoretical_rate"]
INIT_SWEEP_COLUMNS = ["n", "sigma", "mean_init_gap", "theorem4_bound", "coverage_fraction"]
SHOTS_COLUMNS = [
    "M_tot",
    "rms_error_uniform",
    "rms_error_adaptive",
    "bound_uniform",
    "bound_adaptive",
]
# sweeps run until max_iters; these only stop runs that reached round-off
SWEEP_GAP_TOL = 1e-14
SWEEP_GRAD_TOL = 1e-14
DEPTH_TREND_NOTE = (
    "With mu = mu0/N the measured iterations to the threshold barely depend on N. "
    "Depth shows up as a larger initialization gap and a longer predicted iteration count."
)


def _metadata(cfg: ExperimentConfig, started: float, **extra: Any) -> dict[str, Any]:
    metadata = {
        "subcommand": cfg.subcommand,
        "config": cfg.values,
        "seed": cfg.seed,
        "software_version": analysis.__version__,
        "wall_time_seconds": time.perf_counter() - started,
    }
    metadata.update(extra)
    return metadata


def _tfim_problem(n: int):
    H = pauli.reconstruct(hamiltonian.tfim(n))
    spec = hamiltonian.analyze_spectrum(H)
    return H, spec, linalg.basis_state(H.shape[0], 0)


def _convergence_trial(task: tuple) -> np.ndarray:
    H, spec, phi0, n, N, sigma, mu, max_iters, seed, point, trial = task
    rng = utility.trial_rng(seed, point, trial)
    circuit0 = initialization.sample_initial_layers(
        initialization.InitConfig(sigma=sigma, n_layers=N), n, rng, phi0
    )
    cfg = optimizer.OptimizerConfig(
        max_iters=max_iters, step_size=mu, gap_tol=SWEEP_GAP_TOL, grad_tol=SWEEP_GRAD_TOL
    )
    gaps = optimizer.rgd_product(H, phi0, circuit0, cfg, spectrum=spec).gaps()
    padded = np.full(max_iters + 1, gaps[-1])
    padded[: gaps.shape[0]] = gaps
    return padded


def _first_below(gaps: np.ndarray, threshold: float) -> Optional[int]:
    hits = np.nonzero(gaps <= threshold)[0]
    return int(hits[0]) if hits.size else None


@log_decorator.log_factory(__name__)
def cmd_convergence(cfg: ExperimentConfig) -> pd.DataFrame:
    """Mean objective gap per iteration of product-unitary RGD on the TFIM for each depth N.

    The step size is μ₀/N; starts come from the small-angle initialization and φ₀ = e₀.

    Args:
        cfg (ExperimentConfig): the convergence settings.

    Returns:
        pd.DataFrame: rows (N, t, mean_gap, std_gap, theoretical_rate).
    """
    started = time.perf_counter()
    n = cfg["n"]
    H, spec, phi0 = _tfim_problem(n)
    h_norm = float(np.max(np.abs(spec.energies)))
    max_iters = cfg["max_iters"]
    steps = np.arange(max_iters + 1)
    keep = (steps % cfg["record_every"] == 0) | (steps == max_iters)

    frames = []
    median_iterations = {}
    initial_gaps = {}
    predicted_iterations = {}
    for point, N in enumerate(cfg["n_layers"]):
        mu = cfg["mu0"] / N
        rate = optimizer.theoretical_rate(spec.gap, h_norm, mu)
        logger.info(f"Convergence sweep: N={N}, μ={mu:.4g}, {cfg.trials} trials.")
        tasks = [
            (H, spec, phi0, n, N, cfg["sigma"], mu, max_iters, cfg.seed, point, trial)
            for trial in range(cfg.trials)
        ]
        gaps = np.array(utility.run_trials(_convergence_trial, tasks, cfg.threads))
        frames.append(
            pd.DataFrame(
                {
                    "N": N,
                    "t": steps[keep],
                    "mean_gap": gaps.mean(axis=0)[keep],
                    "std_gap": gaps.std(axis=0)[keep],
                    "theoretical_rate": rate,
                }
            )
        )
        hits = [_first_below(row, cfg["slowdown_threshold"]) for row in gaps]
        reached = [h for h in hits if h is not None]
        median_iterations[str(N)] = float(np.median(reached)) if reached else None
        initial_gaps[str(N)] = float(gaps[:, 0].mean())
        predicted_iterations[str(N)] = optimizer.theoretical_iteration_bound(
            initial_gaps[str(N)], rate, cfg["slowdown_threshold"]
        )

    df = pd.concat(frames, ignore_index=True)[CONVERGENCE_COLUMNS]
    utility.export_df(df, cfg.output_path)
    utility.export_metadata(
        _metadata(
            cfg,
            started,
            ground_energy=spec.ground_energy,
            spectral_gap=spec.gap,
            h_norm=h_norm,
            median_iterations_to_threshold=median_iterations,
            depth_trend={
                "mean_initial_gap": initial_gaps,
                "predicted_iterations_to_threshold": predicted_iterations,
                "note": DEPTH_TREND_NOTE,
            },
            max_iters=max_iters,
        ),
        cfg.output_path,
    )
    return df


def _init_trial(task: tuple) -> float:
    H, e0, phi0, n, N, sigma, seed, point, trial = task
    rng = utility.trial_rng(seed, point, trial)
    circuit = initialization.sample_initial_layers(
        initialization.InitConfig(sigma=sigma, n_layers=N), n, rng, phi0
    )
    return hamiltonian.state_energy(H, circuit.state()) - e0


@log_decorator.log_factory(__name__)
def cmd_init_sweep(cfg: ExperimentConfig) -> pd.DataFrame:
    """Initialization gap g(U⁰) − E₀ over the σ grid and qubit counts, with the bound and its coverage.

    Args:
        cfg (ExperimentConfig): the init-sweep settings.

    Returns:
        pd.DataFrame: rows (n, sigma, mean_init_gap, theorem4_bound, coverage_fraction).
    """
    started = time.perf_counter()
    N = cfg["n_layers"]
    rows = []
    intervals = {}
    point = 0
    for n in cfg["n_values"]:
        H, spec, phi0 = _tfim_problem(n)
        h_norm = float(np.max(np.abs(spec.energies)))
        ref_energy = hamiltonian.state_energy(H, phi0)
        base = initialization.InitBoundInputs(
            ref_energy=ref_energy,
            ground_energy=spec.ground_energy,
            h_norm=h_norm,
            gap=spec.gap,
            n_layers=N,
            sigma=0.0,
            delta=cfg["delta"],
        )
        interval = initialization.feasible_sigma_interval(base)
        intervals[str(n)] = None if interval is None else [interval.lo, interval.hi]

        for sigma in cfg["sigmas"]:
            logger.info(f"Init sweep: n={n}, σ={sigma}, {cfg.trials} trials.")
            tasks = [
                (H, spec.ground_energy, phi0, n, N, sigma, cfg.seed, point, trial)
                for trial in range(cfg.trials)
            ]
            gaps = np.array(utility.run_trials(_init_trial, tasks, cfg.threads))
            inputs = initialization.InitBoundInputs(
                ref_energy=ref_energy,
                ground_energy=spec.ground_energy,
                h_norm=h_norm,
                gap=spec.gap,
                n_layers=N,
                sigma=sigma,
                delta=cfg["delta"],
            )
            bound = initialization.init_error_bound(inputs)
            rows.append(
                {
                    "n": n,
                    "sigma": sigma,
                    "mean_init_gap": float(gaps.mean()),
                    "theorem4_bound": bound,
                    "coverage_fraction": float(np.mean(gaps <= bound)),
                }
            )
            point += 1

    df = pd.DataFrame(rows, columns=INIT_SWEEP_COLUMNS)
    utility.export_df(df, cfg.output_path)
    utility.export_metadata(
        _metadata(
            cfg,
            started,
            init_gap_definition="g(U0) - E0, energy of the initialized circuit minus the exact ground energy",
            feasible_sigma_squared_interval=intervals,
        ),
        cfg.output_path,
    )
    return df


def _shots_budget(task: tuple) -> tuple[float, float]:
    alphas, expectations, uniform, adaptive, trials, seed, point = task
    errors = np.empty((trials, 2))
    for trial in range(trials):
        rng = utility.trial_rng(seed, 2, point, trial)
        errors[trial, 0] = measurement.sample_noisy_from_expectations(
            alphas, expectations, uniform, rng
        ).noise
        errors[trial, 1] = measurement.sample_noisy_from_expectations(
            alphas, expectations, adaptive, rng
        ).noise
    rms = np.sqrt(np.mean(errors**2, axis=0))
    return float(rms[0]), float(rms[1])


@log_decorator.log_factory(__name__)
def cmd_shots(cfg: ExperimentConfig) -> pd.DataFrame:
    """RMS estimation error of uniform and adaptive shot allocation at a converged circuit.

    Args:
        cfg (ExperimentConfig): the shots settings.

    Returns:
        pd.DataFrame: rows (M_tot, rms_error_uniform, rms_error_adaptive, bound_uniform, bound_adaptive).
    """
    started = time.perf_counter()
    n, N = cfg["n"], cfg["n_layers"]
    ph = hamiltonian.random_pauli_hamiltonian(
        n, cfg["L"], utility.trial_rng(cfg.seed, 0), cfg["equal_coefficients"]
    )
    H = pauli.reconstruct(ph)
    spec = hamiltonian.analyze_spectrum(H)
    phi0 = linalg.basis_state(H.shape[0], 0)

    circuit0 = initialization.sample_initial_layers(
        initialization.InitConfig(sigma=cfg["sigma"], n_layers=N),
        n,
        utility.trial_rng(cfg.seed, 1),
        phi0,
    )
    run_cfg = optimizer.OptimizerConfig(max_iters=cfg["max_iters"], step_size=cfg["mu0"] / N)
    trace = optimizer.rgd_product(H, phi0, circuit0, run_cfg, spectrum=spec)
    circuit = trace.final_circuit
    alphas = ph.coefficients
    expectations = measurement.exact_expectations(ph, circuit)

    tasks = []
    allocations = []
    for point, budget in enumerate(cfg["budgets"]):
        uniform = measurement.uniform_allocation(len(ph), budget)
        adaptive = measurement.adaptive_allocation(alphas, budget)
        allocations.append((uniform, adaptive))
        tasks.append((alphas, expectations, uniform, adaptive, cfg.trials, cfg.seed, point))
    results = utility.run_trials(_shots_budget, tasks, cfg.threads)

    rows = []
    for budget, (uniform, adaptive), (rms_uniform, rms_adaptive) in zip(
        cfg["budgets"], allocations, results
    ):
        rows.append(
            {
                "M_tot": budget,
                "rms_error_uniform": rms_uniform,
                "rms_error_adaptive": rms_adaptive,
                "bound_uniform": measurement.statistical_error_bound(alphas, uniform, cfg["gamma"]),
                "bound_adaptive": measurement.statistical_error_bound(
                    alphas, adaptive, cfg["gamma"]
                ),
            }
        )
    df = pd.DataFrame(rows, columns=SHOTS_COLUMNS)
    utility.export_df(df, cfg.output_path)
    utility.export_metadata(
        _metadata(
            cfg,
            started,
            hamiltonian_terms=pauli.format_hamiltonian_text(ph).splitlines(),
            final_objective_gap=float(trace.gaps()[-1]),
            iterations=int(trace.iterations[-1].t),
        ),
        cfg.output_path,
    )
    return df


def _check_file_qubits(cfg: ExperimentConfig, n: int, key: str) -> None:
    cap = cfg["max_qubits"]
    if n > cap and not cfg.allow_large:
        msg = (
            f"Configuration key '{key}': {n} qubits exceeds the cap of {cap}; "
            "pass --allow-large to override."
        )
        logger.error(msg)
        raise ConfigError(msg, key=key)


def _read_matrix(cfg: ExperimentConfig) -> np.ndarray:
    H = read_user_config.read_matrix_file(cfg["matrix_file"])
    _check_file_qubits(cfg, int(H.shape[0]).bit_length() - 1, "matrix_file")
    return H


def load_hamiltonian(cfg: ExperimentConfig) -> np.ndarray:
    """Dense H from hamiltonian_file, matrix_file or the named builder, in that order.

    Raises:
        ConfigError: naming the file key when a loaded Hamiltonian exceeds max_qubits.
    """
    if cfg.get("hamiltonian_file"):
        ph = read_user_config.read_hamiltonian_file(cfg["hamiltonian_file"])
        _check_file_qubits(cfg, ph.n, "hamiltonian_file")
        return pauli.reconstruct(ph)
    if cfg.get("matrix_file"):
        return _read_matrix(cfg)
    return pauli.reconstruct(hamiltonian.build(cfg["builder"], cfg["n"]))


def _write_or_print(text: str, output: Optional[str]) -> None:
    if output:
        utility.export_text(text, output)
    else:
        print(text, end="")


@log_decorator.log_factory(__name__)
def cmd_landscape(cfg: ExperimentConfig) -> str:
    """Report of all critical points with energy, kind, gradient norm and Hessian witness value.

    Args:
        cfg (ExperimentConfig): the landscape settings.

    Returns:
        str: the report.
    """
    H = load_hamiltonian(cfg)
    spec = hamiltonian.analyze_spectrum(H)
    phi0 = linalg.basis_state(spec.dim, 0)
    points = manifold.classify_critical_points(spec, phi0)

    table = pd.DataFrame(
        {
            "k": [p.k for p in points],
            "kind": [p.kind.value for p in points],
            "energy": [repr(float(p.energy)) for p in points],
            "grad_norm": [
                f"{np.linalg.norm(manifold.riemannian_gradient_single(H, phi0, p.unitary).direction):.3e}"
                for p in points
            ],
            "witness_value": [
                "-" if p.witness_value is None else repr(float(p.witness_value)) for p in points
            ],
        }
    )
    report = (
        f"# critical points: {spec.dim}\n"
        f"# ground degeneracy s: {spec.s}\n"
        f"# ground energy E0: {float(spec.ground_energy)!r}\n"
        f"# spectral gap: {float(spec.gap)!r}\n"
        f"{table.to_string(index=False)}\n"
    )
    _write_or_print(report, cfg.output_path)
    return report


@log_decorator.log_factory(__name__)
def cmd_decompose(cfg: ExperimentConfig) -> str:
    """Pauli decomposition of a matrix file, written in the text Hamiltonian format.

    Args:
        cfg (ExperimentConfig): the decompose settings.

    Returns:
        str: the text Hamiltonian.
    """
    H = _read_matrix(cfg)
    text = pauli.format_hamiltonian_text(pauli.decompose(H))
    _write_or_print(text, cfg.output_path)
    return text
