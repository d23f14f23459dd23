"""Configuration file with fixtures used as input for the tests."""

import os

import numpy as np
import pytest

from analysis import hamiltonian
from analysis import linalg
from analysis import pauli
from checks import check_config


###########################################################################################
## SETUP / TEARDOWN #######################################################################
###########################################################################################


@pytest.fixture()
def output_folder(tmp_path) -> str:
    """Fixture with an empty output folder that is removed after the test.

    Returns:
        str: the folder path.
    """
    folder = tmp_path / "output"
    folder.mkdir()
    return str(folder)


###########################################################################################
## RANDOM NUMBERS #########################################################################
###########################################################################################


@pytest.fixture()
def rng() -> np.random.Generator:
    """Fixture with a seeded generator.

    Returns:
        np.random.Generator: the generator.
    """
    return np.random.default_rng(20260101)


###########################################################################################
## HAMILTONIANS ###########################################################################
###########################################################################################


@pytest.fixture()
def tfim2() -> pauli.PauliHamiltonian:
    """Fixture with the two-qubit transverse-field Ising model.

    Returns:
        pauli.PauliHamiltonian: −0.5·XI − 0.5·IX − ZZ.
    """
    return hamiltonian.tfim(2)


@pytest.fixture()
def tfim2_matrix(tfim2) -> np.ndarray:
    """Fixture with the dense two-qubit TFIM.

    Returns:
        np.ndarray: the 4×4 matrix.
    """
    return pauli.reconstruct(tfim2)


@pytest.fixture()
def tfim2_spectrum(tfim2_matrix) -> hamiltonian.SpectralData:
    """Fixture with the spectral data of the two-qubit TFIM.

    Returns:
        hamiltonian.SpectralData: spectrum {−√2, −1, 1, √2}.
    """
    return hamiltonian.analyze_spectrum(tfim2_matrix)


@pytest.fixture()
def diag_matrix() -> np.ndarray:
    """Fixture with diag(1, 2, 3, 4).

    Returns:
        np.ndarray: the matrix.
    """
    return np.diag([1.0, 2.0, 3.0, 4.0]).astype(complex)


@pytest.fixture()
def random_hermitian(rng) -> np.ndarray:
    """Fixture with a random 8×8 Hermitian matrix.

    Returns:
        np.ndarray: the matrix.
    """
    return linalg.random_hermitian(8, rng)


@pytest.fixture()
def phi0_2q() -> np.ndarray:
    """Fixture with the reference state |00⟩.

    Returns:
        np.ndarray: e₀ of dimension 4.
    """
    return linalg.basis_state(4, 0)


###########################################################################################
## CONFIGURATIONS #########################################################################
###########################################################################################


@pytest.fixture()
def convergence_config(output_folder) -> check_config.ExperimentConfig:
    """Fixture with a small convergence sweep writing to the output folder.

    Returns:
        check_config.ExperimentConfig: the configuration.
    """
    return check_config.build_experiment_config(
        "convergence",
        overrides={
            "n": 2,
            "n_layers": [1, 2],
            "trials": 3,
            "max_iters": 40,
            "record_every": 5,
            "output": os.path.join(output_folder, "convergence.csv"),
        },
    )


@pytest.fixture()
def init_sweep_config(output_folder) -> check_config.ExperimentConfig:
    """Fixture with a small init sweep writing to the output folder.

    Returns:
        check_config.ExperimentConfig: the configuration.
    """
    return check_config.build_experiment_config(
        "init-sweep",
        overrides={
            "n_values": [2],
            "sigmas": [0.0, 0.1],
            "n_layers": 4,
            "trials": 5,
            "output": os.path.join(output_folder, "init_sweep.csv"),
        },
    )


@pytest.fixture()
def shots_config(output_folder) -> check_config.ExperimentConfig:
    """Fixture with a small shots sweep writing to the output folder.

    Returns:
        check_config.ExperimentConfig: the configuration.
    """
    return check_config.build_experiment_config(
        "shots",
        overrides={
            "n": 2,
            "n_layers": 2,
            "L": 4,
            "budgets": [100, 1000],
            "trials": 20,
            "max_iters": 200,
            "output": os.path.join(output_folder, "shots.csv"),
        },
    )
