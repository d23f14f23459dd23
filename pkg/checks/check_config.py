"""Script to build and check the experiment configuration."""

"""
# File: check_config.py
# Creation date: 19-10-2026
# Python v3.12.1
"""


from dataclasses import dataclass
import logging
import logging.config
import os
from typing import Any
from typing import Callable
from typing import Optional

from analysis import hamiltonian
from checks.exceptions import ConfigError
from preparation import log_decorator
from preparation import read_system_config
from preparation import read_user_config


logger = logging.getLogger(__name__)

SUBCOMMANDS = ("convergence", "init-sweep", "shots", "landscape", "decompose")
SWEEPS = ("convergence", "init-sweep", "shots")
MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated settings of one subcommand run."""

    subcommand: str
    values: dict[str, Any]
    allow_large: bool = False

    def __getitem__(self, key: str) -> Any:
        return self.values[key]

    def get(self, key: str, default: Any = None) -> Any:
        return self.values.get(key, default)

    @property
    def seed(self) -> int:
        return self.values["seed"]

    @property
    def trials(self) -> int:
        return self.values["trials"]

    @property
    def threads(self) -> int:
        return self.values["threads"]

    @property
    def output_path(self) -> Optional[str]:
        return self.values.get("output")


def setup_logging() -> None:
    """Applies logging.conf from the repository root."""
    logging.config.fileConfig(
        os.path.join(read_system_config.ROOT_DIR, "logging.conf"),
        disable_existing_loggers=False,
    )


def _fail(key: str, msg: str) -> None:
    logger.error(f"Configuration key '{key}': {msg}")
    raise ConfigError(f"Configuration key '{key}': {msg}", key=key)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _positive_int(key: str, value: Any) -> None:
    if not (_is_int(value) and value >= 1):
        _fail(key, f"expected a positive integer, got {value!r}.")


def _positive_number(key: str, value: Any) -> None:
    if not (_is_number(value) and value > 0):
        _fail(key, f"expected a positive number, got {value!r}.")


def _non_negative_number(key: str, value: Any) -> None:
    if not (_is_number(value) and value >= 0):
        _fail(key, f"expected a non-negative number, got {value!r}.")


def _probability(key: str, value: Any) -> None:
    if not (_is_number(value) and 0 < value < 1):
        _fail(key, f"expected a number in (0, 1), got {value!r}.")


def _seed(key: str, value: Any) -> None:
    if not (_is_int(value) and 0 <= value <= MAX_SEED):
        _fail(key, f"expected an unsigned 64-bit integer, got {value!r}.")


def _boolean(key: str, value: Any) -> None:
    if not isinstance(value, bool):
        _fail(key, f"expected true or false, got {value!r}.")


def _optional_path(key: str, value: Any) -> None:
    if value is not None and not isinstance(value, str):
        _fail(key, f"expected a file path, got {value!r}.")


def _builder(key: str, value: Any) -> None:
    if value not in hamiltonian.BUILDERS:
        _fail(key, f"unknown builder {value!r}, choose from {sorted(hamiltonian.BUILDERS)}.")


def _qubit_count(key: str, value: Any) -> None:
    if not (_is_int(value) and value >= 2):
        _fail(key, f"expected a qubit count of at least 2, got {value!r}.")


def _list_of(rule: Callable[[str, Any], None]) -> Callable[[str, Any], None]:
    def check(key: str, value: Any) -> None:
        if _is_number(value):
            value = [value]
        if not isinstance(value, list) or not value:
            _fail(key, f"expected a non-empty list, got {value!r}.")
        for item in value:
            rule(key, item)

    return check


KEY_RULES: dict[str, Callable[[str, Any], None]] = {
    "seed": _seed,
    "trials": _positive_int,
    "threads": _positive_int,
    "max_qubits": _positive_int,
    "n": _qubit_count,
    "n_values": _list_of(_qubit_count),
    "n_layers": _list_of(_positive_int),
    "mu0": _positive_number,
    "sigma": _non_negative_number,
    "sigmas": _list_of(_non_negative_number),
    "max_iters": _positive_int,
    "record_every": _positive_int,
    "slowdown_threshold": _positive_number,
    "delta": _probability,
    "gamma": _probability,
    "L": _positive_int,
    "budgets": _list_of(_positive_int),
    "equal_coefficients": _boolean,
    "builder": _builder,
    "hamiltonian_file": _optional_path,
    "matrix_file": _optional_path,
    "output": _optional_path,
}

# n_layers is a list for convergence and a single count elsewhere
SCALAR_LAYERS = ("init-sweep", "shots")


@log_decorator.log_factory(__name__)
def check_configuration(
    subcommand: str, values: dict[str, Any], allow_large: bool = False
) -> ExperimentConfig:
    """Checks keys, types and ranges of a merged configuration.

    Args:
        subcommand (str): the subcommand.
        values (dict[str, Any]): the merged settings.
        allow_large (bool): lift the qubit cap.

    Raises:
        ConfigError: naming the offending key.

    Returns:
        ExperimentConfig: the validated configuration.
    """
    if subcommand not in SUBCOMMANDS:
        _fail("subcommand", f"unknown subcommand {subcommand!r}.")
    allowed = read_system_config.read_defaults(subcommand)
    for key, value in values.items():
        if key not in allowed:
            _fail(key, f"unknown key for subcommand '{subcommand}'.")
        if value is None and key in ("hamiltonian_file", "matrix_file", "output"):
            continue
        KEY_RULES[key](key, value)

    values = dict(values)
    if subcommand in SCALAR_LAYERS:
        _positive_int("n_layers", values["n_layers"])
    elif "n_layers" in values and _is_int(values["n_layers"]):
        values["n_layers"] = [values["n_layers"]]
    for key in ("sigmas", "n_values", "budgets"):
        if key in values and not isinstance(values[key], list):
            values[key] = [values[key]]

    if not allow_large:
        cap = values["max_qubits"]
        qubits = list(values.get("n_values", [])) + ([values["n"]] if "n" in values else [])
        for n in qubits:
            if n > cap:
                _fail("n", f"{n} qubits exceeds the cap of {cap}; pass --allow-large to override.")

    if subcommand == "shots":
        if values["L"] > 4 ** values["n"]:
            _fail("L", f"{values['L']} terms exceed the 4^n distinct Pauli strings.")
        if min(values["budgets"]) < values["L"]:
            _fail("budgets", f"every budget must be at least L={values['L']}.")
    if subcommand in SWEEPS and values.get("output") is None:
        _fail("output", f"{subcommand} writes a CSV file and needs an output path.")
    if subcommand == "decompose" and values.get("matrix_file") is None:
        _fail("matrix_file", "decompose needs a matrix_file.")

    return ExperimentConfig(subcommand=subcommand, values=values, allow_large=allow_large)


@log_decorator.log_factory(__name__)
def build_experiment_config(
    subcommand: str,
    config_file: Optional[str] = None,
    overrides: Optional[dict[str, Any]] = None,
    allow_large: bool = False,
) -> ExperimentConfig:
    """Merges defaults, the user config file and command line overrides, then checks them.

    Args:
        subcommand (str): the subcommand.
        config_file (str, optional): path of the user config file.
        overrides (dict[str, Any], optional): command line settings, highest precedence.
        allow_large (bool): lift the qubit cap.

    Returns:
        ExperimentConfig: the validated configuration.
    """
    values = read_system_config.read_defaults(subcommand)
    user_values = read_user_config.read_user_configuration(config_file) if config_file else {}
    for source in (user_values, overrides or {}):
        for key, value in source.items():
            if key not in values:
                _fail(key, f"unknown key for subcommand '{subcommand}'.")
            values[key] = value
    config = check_configuration(subcommand, values, allow_large)
    logger.info(f"Configuration of '{subcommand}': {config.values}")
    return config
