"""Script to read the user configuration and the input files."""

"""
# File: read_user_config.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

import logging
from typing import Any
from typing import Optional

import numpy as np
from yaml import YAMLError
from yaml import safe_load

from analysis import pauli
from checks.exceptions import ConfigError
from checks.exceptions import HamiltonianFormatError
from preparation import log_decorator


logger = logging.getLogger(__name__)


@log_decorator.log_factory(__name__)
def read_txt_file(filename: str) -> Optional[str]:
    """Reads the content of a user input file.

    Args:
        filename (str): the filename.

    Returns:
        str: content of the file.
    """
    try:
        with open(filename, mode="r", encoding="utf-8") as file:
            return file.read()
    except FileNotFoundError as e:
        logger.error(f"File {filename} not found.")
        raise ConfigError(f"File {filename} not found.") from e
    except IOError as e:
        logger.error(f"Error reading file {filename}.")
        raise ConfigError(f"Error reading file {filename}.") from e


@log_decorator.log_factory(__name__)
def read_user_configuration(filename: str) -> dict[str, Any]:
    """Reads a user config file: a flat yaml mapping of key: value lines.

    Args:
        filename (str): the config file.

    Returns:
        dict[str, Any]: the settings, empty for an empty file.
    """
    content = read_txt_file(filename)
    try:
        values = safe_load(content)
    except YAMLError as e:
        logger.error(f"Error parsing config file {filename}.")
        raise ConfigError(f"Error parsing config file {filename}: {e}") from e
    if values is None:
        return {}
    if not isinstance(values, dict):
        logger.error(f"Config file {filename} is not a key-value mapping.")
        raise ConfigError(f"Config file {filename} is not a key-value mapping.")
    return values


def parse_override(text: str) -> tuple[str, Any]:
    """Parses a command line override 'key=value'; the value is read as yaml.

    Args:
        text (str): the override.

    Returns:
        tuple[str, Any]: key and value.
    """
    key, sep, raw = text.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ConfigError(f"Override '{text}' is not of the form key=value.", key=key or None)
    try:
        return key, safe_load(raw)
    except YAMLError as e:
        raise ConfigError(f"Cannot parse value of override '{text}'.", key=key) from e


@log_decorator.log_factory(__name__)
def read_hamiltonian_file(filename: str) -> pauli.PauliHamiltonian:
    """Reads a text Hamiltonian file ('<coefficient> <string>' per line)."""
    return pauli.parse_hamiltonian_text(read_txt_file(filename))


@log_decorator.log_factory(__name__)
def read_matrix_file(filename: str) -> np.ndarray:
    """Reads a square complex matrix: one row per line, whitespace separated entries
    such as ``1``, ``-0.5`` or ``0.5+1j``; ``#`` starts a comment.

    Args:
        filename (str): the matrix file.

    Returns:
        np.ndarray: the matrix.
    """
    content = read_txt_file(filename)
    rows = []
    for line_number, raw in enumerate(content.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([complex(entry) for entry in line.split()])
        except ValueError as e:
            raise HamiltonianFormatError(f"{filename}, line {line_number}: {e}") from e
    if not rows or any(len(row) != len(rows[0]) for row in rows):
        raise HamiltonianFormatError(f"{filename} does not contain a rectangular matrix.")
    return np.array(rows, dtype=complex)
