"""Script to read the system configuration files."""

"""
# File: read_system_config.py
# Creation date: 19-10-2026
# Python v3.12.1
"""


import logging
import os
from typing import Any

from yaml import YAMLError
from yaml import safe_load

from checks.exceptions import ConfigError
from preparation import log_decorator


logger = logging.getLogger(__name__)

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CONFIG_DIR = os.path.join(ROOT_DIR, "configs")
DEFAULTS_FILE = "defaults.yaml"


def read_yaml_configuration(param_name: str, config_file: str) -> Any:
    """Reads a parameter setting from a yaml file

    Args:
        param_name (str): parameter name, dotted for nested keys (e.g. "shots.gamma")
        config_file (str): file name inside the configs folder

    Returns:
        Any: parameter value, None if absent
    """
    filepath = os.path.join(CONFIG_DIR, config_file)
    if os.path.splitext(filepath)[-1].lower() != ".yaml":
        filepath = filepath + ".yaml"
        logger.warning("Please use the yaml extension in your code for readability!")

    try:
        with open(filepath, "r", encoding="utf-8") as file:
            config = safe_load(file)
    except FileNotFoundError as e:
        logger.error(f"File {filepath} not found.")
        logger.debug(f"{e} with %s", "arguments", exc_info=True)
        raise ConfigError(f"File {filepath} not found.") from e
    except YAMLError as e:
        logger.error(f"Error reading file {filepath}.")
        logger.debug(f"{e} with %s", "arguments", exc_info=True)
        raise ConfigError(f"Error reading file {filepath}.") from e

    param_value = config
    for param in param_name.split("."):
        if isinstance(param_value, dict):
            param_value = param_value.get(param)
        else:
            param_value = None
    return param_value


@log_decorator.log_factory(__name__)
def read_defaults(subcommand: str) -> dict[str, Any]:
    """Defaults of a subcommand: the common section overlaid by the subcommand section.

    Args:
        subcommand (str): one of convergence, init-sweep, shots, landscape, decompose.

    Returns:
        dict[str, Any]: the default settings.
    """
    section = read_yaml_configuration(subcommand, DEFAULTS_FILE)
    if section is None:
        logger.error(f"No defaults for subcommand '{subcommand}'.")
        raise ConfigError(f"Unknown subcommand '{subcommand}'.", key="subcommand")
    defaults = dict(read_yaml_configuration("common", DEFAULTS_FILE) or {})
    defaults.update(section)
    return defaults
