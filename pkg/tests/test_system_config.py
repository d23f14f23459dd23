"""Tests reading the system configurations."""

import logging

import pytest
from pytest import LogCaptureFixture

from checks.exceptions import ConfigError
from preparation import read_system_config


logger = logging.getLogger(__name__)


def test_read_yaml_shots_gamma() -> None:
    """Tests reading a nested key from the defaults."""
    assert read_system_config.read_yaml_configuration("shots.gamma", "defaults.yaml") == 0.05


def test_read_yaml_convergence_depths() -> None:
    """Tests reading the list of depths of the convergence sweep."""
    assert read_system_config.read_yaml_configuration(
        "convergence.n_layers", "defaults.yaml"
    ) == [1, 2, 4, 8, 16]


def test_read_yaml_missing_key() -> None:
    """Tests that absent keys, also below a scalar, read as None."""
    assert read_system_config.read_yaml_configuration("shots.colour", "defaults.yaml") is None
    assert read_system_config.read_yaml_configuration("shots.gamma.x", "defaults.yaml") is None


def test_read_yaml_without_extension(caplog: LogCaptureFixture) -> None:
    """Tests the warning when the yaml extension is left out.

    Args:
        caplog (LogCaptureFixture): the logging message and level.
    """
    assert read_system_config.read_yaml_configuration("common.trials", "defaults") == 100
    assert caplog.text.find("WARNING") != -1


def test_read_yaml_missing_file(caplog: LogCaptureFixture) -> None:
    """Tests the error for a configuration file that does not exist.

    Args:
        caplog (LogCaptureFixture): the logging message and level.
    """
    with pytest.raises(ConfigError):
        read_system_config.read_yaml_configuration("x", "missing.yaml")
    assert caplog.text.find("ERROR") != -1


def test_read_defaults() -> None:
    """Tests that the common section is merged below the subcommand section."""
    defaults = read_system_config.read_defaults("shots")
    assert defaults["seed"] == 20260101
    assert defaults["L"] == 24
    assert defaults["n_layers"] == 8
    assert "builder" not in defaults


def test_read_defaults_unknown_subcommand() -> None:
    """Tests the error for a subcommand without a section."""
    with pytest.raises(ConfigError):
        read_system_config.read_defaults("common-sense")
