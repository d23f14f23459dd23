"""Exceptions raised by the laboratory."""

"""
# File: exceptions.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from typing import Optional


class LabError(Exception):
    """Base class of all errors raised by the laboratory."""


class ConfigError(LabError):
    """Invalid configuration or input file. Maps to exit code 2.

    Args:
        message (str): the message.
        key (str, optional): the offending configuration key.
    """

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message)
        self.key = key


class HamiltonianFormatError(ConfigError):
    """A text Hamiltonian or matrix file could not be parsed."""


class InvalidOptimizerConfigError(ConfigError):
    """Tolerances or iteration limits out of range."""


class InvalidConstantsError(ConfigError):
    """The constants of the σ interval are not positive or do not sum to ½."""


class BudgetTooSmallError(ConfigError):
    """Fewer shots than Hamiltonian terms."""


class AllZeroCoefficientsError(ConfigError):
    """All Pauli coefficients are zero."""


class TooFewDistinctStringsError(ConfigError):
    """More terms requested than distinct Pauli strings exist."""


class TooManyQubitsError(ConfigError):
    """Qubit count above the dense expansion limit."""


class NumericError(LabError):
    """Numerical failure. Maps to exit code 3."""


class NonSquareError(NumericError):
    """Matrix is not square."""


class NonHermitianError(NumericError):
    """Matrix is not Hermitian within tolerance."""


class NonSkewHermitianError(NumericError):
    """Matrix is not skew-Hermitian within tolerance."""


class RankDeficientError(NumericError):
    """Matrix is numerically singular."""


class NonFiniteError(NumericError):
    """NaN or Inf entries."""


class NonUnitaryError(NumericError):
    """Matrix is not unitary within tolerance."""


class NonUnitaryBaseError(NonUnitaryError):
    """Base point of a tangent vector is not unitary."""


class NonUnitaryLayerError(NonUnitaryError):
    """A circuit layer is not unitary."""


class DimensionMismatchError(NumericError):
    """Operand dimensions do not agree."""


class NonPowerOfTwoDimError(NumericError):
    """Dimension is not a power of two."""


class GaplessSpectrumError(NumericError):
    """All eigenvalues coincide with the ground energy."""


class RateOutOfRangeError(NumericError):
    """The rate formula is not positive for the given inputs."""


class IndexOutOfRangeError(NumericError):
    """Layer or level index outside its range."""


class NonNormalizedStateError(NumericError):
    """State vector is not of unit norm."""
