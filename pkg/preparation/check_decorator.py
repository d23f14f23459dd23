"""Decorator checking that numerical kernels return finite results."""

"""
# File: check_decorator.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

import functools
import logging

import numpy as np

from checks.exceptions import NonFiniteError


# Initializing logger object to write custom logs
logger = logging.getLogger(__name__)


def _is_finite(value) -> bool:
    if isinstance(value, np.ndarray):
        return bool(np.all(np.isfinite(value)))
    if isinstance(value, (float, complex, np.floating, np.complexfloating)):
        return bool(np.isfinite(value))
    if isinstance(value, tuple):
        return all(_is_finite(v) for v in value)
    return True


def finite_result_decorator(func):
    """Raises NonFiniteError when the decorated kernel returns NaN or Inf entries.

    Tuples are checked element-wise; non-numeric parts are ignored.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        result = func(*args, **kwargs)
        if not _is_finite(result):
            msg = f"{func.__module__}.{func.__name__}: result contains NaN or Inf"
            logger.error(msg)
            raise NonFiniteError(msg)
        return result

    return wrapper
