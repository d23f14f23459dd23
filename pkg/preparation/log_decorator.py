"""Decorator to log information about functions calls and their arguments."""

"""
# File: log_decorator.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

import functools
import logging
import typing

import numpy as np
import pandas as pd


def _summarize(value: typing.Any) -> str:
    """Short representation for the logfile: arrays and frames by shape only.

    Args:
        value (typing.Any): the value to represent.

    Returns:
        str: the representation.
    """
    if isinstance(value, np.ndarray):
        return f"ndarray(shape={value.shape}, dtype={value.dtype})"
    if isinstance(value, pd.DataFrame):
        return f"DataFrame(rows={value.shape[0]}, columns={list(value.columns)})"
    text = repr(value)
    if len(text) > 300:
        text = text[:300] + "..."
    return text


def log_factory(filename: str) -> typing.Any:
    """Logs information about function calls and their return values.

    Args:
        filename (str): The logger name

    Raises:
        e: Exception

    Returns:
        log: the decorator writing to the logfile.
    """
    logger = logging.getLogger(filename)

    def log(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            debug = logger.isEnabledFor(logging.DEBUG)
            if debug:
                args_repr = [_summarize(a) for a in args]
                kwargs_repr = [f"{k}={_summarize(v)}" for k, v in kwargs.items()]
                signature = ", ".join(args_repr + kwargs_repr)
                if signature:
                    logger.debug(f"{func.__name__} called with args \n {signature}")
                else:
                    logger.debug(f"{func.__name__} called")

            try:
                result = func(*args, **kwargs)
                if debug:
                    logger.debug(
                        f"function {func.__name__} returns {_summarize(result)}"
                    )
                return result
            except Exception as e:
                logger.exception(
                    f"Exception raised in {func.__name__}. exception: {str(e)}"
                )
                raise e

        return wrapper

    return log
