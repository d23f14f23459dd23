"""General helpers: exit routine, output files, seeding and the trial worker pool."""

"""
# File: utility.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from concurrent.futures import ProcessPoolExecutor
import json
import logging
import os
import sys
import typing
from typing import Callable
from typing import List
from typing import Sequence

import numpy as np
import pandas as pd

from preparation import log_decorator


logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.17g"


@log_decorator.log_factory(__name__)
def stop_script(exit_code: int = 1) -> None:
    """Standard exit routine

    Args:
        exit_code (int): process exit code, 2 for configuration and 3 for numeric errors.

    Returns:
        Print an default exit message to the standard error stream.
    """

    # https://stackoverflow.com/questions/287871/how-do-i-print-colored-text-to-the-terminal
    FAIL = "\033[91m"
    ENDC = "\033[0m"

    print(
        f"{FAIL} \n\nThe run stopped because of an error. Check the logfile for errors and warnings. \n"
        f"See the documentation for help with solving the problem.\n\n {ENDC}",
        file=sys.stderr,
    )
    sys.exit(exit_code)


@log_decorator.log_factory(__name__)
def check_and_make_output_subfolder(filepath: str) -> None:
    """Creates the folder of filepath when it does not exist.

    Args:
        filepath (str): the output file path.
    """
    folder = os.path.dirname(filepath)
    if folder and not os.path.exists(folder):
        os.makedirs(folder)
        logger.info(f"Created output folder {folder}.")


def export_df(df: pd.DataFrame, filepath: str) -> None:
    """Writes a DataFrame as CSV: comma separated, 17 significant digits, LF line endings.

    Args:
        df (pd.DataFrame): the dataframe to write
        filepath (str): the filepath (location + name)
    """
    check_and_make_output_subfolder(filepath)
    try:
        df.to_csv(
            filepath,
            index=False,
            sep=",",
            float_format=CSV_FLOAT_FORMAT,
            lineterminator="\n",
        )
    except OSError as e:
        logger.error(f"Could not write {filepath}.")
        logger.debug(f"{e} with %s", "arguments", exc_info=True)
        raise
    logger.info(f"Wrote {len(df)} rows to {filepath}.")


def export_text(text: str, filepath: str) -> None:
    """Writes a text file with LF line endings."""
    check_and_make_output_subfolder(filepath)
    with open(filepath, "w", encoding="utf-8", newline="\n") as file:
        file.write(text)
    logger.info(f"Wrote {filepath}.")


def export_metadata(metadata: dict[str, typing.Any], filepath: str) -> str:
    """Writes the JSON sidecar <filepath>.json next to an output file.

    Returns:
        str: the sidecar path.
    """
    sidecar = filepath + ".json"
    check_and_make_output_subfolder(sidecar)
    with open(sidecar, "w", encoding="utf-8", newline="\n") as file:
        json.dump(metadata, file, indent=2, sort_keys=True, default=_json_default)
        file.write("\n")
    return sidecar


def _json_default(value: typing.Any) -> typing.Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


def trial_rng(seed: int, *key: int) -> np.random.Generator:
    """Generator of one trial, derived from the base seed and the trial key.

    The key (sweep point, trial index) enters SeedSequence as its spawn key, so results
    do not depend on the order in which trials run.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def run_trials(
    func: Callable[[typing.Any], typing.Any], tasks: Sequence[typing.Any], workers: int = 1
) -> List[typing.Any]:
    """Maps func over tasks, in a process pool when workers > 1; results keep task order.

    Args:
        func (Callable): module-level function of one task.
        tasks (Sequence): the task arguments.
        workers (int): number of worker processes.

    Returns:
        List: one result per task.
    """
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, tasks))
