"""Tests the utility (overall-useful) functions."""

import json
import math
import os

import numpy as np
import pandas as pd
import pytest

from preparation import utility


@pytest.mark.parametrize("exit_code", [1, 2, 3])
def test_stop_script(exit_code: int) -> None:
    """Tests stopping the script with the given exit code."""
    with pytest.raises(SystemExit) as pytest_wrapped_e:
        utility.stop_script(exit_code)
    assert pytest_wrapped_e.type == SystemExit
    assert pytest_wrapped_e.value.code == exit_code


def test_check_and_make_output_subfolder(tmp_path) -> None:
    """Tests creating the folder of an output file."""
    filepath = os.path.join(str(tmp_path), "a", "b", "table.csv")
    utility.check_and_make_output_subfolder(filepath)
    assert os.path.isdir(os.path.join(str(tmp_path), "a", "b"))
    utility.check_and_make_output_subfolder("table.csv")


def test_export_df_format(output_folder) -> None:
    """Tests the CSV format: header, 17 significant digits and LF line endings."""
    filepath = os.path.join(output_folder, "sub", "table.csv")
    df = pd.DataFrame({"N": [1, 2], "mean_gap": [0.1, 1.0 / 3.0]})
    utility.export_df(df, filepath)
    with open(filepath, "rb") as file:
        content = file.read()
    assert content == b"N,mean_gap\n1,0.10000000000000001\n2,0.33333333333333331\n"
    pd.testing.assert_frame_equal(pd.read_csv(filepath), df)


def test_export_text(output_folder) -> None:
    """Tests writing a text file with LF line endings."""
    filepath = os.path.join(output_folder, "report.txt")
    utility.export_text("a\nb\n", filepath)
    with open(filepath, "rb") as file:
        assert file.read() == b"a\nb\n"


def test_export_metadata(output_folder) -> None:
    """Tests the JSON sidecar with numpy values."""
    filepath = os.path.join(output_folder, "table.csv")
    sidecar = utility.export_metadata(
        {"seed": np.uint64(5), "gaps": np.array([0.5, 0.25]), "name": "x"}, filepath
    )
    assert sidecar == filepath + ".json"
    with open(sidecar, encoding="utf-8") as file:
        assert json.load(file) == {"gaps": [0.5, 0.25], "name": "x", "seed": 5}


def test_trial_rng() -> None:
    """Tests that generators depend on seed and key only."""
    first = utility.trial_rng(42, 1, 3).standard_normal(4)
    np.testing.assert_array_equal(first, utility.trial_rng(42, 1, 3).standard_normal(4))
    assert not np.array_equal(first, utility.trial_rng(42, 3, 1).standard_normal(4))
    assert not np.array_equal(first, utility.trial_rng(43, 1, 3).standard_normal(4))


def test_run_trials_keeps_order() -> None:
    """Tests that serial and pooled runs give the same results in task order."""
    tasks = list(range(10))
    serial = utility.run_trials(math.factorial, tasks, workers=1)
    pooled = utility.run_trials(math.factorial, tasks, workers=3)
    assert serial == pooled == [math.factorial(k) for k in tasks]
