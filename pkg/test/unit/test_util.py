"""
Tests functions in mennicke/util.py
"""

import json
import os

import pandas as pd
import pytest
from testfixtures import TempDirectory

from mennicke.util import build_log_dir, format_results, save_report
from mennicke.verify import CheckResult

RESULTS = [
    CheckResult("02.cosets", 2, "pass", "M/M^2 has order 8", 3),
    CheckResult("16.omega", 16, "fail", "no h0", 40),
    CheckResult("16.zeta", 16, "pass", "ok", 20),
]


def test_build_log_dir():
    """test build_log_dir for default directory and custom directory"""
    with TempDirectory() as tempdir:
        cwd = os.getcwd()
        os.chdir(tempdir.path)
        try:
            # default directory, timestamp based
            log_dir = build_log_dir(log_dir="")
            head, tail = os.path.split(log_dir)
            assert head == "logs"
            assert len(tail) == len("20200101-000000")
            assert os.path.isdir(log_dir)

            # custom directory
            log_dir = build_log_dir(log_dir="custom")
            assert log_dir == os.path.join("logs", "custom")
            assert os.path.isdir(log_dir)
        finally:
            os.chdir(cwd)


def test_save_report():
    """test save_report by checking the csv files"""
    with TempDirectory() as tempdir:
        save_report(tempdir.path, RESULTS)
        for name in [
            "results.csv",
            "results_stats_per_section.csv",
            "results_stats_overall.csv",
        ]:
            assert os.path.exists(os.path.join(tempdir.path, name))

        df = pd.read_csv(os.path.join(tempdir.path, "results.csv"))
        assert list(df["check_id"]) == ["02.cosets", "16.omega", "16.zeta"]
        assert list(df["passed"]) == [True, False, True]

        df = pd.read_csv(
            os.path.join(tempdir.path, "results_stats_per_section.csv"), index_col=0
        )
        assert df.loc[16, "count"] == 2
        assert df.loc[16, "passed"] == 1
        assert df.loc[16, "elapsed_ms_mean"] == pytest.approx(30.0)


def test_format_results():
    """test the text, json and jsonl reports"""
    text = format_results(RESULTS, "text")
    lines = text.split("\n")
    assert lines[0] == "[PASS] 02.cosets: M/M^2 has order 8"
    assert lines[1] == "[FAIL] 16.omega: no h0"
    assert lines[-1] == "2/3 checks passed"

    records = json.loads(format_results(RESULTS, "json"))
    assert [r["status"] for r in records] == ["pass", "fail", "pass"]
    assert set(records[0]) == {"check_id", "section", "status", "detail", "elapsed_ms"}

    lines = format_results(RESULTS, "jsonl").split("\n")
    assert len(lines) == 3
    assert json.loads(lines[1])["check_id"] == "16.omega"

    with pytest.raises(ValueError) as err_info:
        format_results(RESULTS, "xml")
    assert "format must be text / json / jsonl" in str(err_info.value)
