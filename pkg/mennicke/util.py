import json
import logging
import os
from datetime import datetime
from typing import List

import pandas as pd

from mennicke.verify import CheckResult


def build_log_dir(log_dir: str) -> str:
    """
    :param log_dir: str, path to where verification reports are stored.
    :return: the path of directory to save reports
    """
    log_dir = os.path.join(
        "logs", datetime.now().strftime("%Y%m%d-%H%M%S") if log_dir == "" else log_dir
    )
    if os.path.exists(log_dir):
        logging.warning("Log directory {} exists already.".format(log_dir))
    else:
        os.makedirs(log_dir)
    return log_dir


def save_report(save_dir: str, results: List[CheckResult]):
    """
    :param save_dir: directory to save outputs
    :param results: check results of one verification run
    """
    os.makedirs(name=save_dir, exist_ok=True)

    # one row per check
    df = pd.DataFrame([result.to_dict() for result in results])
    df["passed"] = df["status"] == "pass"
    df.to_csv(os.path.join(save_dir, "results.csv"), index=False)

    # count / passed / elapsed per section
    df_per_section = df.groupby(["section"])
    df_per_section = pd.concat(
        [
            df_per_section["check_id"].count().rename("count"),
            df_per_section["passed"].sum().astype(int).rename("passed"),
            df_per_section["elapsed_ms"].mean().rename("elapsed_ms_mean"),
            df_per_section["elapsed_ms"].median().rename("elapsed_ms_median"),
            df_per_section["elapsed_ms"].std().rename("elapsed_ms_std"),
        ],
        axis=1,
        sort=True,
    )
    df_per_section.to_csv(
        os.path.join(save_dir, "results_stats_per_section.csv"), index=True
    )

    # overall elapsed time
    df[["elapsed_ms"]].describe().to_csv(
        os.path.join(save_dir, "results_stats_overall.csv"), index=True
    )


def format_results(results: List[CheckResult], fmt: str) -> str:
    """
    :param results: check results sorted by check_id
    :param fmt: text, json or jsonl
    :return: the report printed on stdout
    """
    if fmt == "json":
        return json.dumps([result.to_dict() for result in results], indent=2)
    if fmt == "jsonl":
        return "\n".join(json.dumps(result.to_dict()) for result in results)
    if fmt != "text":
        raise ValueError(f"format must be text / json / jsonl, got {fmt}.")
    lines = [
        f"[{result.status.upper()}] {result.check_id}: {result.detail}"
        for result in results
    ]
    passed = sum(result.passed for result in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
