"""
Tests for the mennicke command line
"""

import json
import os

import pytest
from testfixtures import TempDirectory

from mennicke.cli import main

QUICK = ["-c", "config/test/quick.yaml"]


@pytest.mark.parametrize(
    "args,expected",
    [
        (["nf", "x y z x"], "y z^-1"),
        (["nf", "z^2 x"], "x z^-2"),
        (["nf", ""], "1"),
        (["nf", "-g", "G", "D X"], "Z D"),
        (["nf", "-g", "G", "A A"], "Z^2"),
        (["nf", "-g", "P", "E E"], "A B C"),
        (["nf", "-g", "V", "u v"], "w u^-2 v^2"),
        (["apply", "--aut", "D", "--to", "x"], "y"),
        (["apply", "--aut", "theta", "--to", "x"], "y"),
        (["apply", "--aut", "X A", "--to", "z^2"], "z^-2"),
        (["apply", "--aut", "E", "--to", "X"], "X A"),
        (["apply", "--aut", "Psi", "--to", "u"], "u w^2"),
        (["apply", "-a", "D", "-t", "u", "-g", "V"], "v"),
        (["orbits"], "{1} {xyz} {x,y,z} {xy,yz,zx}"),
    ],
)
def test_single_output(capsys, args, expected):
    """test commands printing one normal form"""
    assert main(args) == 0
    assert capsys.readouterr().out.strip() == expected


@pytest.mark.parametrize(
    "args,message",
    [
        (["nf", "x q"], "generator q at position 2"),
        (["nf", "x^"], "at position"),
        (["apply", "--aut", "Psi", "--to", "x"], "Psi acts on V only"),
        (["apply", "--aut", "E", "--to", "x"], "acts on G only"),
        (["apply", "--aut", "D", "--to", "x q"], "cannot infer the group"),
        (["verify", "-s", "21", "--no_save"], "sections must be within 2..20"),
    ],
)
def test_invalid_input(capsys, args, message):
    """test invalid input exits with 2 and an error on stderr"""
    assert main(args) == 2
    err = capsys.readouterr().err
    assert "error: " in err
    assert message in err


def test_verify_needs_selection():
    """test verify without --section, --all or --list"""
    with pytest.raises(SystemExit) as err_info:
        main(["verify"])
    assert err_info.value.code == 2


def test_verify_list(capsys):
    """test the check listing"""
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    assert "16.omega" in out
    assert "02.cosets" in out.split("\n")[0]


def test_verify_pass(capsys):
    """test passing sections exit with 0 and a text summary"""
    args = ["verify", "-s", "2", "-s", "8", "--no_save", "-q"] + QUICK
    assert main(args) == 0
    out = capsys.readouterr().out.strip().split("\n")
    assert out[0].startswith("[PASS] 02.cosets")
    assert out[-1] == "2/2 checks passed"


def test_verify_fail_json(capsys):
    """test a failing section exits with 1 and a json report"""
    args = ["verify", "-s", "16", "--no_save", "-f", "json"] + QUICK
    assert main(args) == 1
    records = json.loads(capsys.readouterr().out)
    assert [r["check_id"] for r in records] == ["16.omega"]
    assert records[0]["status"] == "fail"


def test_verify_overrides_and_save(capsys):
    """test seed and samples overrides and the saved reports"""
    with TempDirectory() as tempdir:
        log_dir = os.path.join(tempdir.path, "run")
        args = ["verify", "-s", "5", "--seed", "3", "-n", "20", "-l", log_dir]
        assert main(args + ["-f", "jsonl"] + QUICK) == 0
        for name in ["config.yaml", "results.csv", "results_stats_per_section.csv"]:
            assert os.path.exists(os.path.join(log_dir, name))
        with open(os.path.join(log_dir, "config.yaml")) as file:
            saved = file.read()
        assert "seed: 3" in saved
        assert "samples: 20" in saved
    record = json.loads(capsys.readouterr().out.strip())
    assert record["detail"] == "20 random elements classified"
