"""
Tests functions in mennicke/parser.py
"""

import copy
import os

import pytest
import yaml
from testfixtures import TempDirectory

from mennicke.parser import (
    DEFAULT_CONFIG,
    config_sanity_check,
    load_configs,
    save,
    update_nested_dict,
)


def test_update_nested_dict():
    """test update_nested_dict by checking outputs values"""
    # two simple dicts with same key
    got = update_nested_dict(dict(d=1), dict(d=0))
    assert got == dict(d=0)

    # dict with nested dict without common key
    got = update_nested_dict(dict(d=1), dict(v=dict(x=0)))
    assert got == dict(d=1, v=dict(x=0))

    # dict with nested dict with common key
    # fail because can not use dict to overwrite non dict values
    with pytest.raises(TypeError) as err_info:
        update_nested_dict(dict(v=1), dict(v=dict(x=0)))
    assert "'int' object does not support item assignment" in str(err_info.value)

    # overwrite a nested value, keep the others
    got = update_nested_dict(dict(v=dict(x=0, y=1)), dict(v=dict(x=1)))
    assert got == dict(v=dict(x=1, y=1))


def test_load_configs():
    """
    test load_configs by checking outputs
    """
    # defaults only, returned as a copy
    got = load_configs()
    assert got == DEFAULT_CONFIG
    got["verify"]["seed"] = 3
    assert DEFAULT_CONFIG["verify"]["seed"] == 0

    # the shipped config equals the defaults
    with open("config/verify.yaml") as file:
        expected = yaml.load(file, Loader=yaml.FullLoader)
    assert load_configs("config/verify.yaml") == expected

    # multiple configs, later files win
    got = load_configs(config_path=["config/test/quick.yaml", "config/test/words.yaml"])
    assert got["verify"]["seed"] == 7
    assert got["verify"]["word"] == dict(max_len=8, max_exp=3, pairs=20)
    assert got["verify"]["confluence"] == dict(words=30, max_len=6)
    assert got["verify"]["box"]["g_center"] == 1


def test_load_empty_config(caplog):
    """test an empty file is skipped with a warning"""
    with TempDirectory() as tempdir:
        path = os.path.join(tempdir.path, "empty.yaml")
        with open(path, "w") as file:
            file.write("")
        caplog.clear()
        got = load_configs(path)
    assert got == DEFAULT_CONFIG
    assert "is empty." in caplog.text


def test_save():
    """test save by check error and existance of file"""
    # default file name
    with TempDirectory() as tempdir:
        save(config=dict(x=1), out_dir=tempdir.path)
        assert os.path.exists(os.path.join(tempdir.path, "config.yaml"))

    # non yaml filename
    with TempDirectory() as tempdir:
        with pytest.raises(AssertionError):
            save(config=dict(x=1), out_dir=tempdir.path, filename="test.txt")


def test_config_sanity_check(caplog):
    """test config_sanity_check by check error messages"""
    # verify is not in the key
    with pytest.raises(AssertionError):
        config_sanity_check(config=dict())

    # negative seed
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["verify"]["seed"] = -1
    with pytest.raises(ValueError) as err_info:
        config_sanity_check(config)
    assert "seed must be >= 0, got -1." in str(err_info.value)

    # non integer sizes
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["verify"]["word"]["pairs"] = 1.5
    with pytest.raises(ValueError) as err_info:
        config_sanity_check(config)
    assert "word.pairs must be an integer, got 1.5." in str(err_info.value)
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["verify"]["samples"] = True
    with pytest.raises(ValueError) as err_info:
        config_sanity_check(config)
    assert "samples must be an integer" in str(err_info.value)
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["verify"]["confluence"]["words"] = 0
    with pytest.raises(ValueError) as err_info:
        config_sanity_check(config)
    assert "confluence.words must be >= 1, got 0." in str(err_info.value)

    # missing box
    config = copy.deepcopy(DEFAULT_CONFIG)
    del config["verify"]["box"]["p_center"]
    with pytest.raises(ValueError) as err_info:
        config_sanity_check(config)
    assert "box.p_center is not defined." in str(err_info.value)

    # check warnings
    # few samples, long words, large boxes
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["verify"]["samples"] = 10
    config["verify"]["word"]["max_len"] = 100
    config["verify"]["confluence"]["max_len"] = 40
    config["verify"]["box"]["g_center"] = 9
    caplog.clear()  # clear previous log
    config_sanity_check(config)
    # warning messages can be detected together
    assert "Only 10 samples per randomized check." in caplog.text
    assert "Words of length up to 100 make the collector slow." in caplog.text
    assert "Confluence words of length up to 40 make the random" in caplog.text
    assert "box.g_center = 9 grows the search cubically." in caplog.text
