import collections.abc
import copy
import logging
import os
from typing import List, Optional, Union

import yaml

DEFAULT_CONFIG = {
    "verify": {
        "seed": 0,
        "samples": 10000,
        "word": {"max_len": 64, "max_exp": 8, "pairs": 100000},
        "confluence": {"words": 100000, "max_len": 16},
        "elem_bound": 20,
        "box": {"m_center": 10, "v_center": 10, "g_center": 6, "p_center": 6},
        "h0_bound": 4,
        "table_samples": 1000000,
    }
}

BOX_KEYS = ("m_center", "v_center", "g_center", "p_center")


def update_nested_dict(d, u):
    """https://stackoverflow.com/questions/3232943/update-value-of-a-nested-dictionary-of-varying-depth"""
    for k, v in u.items():
        if isinstance(v, collections.abc.Mapping):
            d[k] = update_nested_dict(d.get(k, {}), v)
        else:
            d[k] = v
    return d


def load_configs(config_path: Optional[Union[str, List[str]]] = None) -> dict:
    """
    Load the default configuration and update it with each file in turn.

    :param config_path: one path, a list of paths, or None for the defaults only
    :return: the merged and checked configuration
    """
    if config_path is None:
        config_path = []
    if isinstance(config_path, str):
        config_path = [config_path]
    config = copy.deepcopy(DEFAULT_CONFIG)
    for config_path_i in config_path:
        with open(config_path_i) as file:
            config_i = yaml.load(file, Loader=yaml.FullLoader)
        if config_i is None:
            logging.warning(f"Config file {config_path_i} is empty.")
            continue
        config = update_nested_dict(d=config, u=config_i)
    config_sanity_check(config)
    return config


def save(config: dict, out_dir: str, filename: str = "config.yaml"):
    assert filename.endswith(".yaml")
    with open(os.path.join(out_dir, filename), "w+") as f:
        f.write(yaml.dump(config))


def _check_int(name: str, value, minimum: int):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value}.")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}.")


def config_sanity_check(config: dict):
    """check if the given config satisfies the requirements"""

    assert "verify" in config.keys()
    verify_config = config["verify"]

    _check_int("seed", verify_config["seed"], 0)
    _check_int("samples", verify_config["samples"], 1)
    _check_int("elem_bound", verify_config["elem_bound"], 1)
    _check_int("h0_bound", verify_config["h0_bound"], 0)
    _check_int("table_samples", verify_config["table_samples"], 1)

    # words
    for key in ["max_len", "max_exp", "pairs"]:
        _check_int(f"word.{key}", verify_config["word"][key], 1)
    if verify_config["word"]["max_len"] > 64:
        logging.warning(
            f"Words of length up to {verify_config['word']['max_len']} make the "
            f"collector slow."
        )
    for key in ["words", "max_len"]:
        _check_int(f"confluence.{key}", verify_config["confluence"][key], 1)
    if verify_config["confluence"]["max_len"] > 32:
        logging.warning(
            "Confluence words of length up to "
            f"{verify_config['confluence']['max_len']} make the random rewrite "
            f"order slow."
        )

    # boxes
    for key in BOX_KEYS:
        if key not in verify_config["box"]:
            raise ValueError(f"box.{key} is not defined.")
        _check_int(f"box.{key}", verify_config["box"][key], 1)
    for key in ["g_center", "p_center"]:
        box = verify_config["box"][key]
        if box > 8:
            logging.warning(f"box.{key} = {box} grows the search cubically.")

    samples = verify_config["samples"]
    if samples < 100:
        logging.warning(f"Only {samples} samples per randomized check.")
    if samples > 10 ** 6:
        logging.warning(f"{samples} samples per randomized check will be slow.")
