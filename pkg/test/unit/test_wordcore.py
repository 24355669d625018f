# coding=utf-8

"""
Tests for mennicke/wordcore.py
pytest style
"""

import time

import numpy as np
import pytest

from mennicke import mgroup
from mennicke.wordcore import (
    ALPHABETS,
    UnknownGeneratorError,
    Word,
    WordSyntaxError,
    check_group,
    collect,
    free_reduce,
    parse_word,
    random_word,
    rule_table,
    sample_word,
)


def test_free_reduce():
    """test free_reduce merges neighbours and drops zero exponents"""
    assert free_reduce([("x", 1), ("x", 2), ("y", 0), ("z", 1)]) == (
        ("x", 3),
        ("z", 1),
    )
    assert free_reduce([("x", 1), ("y", 2), ("y", -2), ("x", -1)]) == ()


def test_word():
    """test Word printing, products and inverses"""
    w = Word((("x", 1), ("y", -2)))
    assert str(w) == "x y^-2"
    assert str(Word()) == "1"
    assert w * w.inverse() == Word()
    assert (w * Word((("y", 2),))).letters == (("x", 1),)
    assert w.generators() == ("x", "y")
    assert len(w) == 2


def test_parse_word():
    """test parse_word on valid words and the identity token"""
    got = parse_word("x y^-2 z", "M")
    assert got.letters == (("x", 1), ("y", -2), ("z", 1))
    assert parse_word("", "M") == Word()
    assert parse_word("1", "G") == Word()
    assert parse_word("x x^-1", "M") == Word()
    assert parse_word("E^3 D", "P").letters == (("E", 3), ("D", 1))
    # printed words parse back
    assert parse_word(str(got), "M") == got


def test_parse_word_err():
    """test parse_word error types and positions"""
    with pytest.raises(WordSyntaxError) as err_info:
        parse_word("x ^2", "M")
    assert err_info.value.position == 2
    assert "cannot parse term" in str(err_info.value)

    with pytest.raises(WordSyntaxError) as err_info:
        parse_word("x^", "M")
    assert err_info.value.position == 0

    with pytest.raises(UnknownGeneratorError) as err_info:
        parse_word("x E", "M")
    assert err_info.value.generator == "E"
    assert err_info.value.group == "M"
    assert err_info.value.position == 2

    # both are value errors
    with pytest.raises(ValueError):
        parse_word("u", "G")

    with pytest.raises(ValueError) as err_info:
        check_group("Q")
    assert "group must be one of" in str(err_info.value)


def test_random_word():
    """test random_word is deterministic and stays in the alphabet"""
    for group in ALPHABETS:
        w = random_word(3, group, 10, 4)
        assert w == random_word(3, group, 10, 4)
        assert set(w.generators()) <= set(ALPHABETS[group])

    with pytest.raises(ValueError) as err_info:
        random_word(0, "M", 0, 1)
    assert "max_len and max_exp must be positive" in str(err_info.value)


def test_collect_m():
    """test the M collector on hand-computed words"""
    assert str(collect(parse_word("x y z x", "M"), "M")) == "y z^-1"
    assert str(collect(parse_word("y x", "M"), "M")) == "x^-1 y"
    assert str(collect(parse_word("z^2 x", "M"), "M")) == "x z^-2"
    assert collect(Word(), "M") == Word()
    # xyz is an involution
    assert collect(parse_word("x y z x y z", "M"), "M") == Word()


def test_collect_g_p():
    """test the G and P collectors on the folding relations"""
    assert str(collect(parse_word("A A", "G"), "G")) == "Z^2"
    assert str(collect(parse_word("D^4", "G"), "G")) == "D"
    assert str(collect(parse_word("D^3", "G"), "G")) == "1"
    assert str(collect(parse_word("D X", "G"), "G")) == "Z D"
    assert str(collect(parse_word("E E", "P"), "P")) == "A B C"
    assert str(collect(parse_word("E X", "P"), "P")) == "X Z^-2 A E"
    assert str(collect(parse_word("E A", "P"), "P")) == "A E"


def test_collect_err():
    """test collect rejects foreign letters, groups and strategies"""
    with pytest.raises(UnknownGeneratorError):
        collect(Word((("E", 1),)), "G")
    with pytest.raises(ValueError) as err_info:
        collect(Word((("u", 1),)), "V")
    assert "no collector for group V" in str(err_info.value)
    with pytest.raises(ValueError) as err_info:
        collect(Word(), "M", strategy="rightmost")
    assert "strategy must be leftmost or random" in str(err_info.value)


def test_collect_strategy():
    """test random rewrite orders reach the leftmost normal form"""
    rng = np.random.default_rng(0)
    for group in ("M", "G", "P"):
        for _ in range(20):
            w = sample_word(rng, group, 8, 3)
            assert collect(w, group) == collect(w, group, strategy="random", rng=rng)


def test_collect_long_word():
    """test collection from the left is exact and fast on a long word"""
    rng = np.random.default_rng(5)
    gens = rng.integers(3, size=5000).tolist()
    exps = rng.integers(1, 9, size=5000).tolist()
    w = Word(tuple((("x", "y", "z")[g], e) for g, e in zip(gens, exps)))
    start = time.perf_counter()
    nf = collect(w, "M")
    assert time.perf_counter() - start < 1
    assert nf == mgroup.evaluate(w).to_word()


def test_collect_word_pairs_fast():
    """test pairs of words of up to 64 letters collect quickly"""
    rng = np.random.default_rng(6)
    pairs = [
        (sample_word(rng, "M", 64, 8), sample_word(rng, "M", 64, 8))
        for _ in range(2000)
    ]
    start = time.perf_counter()
    for w1, w2 in pairs:
        collect(w1 * w2, "M")
    assert time.perf_counter() - start < 5


def test_collect_random_long_words():
    """test the random rewrite order on longer words with large exponents"""
    rng = np.random.default_rng(7)
    for group in ("M", "G", "P"):
        for _ in range(10):
            w = sample_word(rng, group, 32, 8)
            assert collect(w, group) == collect(w, group, strategy="random", rng=rng)
    # rewrites that cancel across the seam
    w = parse_word("y x y^-1 x^-1 z x z^-1", "M")
    assert collect(w, "M", strategy="random", rng=rng) == collect(w, "M")


def test_rule_table():
    """test rule lookup and rule sides"""
    table = rule_table("M")
    assert table.rank == {"x": 0, "y": 1, "z": 2}
    rule = table.swaps[("z", "x")]
    assert rule.lhs(1, 1) == Word((("z", 1), ("x", 1)))
    assert rule.rhs(1, 1) == Word((("x", 1), ("z", -1)))
    g_table = rule_table("G")
    assert set(g_table.folds) == {"A", "B", "C", "D"}
    assert set(rule_table("P").folds) == {"A", "B", "C", "D", "E"}
