# coding=utf-8

"""
Tests for mennicke/mgroup.py
pytest style
"""

import math

import numpy as np
import pytest

from mennicke import mgroup
from mennicke.mgroup import IDENTITY, X, Y, Z, DInfElem, MElem
from mennicke.wordcore import collect, parse_word, sample_word


def test_mul():
    """test the closed-form product on hand-computed cases"""
    # (xy)(zx) = y z^-1
    assert mgroup.mul(MElem(1, 1, 0), MElem(1, 0, -1)) == MElem(0, 1, -1)
    assert str(MElem(0, 1, -1)) == "y z^-1"
    assert str(IDENTITY) == "1"
    assert mgroup.mul(Y, X) == MElem(-1, 1, 0)
    assert X * Y == MElem(1, 1, 0)
    assert mgroup.evaluate(parse_word("x y z x", "M")) == MElem(0, 1, -1)


def test_mul_matches_collector():
    """test the closed form against the collector on random word pairs"""
    rng = np.random.default_rng(1)
    for _ in range(100):
        w1, w2 = sample_word(rng, "M", 8, 4), sample_word(rng, "M", 8, 4)
        value = mgroup.mul(mgroup.evaluate(w1), mgroup.evaluate(w2))
        assert collect(w1 * w2, "M") == value.to_word()


def test_evaluate():
    """test evaluate against products of generator powers"""
    gens = {"x": X, "y": Y, "z": Z}
    rng = np.random.default_rng(3)
    for _ in range(50):
        w = sample_word(rng, "M", 16, 8)
        expected = IDENTITY
        for gen, exp in w.letters:
            expected = mgroup.mul(expected, mgroup.power(gens[gen], exp))
        assert mgroup.evaluate(w) == expected


def test_inverse_power():
    """test inv, power and conj"""
    rng = np.random.default_rng(0)
    for _ in range(50):
        p = mgroup.random_elem(rng, 10)
        assert mgroup.mul(p, mgroup.inv(p)) == IDENTITY
        assert mgroup.mul(mgroup.inv(p), p) == IDENTITY
        assert mgroup.power(p, 3) == mgroup.mul(p, mgroup.mul(p, p))
        assert mgroup.power(p, -1) == mgroup.inv(p)
    assert mgroup.conj(Z, X) == MElem(0, 0, -1)
    assert mgroup.conj(X, Y) == MElem(-1, 0, 0)
    assert mgroup.conj(Y, Z) == MElem(0, -1, 0)


def test_commutators():
    """test [x, y] = x^-2 and its cyclic shifts"""
    assert mgroup.comm(X, Y) == mgroup.power(X, -2)
    assert mgroup.comm(Y, Z) == mgroup.power(Y, -2)
    assert mgroup.comm(Z, X) == mgroup.power(Z, -2)


def test_order():
    """test the torsion classification"""
    assert mgroup.order(IDENTITY) == 1
    assert mgroup.order(MElem(1, 1, 1)) == 2
    assert mgroup.order(MElem(3, -1, 5)) == 2
    assert mgroup.power(MElem(3, -1, 5), 2) == IDENTITY
    assert mgroup.order(X) == math.inf
    assert mgroup.order(MElem(1, 1, 0)) == math.inf
    assert all(mgroup.power(MElem(1, 1, 0), n) != IDENTITY for n in range(1, 17))


def test_cosets():
    """test coset labels and membership predicates"""
    assert mgroup.coset_class(MElem(3, -1, 2)) == "xy"
    assert mgroup.coset_class(MElem(2, 0, -4)) == "1"
    assert mgroup.coset_rep("zx") == MElem(1, 0, 1)
    for label in mgroup.COSET_LABELS:
        assert mgroup.coset_class(mgroup.coset_rep(label)) == label
    assert mgroup.in_m2(MElem(2, -4, 0))
    assert not mgroup.in_m2(X)
    assert mgroup.in_v(MElem(1, 1, 0))
    assert not mgroup.in_v(X)
    assert MElem(2, -4, 6).half() == (1, -2, 3)
    with pytest.raises(ValueError) as err_info:
        X.half()
    assert "is not in M^2" in str(err_info.value)


def test_in_gamma():
    """test the lower central series predicate"""
    assert mgroup.in_gamma(X, 1)
    assert mgroup.in_gamma(MElem(2, 4, 0), 2)
    assert not mgroup.in_gamma(MElem(2, 4, 0), 3)
    assert mgroup.comm(MElem(0, 2, 0), Z) == MElem(0, -4, 0)
    assert mgroup.in_gamma(MElem(0, -4, 0), 3)
    with pytest.raises(ValueError) as err_info:
        mgroup.in_gamma(X, 0)
    assert "lower central series index must be >= 1" in str(err_info.value)


def test_center():
    """test that M has trivial center"""
    assert mgroup.is_central(IDENTITY)
    assert not mgroup.is_central(MElem(1, 1, 1))
    assert not mgroup.is_central(MElem(2, 0, 0))
    reps = [mgroup.coset_rep(label) for label in mgroup.COSET_LABELS]
    assert mgroup.solve_center(reps, [X, Y, Z]) == [IDENTITY]


def test_conj_matrix():
    """test the action of conjugation on M^2 in half coordinates"""
    for g in (X, Y, Z, MElem(1, 1, 1)):
        for h in (MElem(2, 0, 0), MElem(0, 2, 0), MElem(0, 0, 2)):
            got = np.array(h.half()).dot(mgroup.conj_matrix(g))
            assert tuple(int(v) for v in got) == mgroup.conj(h, g).half()


def test_dihedral():
    """test the three maps onto the infinite dihedral group"""
    assert mgroup.f1(MElem(1, 1, 0)) == DInfElem(1, 1)
    assert mgroup.f2(Z) == mgroup.DINF_V
    assert mgroup.f3(X) == mgroup.DINF_V
    assert mgroup.dinf_pow(mgroup.DINF_V, 2) == mgroup.DINF_IDENTITY
    assert mgroup.dinf_mul(mgroup.DINF_V, mgroup.DINF_U) == DInfElem(-1, 1)
    with pytest.raises(ValueError) as err_info:
        DInfElem(0, 2)
    assert "exponent of v must be 0 or 1" in str(err_info.value)

    rng = np.random.default_rng(2)
    for _ in range(50):
        p, q = mgroup.random_elem(rng, 6), mgroup.random_elem(rng, 6)
        for f in (mgroup.f1, mgroup.f2, mgroup.f3):
            assert f(mgroup.mul(p, q)) == mgroup.dinf_mul(f(p), f(q))
