# coding=utf-8

"""
Tests for mennicke/mendo.py
pytest style
"""

import numpy as np
import pytest
from sympy.combinatorics import Permutation

from mennicke import mendo, mgroup
from mennicke.mendo import IDENTITY_ENDO, THETA, THETA_INV, MEndo
from mennicke.mgroup import X, Y, Z, MElem


def test_relation_check():
    """test relation_check and MEndo.checked"""
    assert mendo.relation_check(IDENTITY_ENDO) is None
    assert mendo.relation_check(THETA) is None
    assert mendo.relation_check(MEndo(X, X, Z)) == "x^y=x^-1"
    with pytest.raises(ValueError) as err_info:
        MEndo.checked(X, X, Z)
    assert "does not preserve the relation x^y=x^-1" in str(err_info.value)
    assert MEndo.checked(Y, Z, X) == THETA


def test_apply_compose():
    """test apply, compose and powers of theta"""
    assert mendo.apply(THETA, MElem(1, 1, 1)) == MElem(-1, 1, -1)
    assert THETA(X) == Y
    assert mendo.compose(THETA, THETA_INV) == IDENTITY_ENDO
    assert mendo.compose(THETA, THETA) == THETA_INV
    assert mendo.theta_power(3) == IDENTITY_ENDO
    assert mendo.theta_power(-1) == THETA_INV
    # left to right: inner(x) first, then theta
    assert mendo.compose(mendo.inner(X), THETA)(Y) == MElem(0, -2, 1)
    assert mendo.compose_all([]) == IDENTITY_ENDO


def test_inner():
    """test inner automorphisms and the conjugation law"""
    assert mendo.inner(X)(Y) == MElem(-2, 1, 0)
    assert mendo.inner(X)(Z) == MElem(0, 0, -1)
    law = mendo.compose_all([THETA_INV, mendo.inner(Z), THETA])
    assert law == mendo.inner(THETA(Z))

    rng = np.random.default_rng(0)
    for _ in range(50):
        m = mgroup.random_elem(rng, 10)
        assert mendo.is_inner(mendo.inner(m)) == m
    assert mendo.is_inner(THETA) is None
    assert mendo.is_inner(mendo.kernel_endo(1, 0, 0)) is None
    assert mendo.is_inner(mendo.kernel_endo(2, 0, 0)) == MElem(0, 0, 2)


def test_kernel_family():
    """test P_(c,d,g) composes additively and the representatives form C2^3"""
    rng = np.random.default_rng(1)
    for _ in range(20):
        u = [int(v) for v in rng.integers(-5, 6, 3)]
        v = [int(w) for w in rng.integers(-5, 6, 3)]
        got = mendo.compose(mendo.kernel_endo(*u), mendo.kernel_endo(*v))
        assert got == mendo.kernel_endo(*(a + b for a, b in zip(u, v)))

    reps = dict(mendo.kernel_representatives())
    assert len(reps) == 8
    assert reps[(0, 0, 0)] == IDENTITY_ENDO
    for bits, e in reps.items():
        assert mendo.is_automorphism(e)
        assert (mendo.is_inner(e) is None) == (bits != (0, 0, 0))
        assert mendo.is_inner(mendo.compose(e, e)) is not None
    # (1, 1, 0) (0, 1, 1) = (1, 0, 1) modulo inner automorphisms
    product = mendo.compose(reps[(1, 1, 0)], reps[(0, 1, 1)])
    back = mendo.kernel_endo(-1, 0, -1)
    assert mendo.is_inner(mendo.compose(product, back)) is not None


def test_is_automorphism():
    """test the automorphism criterion on automorphisms and proper endomorphisms"""
    assert mendo.is_automorphism(IDENTITY_ENDO)
    assert mendo.is_automorphism(THETA)
    assert mendo.is_automorphism(mendo.kernel_endo(1, 1, 0))
    cube = MEndo(mgroup.power(X, 3), Y, Z)
    assert mendo.relation_check(cube) is None
    assert not mendo.is_automorphism(cube)
    assert not mendo.is_automorphism(MEndo(X, X, Z))


def test_matrices():
    """test the matrices on M^2 and M/M^2"""
    assert np.array_equal(mendo.m2_matrix(IDENTITY_ENDO).astype(int), np.eye(3))
    theta = mendo.m2_matrix(THETA).astype(int)
    assert np.array_equal(theta, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    # the kernel family acts trivially on M^2
    kernel = mendo.kernel_endo(1, 0, 0)
    assert np.array_equal(mendo.m2_matrix(kernel).astype(int), np.eye(3))
    e1, e2 = mendo.inner(X), THETA
    got = mendo.m2_matrix(mendo.compose(e1, e2)).astype(int)
    expected = mendo.m2_matrix(e1).astype(int) @ mendo.m2_matrix(e2).astype(int)
    assert np.array_equal(got, expected)
    assert np.array_equal(mendo.mod2_matrix(THETA), [[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_lambda_perm_orbits():
    """test the permutation of M/M^2 and the orbit partition"""
    assert mendo.lambda_perm(THETA) == Permutation([0, 2, 3, 1, 5, 6, 4, 7])
    assert mendo.lambda_perm(mendo.kernel_endo(1, 1, 1)).is_Identity
    parts = mendo.orbits([THETA, mendo.inner(X), mendo.kernel_endo(1, 0, 0)])
    assert mendo.format_partition(parts) == "{1} {xyz} {x,y,z} {xy,yz,zx}"
    assert len(mendo.orbits([])) == 8


def test_parse_endo():
    """test the x -> ... serialization"""
    assert str(THETA) == "x -> y, y -> z, z -> x"
    assert mendo.parse_endo("x -> y, y -> z, z -> x") == THETA
    e = mendo.kernel_endo(1, 0, -1)
    assert mendo.parse_endo(str(e)) == e
    with pytest.raises(ValueError) as err_info:
        mendo.parse_endo("x -> y, y -> z")
    assert "images of x, y and z are all required" in str(err_info.value)
    with pytest.raises(ValueError) as err_info:
        mendo.parse_endo("x = y, y -> z, z -> x")
    assert "cannot parse endomorphism item" in str(err_info.value)
