# coding=utf-8

"""
Tests for mennicke/vgroup.py
pytest style
"""

import numpy as np
import pytest
from sympy.combinatorics import Permutation

from mennicke import ggroup, mgroup, vgroup
from mennicke.mgroup import MElem
from mennicke.vgroup import PSI, PSI_INV, U, V, W, VAutElem, VEndo
from mennicke.wordcore import parse_word


def test_elements():
    """test membership, classes and uvw normal forms"""
    assert vgroup.v_class(MElem(3, 1, 0)) == "u"
    assert vgroup.v_class(MElem(2, 0, 4)) == "1"
    with pytest.raises(ValueError) as err_info:
        vgroup.check_velem(mgroup.X)
    assert "is not in V" in str(err_info.value)

    value = vgroup.evaluate(parse_word("u v", "V"))
    assert value == MElem(1, 2, 1)
    assert str(vgroup.to_uvw_word(value)) == "w u^-2 v^2"
    assert str(vgroup.to_uvw_word(MElem(0, 2, 0))) == "u^2"
    assert str(vgroup.to_uvw_word(mgroup.IDENTITY)) == "1"

    rng = np.random.default_rng(0)
    for _ in range(30):
        p = vgroup.random_velem(rng, 8)
        assert mgroup.in_v(p)
        assert vgroup.evaluate(vgroup.to_uvw_word(p)) == p


def test_presentation():
    """test the relations of V in M-coordinates"""
    assert all(vgroup.v_presentation_check().values())
    assert vgroup.squares_generate_m2()
    swap = VEndo(V, U, W)
    assert not all(vgroup.v_presentation_check(swap).values())
    with pytest.raises(ValueError) as err_info:
        VEndo.checked(V, U, W)
    assert "does not preserve the relations" in str(err_info.value)
    with pytest.raises(ValueError):
        VEndo(mgroup.X, V, W)


def test_psi():
    """test Psi, its inverse and the permutation it induces on V/V^2"""
    assert all(vgroup.v_presentation_check(PSI).values())
    assert vgroup.compose(PSI, PSI_INV) == vgroup.IDENTITY_ENDO
    assert vgroup.compose(PSI_INV, PSI) == vgroup.IDENTITY_ENDO
    assert PSI(U) == mgroup.mul(U, mgroup.power(W, 2))
    assert vgroup.pi_perm(PSI) == Permutation([0, 1, 3, 2])
    assert vgroup.extend_to_M(PSI) is None


def test_restrict_and_extend():
    """test that restriction to V is injective and inverted by extend_to_M"""
    assert vgroup.restrict(ggroup.IDENTITY) == vgroup.IDENTITY_ENDO
    assert vgroup.pi_perm(vgroup.restrict(ggroup.D)).order() == 3
    assert vgroup.pi_perm(vgroup.restrict(ggroup.X)).is_Identity
    rng = np.random.default_rng(1)
    for _ in range(30):
        g = ggroup.random_elem(rng, 6)
        assert vgroup.extend_to_M(vgroup.restrict(g)) == g
        h = ggroup.random_elem(rng, 6)
        lhs = vgroup.restrict(ggroup.gmul(g, h))
        assert lhs == vgroup.compose(vgroup.restrict(g), vgroup.restrict(h))
    ok, _ = vgroup.gamma_injectivity_check(rng, 20, 5)
    assert ok


def test_tau():
    """test conjugation by Psi on G"""
    assert vgroup.tau(ggroup.X) == ggroup.parse("Y^-1 A B C")
    assert not ggroup.subgroup_membership(vgroup.tau(ggroup.X), "InnM")
    for g in ggroup.GENERATORS.values():
        lhs = vgroup.compose(vgroup.compose(PSI_INV, vgroup.restrict(g)), PSI)
        assert vgroup.restrict(vgroup.tau(g)) == lhs
    assert vgroup.restrict(vgroup.c0()) == vgroup.compose(PSI, PSI)
    ok, detail = vgroup.inn_m_not_characteristic_witness(
        np.random.default_rng(2), 10, 4
    )
    assert ok
    assert "is not in Inn(M)" in detail


def test_vaut():
    """test the group law on pairs (g, eps)"""
    with pytest.raises(ValueError) as err_info:
        VAutElem(ggroup.X, 2)
    assert "eps must be 0 or 1" in str(err_info.value)
    assert str(vgroup.VAUT_PSI) == "1 Psi"
    assert vgroup.vaut_mul(vgroup.VAUT_PSI, vgroup.VAUT_PSI) == VAutElem(vgroup.c0())

    rng = np.random.default_rng(3)
    for _ in range(15):
        p, q = vgroup.random_vaut(rng, 4), vgroup.random_vaut(rng, 4)
        pq = vgroup.vaut_mul(p, q)
        assert vgroup.act(pq) == vgroup.compose(vgroup.act(p), vgroup.act(q))
        assert p * vgroup.vaut_inv(p) == vgroup.VAUT_IDENTITY
    ok, _ = vgroup.centralizer_triviality_check(rng, 10, 4)
    assert ok


def test_center():
    """test Z(V) = 1 and the box argument"""
    ok, detail = vgroup.v_center_check(2)
    assert ok
    assert "exact solve gives 1" in detail
    with pytest.raises(ValueError) as err_info:
        vgroup.v_center_check(0)
    assert "box must be >= 1" in str(err_info.value)


def test_index2_subgroups():
    """test that V is the only 2-generated torsion-free subgroup of index 2"""
    subgroups = vgroup.index2_subgroups()
    assert len(subgroups) == 7
    free = [h for h in subgroups if h.torsion_free]
    assert len(free) == 4
    assert [h.name for h in free if h.quotient_order == 4] == ["V"]
    assert sorted(h.quotient_order for h in free) == [4, 8, 8, 8]
