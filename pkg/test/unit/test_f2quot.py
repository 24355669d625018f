# coding=utf-8

"""
Tests for mennicke/f2quot.py
pytest style
"""

import numpy as np
import pytest

from mennicke import f2quot, ggroup, pgroup
from mennicke.f2quot import R_SUBSPACE, F2Subspace, FiniteGroupTable


def test_finite_group_table():
    """test a small table, its subgroups and quotients"""
    z4 = np.add.outer(np.arange(4), np.arange(4)) % 4
    table = FiniteGroupTable("Z4", [0, 1, 2, 3], z4)
    assert table.identity == 0
    assert table.order == 4
    assert table.is_abelian()
    assert table.exponent() == 4
    assert table.power(1, -1) == 3
    assert table.subgroup([2]) == frozenset({0, 2})
    assert table.squares_subgroup() == frozenset({0, 2})
    assert table.derived_subgroup() == frozenset({0})
    assert table.check_axioms()
    quotient = table.quotient(frozenset({0, 2}), "Z2")
    assert quotient.order == 2
    assert list(quotient.projection) == [0, 1, 0, 1]

    with pytest.raises(ValueError) as err_info:
        FiniteGroupTable("bad", [0, 1], z4)
    assert "must have shape" in str(err_info.value)
    with pytest.raises(ValueError) as err_info:
        table.quotient(frozenset({0, 1}), "bad")
    assert "is not a normal subgroup" in str(err_info.value)


def test_materialize():
    """test the orders of the finite quotients"""
    for quotient_id, order in f2quot.QUOTIENT_ORDERS.items():
        assert f2quot.materialize(quotient_id).order == order
    with pytest.raises(ValueError) as err_info:
        f2quot.materialize("G/G")
    assert "quotient must be one of" in str(err_info.value)


def test_reductions():
    """test that reduction mod M^2 respects products and the group axioms"""
    rng = np.random.default_rng(0)
    report = f2quot.homomorphism_check(rng, 20, 6)
    assert all(ok for ok, _ in report.values())
    report = f2quot.axioms_check(rng, 500)
    assert all(ok for ok, _ in report.values())
    assert all(ok for ok, _ in f2quot.quotient_invariants().values())


def test_e_not_inner():
    """test that E moves G/[G, G] and inner automorphisms do not"""
    report = f2quot.e_not_inner_check(np.random.default_rng(1), 20, 5)
    assert all(ok for ok, _ in report.values())


def test_subspaces():
    """test the GF(2) subspaces of S"""
    w = F2Subspace.from_rows([[1, 1, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]])
    assert w.dim == 2
    assert w.basis == ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0))
    assert w.contains((1, 1, 0, 0, 0, 0))
    assert not w.contains((0, 0, 1, 0, 0, 0))
    assert len(w.elements()) == 4
    assert str(w) == "<X, Y>"
    assert w.to_bits() == "100000 010000"
    assert f2quot.M_SUBSPACE.meets_trivially(R_SUBSPACE)
    assert not w.meets_trivially(f2quot.M_SUBSPACE)
    assert f2quot.vector_name((1, 0, 0, 1, 0, 1)) == "XAC"
    assert f2quot.vector_name((0,) * 6) == "1"
    assert f2quot.vector_lift((1, 0, 0, 1, 0, 1)) == ggroup.parse("X A C")

    subspaces = f2quot.enumerate_3subspaces()
    assert len(subspaces) == 1395
    assert len(set(subspaces)) == 1395


def test_invariant_subspaces():
    """test the D-invariant subspaces and the normal complements of R/M^2"""
    assert R_SUBSPACE.invariant_under(f2quot.action_matrix("X"))
    assert len(f2quot.invariant_subspaces(("D",))) == 15
    complements = f2quot.normal_complements()
    assert sorted(complements) == sorted(pgroup.COMPLEMENT_LABELS)
    assert complements["X"] == f2quot.M_SUBSPACE
    ok, detail = f2quot.r_uniqueness_scan()
    assert ok
    assert "abelian preimage for <A, B, C>" in detail


def test_orbit_of_m_scan():
    """test the complements with [Q, Q] = M^2 and the automorphisms reaching them"""
    ok, detail = f2quot.orbit_of_M_scan()
    # tau and tau E reach two further complements with [Q, Q] = M^2
    assert not ok
    assert detail.startswith("searched only normal Q with Q/M^2 a complement of R/M^2")
    assert "X via id" in detail
    assert "XA via E" in detail
    assert "beyond M and M^E: XABC, XBC" in detail


def test_characteristic_chain():
    """test the subgroup chain singling out G inside P"""
    report = f2quot.characteristic_chain_check()
    assert all(ok for ok, _ in report.values())
    assert "G: index 3" in report["[U,U]"][1]
    detail = report["G_characteristic"][1]
    assert detail.endswith("G is characteristic in P = Inn(G)<E>")
    assert "complete" not in detail
