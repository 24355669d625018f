# coding=utf-8

"""
Tests for mennicke/f2linalg.py
pytest style
"""

import numpy as np
import pytest

from mennicke.f2linalg import gf2_in_span, gf2_rank, gf2_row_reduce, to_gf2


def test_to_gf2():
    """test reduction of integer entries, negative ones included"""
    got = to_gf2([[3, -1], [2, -4]])
    assert got.dtype == np.uint8
    assert np.array_equal(got, [[1, 1], [0, 0]])


def test_gf2_row_reduce():
    """test reduced row echelon form, rank and pivots"""
    result = gf2_row_reduce([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert result.rank == 2
    assert result.pivots == (0, 1)
    assert np.array_equal(result.matrix, [[1, 0, 1], [0, 1, 1], [0, 0, 0]])

    assert gf2_rank(np.eye(4)) == 4
    assert gf2_rank(np.zeros((2, 3))) == 0

    with pytest.raises(ValueError) as err_info:
        gf2_row_reduce([1, 0, 1])
    assert "expected a 2D matrix" in str(err_info.value)


def test_gf2_in_span():
    """test span membership"""
    rows = [[1, 1, 0], [0, 1, 1]]
    assert gf2_in_span(rows, [1, 0, 1])
    assert gf2_in_span(rows, [0, 0, 0])
    assert not gf2_in_span(rows, [1, 0, 0])
