"""
GF(2) linear algebra on numpy uint8 arrays.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np


def to_gf2(matrix) -> np.ndarray:
    return (np.array(matrix, dtype=np.int64) % 2).astype(np.uint8)


@dataclass(frozen=True)
class RowReduceResult:
    matrix: np.ndarray
    rank: int
    pivots: Tuple[int, ...]


def gf2_row_reduce(matrix) -> RowReduceResult:
    """
    Reduced row echelon form over GF(2).

    :param matrix: 2D array-like of bits
    :return: reduced matrix (same shape, zero rows last), rank and pivot columns
    """
    mat = to_gf2(matrix).copy()
    if mat.ndim != 2:
        raise ValueError(f"expected a 2D matrix, got shape {mat.shape}.")
    m, n = mat.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        for r in range(m):
            if r != row and mat[r, col]:
                mat[r, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat, rank=len(pivots), pivots=tuple(pivots))


def gf2_rank(matrix) -> int:
    return gf2_row_reduce(matrix).rank


def gf2_in_span(rows, vector) -> bool:
    """True if vector lies in the row space of rows."""
    rows = to_gf2(rows).reshape(-1, len(vector))
    stacked = np.vstack([rows, to_gf2(vector)[None, :]])
    return gf2_rank(stacked) == gf2_rank(rows)
