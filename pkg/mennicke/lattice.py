"""
Sublattices of M^2 in half coordinates (x^2, y^2, z^2 as the standard basis of Z^3).
"""

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy.matrices.normalforms import hermite_normal_form

from mennicke import ggroup
from mennicke.ggroup import GElem
from mennicke.mendo import m2_matrix

Row = Tuple[int, int, int]


@dataclass(frozen=True)
class Lattice:
    """Integer row lattice with a Hermite normal form basis."""

    basis: Tuple[Row, ...]

    @classmethod
    def from_generators(cls, rows: Iterable[Sequence[int]]) -> "Lattice":
        rows = [tuple(int(v) for v in row) for row in rows]
        rows = [row for row in rows if any(row)]
        if not rows:
            return cls(basis=())
        hnf = hermite_normal_form(sympy.Matrix(rows).T)
        basis = tuple(
            tuple(int(v) for v in hnf[:, col])
            for col in range(hnf.shape[1])
            if any(hnf[:, col])
        )
        return cls(basis=basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def index(self):
        """[Z^3 : L], math.inf for lattices of lower rank."""
        if self.rank < 3:
            return math.inf
        return abs(int(sympy.Matrix(self.basis).det()))

    def contains(self, vector: Sequence[int]) -> bool:
        if not any(vector):
            return True
        if not self.basis:
            return False
        system = sympy.Matrix(self.basis).T
        try:
            solution, params = system.gauss_jordan_solve(sympy.Matrix(list(vector)))
        except ValueError:
            return False
        assert params.shape[0] == 0
        return all(value.is_integer for value in solution)

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(row) for row in other.basis)

    def same_as(self, other: "Lattice") -> bool:
        return self.contains_lattice(other) and other.contains_lattice(self)

    def image(self, matrix: np.ndarray) -> "Lattice":
        """L M for an integer 3x3 matrix acting on row vectors."""
        rows = [np.array(row, dtype=object).dot(matrix) for row in self.basis]
        return Lattice.from_generators(rows)

    def __add__(self, other: "Lattice") -> "Lattice":
        return Lattice.from_generators(self.basis + other.basis)

    def __str__(self) -> str:
        return "<" + ", ".join(_format_row(row) for row in self.basis) + ">"


def _format_row(row: Row) -> str:
    # half coordinates as a word in X^2, Y^2, Z^2
    parts = [f"{name}^{2 * v}" for name, v in zip("XYZ", row) if v]
    return " ".join(parts) if parts else "1"


FULL = Lattice.from_generators(np.eye(3, dtype=int))
DOUBLE = Lattice.from_generators(2 * np.eye(3, dtype=int))
EVEN_SUM = Lattice.from_generators([(1, 1, 0), (0, 1, 1), (1, 0, 1), (2, 0, 0)])
NAMED = {"M2": FULL, "M4": DOUBLE, "even_sum": EVEN_SUM}


def name_of(lattice: Lattice) -> Optional[str]:
    for name, known in NAMED.items():
        if lattice.same_as(known):
            return name
    return None


def normal_closure(lattice: Lattice, matrices: Sequence[np.ndarray]) -> Lattice:
    """Smallest lattice containing lattice and stable under every matrix."""
    current = lattice
    while True:
        grown = current
        for matrix in matrices:
            grown = grown + current.image(matrix)
        if grown.same_as(current):
            return current
        current = grown


def commutator_lattice(lifts: Sequence[GElem]) -> Optional[Lattice]:
    """
    [Q, Q] for Q = <lifts> M^2 inside G, where M^2 = <X^2, Y^2, Z^2>.

    [q, h] = h (I - M_q) for h in M^2, with M_q the matrix of q on M^2; the
    commutators of the lifts are added and the result is closed under every M_q.

    :param lifts: elements of G whose images with M^2 generate Q
    :return: the lattice of [Q, Q], or None if some commutator of lifts leaves M^2
    """
    rows = []
    matrices = [m2_matrix(ggroup.semantic(q)) for q in lifts]
    for matrix in matrices:
        rows.extend(np.eye(3, dtype=int) - matrix)
    for n, q1 in enumerate(lifts):
        for q2 in lifts[n + 1 :]:
            c = ggroup.gcomm(q1, q2)
            if c.r != (0, 0, 0) or c.l or not ggroup.kernel_of_m2_restriction(c):
                return None
            rows.append(c.m.half())
    return normal_closure(Lattice.from_generators(rows), matrices)
