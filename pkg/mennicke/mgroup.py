"""
Exact arithmetic in M = <x, y, z | x^y = x^-1, y^z = y^-1, z^x = z^-1>.

Every element is x^i y^j z^k for exactly one integer triple (i, j, k).
Products are computed by the closed form obtained from the conjugation formulas
(z^c)^(x^a) = z^(c(-1)^a), (x^a)^(y^b) = x^(a(-1)^b), (y^b)^(z^c) = y^(b(-1)^c).
Composition of maps is left to right throughout the package.
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from mennicke.wordcore import Word


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


@dataclass(frozen=True)
class MElem:
    """x^i y^j z^k"""

    i: int = 0
    j: int = 0
    k: int = 0

    def __mul__(self, other: "MElem") -> "MElem":
        return mul(self, other)

    def __pow__(self, n: int) -> "MElem":
        return power(self, n)

    def inverse(self) -> "MElem":
        return inv(self)

    def parity(self) -> Tuple[int, int, int]:
        return self.i % 2, self.j % 2, self.k % 2

    def half(self) -> Tuple[int, int, int]:
        """Coordinates in the basis x^2, y^2, z^2 of M^2."""
        if not in_m2(self):
            raise ValueError(f"{self} is not in M^2.")
        return self.i // 2, self.j // 2, self.k // 2

    def to_word(self) -> Word:
        return Word((("x", self.i), ("y", self.j), ("z", self.k)))

    def __str__(self) -> str:
        return str(self.to_word())


IDENTITY = MElem()
X = MElem(1, 0, 0)
Y = MElem(0, 1, 0)
Z = MElem(0, 0, 1)


def from_half(half: Sequence[int]) -> MElem:
    """x^(2p) y^(2q) z^(2r) for half coordinates (p, q, r)"""
    p, q, r = (int(v) for v in half)
    return MElem(2 * p, 2 * q, 2 * r)


def mul(p: MElem, q: MElem) -> MElem:
    return MElem(
        p.i + q.i * _sign(p.j),
        p.j + q.j * _sign(p.k),
        p.k * _sign(q.i) + q.k,
    )


def inv(p: MElem) -> MElem:
    return MElem(-p.i * _sign(p.j), -p.j * _sign(p.k), -p.k * _sign(p.i))


def conj(p: MElem, g: MElem) -> MElem:
    """p^g = g^-1 p g"""
    return mul(mul(inv(g), p), g)


def comm(p: MElem, q: MElem) -> MElem:
    """[p, q] = p^-1 q^-1 p q"""
    return mul(mul(inv(p), inv(q)), mul(p, q))


def power(p: MElem, n: int) -> MElem:
    """p^n by repeated squaring"""
    if n < 0:
        p, n = inv(p), -n
    result = IDENTITY
    while n:
        if n & 1:
            result = mul(result, p)
        p = mul(p, p)
        n >>= 1
    return result


def evaluate(word: Word) -> MElem:
    """Value of a word over x, y, z; mul by one generator power at a time."""
    i = j = k = 0
    for gen, exp in word.letters:
        if gen == "x":
            i, k = i + exp * _sign(j), k * _sign(exp)
        elif gen == "y":
            j += exp * _sign(k)
        else:
            k += exp
    return MElem(i, j, k)


def order(p: MElem):
    """
    :return: 1 for the identity, 2 for elements of xyzM^2, math.inf otherwise
    """
    if p == IDENTITY:
        return 1
    if p.i % 2 and p.j % 2 and p.k % 2:
        return 2
    return math.inf


COSET_LABELS = ("1", "x", "y", "z", "xy", "yz", "zx", "xyz")
_PARITY_TO_LABEL = {
    (0, 0, 0): "1",
    (1, 0, 0): "x",
    (0, 1, 0): "y",
    (0, 0, 1): "z",
    (1, 1, 0): "xy",
    (0, 1, 1): "yz",
    (1, 0, 1): "zx",
    (1, 1, 1): "xyz",
}
LABEL_TO_PARITY = {label: parity for parity, label in _PARITY_TO_LABEL.items()}


def coset_class(p: MElem) -> str:
    """Label of pM^2 in M/M^2."""
    return _PARITY_TO_LABEL[p.parity()]


def coset_rep(label: str) -> MElem:
    return MElem(*LABEL_TO_PARITY[label])


def in_m2(p: MElem) -> bool:
    return p.i % 2 == 0 and p.j % 2 == 0 and p.k % 2 == 0


def in_v(p: MElem) -> bool:
    """V = <xy, yz, zx> is the set of elements with even coordinate sum."""
    return (p.i + p.j + p.k) % 2 == 0


def in_gamma(p: MElem, n: int) -> bool:
    """gamma_n(M) = <x^(2^(n-1)), y^(2^(n-1)), z^(2^(n-1))>"""
    if n < 1:
        raise ValueError(f"lower central series index must be >= 1, got {n}.")
    step = 2 ** (n - 1)
    return p.i % step == 0 and p.j % step == 0 and p.k % step == 0


def is_central(p: MElem) -> bool:
    """p commutes with x, y and z."""
    return all(comm(p, g) == IDENTITY for g in (X, Y, Z))


def conj_matrix(g: MElem) -> np.ndarray:
    """
    Matrix of h -> h^g on M^2 in half coordinates, row-vector convention.

    Conjugation by g = x^a y^b z^c is diag((-1)^b, (-1)^c, (-1)^a) on M^2.
    """
    return np.diag([_sign(g.j), _sign(g.k), _sign(g.i)]).astype(object)


def solve_center(reps: Sequence[MElem], gens: Sequence[MElem]) -> List[MElem]:
    """
    Exact center computation for a subgroup H with H^2 = M^2 given by coset
    representatives of H/M^2 and generators.

    An element c*h (h in M^2) commutes with g iff h (I - M_g) = c^-1 c^g in half
    coordinates, a linear system over the integers for each coset.

    :param reps: representatives of the cosets of M^2 in H
    :param gens: generators of H
    :return: all central elements of H; an infinite family raises ValueError
    """
    central = []
    for rep in reps:
        blocks, rhs = [], []
        for g in gens:
            blocks.append(sympy.Matrix(np.eye(3, dtype=int) - conj_matrix(g)).T)
            rhs.extend(mul(inv(rep), conj(rep, g)).half())
        system = sympy.Matrix.vstack(*blocks)
        try:
            solution, params = system.gauss_jordan_solve(sympy.Matrix(rhs))
        except ValueError:
            continue
        if params.shape[0] > 0:
            raise ValueError(
                f"center contains an infinite family in the coset of {rep}."
            )
        if all(value.is_integer for value in solution):
            central.append(mul(rep, from_half([int(value) for value in solution])))
    return central


def random_elem(rng: np.random.Generator, bound: int) -> MElem:
    """Uniform element with coordinates in [-bound, bound]."""
    i, j, k = (int(v) for v in rng.integers(-bound, bound + 1, size=3))
    return MElem(i, j, k)


# infinite dihedral group <u, v | u^v = u^-1, v^2 = 1>


@dataclass(frozen=True)
class DInfElem:
    """u^i v^j with j in {0, 1}"""

    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.j not in (0, 1):
            raise ValueError(f"exponent of v must be 0 or 1, got {self.j}.")

    def __mul__(self, other: "DInfElem") -> "DInfElem":
        return dinf_mul(self, other)


DINF_IDENTITY = DInfElem()
DINF_U = DInfElem(1, 0)
DINF_V = DInfElem(0, 1)


def dinf_mul(p: DInfElem, q: DInfElem) -> DInfElem:
    return DInfElem(p.i + q.i * _sign(p.j), (p.j + q.j) % 2)


def dinf_inv(p: DInfElem) -> DInfElem:
    return DInfElem(-p.i * _sign(p.j), p.j)


def dinf_pow(p: DInfElem, n: int) -> DInfElem:
    # reflections are involutions
    if p.j:
        return p if n % 2 else DINF_IDENTITY
    return DInfElem(p.i * n, 0)


def _dinf_map(images, p: MElem) -> DInfElem:
    ix, iy, iz = images
    return dinf_mul(dinf_mul(dinf_pow(ix, p.i), dinf_pow(iy, p.j)), dinf_pow(iz, p.k))


def f1(p: MElem) -> DInfElem:
    """x -> u, y -> v, z -> 1"""
    return _dinf_map((DINF_U, DINF_V, DINF_IDENTITY), p)


def f2(p: MElem) -> DInfElem:
    """x -> 1, y -> u, z -> v"""
    return _dinf_map((DINF_IDENTITY, DINF_U, DINF_V), p)


def f3(p: MElem) -> DInfElem:
    """x -> v, y -> 1, z -> u"""
    return _dinf_map((DINF_V, DINF_IDENTITY, DINF_U), p)
