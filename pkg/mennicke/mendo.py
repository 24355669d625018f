"""
Endomorphisms of M given by the images of x, y, z.

Maps compose left to right: compose(e1, e2) applies e1 first. Matrices act on
row vectors, so the matrix of compose(e1, e2) is m(e1) @ m(e2).
"""

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy.combinatorics import Permutation, PermutationGroup

from mennicke.f2linalg import gf2_rank
from mennicke.mgroup import (
    COSET_LABELS,
    MElem,
    X,
    Y,
    Z,
    coset_class,
    coset_rep,
    evaluate,
    inv,
    mul,
    power,
)
from mennicke.wordcore import parse_word

RELATION_IDS = ("x^y=x^-1", "y^z=y^-1", "z^x=z^-1")


@dataclass(frozen=True)
class MEndo:
    """Endomorphism x -> img_x, y -> img_y, z -> img_z."""

    img_x: MElem
    img_y: MElem
    img_z: MElem

    @classmethod
    def checked(cls, img_x: MElem, img_y: MElem, img_z: MElem) -> "MEndo":
        """Build an endomorphism, raising ValueError if a defining relation fails."""
        endo = cls(img_x, img_y, img_z)
        failed = relation_check(endo)
        if failed is not None:
            raise ValueError(f"{endo} does not preserve the relation {failed}.")
        return endo

    def images(self) -> Tuple[MElem, MElem, MElem]:
        return self.img_x, self.img_y, self.img_z

    def __call__(self, p: MElem) -> MElem:
        return apply(self, p)

    def __str__(self) -> str:
        return f"x -> {self.img_x}, y -> {self.img_y}, z -> {self.img_z}"


IDENTITY_ENDO = MEndo(X, Y, Z)
THETA = MEndo(Y, Z, X)
THETA_INV = MEndo(Z, X, Y)


def relation_check(e: MEndo) -> Optional[str]:
    """
    :return: None if the three defining relations hold for the images,
        otherwise the id of the first violated relation
    """
    ix, iy, iz = e.images()
    pairs = ((ix, iy), (iy, iz), (iz, ix))
    for rel_id, (a, b) in zip(RELATION_IDS, pairs):
        # a^b = a^-1
        if mul(mul(inv(b), a), b) != inv(a):
            return rel_id
    return None


def apply(e: MEndo, p: MElem) -> MElem:
    return mul(mul(power(e.img_x, p.i), power(e.img_y, p.j)), power(e.img_z, p.k))


def compose(e1: MEndo, e2: MEndo) -> MEndo:
    """e1 followed by e2"""
    return MEndo(*(apply(e2, img) for img in e1.images()))


def compose_all(endos: Iterable[MEndo]) -> MEndo:
    result = IDENTITY_ENDO
    for e in endos:
        result = compose(result, e)
    return result


def theta_power(n: int) -> MEndo:
    return (IDENTITY_ENDO, THETA, THETA_INV)[n % 3]


def inner(m: MElem) -> MEndo:
    """g -> m^-1 g m"""
    m_inv = inv(m)
    return MEndo(*(mul(mul(m_inv, g), m) for g in (X, Y, Z)))


def kernel_endo(c: int, d: int, g: int, signs: Sequence[int] = (1, 1, 1)) -> MEndo:
    """
    x -> x^(+-1) z^(2c), y -> y^(+-1) x^(2d), z -> z^(+-1) y^(2g)

    With positive signs this is the endomorphism P_(c,d,g); it is an automorphism
    and P_(c,d,g) P_(c',d',g') = P_(c+c',d+d',g+g').
    """
    sx, sy, sz = signs
    return MEndo(
        mul(power(X, sx), power(Z, 2 * c)),
        mul(power(Y, sy), power(X, 2 * d)),
        mul(power(Z, sz), power(Y, 2 * g)),
    )


def kernel_representatives() -> List[Tuple[Tuple[int, int, int], MEndo]]:
    """
    The eight maps x -> x z^r, y -> y x^s, z -> z y^t with r, s, t in {0, 2},
    keyed by (r/2, s/2, t/2).
    """
    reps = []
    for bits in np.ndindex(2, 2, 2):
        bits = tuple(int(b) for b in bits)
        reps.append((bits, kernel_endo(*bits)))
    return reps


def m2_matrix(e: MEndo) -> np.ndarray:
    """
    Integer matrix of e on M^2; row r holds the half coordinates of the image of
    the r-th basis vector x^2, y^2, z^2.
    """
    rows = [mul(img, img).half() for img in e.images()]
    return np.array(rows, dtype=object)


def mod2_matrix(e: MEndo) -> np.ndarray:
    """GF(2) matrix of e on M/M^2, rows are images of x, y, z."""
    return np.array([img.parity() for img in e.images()], dtype=np.uint8)


def is_automorphism(e: MEndo) -> bool:
    """
    An endomorphism preserves the verbal subgroup M^2; it is bijective iff it is
    bijective on M^2 and on M/M^2.
    """
    if relation_check(e) is not None:
        return False
    det = sympy.Matrix(m2_matrix(e)).det()
    return abs(det) == 1 and gf2_rank(mod2_matrix(e)) == 3


def _sign_of(value: int) -> Optional[int]:
    return value if value in (1, -1) else None


def is_inner(e: MEndo) -> Optional[MElem]:
    """
    Solve inner(m) = e. For m = (a, b, c):
    x -> ((-1)^b, 0, 2c), y -> (-2a(-1)^b, (-1)^c, 0), z -> (0, -2b(-1)^c, (-1)^a).

    :return: the unique m, or None when e is not inner
    """
    ix, iy, iz = e.images()
    sb, sc, sa = _sign_of(ix.i), _sign_of(iy.j), _sign_of(iz.k)
    if None in (sa, sb, sc) or ix.k % 2 or iy.i % 2 or iz.j % 2:
        return None
    c = ix.k // 2
    a = -iy.i * sb // 2
    b = -iz.j * sc // 2
    m = MElem(a, b, c)
    if inner(m) != e:
        return None
    return m


def lambda_perm(e: MEndo) -> Permutation:
    """Permutation induced on the cosets of M^2, indexed as COSET_LABELS."""
    image = [
        COSET_LABELS.index(coset_class(apply(e, coset_rep(label))))
        for label in COSET_LABELS
    ]
    return Permutation(image)


def orbits(gens: Iterable[MEndo]) -> List[FrozenSet[str]]:
    """
    Orbits of the group generated by the induced permutations on M/M^2, sorted by
    size and then by first label.
    """
    perms = [lambda_perm(e) for e in gens]
    if not perms:
        perms = [Permutation(list(range(len(COSET_LABELS))))]
    group = PermutationGroup(perms)
    parts = [sorted(orbit) for orbit in group.orbits()]
    parts.sort(key=lambda part: (len(part), part[0]))
    return [frozenset(COSET_LABELS[n] for n in part) for part in parts]


def format_partition(parts: Sequence[FrozenSet[str]]) -> str:
    """{1} {xyz} {x,y,z} {xy,yz,zx}"""
    blocks = []
    for part in parts:
        labels = sorted(part, key=COSET_LABELS.index)
        blocks.append("{" + ",".join(labels) + "}")
    return " ".join(blocks)


_ENDO_ITEM = re.compile(r"^\s*([xyz])\s*->\s*(.*?)\s*$")


def parse_endo(text: str) -> MEndo:
    """
    Parse "x -> ..., y -> ..., z -> ..." where the images are words over x, y, z.
    """
    images = {}
    for item in text.split(","):
        match = _ENDO_ITEM.match(item)
        if match is None:
            raise ValueError(f"cannot parse endomorphism item {item!r}.")
        images[match.group(1)] = evaluate(parse_word(match.group(2), "M"))
    if sorted(images) != ["x", "y", "z"]:
        raise ValueError(
            f"images of x, y and z are all required, got {sorted(images)}."
        )
    return MEndo(images["x"], images["y"], images["z"])

