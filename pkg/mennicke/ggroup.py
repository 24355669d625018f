"""
G = Aut(M) in the normal form X^a Y^b Z^c A^i B^j C^k D^l.

X, Y, Z are the inner automorphisms by x, y, z; A: x -> x z^2, B: y -> y x^2,
C: z -> z y^2 (other generators fixed); D is the cyclic shift theta. An element
acts on M as inner(x^a y^b z^c), then A^i B^j C^k, then theta^l.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

import numpy as np

from mennicke import mgroup
from mennicke.mendo import (
    THETA,
    THETA_INV,
    MEndo,
    apply,
    compose,
    compose_all,
    inner,
    m2_matrix,
    mod2_matrix,
    theta_power,
)
from mennicke.mgroup import MElem
from mennicke.wordcore import Word, parse_word


class RecognitionError(ValueError):
    """Raised when an automorphism of M has no normal form in G."""


@dataclass(frozen=True)
class GElem:
    """X^a Y^b Z^c A^i B^j C^k D^l with i, j, k in {0, 1} and l in {0, 1, 2}"""

    a: int = 0
    b: int = 0
    c: int = 0
    i: int = 0
    j: int = 0
    k: int = 0
    l: int = 0  # noqa: E741

    def __post_init__(self):
        if any(bit not in (0, 1) for bit in (self.i, self.j, self.k)):
            raise ValueError(
                f"exponents of A, B, C must be 0 or 1, got {(self.i, self.j, self.k)}."
            )
        if self.l not in (0, 1, 2):
            raise ValueError(f"exponent of D must be 0, 1 or 2, got {self.l}.")

    @property
    def m(self) -> MElem:
        return MElem(self.a, self.b, self.c)

    @property
    def r(self) -> Tuple[int, int, int]:
        return self.i, self.j, self.k

    def __mul__(self, other: "GElem") -> "GElem":
        return gmul(self, other)

    def __pow__(self, n: int) -> "GElem":
        return gpow(self, n)

    def inverse(self) -> "GElem":
        return ginv(self)

    def to_word(self) -> Word:
        names = ("X", "Y", "Z", "A", "B", "C", "D")
        exps = (self.a, self.b, self.c, self.i, self.j, self.k, self.l)
        return Word(tuple(zip(names, exps)))

    def __str__(self) -> str:
        return str(self.to_word())


def from_parts(
    m: MElem, r: Sequence[int] = (0, 0, 0), l: int = 0  # noqa: E741
) -> GElem:
    return GElem(m.i, m.j, m.k, int(r[0]), int(r[1]), int(r[2]), l % 3)


IDENTITY = GElem()
X = GElem(a=1)
Y = GElem(b=1)
Z = GElem(c=1)
A = GElem(i=1)
B = GElem(j=1)
C = GElem(k=1)
D = GElem(l=1)
GENERATORS = {"X": X, "Y": Y, "Z": Z, "A": A, "B": B, "C": C, "D": D}


def rho_endo(r: Sequence[int]) -> MEndo:
    """A^i B^j C^k on M: x -> x z^(2i), y -> y x^(2j), z -> z y^(2k)"""
    i, j, k = r
    return MEndo(
        MElem(1, 0, 2 * i),
        mgroup.mul(mgroup.Y, MElem(2 * j, 0, 0)),
        mgroup.mul(mgroup.Z, MElem(0, 2 * k, 0)),
    )


def rho_inv_endo(r: Sequence[int]) -> MEndo:
    i, j, k = r
    return MEndo(
        MElem(1, 0, -2 * i),
        mgroup.mul(mgroup.Y, MElem(-2 * j, 0, 0)),
        mgroup.mul(mgroup.Z, MElem(0, -2 * k, 0)),
    )


def _shift(r: Sequence[int], times: int) -> Tuple[int, int, int]:
    # D^l A^i B^j C^k = A^j' ... D^l; theta A = C theta, theta B = A theta
    i, j, k = r
    for _ in range(times % 3):
        i, j, k = j, k, i
    return i, j, k


def gmul(g1: GElem, g2: GElem) -> GElem:
    """
    Product g1 g2 by moving inner(m2) left across theta^l1 and rho(r1), and
    folding A^2 = Z^2, B^2 = X^2, C^2 = Y^2.
    """
    moved = apply(rho_inv_endo(g1.r), apply(theta_power(-g1.l), g2.m))
    s = [x + y for x, y in zip(g1.r, _shift(g2.r, g1.l))]
    carry = MElem(2 * (s[1] // 2), 2 * (s[2] // 2), 2 * (s[0] // 2))
    m = mgroup.mul(mgroup.mul(g1.m, moved), carry)
    return from_parts(m, [v % 2 for v in s], g1.l + g2.l)


def ginv(g: GElem) -> GElem:
    """g^-1 = D^-l (A^i B^j C^k)^-1 X^-a... with A^-1 = Z^-2 A"""
    i, j, k = g.r
    rho_inv = GElem(-2 * j, -2 * k, -2 * i, i, j, k, 0)
    return gmul(gmul(GElem(l=(-g.l) % 3), rho_inv), from_parts(mgroup.inv(g.m)))


def gpow(g: GElem, n: int) -> GElem:
    if n < 0:
        g, n = ginv(g), -n
    result = IDENTITY
    while n:
        if n & 1:
            result = gmul(result, g)
        g = gmul(g, g)
        n >>= 1
    return result


def gconj(g: GElem, h: GElem) -> GElem:
    """g^h = h^-1 g h"""
    return gmul(gmul(ginv(h), g), h)


def gcomm(g: GElem, h: GElem) -> GElem:
    """[g, h] = g^-1 h^-1 g h"""
    return gmul(gmul(ginv(g), ginv(h)), gmul(g, h))


def evaluate(word: Word) -> GElem:
    """Value of a word over X, Y, Z, A, B, C, D."""
    result = IDENTITY
    for gen, exp in word.letters:
        if gen == "X":
            factor = GElem(a=exp)
        elif gen == "Y":
            factor = GElem(b=exp)
        elif gen == "Z":
            factor = GElem(c=exp)
        elif gen == "D":
            factor = GElem(l=exp % 3)
        else:
            factor = gpow(GENERATORS[gen], exp)
        result = gmul(result, factor)
    return result


def parse(text: str) -> GElem:
    return evaluate(parse_word(text, "G"))


def semantic(g: GElem) -> MEndo:
    """The automorphism of M represented by g."""
    return compose_all([inner(g.m), rho_endo(g.r), theta_power(g.l)])


# each generator with its inverse, written out directly on M
_GEN_ENDOS: Dict[str, Tuple[MEndo, MEndo]] = {
    "X": (inner(mgroup.X), inner(mgroup.inv(mgroup.X))),
    "Y": (inner(mgroup.Y), inner(mgroup.inv(mgroup.Y))),
    "Z": (inner(mgroup.Z), inner(mgroup.inv(mgroup.Z))),
    "A": (rho_endo((1, 0, 0)), rho_inv_endo((1, 0, 0))),
    "B": (rho_endo((0, 1, 0)), rho_inv_endo((0, 1, 0))),
    "C": (rho_endo((0, 0, 1)), rho_inv_endo((0, 0, 1))),
    "D": (THETA, THETA_INV),
}


def semantic_word(word: Word) -> MEndo:
    """Compose the generator automorphisms of a word without using gmul."""
    factors = []
    for gen, exp in word.letters:
        forward, backward = _GEN_ENDOS[gen]
        factors.extend([forward if exp > 0 else backward] * abs(exp))
    return compose_all(factors)


def kernel_part(t: int, us: int, s: int, a1: int, b1: int, c1: int) -> GElem:
    """
    The element inner(m) A^i B^j C^k (l = 0) whose action sends
    x -> (t, 0, 2 c1), y -> (-2 t a1, us, 0), z -> (0, -2 us b1, s).

    Writing inner(m) rho = rho inner(n) with n = rho(m) = (a', b', c'), the
    signs are t = (-1)^b', us = (-1)^c', s = (-1)^a' and
    a1 = a' + j, b1 = b' + k, c1 = c' + i s.
    """
    pa, pb, pc = (1 - s) // 2, (1 - t) // 2, (1 - us) // 2
    j = (a1 - pa) % 2
    k = (b1 - pb) % 2
    i = (c1 - pc) % 2
    n = MElem(a1 - j, b1 - k, c1 - i * s)
    m = apply(rho_inv_endo((i, j, k)), n)
    return from_parts(m, (i, j, k), 0)


def _unit(value: int) -> int:
    if value not in (1, -1):
        raise RecognitionError(f"expected a sign, got {value}.")
    return value


def recognize(e: MEndo) -> GElem:
    """
    Normal form of an automorphism of M.

    :param e: automorphism of M
    :return: the unique g with semantic(g) = e
    :raise RecognitionError: if e has no normal form
    """
    mod = mod2_matrix(e)
    for l in range(3):  # noqa: E741
        if np.array_equal(mod, mod2_matrix(theta_power(l))):
            break
    else:
        raise RecognitionError(f"{e} does not act on M/M^2 as a power of theta.")
    ix, iy, iz = compose(e, theta_power(-l)).images()
    t, us, s = _unit(ix.i), _unit(iy.j), _unit(iz.k)
    if ix.j or iy.k or iz.i or ix.k % 2 or iy.i % 2 or iz.j % 2:
        raise RecognitionError(f"{e} is not of the form inner(m) A^i B^j C^k D^{l}.")
    part = kernel_part(t, us, s, -iy.i * t // 2, -iz.j * us // 2, ix.k // 2)
    g = from_parts(part.m, part.r, l)
    if semantic(g) != e:
        raise RecognitionError(f"{e} is not of the form inner(m) A^i B^j C^k D^{l}.")
    return g


def random_elem(rng: np.random.Generator, bound: int) -> GElem:
    a, b, c = (int(v) for v in rng.integers(-bound, bound + 1, size=3))
    i, j, k = (int(v) for v in rng.integers(0, 2, size=3))
    return GElem(a, b, c, i, j, k, int(rng.integers(0, 3)))


# relations

DEFINING_RELATIONS = (
    ("X^Y=X^-1", "Y^-1 X Y", "X^-1"),
    ("X^D=Y", "D^-1 X D", "Y"),
    ("Y^D=Z", "D^-1 Y D", "Z"),
    ("Z^D=X", "D^-1 Z D", "X"),
    ("D^3=1", "D^3", "1"),
    ("[A,B]=1", "A^-1 B^-1 A B", "1"),
    ("A^D=B", "D^-1 A D", "B"),
    ("B^D=C", "D^-1 B D", "C"),
    ("C^D=A", "D^-1 C D", "A"),
    ("A^2=Z^2", "A^2", "Z^2"),
    ("X^A=XZ^2", "A^-1 X A", "X Z^2"),
    ("Y^A=Y", "A^-1 Y A", "Y"),
    ("Z^A=Z", "A^-1 Z A", "Z"),
)

CONSEQUENCE_RELATIONS = (
    ("Y^Z=Y^-1", "Z^-1 Y Z", "Y^-1"),
    ("Z^X=Z^-1", "X^-1 Z X", "Z^-1"),
    ("[B,C]=1", "B^-1 C^-1 B C", "1"),
    ("[C,A]=1", "C^-1 A^-1 C A", "1"),
    ("B^2=X^2", "B^2", "X^2"),
    ("C^2=Y^2", "C^2", "Y^2"),
    ("X^B=X", "B^-1 X B", "X"),
    ("Y^B=YX^2", "B^-1 Y B", "Y X^2"),
    ("Z^B=Z", "B^-1 Z B", "Z"),
    ("X^C=X", "C^-1 X C", "X"),
    ("Y^C=Y", "C^-1 Y C", "Y"),
    ("Z^C=ZY^2", "C^-1 Z C", "Z Y^2"),
)


def relations_check(
    relations=DEFINING_RELATIONS + CONSEQUENCE_RELATIONS,
) -> Dict[str, bool]:
    """
    Evaluate each relation with gmul and, independently, by composing generator
    automorphisms of M.

    :return: relation name -> True iff both evaluations agree on both sides
    """
    report = {}
    for name, lhs, rhs in relations:
        lhs_word, rhs_word = parse_word(lhs, "G"), parse_word(rhs, "G")
        by_mul = evaluate(lhs_word) == evaluate(rhs_word)
        by_semantic = semantic_word(lhs_word) == semantic_word(rhs_word)
        report[name] = by_mul and by_semantic
    return report


def consequence_relations_check() -> Dict[str, bool]:
    return relations_check(CONSEQUENCE_RELATIONS)


def abc_free_abelian_check(bound: int) -> bool:
    """
    A^p B^q C^r for |p|, |q|, |r| <= bound are pairwise distinct, commute, and act
    on M^2 trivially; the identity occurs only at p = q = r = 0.
    """
    seen = set()
    rng = range(-bound, bound + 1)
    for p in rng:
        for q in rng:
            for r in rng:
                g = gmul(gmul(gpow(A, p), gpow(B, q)), gpow(C, r))
                if g in seen:
                    return False
                seen.add(g)
    commute = all(gmul(s, t) == gmul(t, s) for s in (A, B, C) for t in (A, B, C))
    return commute and len(seen) == (2 * bound + 1) ** 3


def kernel_of_m2_restriction(g: GElem) -> bool:
    """g acts trivially on M^2 iff a, b, c are even and l = 0."""
    return g.l == 0 and g.a % 2 == 0 and g.b % 2 == 0 and g.c % 2 == 0


def acts_trivially_on_m2(g: GElem) -> bool:
    return np.array_equal(m2_matrix(semantic(g)), np.eye(3, dtype=int))


# subgroups


@dataclass(frozen=True)
class GSubgroupData:
    """A subgroup of G given by a closed-form membership test and generators."""

    name: str
    generators: Tuple[str, ...]
    contains: Callable[[GElem], bool]


def _even(*values: int) -> bool:
    return sum(values) % 2 == 0


SUBGROUPS = {
    "InnM": GSubgroupData(
        "InnM", ("X", "Y", "Z"), lambda g: g.r == (0, 0, 0) and g.l == 0
    ),
    # the kernel of the action on M/M^2 equals U
    "K": GSubgroupData("K", ("X", "Y", "Z", "A", "B", "C"), lambda g: g.l == 0),
    "R": GSubgroupData(
        "R",
        ("A", "B", "C"),
        lambda g: g.l == 0 and g.a % 2 == 0 and g.b % 2 == 0 and g.c % 2 == 0,
    ),
    "U": GSubgroupData("U", ("X", "Y", "Z", "A", "B", "C"), lambda g: g.l == 0),
    "GG": GSubgroupData(
        "GG",
        ("X Y", "Y Z", "Z X", "A B", "B C", "C A"),
        lambda g: g.l == 0 and _even(g.a, g.b, g.c) and _even(*g.r),
    ),
    "G2": GSubgroupData(
        "G2",
        ("X Y", "Y Z", "Z X", "A B", "B C", "C A", "D"),
        lambda g: _even(g.a, g.b, g.c) and _even(*g.r),
    ),
}


def subgroup_membership(g: GElem, name: str) -> bool:
    if name not in SUBGROUPS:
        raise ValueError(f"subgroup must be one of {sorted(SUBGROUPS)}, got {name}.")
    return SUBGROUPS[name].contains(g)


def random_subgroup_product(
    rng: np.random.Generator, name: str, length: int
) -> GElem:
    """Random product of the listed generators of a subgroup and their inverses."""
    gens = [parse(text) for text in SUBGROUPS[name].generators]
    result = IDENTITY
    for _ in range(length):
        g = gens[int(rng.integers(len(gens)))]
        result = gmul(result, g if rng.integers(2) else ginv(g))
    return result
