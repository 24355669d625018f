"""
P = Aut(G) in the normal form g E^m with g in G and m in {0, 1}.

E is the automorphism of G with X -> XA, Y -> YB, Z -> ZC fixing A, B, C, D;
E^2 is conjugation by ABC. Elements of G act on G by h -> g^-1 h g and a product
acts left to right, so g E^m sends h to E^m(g^-1 h g).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from mennicke import ggroup, lattice, mgroup, vgroup
from mennicke.ggroup import GElem
from mennicke.mendo import IDENTITY_ENDO
from mennicke.wordcore import Word, parse_word

ABC = ggroup.parse("A B C")
ABC_INV = ggroup.ginv(ABC)


@dataclass(frozen=True)
class PElem:
    """g E^m"""

    g: GElem = ggroup.IDENTITY
    m: int = 0

    def __post_init__(self):
        if self.m not in (0, 1):
            raise ValueError(f"exponent of E must be 0 or 1, got {self.m}.")

    def __mul__(self, other: "PElem") -> "PElem":
        return pmul(self, other)

    def to_word(self) -> Word:
        return self.g.to_word() * Word((("E", self.m),))

    def __str__(self) -> str:
        return str(self.to_word())


IDENTITY = PElem()
E = PElem(ggroup.IDENTITY, 1)
E_INV = PElem(ABC_INV, 1)
GENERATORS = {name: PElem(g) for name, g in ggroup.GENERATORS.items()}
GENERATORS["E"] = E

_E_IMAGES = {
    "X": ggroup.parse("X A"),
    "Y": ggroup.parse("Y B"),
    "Z": ggroup.parse("Z C"),
}
_E_INV_IMAGES = {
    "X": ggroup.parse("X A^-1"),
    "Y": ggroup.parse("Y B^-1"),
    "Z": ggroup.parse("Z C^-1"),
}


def _substitute(g: GElem, images: Dict[str, GElem]) -> GElem:
    result = ggroup.IDENTITY
    for gen, exp in g.to_word().letters:
        image = images.get(gen, ggroup.GENERATORS[gen])
        result = ggroup.gmul(result, ggroup.gpow(image, exp))
    return result


def e_action(g: GElem) -> GElem:
    """Image of g under E: X -> XA, Y -> YB, Z -> ZC, A, B, C, D fixed."""
    return _substitute(g, _E_IMAGES)


def e_inv(g: GElem) -> GElem:
    """Image of g under E^-1: X -> XA^-1, Y -> YB^-1, Z -> ZC^-1."""
    return _substitute(g, _E_INV_IMAGES)


def pmul(p1: PElem, p2: PElem) -> PElem:
    """g1 E^m1 g2 E^m2 = g1 E^-m1(g2) E^(m1 + m2), folding E^2 = ABC."""
    moved = e_inv(p2.g) if p1.m else p2.g
    g = ggroup.gmul(p1.g, moved)
    if p1.m + p2.m == 2:
        g = ggroup.gmul(g, ABC)
    return PElem(g, (p1.m + p2.m) % 2)


def pinv(p: PElem) -> PElem:
    head = E_INV if p.m else IDENTITY
    return pmul(head, PElem(ggroup.ginv(p.g)))


def ppow(p: PElem, n: int) -> PElem:
    if n < 0:
        p, n = pinv(p), -n
    result = IDENTITY
    while n:
        if n & 1:
            result = pmul(result, p)
        p = pmul(p, p)
        n >>= 1
    return result


def pcomm(p: PElem, q: PElem) -> PElem:
    """[p, q] = p^-1 q^-1 p q"""
    return pmul(pmul(pinv(p), pinv(q)), pmul(p, q))


def evaluate(word: Word) -> PElem:
    """Value of a word over X, Y, Z, A, B, C, D, E."""
    result = IDENTITY
    for gen, exp in word.letters:
        if gen == "E":
            factor = ppow(E, exp)
        else:
            factor = PElem(ggroup.evaluate(Word(((gen, exp),))))
        result = pmul(result, factor)
    return result


def parse(text: str) -> PElem:
    return evaluate(parse_word(text, "P"))


def random_elem(rng: np.random.Generator, bound: int) -> PElem:
    return PElem(ggroup.random_elem(rng, bound), int(rng.integers(0, 2)))


# automorphisms of G


@dataclass(frozen=True)
class GAut:
    """Automorphism of G given by the images of X, Y, Z, A, B, C, D."""

    images: Tuple[GElem, ...]

    def image_map(self) -> Dict[str, GElem]:
        return dict(zip(ggroup.GENERATORS, self.images))

    def __call__(self, g: GElem) -> GElem:
        return _substitute(g, self.image_map())

    def __str__(self) -> str:
        return ", ".join(f"{name} -> {img}" for name, img in self.image_map().items())


def gaut_from(fn) -> GAut:
    return GAut(tuple(fn(g) for g in ggroup.GENERATORS.values()))


GAUT_IDENTITY = gaut_from(lambda g: g)


def gaut_compose(f1: GAut, f2: GAut) -> GAut:
    """f1 followed by f2"""
    return GAut(tuple(f2(img) for img in f1.images))


def act(p: PElem) -> GAut:
    """The automorphism h -> E^m(g^-1 h g) of G."""
    conj = gaut_from(lambda h: ggroup.gconj(h, p.g))
    return gaut_compose(conj, gaut_from(e_action)) if p.m else conj


_GEN_ACTIONS = {
    name: (act(GENERATORS[name]), act(pinv(GENERATORS[name])))
    for name in ggroup.GENERATORS
}


def act_word(word: Word) -> GAut:
    """Compose the generator actions of a P-word without using pmul."""
    result = GAUT_IDENTITY
    for gen, exp in word.letters:
        if gen == "E":
            step = gaut_from(e_action) if exp > 0 else gaut_from(e_inv)
        else:
            step = _GEN_ACTIONS[gen][0 if exp > 0 else 1]
        for _ in range(abs(exp)):
            result = gaut_compose(result, step)
    return result


E_RELATIONS = (
    ("A^E=A", "E^-1 A E", "A"),
    ("B^E=B", "E^-1 B E", "B"),
    ("C^E=C", "E^-1 C E", "C"),
    ("D^E=D", "E^-1 D E", "D"),
    ("X^E=XA", "E^-1 X E", "X A"),
    ("Y^E=YB", "E^-1 Y E", "Y B"),
    ("Z^E=ZC", "E^-1 Z E", "Z C"),
    ("E^2=ABC", "E^2", "A B C"),
    ("[X,E]=A", "X^-1 E^-1 X E", "A"),
)


def e_relations_check() -> Dict[str, bool]:
    """Each relation involving E, by pmul and by composing actions on G."""
    report = {}
    for name, lhs, rhs in E_RELATIONS:
        lhs_word, rhs_word = parse_word(lhs, "P"), parse_word(rhs, "P")
        by_mul = evaluate(lhs_word) == evaluate(rhs_word)
        by_action = act_word(lhs_word) == act_word(rhs_word)
        report[name] = by_mul and by_action
    return report


def e_action_relations_check() -> Dict[str, bool]:
    """E preserves every defining relation of G."""
    report = {}
    images = dict(zip(ggroup.GENERATORS, gaut_from(e_action).images))
    for name, lhs, rhs in ggroup.DEFINING_RELATIONS:
        lhs_value = _word_value(parse_word(lhs, "G"), images)
        rhs_value = _word_value(parse_word(rhs, "G"), images)
        report[name] = lhs_value == rhs_value
    return report


def _word_value(word: Word, images: Dict[str, GElem]) -> GElem:
    result = ggroup.IDENTITY
    for gen, exp in word.letters:
        result = ggroup.gmul(result, ggroup.gpow(images[gen], exp))
    return result


# subgroups Q of G with Q/M^2 a complement of R/M^2


COMPLEMENT_LABELS = ("X", "XA", "XB", "XC", "XAB", "XAC", "XBC", "XABC")


def complement_lifts(label: str) -> List[GElem]:
    """
    Lifts generating Q = <q, q^D, q^(D^2)> M^2 with q the element named by label,
    e.g. "XB" gives XB, YC, ZA.
    """
    if label not in COMPLEMENT_LABELS:
        raise ValueError(f"label must be one of {COMPLEMENT_LABELS}, got {label}.")
    q = ggroup.parse(" ".join(label))
    return [q, ggroup.gconj(q, ggroup.D), ggroup.gconj(q, ggroup.gpow(ggroup.D, 2))]


# the commutator lattice expected for each candidate named in the case analysis
COMPLEMENT_CASES = (
    ("X", "M2"),
    ("XA", "M2"),
    ("XB", "M4"),
    ("XC", "even_sum"),
)


def complement_case_checks() -> Dict[str, Tuple[bool, str]]:
    """
    [Q, Q] for the candidates M = <X, Y, Z>M^2, M^E = <XA, YB, ZC>M^2,
    <XB, YC, ZA>M^2 and <XC, YA, ZB>M^2.
    """
    report = {}
    for label, expected in COMPLEMENT_CASES:
        lifts = complement_lifts(label)
        comm = lattice.commutator_lattice(lifts)
        lift_text = ", ".join(str(q) for q in lifts)
        if comm is None:
            report[label] = (False, f"[Q, Q] leaves M^2 for Q = <{lift_text}>M^2")
            continue
        ok = comm.same_as(lattice.NAMED[expected])
        report[label] = (ok, f"[<{lift_text}>M^2] = {comm}, expected {expected}")
    return report


# Aut(V) and P


def omega_correspondence(
    rng: np.random.Generator, samples: int, bound: int, elem_bound: int
) -> Tuple[bool, str]:
    """
    Look for p = h0 E^m with act(p) = tau on G, |a|, |b|, |c| <= bound for h0.
    With a witness, Theta(g, 0) = (g, 0), Theta(Psi) = p is checked to be a
    homomorphism Aut(V) -> P on random pairs.
    """
    targets = {name: vgroup.tau(g) for name, g in ggroup.GENERATORS.items()}
    witness = _search_tau_witness(targets, bound)
    if witness is None:
        tau_text = ", ".join(f"{k} -> {v}" for k, v in targets.items())
        return False, f"no h0 E^m with exponents up to {bound} acts as tau: {tau_text}"

    def theta(p: vgroup.VAutElem) -> PElem:
        head = PElem(p.g)
        return pmul(head, witness) if p.eps else head

    for _ in range(samples):
        p, q = vgroup.random_vaut(rng, elem_bound), vgroup.random_vaut(rng, elem_bound)
        if theta(vgroup.vaut_mul(p, q)) != pmul(theta(p), theta(q)):
            return False, f"Theta with Theta(Psi) = {witness} fails on {p}, {q}"
    return True, f"Theta(Psi) = {witness}"


def _search_tau_witness(targets: Dict[str, GElem], bound: int) -> Optional[PElem]:
    rng = range(-bound, bound + 1)
    for m in (0, 1):
        for a in rng:
            for b in rng:
                for c in rng:
                    for r in np.ndindex(2, 2, 2):
                        for l in range(3):  # noqa: E741
                            h0 = GElem(a, b, c, *(int(v) for v in r), l)
                            p = PElem(h0, m)
                            if all(_act_on(p, n) == targets[n] for n in targets):
                                return p
    return None


def _act_on(p: PElem, name: str) -> GElem:
    image = ggroup.gconj(ggroup.GENERATORS[name], p.g)
    return e_action(image) if p.m else image


# centers


def _box(box: int):
    rng = range(-box, box + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                for r in np.ndindex(2, 2, 2):
                    for l in range(3):  # noqa: E741
                        yield GElem(a, b, c, *(int(v) for v in r), l)


def _center_reduction() -> Tuple[bool, str]:
    """
    A central g satisfies g^-1 inner(m) g = inner(semantic(g)(m)) = inner(m), so
    semantic(g) fixes M pointwise once Z(M) = 1; recognize then gives g = 1.
    """
    m_center = mgroup.solve_center(
        [mgroup.coset_rep(label) for label in mgroup.COSET_LABELS],
        [mgroup.X, mgroup.Y, mgroup.Z],
    )
    if m_center != [mgroup.IDENTITY]:
        return False, f"Z(M) = {m_center}"
    if ggroup.recognize(IDENTITY_ENDO) != ggroup.IDENTITY:
        return False, "the identity of M is recognized as a nonidentity element"
    return True, "Z(M) = 1 and the kernel of semantic is trivial"


def _gens(names: Sequence[str]) -> List[PElem]:
    return [GENERATORS[name] for name in names]


def g_center_check(box: int, quiet: bool = True) -> Tuple[bool, str]:
    """No nonidentity element of G in the box commutes with X, A and D."""
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}.")
    gens = [ggroup.X, ggroup.A, ggroup.D]
    total = (2 * box + 1) ** 3 * 24
    for g in tqdm(_box(box), total=total, disable=quiet, desc="Z(G) box"):
        if g == ggroup.IDENTITY:
            continue
        if all(ggroup.gmul(g, s) == ggroup.gmul(s, g) for s in gens):
            return False, f"{g} commutes with X, A and D"
    ok, detail = _center_reduction()
    return ok, f"no central element with |a|, |b|, |c| <= {box}; {detail}"


def p_center_check(box: int, quiet: bool = True) -> Tuple[bool, str]:
    """
    No nonidentity element of P in the box commutes with X, A, D and E. Exactly,
    a central g E is impossible since every g E moves X modulo [G, G].
    """
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}.")
    gens = _gens(("X", "A", "D", "E"))
    total = (2 * box + 1) ** 3 * 48
    candidates = (PElem(g, m) for m in (0, 1) for g in _box(box))
    for p in tqdm(candidates, total=total, disable=quiet, desc="Z(P) box"):
        if p == IDENTITY:
            continue
        if all(pmul(p, s) == pmul(s, p) for s in gens):
            return False, f"{p} commutes with X, A, D and E"
    moved = ggroup.gmul(e_action(ggroup.X), ggroup.ginv(ggroup.X))
    if ggroup.subgroup_membership(moved, "GG"):
        return False, "E acts trivially on G/[G, G]"
    ok, detail = _center_reduction()
    logging.debug("E(X) X^-1 = %s is not in [G, G]", moved)
    return ok, f"no central element with |a|, |b|, |c| <= {box}; {detail}"
