"""
Verification checks grouped by section, with a registry, a deterministic run loop
and the CheckResult records reported by the command line.
"""

import logging
import math
import time
import zlib
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np
from sympy.combinatorics import Permutation
from tqdm import tqdm

from mennicke import f2quot, ggroup, mendo, mgroup, pgroup, vgroup
from mennicke.wordcore import Word, collect, sample_word

Outcome = Tuple[bool, str]
SECTIONS = tuple(range(2, 21))


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    section: int
    status: str
    detail: str
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CheckContext:
    """Sizes and seed shared by the checks of one run."""

    seed: int
    samples: int
    word_max_len: int
    word_max_exp: int
    word_pairs: int
    confluence_words: int
    confluence_max_len: int
    elem_bound: int
    box: Dict[str, int]
    h0_bound: int
    table_samples: int
    quiet: bool = True

    @classmethod
    def from_config(cls, config: dict, quiet: bool = True) -> "CheckContext":
        """
        :param config: the verify section of a loaded configuration
        :param quiet: disable progress bars
        """
        return cls(
            seed=config["seed"],
            samples=config["samples"],
            word_max_len=config["word"]["max_len"],
            word_max_exp=config["word"]["max_exp"],
            word_pairs=config["word"]["pairs"],
            confluence_words=config["confluence"]["words"],
            confluence_max_len=config["confluence"]["max_len"],
            elem_bound=config["elem_bound"],
            box=dict(config["box"]),
            h0_bound=config["h0_bound"],
            table_samples=config["table_samples"],
            quiet=quiet,
        )

    def rng(self, check_id: str) -> np.random.Generator:
        return np.random.default_rng([self.seed, zlib.crc32(check_id.encode())])

    def word(self, rng: np.random.Generator, group: str) -> Word:
        return sample_word(rng, group, self.word_max_len, self.word_max_exp)


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    section: int
    description: str
    run: Callable[[CheckContext, np.random.Generator], Outcome]


REGISTRY: Dict[str, CheckSpec] = {}


def register(check_id: str, section: int, description: str):
    assert section in SECTIONS
    assert check_id not in REGISTRY

    def decorator(fn):
        REGISTRY[check_id] = CheckSpec(check_id, section, description, fn)
        return fn

    return decorator


def _all_hold(report: Dict[str, bool], what: str = "relations") -> Outcome:
    failed = [name for name, ok in report.items() if not ok]
    if failed:
        return False, "failed: " + ", ".join(failed)
    return True, f"all {len(report)} {what} hold"


def _merge(report: Dict[str, Outcome]) -> Outcome:
    ok = all(passed for passed, _ in report.values())
    parts = [
        f"{name}: {detail}"
        for name, (passed, detail) in report.items()
        if ok or not passed
    ]
    return ok, "; ".join(parts)


def _sampled(samples: int, fn: Callable[[], Optional[str]], what: str) -> Outcome:
    for _ in range(samples):
        failure = fn()
        if failure is not None:
            return False, failure
    return True, f"{samples} random {what}"


# M


@register("02.cosets", 2, "M/M^2 is elementary abelian of order 8 and M^2 = [M, M]")
def _cosets(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    table = f2quot.materialize("M/M2")
    comms = (
        mgroup.comm(mgroup.X, mgroup.Y) == mgroup.power(mgroup.X, -2)
        and mgroup.comm(mgroup.Y, mgroup.Z) == mgroup.power(mgroup.Y, -2)
        and mgroup.comm(mgroup.Z, mgroup.X) == mgroup.power(mgroup.Z, -2)
    )

    def step():
        p = mgroup.random_elem(rng, ctx.elem_bound)
        if not mgroup.in_m2(mgroup.mul(p, p)):
            return f"{p}^2 is not in M^2"
        return None

    ok, detail = _sampled(ctx.samples, step, "squares lie in M^2")
    ok = ok and comms and table.order == 8 and table.exponent() == 2
    return ok, f"|M/M^2| = {table.order}, [x, y] = x^-2 and cyclically; {detail}"


@register("03.collector_oracle", 3, "closed-form product of M equals the collector")
def _collector_oracle(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        w1, w2 = ctx.word(rng, "M"), ctx.word(rng, "M")
        value = mgroup.mul(mgroup.evaluate(w1), mgroup.evaluate(w2))
        nf = collect(w1 * w2, "M")
        if nf != value.to_word():
            return f"collect({w1 * w2}) = {nf}, closed form gives {value}"
        return None

    return _sampled(ctx.word_pairs, step, "word pairs agree")


@register("03.collector_strategy", 3, "normal forms do not depend on the rewrite order")
def _collector_strategy(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    groups = ("M", "G", "P")
    for n in range(ctx.confluence_words):
        group = groups[n % 3]
        w = sample_word(rng, group, ctx.confluence_max_len, ctx.word_max_exp)
        left = collect(w, group)
        shuffled = collect(w, group, strategy="random", rng=rng)
        if left != shuffled:
            return False, f"{w} collects to {left} and to {shuffled}"
    return True, f"{ctx.confluence_words} words of M, G and P give one normal form"


@register("03.m_axioms", 3, "associativity, identity and inverses in M")
def _m_axioms(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        p, q, r = (mgroup.random_elem(rng, ctx.elem_bound) for _ in range(3))
        if mgroup.mul(mgroup.mul(p, q), r) != mgroup.mul(p, mgroup.mul(q, r)):
            return f"({p})({q})({r}) does not associate"
        if mgroup.mul(p, mgroup.inv(p)) != mgroup.IDENTITY:
            return f"{p} times its inverse is not 1"
        if mgroup.mul(mgroup.inv(p), p) != mgroup.IDENTITY:
            return f"the inverse of {p} is not a left inverse"
        return None

    return _sampled(ctx.samples, step, "triples associate")


@register(
    "03.dihedral_maps", 3, "f1, f2, f3 are homomorphisms onto D_inf, jointly injective"
)
def _dihedral_maps(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    maps = (mgroup.f1, mgroup.f2, mgroup.f3)
    for f in maps:
        ix, iy, iz = f(mgroup.X), f(mgroup.Y), f(mgroup.Z)
        for a, b in ((ix, iy), (iy, iz), (iz, ix)):
            lhs = mgroup.dinf_mul(mgroup.dinf_mul(mgroup.dinf_inv(b), a), b)
            if lhs != mgroup.dinf_inv(a):
                return False, f"{f.__name__} does not preserve a defining relation"

    def step():
        p = mgroup.random_elem(rng, ctx.elem_bound)
        q = mgroup.random_elem(rng, ctx.elem_bound)
        for f in maps:
            if f(mgroup.mul(p, q)) != mgroup.dinf_mul(f(p), f(q)):
                return f"{f.__name__} is not multiplicative on {p}, {q}"
        if p != q and all(f(p) == f(q) for f in maps):
            return f"{p} and {q} have the same dihedral images"
        return None

    return _sampled(ctx.samples, step, "pairs are separated")


@register("04.center_M", 4, "Z(M) = 1 by exact solve and box search")
def _center_m(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    reps = [mgroup.coset_rep(label) for label in mgroup.COSET_LABELS]
    central = mgroup.solve_center(reps, [mgroup.X, mgroup.Y, mgroup.Z])
    if central != [mgroup.IDENTITY]:
        return False, f"exact solve gives {central}"
    box = ctx.box["m_center"]
    span = range(-box, box + 1)
    for i in span:
        for j in span:
            for k in span:
                p = mgroup.MElem(i, j, k)
                if p != mgroup.IDENTITY and mgroup.is_central(p):
                    return False, f"{p} is central"
    return True, f"exact solve gives 1, no central element with coordinates up to {box}"


@register(
    "04.lower_central", 4, "[M, gamma_n] lies in gamma_(n+1), each factor of order 8"
)
def _lower_central(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    for n in range(1, 11):
        step = 2 ** (n - 1)
        span = np.arange(2 ** n)
        per_axis = (span % step == 0).sum() // (span % (2 * step) == 0).sum()
        if per_axis ** 3 != 8:
            return False, f"gamma_{n}/gamma_{n + 1} does not have order 8"

    def sample():
        n = int(rng.integers(1, 6))
        g = mgroup.random_elem(rng, ctx.elem_bound)
        h = mgroup.random_elem(rng, ctx.elem_bound)
        h = mgroup.MElem(*(v * 2 ** (n - 1) for v in (h.i, h.j, h.k)))
        if not mgroup.in_gamma(mgroup.comm(g, h), n + 1):
            return f"[{g}, {h}] is not in gamma_{n + 1}"
        return None

    return _sampled(ctx.samples, sample, "commutators lie one step down")


@register("05.torsion", 5, "torsion is exactly the coset xyzM^2, of order 2")
def _torsion(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        p = mgroup.random_elem(rng, ctx.elem_bound)
        if p.i % 2 and p.j % 2 and p.k % 2:
            if mgroup.mul(p, p) != mgroup.IDENTITY or mgroup.order(p) != 2:
                return f"{p} does not have order 2"
        elif p != mgroup.IDENTITY:
            if any(mgroup.power(p, n) == mgroup.IDENTITY for n in range(1, 17)):
                return f"{p} has finite order"
            if mgroup.order(p) != math.inf:
                return f"order({p}) = {mgroup.order(p)}"
        return None

    return _sampled(ctx.samples, step, "elements classified")


@register("06.conjugation_formulas", 6, "(z^c)^(x^a) = z^(c(-1)^a) and cyclically")
def _conjugation(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        a, b, c = (int(v) for v in rng.integers(-ctx.elem_bound, ctx.elem_bound + 1, 3))
        x, y, z = mgroup.MElem(a, 0, 0), mgroup.MElem(0, b, 0), mgroup.MElem(0, 0, c)
        cases = (
            (mgroup.conj(z, x), mgroup.MElem(0, 0, c * (-1) ** (a % 2))),
            (mgroup.conj(x, y), mgroup.MElem(a * (-1) ** (b % 2), 0, 0)),
            (mgroup.conj(y, z), mgroup.MElem(0, b * (-1) ** (c % 2), 0)),
        )
        for got, want in cases:
            if got != want:
                return f"conjugation gives {got}, expected {want}"
        return None

    return _sampled(ctx.samples, step, "triples (a, b, c)")


# automorphisms of M


@register(
    "07.fixed_classes", 7, "automorphisms fix 1 and xyz, never transpose xy, yz, zx"
)
def _fixed_classes(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    labels = mgroup.COSET_LABELS
    one, xyz = labels.index("1"), labels.index("xyz")
    pairs = [labels.index(lab) for lab in ("xy", "yz", "zx")]

    def step():
        g = ggroup.random_elem(rng, ctx.elem_bound)
        perm = mendo.lambda_perm(ggroup.semantic(g))
        if perm(one) != one or perm(xyz) != xyz:
            return f"{g} moves 1 or xyz"
        fixed = sum(perm(n) == n for n in pairs)
        if fixed == 1:
            return f"{g} transposes two of xy, yz, zx"
        return None

    return _sampled(ctx.samples, step, "automorphisms")


@register("08.orbits", 8, "Aut(M)-orbits on M/M^2")
def _orbits(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    parts = mendo.orbits(ggroup.semantic(g) for g in ggroup.GENERATORS.values())
    expected = [
        frozenset({"1"}),
        frozenset({"xyz"}),
        frozenset({"x", "y", "z"}),
        frozenset({"xy", "yz", "zx"}),
    ]
    return parts == expected, mendo.format_partition(parts)


@register("09.kernel_representatives", 9, "K/Inn(M) is C2 x C2 x C2")
def _kernel_reps(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    reps = dict(mendo.kernel_representatives())
    for bits, e in reps.items():
        if not mendo.is_automorphism(e):
            return False, f"{e} is not an automorphism"
        if (mendo.is_inner(e) is None) == (bits == (0, 0, 0)):
            return False, f"{e} has the wrong inner status"
        if mendo.is_inner(mendo.compose(e, e)) is None:
            return False, f"the square of {e} is not inner"
        for other_bits, other in reps.items():
            xor = tuple(a ^ b for a, b in zip(bits, other_bits))
            back = mendo.kernel_endo(*(-v for v in xor))
            if mendo.is_inner(mendo.compose(mendo.compose(e, other), back)) is None:
                return False, f"{bits} times {other_bits} is not {xor} modulo inner"
    return True, "7 non-inner representatives, squares inner, products follow XOR"


@register("09.kernel_family", 9, "P_(c,d,g) composes additively")
def _kernel_family(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        u = [int(v) for v in rng.integers(-ctx.elem_bound, ctx.elem_bound + 1, 3)]
        v = [int(w) for w in rng.integers(-ctx.elem_bound, ctx.elem_bound + 1, 3)]
        lhs = mendo.compose(mendo.kernel_endo(*u), mendo.kernel_endo(*v))
        if lhs != mendo.kernel_endo(*(a + b for a, b in zip(u, v))):
            return f"P{tuple(u)} P{tuple(v)} is not P of the sum"
        return None

    return _sampled(ctx.samples, step, "pairs compose additively")


@register("09.inner", 9, "is_inner recovers m and rejects theta")
def _inner(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    if mendo.is_inner(mendo.THETA) is not None:
        return False, "theta is reported inner"

    def step():
        m = mgroup.random_elem(rng, ctx.elem_bound)
        if mendo.is_inner(mendo.inner(m)) != m:
            return f"inner({m}) is not recovered"
        return None

    return _sampled(ctx.samples, step, "inner automorphisms recovered")


@register(
    "09.automorphism_criterion", 9, "bijectivity on M^2 and M/M^2 decides automorphisms"
)
def _criterion(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    cube = mendo.MEndo(mgroup.power(mgroup.X, 3), mgroup.Y, mgroup.Z)
    if mendo.relation_check(cube) is not None or mendo.is_automorphism(cube):
        return False, f"{cube} is misclassified"

    def step():
        g = ggroup.random_elem(rng, ctx.elem_bound)
        e = ggroup.semantic(g)
        if not mendo.is_automorphism(e):
            return f"semantic({g}) is not recognized as an automorphism"
        if mendo.compose(e, ggroup.semantic(ggroup.ginv(g))) != mendo.IDENTITY_ENDO:
            return f"semantic({g}) has no explicit inverse"
        return None

    return _sampled(ctx.samples, step, "automorphisms with explicit inverses")


# G


@register("10.relations", 10, "defining and consequence relations of G, two ways")
def _g_relations(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return _all_hold(ggroup.relations_check())


@register("10.free_abelian_abc", 10, "<A, B, C> is free abelian of rank 3")
def _free_abelian(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    detail = "A^p B^q C^r distinct for |p|, |q|, |r| <= 3"
    return ggroup.abc_free_abelian_check(3), detail


@register("10.functor_law", 10, "semantic is a homomorphism")
def _functor_law(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        g1 = ggroup.random_elem(rng, ctx.elem_bound)
        g2 = ggroup.random_elem(rng, ctx.elem_bound)
        lhs = ggroup.semantic(ggroup.gmul(g1, g2))
        if lhs != mendo.compose(ggroup.semantic(g1), ggroup.semantic(g2)):
            return f"semantic is not multiplicative on {g1}, {g2}"
        return None

    return _sampled(ctx.samples, step, "pairs")


@register("10.recognize", 10, "recognize inverts semantic")
def _recognize(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        g = ggroup.random_elem(rng, ctx.elem_bound)
        if ggroup.recognize(ggroup.semantic(g)) != g:
            return f"{g} is not recovered from its action"
        return None

    return _sampled(ctx.samples, step, "elements recovered")


@register("10.collector_vs_gmul", 10, "gmul, the collector and composed actions agree")
def _g_collector(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        w = ctx.word(rng, "G")
        value = ggroup.evaluate(w)
        nf = collect(w, "G")
        if nf != value.to_word():
            return f"collect({w}) = {nf}, gmul gives {value}"
        if ggroup.semantic_word(w) != ggroup.semantic(value):
            return f"the action of {w} differs from semantic({value})"
        return None

    return _sampled(max(1, ctx.word_pairs // 10), step, "words agree")


@register("10.subgroups", 10, "closed-form subgroup predicates match their generators")
def _subgroups(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    examples = (
        (ggroup.parse("X Y"), "GG", True),
        (ggroup.D, "G2", True),
        (ggroup.D, "GG", False),
        (ggroup.A, "R", True),
        (ggroup.X, "R", False),
    )
    for g, name, expected in examples:
        if ggroup.subgroup_membership(g, name) != expected:
            return False, f"membership of {g} in {name} is not {expected}"
    for name in ggroup.SUBGROUPS:
        for _ in range(ctx.samples):
            g = ggroup.random_subgroup_product(rng, name, 8)
            h = ggroup.random_subgroup_product(rng, name, 8)
            members = (g, ggroup.gmul(g, h), ggroup.ginv(g))
            if not all(ggroup.subgroup_membership(m, name) for m in members):
                return False, f"{name} predicate rejects a product of its generators"
    return True, f"{len(ggroup.SUBGROUPS)} subgroups, {ctx.samples} products each"


# V


@register("11.v_presentation", 11, "relations of V hold and V^2 = M^2")
def _v_presentation(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    ok, detail = _all_hold(vgroup.v_presentation_check())
    squares = vgroup.squares_generate_m2()
    return ok and squares, f"{detail}; u^2 = y^2, v^2 = z^2, w^2 = x^2: {squares}"


@register("11.v_center", 11, "Z(V) = 1")
def _v_center(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return vgroup.v_center_check(ctx.box["v_center"])


@register(
    "11.index2_subgroups", 11, "V is the only 2-generated torsion-free index-2 subgroup"
)
def _index2(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    subgroups = vgroup.index2_subgroups()
    free = [h for h in subgroups if h.torsion_free]
    small = [h.name for h in free if h.quotient_order == 4]
    orders = sorted(h.quotient_order for h in free)
    ok = len(subgroups) == 7 and len(free) == 4
    ok = ok and small == ["V"] and orders == [4, 8, 8, 8]
    detail = ", ".join(
        f"{h.name}: torsion free {h.torsion_free}, |H/H^2| = {h.quotient_order}"
        for h in subgroups
    )
    return ok, detail


@register("12.gamma_injective", 12, "restriction Aut(M) -> Aut(V) is injective")
def _gamma(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return vgroup.gamma_injectivity_check(rng, ctx.samples, ctx.elem_bound)


@register("12.m2_restriction_kernel", 12, "kernel of Aut(M) -> Aut(M^2)")
def _m2_kernel(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    for text in ("X^2", "Y^2", "Z^2", "A", "B", "C"):
        if not ggroup.acts_trivially_on_m2(ggroup.parse(text)):
            return False, f"{text} acts on M^2"

    def step():
        g = ggroup.random_elem(rng, ctx.elem_bound)
        if ggroup.kernel_of_m2_restriction(g) != ggroup.acts_trivially_on_m2(g):
            return f"kernel predicate is wrong for {g}"
        return None

    what = "elements classified against <X^2, Y^2, Z^2, A, B, C>"
    return _sampled(ctx.samples, step, what)


@register("13.psi", 13, "Psi and its inverse are mutually inverse automorphisms of V")
def _psi(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    psi, psi_inv = vgroup.psi(), vgroup.psi_inv()
    checks = {
        "Psi relations": all(vgroup.v_presentation_check(psi).values()),
        "Psi^-1 relations": all(vgroup.v_presentation_check(psi_inv).values()),
        "Psi Psi^-1": vgroup.compose(psi, psi_inv) == vgroup.IDENTITY_ENDO,
        "Psi^-1 Psi": vgroup.compose(psi_inv, psi) == vgroup.IDENTITY_ENDO,
        "Pi(Psi) = (v w)": vgroup.pi_perm(psi) == Permutation([0, 1, 3, 2]),
        "Psi extends": vgroup.extend_to_M(psi) is None,
    }
    return _all_hold(checks, "properties")


@register("13.pi_image", 13, "restrictions induce only even permutations of V/V^2")
def _pi_image(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    d_perm = vgroup.pi_perm(vgroup.restrict(ggroup.D))
    x_perm = vgroup.pi_perm(vgroup.restrict(ggroup.X))
    if d_perm.order() != 3 or not x_perm.is_Identity:
        return False, f"Pi(D) = {d_perm}, Pi(X) = {x_perm}"

    def step():
        g = ggroup.random_elem(rng, ctx.elem_bound)
        if vgroup.pi_perm(vgroup.restrict(g)).is_odd:
            return f"{g} induces a transposition"
        return None

    return _sampled(ctx.samples, step, "restrictions")


@register("13.extend_to_M", 13, "extend_to_M inverts the restriction")
def _extend(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    if vgroup.extend_to_M(vgroup.IDENTITY_ENDO) != ggroup.IDENTITY:
        return False, "the identity does not extend to 1"
    square = vgroup.compose(vgroup.psi(), vgroup.psi())
    if vgroup.restrict(vgroup.c0()) != square:
        return False, f"c0 = {vgroup.c0()} does not restrict to Psi^2"

    def step():
        g = ggroup.random_elem(rng, ctx.elem_bound)
        if vgroup.extend_to_M(vgroup.restrict(g)) != g:
            return f"{g} is not recovered"
        return None

    ok, detail = _sampled(ctx.samples, step, "restrictions extended")
    return ok, f"c0 = {vgroup.c0()}; {detail}"


@register("13.vaut_mul", 13, "pairs (g, eps) multiply like their actions on V")
def _vaut_mul(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        p = vgroup.random_vaut(rng, ctx.elem_bound)
        q = vgroup.random_vaut(rng, ctx.elem_bound)
        r = vgroup.random_vaut(rng, ctx.elem_bound)
        pq = vgroup.vaut_mul(p, q)
        if vgroup.act(pq) != vgroup.compose(vgroup.act(p), vgroup.act(q)):
            return f"({p})({q}) does not act as the composite"
        if vgroup.vaut_mul(pq, r) != vgroup.vaut_mul(p, vgroup.vaut_mul(q, r)):
            return f"({p})({q})({r}) does not associate"
        if vgroup.vaut_mul(p, vgroup.vaut_inv(p)) != vgroup.VAUT_IDENTITY:
            return f"{p} times its inverse is not 1"
        return None

    return _sampled(ctx.samples, step, "triples")


@register("14.inn_not_characteristic", 14, "conjugation by Psi moves Inn(M)")
def _inn_char(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return vgroup.inn_m_not_characteristic_witness(rng, ctx.samples, ctx.elem_bound)


@register("15.centralizer", 15, "Aut(M) has trivial centralizer in Aut(V)")
def _centralizer(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return vgroup.centralizer_triviality_check(rng, ctx.samples, ctx.elem_bound)


@register("15.g_center", 15, "Z(G) = 1")
def _g_center(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return pgroup.g_center_check(ctx.box["g_center"], quiet=ctx.quiet)


@register("16.omega", 16, "conjugation by Psi is realized by an element of P")
def _omega(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return pgroup.omega_correspondence(rng, ctx.samples, ctx.h0_bound, ctx.elem_bound)


@register("17.r_uniqueness", 17, "R/M^2 is the only normal abelian candidate")
def _r_uniqueness(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return f2quot.r_uniqueness_scan(quiet=ctx.quiet)


@register("17.quotient_invariants", 17, "isomorphism types of the finite quotients")
def _quotients(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return _merge(f2quot.quotient_invariants())


@register(
    "17.tables", 17, "finite tables are groups and the reductions are homomorphisms"
)
def _tables(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    report = {}
    for name, outcome in f2quot.axioms_check(rng, ctx.table_samples).items():
        report[f"axioms {name}"] = outcome
    reductions = f2quot.homomorphism_check(rng, ctx.samples, ctx.elem_bound)
    for name, outcome in reductions.items():
        report[f"reduction {name}"] = outcome
    return _merge(report)


# P


@register("18.e_relations", 18, "relations of E and E^2 = conjugation by ABC")
def _e_relations(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    report = dict(pgroup.e_relations_check())
    report.update(
        {f"E preserves {k}": v for k, v in pgroup.e_action_relations_check().items()}
    )
    ok, detail = _all_hold(report)
    if not ok:
        return ok, detail

    def step():
        g = ggroup.random_elem(rng, ctx.elem_bound)
        if pgroup.e_action(pgroup.e_action(g)) != ggroup.gconj(g, pgroup.ABC):
            return f"E^2({g}) is not {g}^ABC"
        if pgroup.e_action(pgroup.e_inv(g)) != g:
            return f"E^-1 does not invert E on {g}"
        return None

    ok, sampled = _sampled(ctx.samples, step, "elements")
    return ok, f"{detail}; {sampled}"


@register("18.complement_cases", 18, "[Q, Q] for the candidate subgroups Q")
def _complement_cases(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return _merge(pgroup.complement_case_checks())


@register(
    "18.normal_complements", 18, "D-invariant subspaces and normal complements of R/M^2"
)
def _normal_complements(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    d_invariant = f2quot.invariant_subspaces(("D",))
    complements = f2quot.normal_complements()
    ok = len(d_invariant) == 15 and set(complements) == set(pgroup.COMPLEMENT_LABELS)
    return ok, (
        f"{len(d_invariant)} D-invariant subspaces, normal complements "
        + ", ".join(sorted(complements))
    )


@register("18.orbit_of_M", 18, "the Aut(G)-orbit of M is {M, M^E}")
def _orbit_of_m(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return f2quot.orbit_of_M_scan()


@register("19.e_not_inner", 19, "E is an outer automorphism of G")
def _e_not_inner(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return _merge(f2quot.e_not_inner_check(rng, ctx.samples, ctx.elem_bound))


@register("20.chain", 20, "G is characteristic in P")
def _chain(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return _merge(f2quot.characteristic_chain_check())


@register("20.p_center", 20, "Z(P) = 1")
def _p_center(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    return pgroup.p_center_check(ctx.box["p_center"], quiet=ctx.quiet)


@register("20.pmul", 20, "pmul, the collector and actions on G agree")
def _pmul(ctx: CheckContext, rng: np.random.Generator) -> Outcome:
    def step():
        p = pgroup.random_elem(rng, ctx.elem_bound)
        q = pgroup.random_elem(rng, ctx.elem_bound)
        lhs = pgroup.act(pgroup.pmul(p, q))
        if lhs != pgroup.gaut_compose(pgroup.act(p), pgroup.act(q)):
            return f"({p})({q}) does not act as the composite"
        w = ctx.word(rng, "P")
        value = pgroup.evaluate(w)
        nf = collect(w, "P")
        if nf != value.to_word():
            return f"collect({w}) = {nf}, pmul gives {value}"
        return None

    return _sampled(ctx.samples, step, "pairs and words")


# running


def select_checks(sections: Optional[Iterable[int]] = None) -> List[CheckSpec]:
    """
    :param sections: sections to run, None for all
    :return: registered checks of those sections sorted by check_id
    """
    specs = sorted(REGISTRY.values(), key=lambda spec: spec.check_id)
    if sections is None:
        return specs
    sections = set(sections)
    unknown = sorted(sections - set(SECTIONS))
    if unknown:
        raise ValueError(f"sections must be within 2..20, got {unknown}.")
    return [spec for spec in specs if spec.section in sections]


def run_check(spec: CheckSpec, ctx: CheckContext) -> CheckResult:
    start = time.perf_counter()
    ok, detail = spec.run(ctx, ctx.rng(spec.check_id))
    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    status = "pass" if ok else "fail"
    result = CheckResult(spec.check_id, spec.section, status, detail, elapsed_ms)
    if result.passed:
        logging.info("%s passed: %s", spec.check_id, detail)
    else:
        logging.warning("%s failed: %s", spec.check_id, detail)
    return result


def run_checks(specs: List[CheckSpec], ctx: CheckContext) -> List[CheckResult]:
    """Run the checks in order; results are sorted by check_id."""
    results = [
        run_check(spec, ctx)
        for spec in tqdm(specs, disable=ctx.quiet, desc="verify", unit="check")
    ]
    return sorted(results, key=lambda result: result.check_id)
