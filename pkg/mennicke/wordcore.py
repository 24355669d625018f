"""
Free words over the alphabets of M, V, G and P, their parsing and printing,
and a rewriting collector used as the ground truth for the closed-form arithmetic.

A word is a tuple of letters ``(generator, exponent)`` kept freely reduced:
adjacent letters have distinct generators and no exponent is zero.
"""

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

Letter = Tuple[str, int]
Letters = Tuple[Letter, ...]

ALPHABETS = {
    "M": ("x", "y", "z"),
    "V": ("u", "v", "w"),
    "G": ("X", "Y", "Z", "A", "B", "C", "D"),
    "P": ("X", "Y", "Z", "A", "B", "C", "D", "E"),
}

IDENTITY_TOKEN = "1"

_TERM = re.compile(r"([A-Za-z])(?:\^(-?\d+))?$")


class WordSyntaxError(ValueError):
    """Raised when a word does not follow the grammar ``term := GEN ("^" INT)?``."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGeneratorError(ValueError):
    """Raised when a generator does not belong to the alphabet of the group."""

    def __init__(self, generator: str, group: str, position: int):
        super().__init__(
            f"generator {generator} at position {position} "
            f"is not in the alphabet of {group}: {' '.join(ALPHABETS[group])}"
        )
        self.generator = generator
        self.group = group
        self.position = position


def check_group(group: str):
    """
    :param group: group identifier
    :raise ValueError: if the identifier is unknown
    """
    if group not in ALPHABETS:
        raise ValueError(f"group must be one of {sorted(ALPHABETS)}, got {group}.")


def free_reduce(letters) -> Letters:
    """
    Merge adjacent letters with the same generator and drop zero exponents.

    :param letters: iterable of (generator, exponent)
    :return: freely reduced tuple of letters
    """
    out: List[Letter] = []
    for letter in letters:
        _append_reduced(out, letter)
    return tuple(out)


def _append_reduced(out: List[Letter], letter: Letter) -> bool:
    """
    Append a letter to a freely reduced list, merging it with the last letter.

    :return: True if the letter was appended as it is
    """
    gen, exp = letter
    if exp == 0:
        return False
    if out and out[-1][0] == gen:
        merged = out.pop()[1] + exp
        if merged != 0:
            out.append((gen, merged))
        return False
    out.append(letter)
    return True


@dataclass(frozen=True)
class Word:
    """Freely reduced word; the empty word is the identity."""

    letters: Letters = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((gen, -exp) for gen, exp in reversed(self.letters)))

    def generators(self) -> Tuple[str, ...]:
        return tuple(gen for gen, _ in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return IDENTITY_TOKEN
        return " ".join(
            gen if exp == 1 else f"{gen}^{exp}" for gen, exp in self.letters
        )


def parse_word(text: str, group: str) -> Word:
    """
    Parse a whitespace separated word such as ``"x y^-2 z"``.

    The token ``1`` denotes the identity, so printed identities parse back.

    :param text: word text
    :param group: one of M, V, G, P
    :return: freely reduced word
    """
    check_group(group)
    alphabet = ALPHABETS[group]
    letters = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        if token == IDENTITY_TOKEN:
            continue
        term = _TERM.match(token)
        if term is None:
            raise WordSyntaxError(f"cannot parse term {token!r}", match.start())
        gen, exp = term.group(1), term.group(2)
        if gen not in alphabet:
            raise UnknownGeneratorError(gen, group, match.start())
        letters.append((gen, 1 if exp is None else int(exp)))
    return Word(tuple(letters))


def random_word(seed: int, group: str, max_len: int, max_exp: int) -> Word:
    """
    Deterministic pseudorandom word.

    :param seed: seed of numpy's default generator
    :param group: one of M, V, G, P
    :param max_len: maximum number of letters before free reduction
    :param max_exp: maximum absolute value of an exponent
    :return: freely reduced word
    """
    check_group(group)
    if max_len < 1 or max_exp < 1:
        raise ValueError(
            f"max_len and max_exp must be positive, got {max_len} and {max_exp}."
        )
    rng = np.random.default_rng(seed)
    return sample_word(rng, group, max_len, max_exp)


def sample_word(
    rng: np.random.Generator, group: str, max_len: int, max_exp: int
) -> Word:
    """Draw a word from an existing generator, see random_word."""
    alphabet = ALPHABETS[group]
    length = int(rng.integers(0, max_len + 1))
    gens = rng.integers(len(alphabet), size=length).tolist()
    exps = rng.integers(1, max_exp + 1, size=length) * rng.choice((-1, 1), size=length)
    return Word(tuple((alphabet[g], e) for g, e in zip(gens, exps.tolist())))


# rewriting rules


@dataclass(frozen=True)
class Rule:
    """
    Oriented rewrite rule on one letter (a fold) or on two adjacent letters (a swap).

    ``rewrite(e1, e2)`` returns the right hand side for the left hand side
    ``left^e1 right^e2``; for folds ``right`` is None and ``e2`` is ignored.
    ``guard(e1)`` tells whether the rule applies to the exponent of ``left``.
    """

    name: str
    left: str
    right: Optional[str]
    rewrite: Callable[[int, int], Letters]
    guard: Callable[[int], bool]

    def lhs(self, e1: int, e2: int = 0) -> Word:
        if self.right is None:
            return Word(((self.left, e1),))
        return Word(((self.left, e1), (self.right, e2)))

    def rhs(self, e1: int, e2: int = 0) -> Word:
        return Word(self.rewrite(e1, e2))


@dataclass(frozen=True)
class RuleTable:
    """Rewrite rules of one group, keyed for the collector."""

    group: str
    order: Tuple[str, ...]
    rules: Tuple[Rule, ...]

    @cached_property
    def folds(self) -> Dict[str, Rule]:
        return {rule.left: rule for rule in self.rules if rule.right is None}

    @cached_property
    def swaps(self) -> Dict[Tuple[str, str], Rule]:
        return {(rule.left, rule.right): rule for rule in self.rules if rule.right}

    @cached_property
    def rank(self) -> Dict[str, int]:
        return {gen: n for n, gen in enumerate(self.order)}


def _any(_: int) -> bool:
    return True


def _is_one(e: int) -> bool:
    return e == 1


def _not_one(e: int) -> bool:
    return e != 1


def _is_d(e: int) -> bool:
    return e in (1, 2)


def _not_d(e: int) -> bool:
    return e not in (1, 2)


def _plain_swap(left: str, right: str, guard=_any) -> Rule:
    return Rule(
        name=f"{left} {right} -> {right} {left}",
        left=left,
        right=right,
        rewrite=lambda e1, e2: ((right, e2), (left, e1)),
        guard=guard,
    )


def _sign_swap(left: str, right: str) -> Rule:
    """left^e right^f -> right^(f(-1)^e) left^e"""
    return Rule(
        name=f"{left}^e {right}^f -> {right}^(f(-1)^e) {left}^e",
        left=left,
        right=right,
        rewrite=lambda e1, e2: ((right, e2 * (-1) ** (e1 % 2)), (left, e1)),
        guard=_any,
    )


def _twist_swap(left: str, right: str) -> Rule:
    """left^e right^f -> right^f left^(e(-1)^f)"""
    return Rule(
        name=f"{left}^e {right}^f -> {right}^f {left}^(e(-1)^f)",
        left=left,
        right=right,
        rewrite=lambda e1, e2: ((right, e2), (left, e1 * (-1) ** (e2 % 2))),
        guard=_any,
    )


def _m_rules(x: str, y: str, z: str) -> Tuple[Rule, ...]:
    return (_sign_swap(y, x), _sign_swap(z, y), _twist_swap(z, x))


def _fold_square(big: str, square: str) -> Rule:
    """big^e -> square^(2q) big^r with e = 2q + r"""
    return Rule(
        name=f"{big}^e -> {square}^(2q) {big}^r",
        left=big,
        right=None,
        rewrite=lambda e1, _: ((square, 2 * (e1 // 2)), (big, e1 % 2)),
        guard=_not_one,
    )


def _square_swap(big: str, right: str, before: Optional[str], after: Optional[str]):
    """
    big right^f -> before^(2(f%2)) right^f after^(-2(f%2)) big

    Exactly one of ``before`` and ``after`` is set.
    """
    if before is not None:
        name = f"{big} {right}^f -> {before}^(2(f%2)) {right}^f {big}"

        def rewrite(_, f):
            return ((before, 2 * (f % 2)), (right, f), (big, 1))

    else:
        name = f"{big} {right}^f -> {right}^f {after}^(-2(f%2)) {big}"

        def rewrite(_, f):
            return ((right, f), (after, -2 * (f % 2)), (big, 1))

    return Rule(name=name, left=big, right=right, rewrite=rewrite, guard=_is_one)


# D W = W' D, with W' = D W D^-1
_D_SHIFT = {
    1: {"X": "Z", "Y": "X", "Z": "Y", "A": "C", "B": "A", "C": "B"},
    2: {"X": "Y", "Y": "Z", "Z": "X", "A": "B", "B": "C", "C": "A"},
}


def _d_swap(right: str) -> Rule:
    return Rule(
        name=f"D^d {right}^f -> D({right})^f D^d",
        left="D",
        right=right,
        rewrite=lambda d, f: ((_D_SHIFT[d][right], f), ("D", d)),
        guard=_is_d,
    )


def _e_swap(right: str, partner: str) -> Rule:
    """E right^f -> (right partner^-1)^f E"""

    def rewrite(_, f):
        if f > 0:
            body = ((right, 1), (partner, -1)) * f
        else:
            body = ((partner, 1), (right, -1)) * (-f)
        return body + (("E", 1),)

    return Rule(
        name=f"E {right}^f -> ({right} {partner}^-1)^f E",
        left="E",
        right=right,
        rewrite=rewrite,
        guard=_is_one,
    )


def _e_fold() -> Rule:
    """E^e -> (A B C)^q E^r with e = 2q + r"""

    def rewrite(e, _):
        q, r = e // 2, e % 2
        if q >= 0:
            body = (("A", 1), ("B", 1), ("C", 1)) * q
        else:
            body = (("C", -1), ("B", -1), ("A", -1)) * (-q)
        return body + (("E", r),)

    return Rule(
        name="E^e -> (A B C)^q E^r",
        left="E",
        right=None,
        rewrite=rewrite,
        guard=_not_one,
    )


def _g_rules() -> Tuple[Rule, ...]:
    rules = list(_m_rules("X", "Y", "Z"))
    rules += [_fold_square("A", "Z"), _fold_square("B", "X"), _fold_square("C", "Y")]
    rules.append(
        Rule(
            name="D^e -> D^(e mod 3)",
            left="D",
            right=None,
            rewrite=lambda e, _: (("D", e % 3),),
            guard=_not_d,
        )
    )
    rules += [
        _square_swap("A", "X", before=None, after="Z"),
        _plain_swap("A", "Y", _is_one),
        _plain_swap("A", "Z", _is_one),
        _plain_swap("B", "X", _is_one),
        _square_swap("B", "Y", before="X", after=None),
        _plain_swap("B", "Z", _is_one),
        _plain_swap("C", "X", _is_one),
        _plain_swap("C", "Y", _is_one),
        _square_swap("C", "Z", before="Y", after=None),
        _plain_swap("B", "A", _is_one),
        _plain_swap("C", "A", _is_one),
        _plain_swap("C", "B", _is_one),
    ]
    rules += [_d_swap(right) for right in ("X", "Y", "Z", "A", "B", "C")]
    return tuple(rules)


def _p_rules() -> Tuple[Rule, ...]:
    rules = list(_g_rules())
    rules.append(_e_fold())
    rules += [_e_swap("X", "A"), _e_swap("Y", "B"), _e_swap("Z", "C")]
    rules += [_plain_swap("E", right, _is_one) for right in ("A", "B", "C", "D")]
    return tuple(rules)


@lru_cache(maxsize=None)
def rule_table(group: str) -> RuleTable:
    """
    :param group: M, G or P
    :return: the rewrite rules of the group
    """
    if group == "M":
        rules = _m_rules("x", "y", "z")
    elif group == "G":
        rules = _g_rules()
    elif group == "P":
        rules = _p_rules()
    else:
        raise ValueError(f"no collector for group {group}, use M, G or P.")
    return RuleTable(group=group, order=ALPHABETS[group], rules=rules)


def _collect_from_left(letters: Letters, table: RuleTable) -> Letters:
    """
    Push the letters one at a time onto a prefix kept in normal form.

    The prefix has no redex, so only the pair at its boundary is examined. A
    rewritten pair goes back to the front of the pending letters.
    """
    rank, folds, swaps = table.rank, table.folds, table.swaps
    stack: List[Letter] = []
    pending = list(reversed(letters))
    while pending:
        gen, exp = pending.pop()
        if stack and stack[-1][0] == gen:
            exp += stack.pop()[1]
        if exp == 0:
            continue
        if stack:
            top_gen, top_exp = stack[-1]
            if rank[top_gen] > rank[gen]:
                swap = swaps[(top_gen, gen)]
                if swap.guard(top_exp):
                    stack.pop()
                    pending.extend(reversed(swap.rewrite(top_exp, exp)))
                    continue
        fold = folds.get(gen)
        if fold is not None and fold.guard(exp):
            pending.extend(reversed(fold.rewrite(exp, 0)))
            continue
        stack.append((gen, exp))
    return tuple(stack)


def _redex_at(letters: List[Letter], pos: int, table: RuleTable) -> Optional[Rule]:
    gen, exp = letters[pos]
    fold = table.folds.get(gen)
    if fold is not None and fold.guard(exp):
        return fold
    if pos + 1 < len(letters):
        nxt = letters[pos + 1][0]
        if table.rank[gen] > table.rank[nxt]:
            swap = table.swaps[(gen, nxt)]
            if swap.guard(exp):
                return swap
    return None


def _splice(letters: List[Letter], start: int, stop: int, replaced: Letters):
    """Replace letters[start:stop], reducing only around the seams."""
    tail = letters[stop:]
    del letters[start:]
    for letter in replaced:
        _append_reduced(letters, letter)
    for n, letter in enumerate(tail):
        if _append_reduced(letters, letter):
            letters.extend(tail[n + 1 :])
            break


def _collect_random(
    letters: Letters, table: RuleTable, rng: np.random.Generator
) -> Letters:
    """Rewrite the first redex found from a random position, scanning cyclically."""
    word = list(letters)
    while word:
        size = len(word)
        start = int(rng.integers(size))
        for step in range(size):
            pos = (start + step) % size
            rule = _redex_at(word, pos, table)
            if rule is not None:
                break
        else:
            break
        if rule.right is None:
            _splice(word, pos, pos + 1, rule.rewrite(word[pos][1], 0))
        else:
            replaced = rule.rewrite(word[pos][1], word[pos + 1][1])
            _splice(word, pos, pos + 2, replaced)
    return tuple(word)


def collect(
    w: Word,
    group: str,
    strategy: str = "leftmost",
    rng: Optional[np.random.Generator] = None,
) -> Word:
    """
    Rewrite a word into its normal form.

    :param w: word over the alphabet of the group
    :param group: M, G or P
    :param strategy: "leftmost" collects from the left, one letter at a time onto a
        prefix in normal form; "random" rewrites the first redex found from a random
        position
    :param rng: generator used by the random strategy
    :return: normal form word, x^i y^j z^k for M, X^a Y^b Z^c A^i B^j C^k D^l for G,
        and the G normal form followed by E^m for P
    """
    if strategy not in ("leftmost", "random"):
        raise ValueError(f"strategy must be leftmost or random, got {strategy}.")
    table = rule_table(group)
    alphabet = set(table.order)
    for pos, gen in enumerate(w.generators()):
        if gen not in alphabet:
            raise UnknownGeneratorError(gen, group, pos)
    if strategy == "leftmost":
        return Word(_collect_from_left(w.letters, table))
    if rng is None:
        rng = np.random.default_rng()
    return Word(_collect_random(w.letters, table, rng))
