"""Three-valued semantics: interpretations, evaluation, entailment.

The values are 0 (false), u (undetermined) and 1 (true), totally ordered
0 < u < 1.  Conjunction is minimum, disjunction maximum, negation swaps the
extremes and fixes u, and implication is ``~a | b``.  The four modalities
shift a value's plausibility one way or the other:

    <>1 : 1 -> u, u -> 0, 0 -> 0        []1 : 1 -> 1, u -> 1, 0 -> u
    <>2 : 1 -> 1, u -> 0, 0 -> 0        []2 : 1 -> 1, u -> 1, 0 -> 0

Each box is the dual ``~ <>i ~`` of its diamond.
"""

import enum
import itertools
from functools import lru_cache

from .syntax import And, Bot, Box1, Box2, Dia1, Dia2, Formula, Implies, Not, Or, Var


class TruthValue(enum.IntEnum):
    """One of the logic's three values; the integer order is the semantic order."""

    FALSE = 0
    UNDET = 1
    TRUE = 2

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, text: str) -> "TruthValue":
        for value, symbol in _SYMBOLS.items():
            if text == symbol:
                return value
        raise ValueError(f"not a truth value: {text!r} (expected one of 0, u, 1)")


_SYMBOLS = {TruthValue.FALSE: "0", TruthValue.UNDET: "u", TruthValue.TRUE: "1"}

VALUES = (TruthValue.FALSE, TruthValue.UNDET, TruthValue.TRUE)

Interpretation = tuple[TruthValue, ...]


def neg(v: TruthValue) -> TruthValue:
    return TruthValue(2 - v)


def conj(a: TruthValue, b: TruthValue) -> TruthValue:
    return min(a, b)


def disj(a: TruthValue, b: TruthValue) -> TruthValue:
    return max(a, b)


def implies(a: TruthValue, b: TruthValue) -> TruthValue:
    return max(neg(a), b)


def dia1(v: TruthValue) -> TruthValue:
    return TruthValue(max(v - 1, 0))


def box1(v: TruthValue) -> TruthValue:
    return TruthValue(min(v + 1, 2))


def dia2(v: TruthValue) -> TruthValue:
    return TruthValue.TRUE if v is TruthValue.TRUE else TruthValue.FALSE


def box2(v: TruthValue) -> TruthValue:
    return TruthValue.FALSE if v is TruthValue.FALSE else TruthValue.TRUE


@lru_cache(maxsize=None)
def interpretations(n: int) -> tuple[Interpretation, ...]:
    """All 3**n interpretations of x0..x(n-1), in canonical order.

    Canonical order counts in base three with digit order 0 < u < 1 and
    position 0 most significant.
    """
    if n < 0:
        raise ValueError("variable count must be non-negative")
    return tuple(itertools.product(VALUES, repeat=n))


def interpretation_index(w: Interpretation) -> int:
    """Position of ``w`` within ``interpretations(len(w))``."""
    index = 0
    for v in w:
        index = index * 3 + int(v)
    return index


def format_interpretation(w: Interpretation, sep: str = " ") -> str:
    return sep.join(v.symbol for v in w)


def parse_interpretation(text: str, n: int) -> Interpretation:
    """Parse digits 0/u/1 separated by commas, whitespace, or nothing."""
    chunks = text.replace(",", " ").split()
    if len(chunks) == 1 and len(chunks[0]) == n:
        chunks = list(chunks[0])
    if len(chunks) != n:
        raise ValueError(f"expected {n} truth value(s), got {len(chunks)} in {text!r}")
    return tuple(TruthValue.from_symbol(c) for c in chunks)


def eval_formula(formula: Formula, w: Interpretation) -> TruthValue:
    """Value of ``formula`` under the interpretation ``w``."""
    if isinstance(formula, Var):
        if formula.index >= len(w):
            raise ValueError(f"variable x{formula.index} out of range for {len(w)} variable(s)")
        return w[formula.index]
    if isinstance(formula, Bot):
        return TruthValue.FALSE
    if isinstance(formula, Not):
        return neg(eval_formula(formula.operand, w))
    if isinstance(formula, And):
        return conj(eval_formula(formula.left, w), eval_formula(formula.right, w))
    if isinstance(formula, Or):
        return disj(eval_formula(formula.left, w), eval_formula(formula.right, w))
    if isinstance(formula, Implies):
        return implies(eval_formula(formula.left, w), eval_formula(formula.right, w))
    if isinstance(formula, Dia1):
        return dia1(eval_formula(formula.operand, w))
    if isinstance(formula, Box1):
        return box1(eval_formula(formula.operand, w))
    if isinstance(formula, Dia2):
        return dia2(eval_formula(formula.operand, w))
    if isinstance(formula, Box2):
        return box2(eval_formula(formula.operand, w))
    raise TypeError(f"not a formula node: {formula!r}")


def value_profile(formula: Formula, n: int, memo: dict | None = None) -> tuple[TruthValue, ...]:
    """Values of ``formula`` at every interpretation of ``interpretations(n)``.

    ``memo`` is an id-keyed cache of subtree profiles; pass the same dict
    across calls to avoid re-evaluating shared subtrees.  Entries pin their
    node, so a live memo never hands back a stale profile.
    """
    worlds = interpretations(n)
    count = len(worlds)
    if memo is None:
        memo = {}

    def walk(node: Formula) -> tuple[TruthValue, ...]:
        entry = memo.get(id(node))
        if entry is not None:
            return entry[1]
        if isinstance(node, Var):
            if node.index >= n:
                raise ValueError(f"variable x{node.index} out of range for {n} variable(s)")
            profile = tuple(w[node.index] for w in worlds)
        elif isinstance(node, Bot):
            profile = (TruthValue.FALSE,) * count
        elif isinstance(node, Not):
            profile = tuple(neg(v) for v in walk(node.operand))
        elif isinstance(node, And):
            profile = tuple(map(min, walk(node.left), walk(node.right)))
        elif isinstance(node, Or):
            profile = tuple(map(max, walk(node.left), walk(node.right)))
        elif isinstance(node, Implies):
            profile = tuple(implies(a, b) for a, b in zip(walk(node.left), walk(node.right)))
        elif isinstance(node, Dia1):
            profile = tuple(dia1(v) for v in walk(node.operand))
        elif isinstance(node, Box1):
            profile = tuple(box1(v) for v in walk(node.operand))
        elif isinstance(node, Dia2):
            profile = tuple(dia2(v) for v in walk(node.operand))
        elif isinstance(node, Box2):
            profile = tuple(box2(v) for v in walk(node.operand))
        else:
            raise TypeError(f"not a formula node: {node!r}")
        memo[id(node)] = (node, profile)
        return profile

    return walk(formula)


def classify(formula: Formula, n: int) -> tuple[tuple[Interpretation, ...], tuple[Interpretation, ...], tuple[Interpretation, ...]]:
    """Partition the interpretations into (models, quasi-models, countermodels)."""
    worlds = interpretations(n)
    profile = value_profile(formula, n)
    models = tuple(w for w, v in zip(worlds, profile) if v is TruthValue.TRUE)
    quasi = tuple(w for w, v in zip(worlds, profile) if v is TruthValue.UNDET)
    counter = tuple(w for w, v in zip(worlds, profile) if v is TruthValue.FALSE)
    return models, quasi, counter


def equiv(f: Formula, g: Formula, n: int) -> bool:
    """Same truth table over the 3**n interpretations."""
    return value_profile(f, n) == value_profile(g, n)


def entails(f: Formula, g: Formula, n: int) -> bool:
    """Every model of ``f`` is a model of ``g``."""
    return all(
        vg is TruthValue.TRUE
        for vf, vg in zip(value_profile(f, n), value_profile(g, n))
        if vf is TruthValue.TRUE
    )


def bi_entails(f: Formula, g: Formula, n: int) -> bool:
    """Same model set; weaker than ``equiv``, which compares full tables."""
    return all(
        (vf is TruthValue.TRUE) == (vg is TruthValue.TRUE)
        for vf, vg in zip(value_profile(f, n), value_profile(g, n))
    )


def is_contradiction(formula: Formula, n: int) -> bool:
    """A formula with countermodels only."""
    return all(v is TruthValue.FALSE for v in value_profile(formula, n))


def is_tautology(formula: Formula, n: int) -> bool:
    return all(v is TruthValue.TRUE for v in value_profile(formula, n))


def truth_table_lines(formula: Formula, n: int) -> list[str]:
    """One line per interpretation in canonical order: ``d0 d1 ... dn-1 : v``."""
    profile = value_profile(formula, n)
    lines = []
    for w, v in zip(interpretations(n), profile):
        digits = format_interpretation(w)
        lines.append(f"{digits} : {v.symbol}" if digits else f": {v.symbol}")
    return lines
