"""Three-level rankings over interpretations, and their formula encodings.

A ranking assigns every interpretation one of the plausibility levels 1, 2
or 3: level 1 holds the accepted worlds, level 2 the uncertain ones and
level 3 the rejected ones.  Every formula induces a ranking (value 1 means
level 1, u means 2, 0 means 3), and conversely every ranking is induced by
some formula, built here out of capture formulas for its level sets.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .semantics import (
    Interpretation,
    TruthValue,
    format_interpretation,
    interpretation_index,
    interpretations,
    value_profile,
)
from .syntax import And, Bot, Box1, Dia1, Dia2, Formula, Not, Or, Var

LEVELS = (1, 2, 3)


def level_of_value(v: TruthValue) -> int:
    return 3 - int(v)


def value_of_level(level: int) -> TruthValue:
    return TruthValue(3 - level)


@dataclass(frozen=True)
class Ranking:
    """Total map from the 3**n interpretations to levels 1..3.

    ``levels`` is stored in the canonical interpretation order.
    """

    n: int
    levels: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("variable count must be non-negative")
        if len(self.levels) != 3**self.n:
            raise ValueError(f"expected {3 ** self.n} levels for n={self.n}, got {len(self.levels)}")
        if any(level not in LEVELS for level in self.levels):
            raise ValueError("levels must be 1, 2 or 3")

    def level(self, w: Interpretation) -> int:
        return self.levels[interpretation_index(w)]

    def level_set(self, level: int) -> tuple[Interpretation, ...]:
        """The interpretations sitting at ``level``, in canonical order."""
        if level not in LEVELS:
            raise ValueError("levels must be 1, 2 or 3")
        return tuple(w for w, l in zip(interpretations(self.n), self.levels) if l == level)

    def serialize(self) -> str:
        return "".join(str(level) for level in self.levels)

    @classmethod
    def deserialize(cls, text: str, n: int) -> "Ranking":
        if len(text) != 3**n or any(c not in "123" for c in text):
            raise ValueError(f"expected {3 ** n} characters from {{1,2,3}}, got {text!r}")
        return cls(n, tuple(int(c) for c in text))

    @classmethod
    def from_level_sets(
        cls,
        n: int,
        accepted: Iterable[Interpretation],
        uncertain: Iterable[Interpretation],
        rejected: Iterable[Interpretation],
    ) -> "Ranking":
        """Build from the three level sets, which must partition interpretations(n)."""
        levels: dict[int, int] = {}
        for level, worlds in ((1, accepted), (2, uncertain), (3, rejected)):
            for w in worlds:
                index = interpretation_index(w)
                if index in levels:
                    raise ValueError(f"interpretation {format_interpretation(w)!r} assigned twice")
                levels[index] = level
        if len(levels) != 3**n:
            raise ValueError(f"level sets cover {len(levels)} of {3 ** n} interpretations")
        return cls(n, tuple(levels[i] for i in range(3**n)))

    def to_lines(self) -> list[str]:
        """One line per interpretation in canonical order: ``d0 d1 ... : L``."""
        lines = []
        for w, level in zip(interpretations(self.n), self.levels):
            digits = format_interpretation(w)
            lines.append(f"{digits} : {level}" if digits else f": {level}")
        return lines

    @classmethod
    def from_lines(cls, text: str) -> "Ranking":
        """Parse the ``d0 d1 ... : L`` line format.

        The variable count is inferred from the first line.  Every
        interpretation must appear exactly once; lines may come in any order.
        """
        entries: dict[int, int] = {}
        n: int | None = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            head, sep, tail = line.partition(":")
            if not sep:
                raise ValueError(f"line {lineno}: expected 'digits : level'")
            digits = head.split()
            if n is None:
                n = len(digits)
            if len(digits) != n:
                raise ValueError(f"line {lineno}: expected {n} truth value(s)")
            try:
                w = tuple(TruthValue.from_symbol(d) for d in digits)
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            level = tail.strip()
            if level not in ("1", "2", "3"):
                raise ValueError(f"line {lineno}: level must be 1, 2 or 3, got {level!r}")
            index = interpretation_index(w)
            if index in entries:
                raise ValueError(f"line {lineno}: duplicate interpretation {head.strip()!r}")
            entries[index] = int(level)
        if n is None:
            raise ValueError("empty ranking")
        if len(entries) != 3**n:
            raise ValueError(f"incomplete ranking: {len(entries)} of {3 ** n} interpretations")
        return cls(n, tuple(entries[i] for i in range(3**n)))


def all_rankings(n: int) -> Iterator[Ranking]:
    """Every ranking over interpretations(n), in serialization order."""
    for levels in itertools.product(LEVELS, repeat=3**n):
        yield Ranking(n, levels)


def ranking_of_formula(formula: Formula, n: int, memo: dict | None = None) -> Ranking:
    """The ranking induced by a formula's truth table (1 -> level 1, u -> 2, 0 -> 3)."""
    profile = value_profile(formula, n, memo)
    return Ranking(n, tuple(3 - int(v) for v in profile))


@lru_cache(maxsize=None)
def capture_valuation(w: Interpretation) -> Formula:
    """A formula whose unique model is ``w`` (it may have quasi-models).

    Per variable: ``xi`` if w(xi)=1, ``~xi`` if w(xi)=0, and
    ``[]1 xi & []1 ~xi`` if w(xi)=u.  Needs at least one variable.
    """
    if not w:
        raise ValueError("capture formulas need at least one variable")
    conjuncts: list[Formula] = []
    for i, v in enumerate(w):
        x = Var(i)
        if v is TruthValue.TRUE:
            conjuncts.append(x)
        elif v is TruthValue.FALSE:
            conjuncts.append(Not(x))
        else:
            conjuncts.append(And(Box1(x), Box1(Not(x))))
    out = conjuncts[0]
    for part in conjuncts[1:]:
        out = And(out, part)
    return out


def capture_set(worlds: Iterable[Interpretation], n: int) -> Formula:
    """A formula whose models are exactly ``worlds``; the empty set gives ``bot``.

    Disjuncts are ordered canonically, so equal sets give identical formulas.
    """
    if n < 1:
        raise ValueError("capture formulas need at least one variable")
    ordered = sorted(set(worlds), key=interpretation_index)
    for w in ordered:
        if len(w) != n:
            raise ValueError(f"interpretation {w!r} has {len(w)} values, expected {n}")
    if not ordered:
        return Bot()
    out: Formula = capture_valuation(ordered[0])
    for w in ordered[1:]:
        out = Or(out, capture_valuation(w))
    return out


@lru_cache(maxsize=512)
def formula_of_ranking(r: Ranking) -> Formula:
    """A formula inducing exactly the ranking ``r``.

    Capture the uncertain and rejected level sets, then forbid them with the
    matching modal strength: ``~(<>1 psi2 | <>2 psi3)``.
    """
    if r.n < 1:
        raise ValueError("ranking encodings need at least one variable")
    uncertain = capture_set(r.level_set(2), r.n)
    rejected = capture_set(r.level_set(3), r.n)
    return Not(Or(Dia1(uncertain), Dia2(rejected)))
