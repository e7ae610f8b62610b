"""Reachability of rankings under the level operations of the connectives.

Each connective acts on induced rankings: negation flips levels 1 and 3,
disjunction takes the cell-wise minimum level, conjunction the maximum,
``[]1`` raises 3 to 2 and 2 to 1, and ``[]2`` raises 2 to 1 while fixing 1
and 3.  This module computes brute-force closures of ranking sets under
those operations and verifies which rankings stay out of reach when only
one of the two boxes is available.
"""

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .ranking import Ranking, all_rankings


class PreorderOp(enum.Enum):
    """The ranking-level counterparts of the connectives."""

    NEG = "neg"
    BOX1 = "box1"
    BOX2 = "box2"
    JOIN = "join"
    MEET = "meet"


UNARY_OPS = frozenset({PreorderOp.NEG, PreorderOp.BOX1, PreorderOp.BOX2})
BINARY_OPS = frozenset({PreorderOp.JOIN, PreorderOp.MEET})

_UNARY_LEVEL_MAPS = {
    PreorderOp.NEG: {1: 3, 2: 2, 3: 1},
    PreorderOp.BOX1: {1: 1, 2: 1, 3: 2},
    PreorderOp.BOX2: {1: 1, 2: 1, 3: 3},
}

# Ranking induced by the bare variable x0: its model is most plausible.
X0_RANKING = Ranking(1, (3, 2, 1))

# Ranking induced by bot: every world rejected.
CONTRADICTION_RANKING = Ranking(1, (3, 3, 3))


def apply_op(op: PreorderOp, r: Ranking, r2: Ranking | None = None) -> Ranking:
    """Apply one level operation; unary ops reject a second argument."""
    if op in UNARY_OPS:
        if r2 is not None:
            raise ValueError(f"{op.value} takes a single ranking")
        table = _UNARY_LEVEL_MAPS[op]
        return Ranking(r.n, tuple(table[level] for level in r.levels))
    if op in BINARY_OPS:
        if r2 is None:
            raise ValueError(f"{op.value} takes two rankings")
        if r.n != r2.n:
            raise ValueError(f"rankings must agree on the variable count ({r.n} vs {r2.n})")
        pick = min if op is PreorderOp.JOIN else max
        return Ranking(r.n, tuple(pick(a, b) for a, b in zip(r.levels, r2.levels)))
    raise TypeError(f"not a level operation: {op!r}")


def closure(generators: Iterable[Ranking], ops: Iterable[PreorderOp]) -> frozenset[Ranking]:
    """Least superset of ``generators`` closed under ``ops`` (worklist fixed point)."""
    members = set(generators)
    if not members:
        raise ValueError("closure needs at least one generator")
    if len({r.n for r in members}) != 1:
        raise ValueError("generators must agree on the variable count")
    op_set = frozenset(ops)
    unary = [op for op in (PreorderOp.NEG, PreorderOp.BOX1, PreorderOp.BOX2) if op in op_set]
    binary = [op for op in (PreorderOp.JOIN, PreorderOp.MEET) if op in op_set]
    queue = deque(sorted(members, key=Ranking.serialize))
    while queue:
        r = queue.popleft()
        produced = [apply_op(op, r) for op in unary]
        for op in binary:
            for other in sorted(members, key=Ranking.serialize):
                produced.append(apply_op(op, r, other))
                produced.append(apply_op(op, other, r))
        for candidate in produced:
            if candidate not in members:
                members.add(candidate)
                queue.append(candidate)
    return frozenset(members)


def _mid_world_level(r: Ranking) -> int:
    # the all-u interpretation sits at index 3**n // 2 for n = 1
    return r.levels[1]


@lru_cache(maxsize=2)
def forbidden_family_box1(n: int = 1) -> frozenset[Ranking]:
    """Rankings of one variable unreachable from x0 with negation, disjunction
    and []1 alone: the linear ones placing the all-u world at an extreme
    level, and the ones with an empty middle level."""
    if n != 1:
        raise ValueError("the forbidden families are defined over one variable")
    family = []
    for r in all_rankings(1):
        sizes = [len(r.level_set(level)) for level in (1, 2, 3)]
        linear = sizes == [1, 1, 1]
        if linear and _mid_world_level(r) in (1, 3):
            family.append(r)
        elif sizes in ([2, 0, 1], [1, 0, 2]):
            family.append(r)
    return frozenset(family)


@lru_cache(maxsize=2)
def forbidden_family_box2(n: int = 1) -> frozenset[Ranking]:
    """Rankings of one variable unreachable from x0 with negation, disjunction
    and []2 alone."""
    if n != 1:
        raise ValueError("the forbidden families are defined over one variable")
    family = []
    for r in all_rankings(1):
        sizes = [len(r.level_set(level)) for level in (1, 2, 3)]
        mid = _mid_world_level(r)
        linear = sizes == [1, 1, 1]
        if (
            (linear and mid in (1, 3))
            or sizes == [0, 3, 0]
            or (sizes == [2, 1, 0] and mid == 1)
            or (sizes == [0, 1, 2] and mid == 3)
            or sizes == [1, 2, 0]
            or sizes == [0, 2, 1]
        ):
            family.append(r)
    return frozenset(family)


@dataclass(frozen=True)
class NondefinabilityReport:
    """Closure of the generators under one box's operation set, against the
    family of rankings that must stay unreachable."""

    variant: str
    include_bot: bool
    closure: frozenset[Ranking]
    forbidden: frozenset[Ranking]
    meet_invariant: bool

    @property
    def intersection(self) -> frozenset[Ranking]:
        return self.closure & self.forbidden

    @property
    def unreachable(self) -> frozenset[Ranking]:
        return frozenset(all_rankings(1)) - self.closure

    @property
    def disjoint(self) -> bool:
        return not self.intersection


def verify_nondefinability(variant: str, include_bot: bool = False) -> NondefinabilityReport:
    """Compute the reachable rankings for one box and test the forbidden family.

    ``variant`` is ``box1`` or ``box2``.  The operation set is negation,
    join and the chosen box; meet is derivable from negation and join, so it
    is included and the report records that including it changes nothing.
    With ``include_bot`` the all-rejected ranking joins the generators.
    """
    if variant == "box1":
        box, family = PreorderOp.BOX1, forbidden_family_box1(1)
    elif variant == "box2":
        box, family = PreorderOp.BOX2, forbidden_family_box2(1)
    else:
        raise ValueError(f"variant must be 'box1' or 'box2', got {variant!r}")
    generators = {X0_RANKING}
    if include_bot:
        generators.add(CONTRADICTION_RANKING)
    ops = {PreorderOp.NEG, PreorderOp.JOIN, box}
    base = closure(generators, ops)
    with_meet = closure(generators, ops | {PreorderOp.MEET})
    return NondefinabilityReport(
        variant=variant,
        include_bot=include_bot,
        closure=with_meet,
        forbidden=family,
        meet_invariant=base == with_meet,
    )


def format_nondefinability_report(report: NondefinabilityReport, machine: bool = False) -> str:
    """Plain-text report; the machine variant is one ``serialization verdict``
    line per forbidden-family member (IN means reachable, a violation)."""
    family = sorted(report.forbidden, key=Ranking.serialize)
    flags = [(r.serialize(), "IN" if r in report.closure else "OUT") for r in family]
    if machine:
        return "\n".join(f"{serial} {flag}" for serial, flag in flags)
    generators = "x0 and bot" if report.include_bot else "x0"
    unreachable = " ".join(sorted(r.serialize() for r in report.unreachable))
    lines = [
        f"variant: {report.variant} (generators: {generators}; ops: neg, join, {report.variant}, meet)",
        f"closure size: {len(report.closure)} of 27",
        f"forbidden family ({len(family)} rankings):",
        *(f"  {serial} {flag}" for serial, flag in flags),
        f"unreachable rankings ({len(report.unreachable)}): {unreachable}",
        f"meet adds nothing: {'yes' if report.meet_invariant else 'NO'}",
        f"verdict: {'DISJOINT' if report.disjoint else 'INTERSECTS'}",
    ]
    return "\n".join(lines)
