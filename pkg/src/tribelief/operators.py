"""Table-driven belief-change operators and their syntactic postulates.

An operator table sends a pair of levels (old state, new information) to an
output level; applied cell-wise to two rankings it yields the revised
ranking.  Each of the 3**9 tables is pinned down syntactically by three
postulate formulas, one per output level, built from level indicators of the
two inputs.  This module constructs those formulas and checks them against
the semantic operator, and carries the postulate suite of the cautious
operator ``ci``.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .ranking import LEVELS, Ranking, all_rankings, formula_of_ranking, ranking_of_formula, capture_valuation, value_of_level
from .semantics import TruthValue, interpretations, value_profile
from .syntax import And, Bot, Box1, Formula, Not, Or


@dataclass(frozen=True)
class OperatorTable:
    """A 3x3 level table; cell (i, j) is the output level for a world at
    level i in the old state and level j in the new information.

    ``cells`` is row-major: rows are the old level, columns the new one.
    """

    cells: tuple[int, ...]

    def __post_init__(self):
        if len(self.cells) != 9 or any(c not in LEVELS for c in self.cells):
            raise ValueError("an operator table is 9 cells with values 1, 2 or 3")

    def k(self, i: int, j: int) -> int:
        if i not in LEVELS or j not in LEVELS:
            raise ValueError("table cells are indexed by levels 1..3")
        return self.cells[(i - 1) * 3 + (j - 1)]

    def combine_values(self, a: TruthValue, b: TruthValue) -> TruthValue:
        """The table read at the truth-value level (1 means level 1, and so on)."""
        return value_of_level(self.cells[(2 - a) * 3 + (2 - b)])

    def serialize(self) -> str:
        return "".join(str(c) for c in self.cells)

    @classmethod
    def parse(cls, text: str) -> "OperatorTable":
        """Accepts the aliases ``ci`` and ``drastic`` or 9 characters from {1,2,3}."""
        if text == "ci":
            return ci_table()
        if text == "drastic":
            return drastic_table()
        if len(text) != 9 or any(c not in "123" for c in text):
            raise ValueError(
                f"operator table must be 'ci', 'drastic' or 9 characters from {{1,2,3}}, got {text!r}"
            )
        return cls(tuple(int(c) for c in text))


_CI_CELLS = (1, 2, 2, 1, 2, 3, 2, 2, 3)
_DRASTIC_CELLS = (1, 2, 3, 1, 2, 3, 1, 2, 3)


def ci_table() -> OperatorTable:
    """The cautious operator: new information wins, but a world only reaches
    full acceptance or rejection when the old state does not flatly oppose it."""
    return OperatorTable(_CI_CELLS)


def drastic_table() -> OperatorTable:
    """Absolute priority to the new information: cell (i, j) is j."""
    return OperatorTable(_DRASTIC_CELLS)


def all_tables() -> Iterator[OperatorTable]:
    """Every operator table, in serialization order (3**9 of them)."""
    for cells in itertools.product(LEVELS, repeat=9):
        yield OperatorTable(cells)


def apply_semantic(table: OperatorTable, r_old: Ranking, r_new: Ranking) -> Ranking:
    """Combine two rankings cell-wise through the table."""
    if r_old.n != r_new.n:
        raise ValueError(f"rankings must agree on the variable count ({r_old.n} vs {r_new.n})")
    cells = table.cells
    return Ranking(r_old.n, tuple(cells[(i - 1) * 3 + (j - 1)] for i, j in zip(r_old.levels, r_new.levels)))


def revise(table: OperatorTable, f: Formula, g: Formula, n: int) -> Formula:
    """The revised formula: encode both inputs as rankings, combine, re-encode."""
    return formula_of_ranking(apply_semantic(table, ranking_of_formula(f, n), ranking_of_formula(g, n)))


def level_indicator(f: Formula, level: int) -> Formula:
    """A formula true exactly at the worlds where ``f`` sits at ``level``."""
    if level == 1:
        return f
    if level == 2:
        return And(Box1(f), Box1(Not(f)))
    if level == 3:
        return Not(f)
    raise ValueError("levels must be 1, 2 or 3")


def cell_formula(table: OperatorTable, i: int, j: int, target: int, f: Formula, g: Formula) -> Formula:
    """Conjunction of level indicators picking out cell (i, j), if the table
    sends that cell to ``target``; ``bot`` otherwise."""
    if target not in LEVELS:
        raise ValueError("levels must be 1, 2 or 3")
    if target != table.k(i, j):
        return Bot()
    return And(level_indicator(f, i), level_indicator(g, j))


def postulate_formula(table: OperatorTable, target: int, f: Formula, g: Formula) -> Formula:
    """Disjunction of the cell formulas for ``target`` over all nine cells.

    Its models are exactly the worlds the combined ranking puts at level
    ``target``; if no cell maps there it is a disjunction of ``bot``s.
    """
    disjuncts = [cell_formula(table, i, j, target, f, g) for i in LEVELS for j in LEVELS]
    out: Formula = disjuncts[0]
    for d in disjuncts[1:]:
        out = Or(out, d)
    return out


@lru_cache(maxsize=8)
def _capture_profile_seed(n: int) -> dict:
    """Shared profile memo covering every capture formula at size n.

    Callers must copy (``dict(seed)``) before passing it to value_profile.
    """
    memo: dict = {}
    for w in interpretations(n):
        value_profile(capture_valuation(w), n, memo)
    return memo


def covering_ranking_pairs(n: int) -> tuple[tuple[Ranking, Ranking], ...]:
    """A small set of ranking pairs whose worlds hit all nine level cells."""
    if n < 1:
        raise ValueError("characterization needs at least one variable")
    count = 3**n
    if count >= 9:
        a = Ranking(n, tuple((i // 3) % 3 + 1 for i in range(count)))
        b = Ranking(n, tuple(i % 3 + 1 for i in range(count)))
        return ((a, b),)
    base = Ranking(1, (1, 2, 3))
    return tuple((base, Ranking(1, shifted)) for shifted in ((1, 2, 3), (2, 3, 1), (3, 1, 2)))


@dataclass(frozen=True)
class CharacterizationResult:
    """Outcome of checking the postulate formulas of one table; truthy iff they
    matched the semantic operator on every checked pair and rebuilt the table."""

    table: OperatorTable
    n: int
    pairs_checked: int
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def __bool__(self) -> bool:
        return self.failure is None


def check_characterization(
    table: OperatorTable,
    n: int = 1,
    pairs: Iterable[tuple[Ranking, Ranking]] | None = None,
) -> CharacterizationResult:
    """Verify that the three postulate formulas pin down ``table``'s operator.

    For each pair of rankings the models of the target-k postulate formula
    must be exactly the level-k worlds of the combined ranking, and reading
    the postulates cell-wise must rebuild the table (each world satisfies the
    postulate formula of exactly one target, the one its cell maps to).  With
    ``pairs=None`` all ranking pairs over interpretations(n) are checked.
    """
    if n < 1:
        raise ValueError("characterization needs at least one variable")
    if pairs is None:
        rankings = tuple(all_rankings(n))
        pair_iter: Iterable[tuple[Ranking, Ranking]] = itertools.product(rankings, repeat=2)
    else:
        pair_iter = pairs
    seed = _capture_profile_seed(n)
    covered: set[tuple[int, int]] = set()
    checked = 0

    def fail(reason: str) -> CharacterizationResult:
        return CharacterizationResult(table, n, checked, failure=reason)

    for r_old, r_new in pair_iter:
        checked += 1
        f = formula_of_ranking(r_old)
        g = formula_of_ranking(r_new)
        memo = dict(seed)
        combined = apply_semantic(table, r_old, r_new)
        profiles = []
        for target in LEVELS:
            profile = value_profile(postulate_formula(table, target, f, g), n, memo)
            models = {i for i, v in enumerate(profile) if v is TruthValue.TRUE}
            wanted = {i for i, level in enumerate(combined.levels) if level == target}
            if models != wanted:
                return fail(
                    f"target {target} postulate models mismatch for "
                    f"old={r_old.serialize()} new={r_new.serialize()}"
                )
            profiles.append(profile)
        for index in range(3**n):
            cell = (r_old.levels[index], r_new.levels[index])
            covered.add(cell)
            hits = [t for t in LEVELS if profiles[t - 1][index] is TruthValue.TRUE]
            if hits != [table.k(*cell)]:
                return fail(
                    f"cell {cell} rebuilt as {hits} instead of {table.k(*cell)} for "
                    f"old={r_old.serialize()} new={r_new.serialize()}"
                )
    if len(covered) < 9:
        return fail("checked pairs do not cover all nine level cells")
    return CharacterizationResult(table, n, checked)


@dataclass(frozen=True)
class SweepResult:
    """Characterization outcomes over a family of tables."""

    n: int
    total: int
    failures: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return not self.failures


def sweep_all_tables(n: int = 1, tables: Iterable[OperatorTable] | None = None) -> SweepResult:
    """Run the characterization check over every operator table.

    Uses the covering pairs only: that exercises every table cell while
    keeping the full 3**9 sweep tractable.  ``tables`` narrows the sweep.
    """
    pairs = covering_ranking_pairs(n)
    failures = []
    total = 0
    for table in tables if tables is not None else all_tables():
        total += 1
        result = check_characterization(table, n, pairs=pairs)
        if not result:
            failures.append((table.serialize(), result.failure))
    return SweepResult(n, total, tuple(failures))


CI_POSTULATE_NAMES = ("CI1", "CI2", "CI3", "CI4", "CI5", "CI6", "CI7", "CI8", "CI1'", "CI2'")


@dataclass(frozen=True)
class PostulateResult:
    name: str
    holds: bool
    witness: str | None = None


@dataclass(frozen=True)
class CiPostulateReport:
    n: int
    pairs_checked: int
    results: tuple[PostulateResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results)

    def __bool__(self) -> bool:
        return self.ok


def _models(profile: tuple[TruthValue, ...]) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(profile) if v is TruthValue.TRUE)


def check_ci_postulates(
    n: int = 1,
    pairs: Iterable[tuple[Ranking, Ranking]] | None = None,
) -> CiPostulateReport:
    """Check the cautious operator's postulates over ranking pairs.

    CI1, CI2, CI1' and CI2' are model-set equalities; CI3, CI7 and CI8 are
    full truth-table identities; CI4 preserves satisfiability, CI5 is success
    and CI6 keeps old models at least undetermined.  ``pairs=None`` checks
    every ranking pair over interpretations(n) exhaustively.
    """
    if n < 1:
        raise ValueError("the postulate suite needs at least one variable")
    table = ci_table()
    if pairs is None:
        rankings = tuple(all_rankings(n))
        pair_iter: Iterable[tuple[Ranking, Ranking]] = itertools.product(rankings, repeat=2)
    else:
        pair_iter = pairs
    seed = _capture_profile_seed(n)
    failures: dict[str, str] = {}
    checked = 0

    def combine(r_a: Ranking, r_b: Ranking) -> Formula:
        return formula_of_ranking(apply_semantic(table, r_a, r_b))

    for r_old, r_new in pair_iter:
        checked += 1
        memo = dict(seed)

        def prof(h: Formula) -> tuple[TruthValue, ...]:
            return value_profile(h, n, memo)

        phi = formula_of_ranking(r_old)
        theta = formula_of_ranking(r_new)
        star = combine(r_old, r_new)
        p_theta = prof(theta)
        p_star = prof(star)
        p_not_star = prof(Not(star))
        m_star = _models(p_star)
        m_not_star = _models(p_not_star)
        uncertain_phi = level_indicator(phi, 2)

        checks = {
            "CI1": _models(prof(Or(And(phi, theta), And(uncertain_phi, theta)))) == m_star,
            "CI2": _models(prof(Or(And(uncertain_phi, Not(theta)), And(Not(phi), Not(theta))))) == m_not_star,
            "CI3": p_not_star
            == prof(combine(ranking_of_formula(Not(phi), n, memo), ranking_of_formula(Not(theta), n, memo))),
            "CI4": all(v is TruthValue.FALSE for v in p_theta)
            or not all(v is TruthValue.FALSE for v in p_star),
            "CI5": m_star <= _models(p_theta),
            "CI6": _models(prof(phi)) <= _models(prof(Box1(star))),
            "CI7": prof(combine(ranking_of_formula(star, n, memo), ranking_of_formula(theta, n, memo)))
            == p_theta,
            "CI8": prof(combine(ranking_of_formula(theta, n, memo), ranking_of_formula(theta, n, memo)))
            == p_theta,
            "CI1'": m_star == _models(prof(And(Box1(phi), theta))),
            "CI2'": m_not_star == _models(prof(And(Box1(Not(phi)), Not(theta)))),
        }
        for name, holds in checks.items():
            if not holds and name not in failures:
                failures[name] = f"old={r_old.serialize()} new={r_new.serialize()}"

    results = tuple(
        PostulateResult(name, name not in failures, failures.get(name)) for name in CI_POSTULATE_NAMES
    )
    return CiPostulateReport(n, checked, results)


def _equiv_gap(lhs_of, rhs_of, n: int) -> tuple[Ranking, Ranking, int] | None:
    seed = _capture_profile_seed(n)
    rankings = tuple(all_rankings(n))
    table = ci_table()
    for r_old, r_new in itertools.product(rankings, repeat=2):
        memo = dict(seed)
        phi = formula_of_ranking(r_old)
        theta = formula_of_ranking(r_new)
        star = formula_of_ranking(apply_semantic(table, r_old, r_new))
        left = value_profile(lhs_of(star), n, memo)
        right = value_profile(rhs_of(phi, theta), n, memo)
        for index, (a, b) in enumerate(zip(left, right)):
            if a is not b:
                return r_old, r_new, index
    return None


def ci1_prime_equiv_witness(n: int = 1) -> tuple[Ranking, Ranking, int] | None:
    """A pair and world where ``old * new`` and ``[]1 old & new`` take
    different values; their model sets still agree everywhere (CI1')."""
    return _equiv_gap(lambda star: star, lambda phi, theta: And(Box1(phi), theta), n)


def ci2_prime_equiv_witness(n: int = 1) -> tuple[Ranking, Ranking, int] | None:
    """Same gap for CI2': ``~(old * new)`` versus ``[]1 ~old & ~new``."""
    return _equiv_gap(
        lambda star: Not(star), lambda phi, theta: And(Box1(Not(phi)), Not(theta)), n
    )
