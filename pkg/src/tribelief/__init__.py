"""Three-valued modal logic whose formulas encode three-level rankings,
with table-driven belief-change operators and brute-force verifiers."""

from .syntax import (
    And,
    Bot,
    Box1,
    Box2,
    Dia1,
    Dia2,
    Formula,
    FormulaSyntaxError,
    Implies,
    Not,
    Or,
    Var,
    parse,
    render,
)
from .semantics import (
    Interpretation,
    TruthValue,
    VALUES,
    bi_entails,
    classify,
    entails,
    equiv,
    eval_formula,
    format_interpretation,
    interpretation_index,
    interpretations,
    is_contradiction,
    is_tautology,
    parse_interpretation,
    truth_table_lines,
    value_profile,
)
from .ranking import (
    LEVELS,
    Ranking,
    all_rankings,
    capture_set,
    capture_valuation,
    formula_of_ranking,
    level_of_value,
    ranking_of_formula,
    value_of_level,
)
from .operators import (
    CI_POSTULATE_NAMES,
    CharacterizationResult,
    CiPostulateReport,
    OperatorTable,
    PostulateResult,
    SweepResult,
    all_tables,
    apply_semantic,
    cell_formula,
    check_characterization,
    check_ci_postulates,
    ci1_prime_equiv_witness,
    ci2_prime_equiv_witness,
    ci_table,
    covering_ranking_pairs,
    drastic_table,
    level_indicator,
    postulate_formula,
    revise,
    sweep_all_tables,
)
from .definability import (
    BINARY_OPS,
    CONTRADICTION_RANKING,
    NondefinabilityReport,
    PreorderOp,
    UNARY_OPS,
    X0_RANKING,
    apply_op,
    closure,
    forbidden_family_box1,
    forbidden_family_box2,
    format_nondefinability_report,
    verify_nondefinability,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Bot",
    "Box1",
    "Box2",
    "Dia1",
    "Dia2",
    "Formula",
    "FormulaSyntaxError",
    "Implies",
    "Not",
    "Or",
    "Var",
    "parse",
    "render",
    "Interpretation",
    "TruthValue",
    "VALUES",
    "bi_entails",
    "classify",
    "entails",
    "equiv",
    "eval_formula",
    "format_interpretation",
    "interpretation_index",
    "interpretations",
    "is_contradiction",
    "is_tautology",
    "parse_interpretation",
    "truth_table_lines",
    "value_profile",
    "LEVELS",
    "Ranking",
    "all_rankings",
    "capture_set",
    "capture_valuation",
    "formula_of_ranking",
    "level_of_value",
    "ranking_of_formula",
    "value_of_level",
    "CI_POSTULATE_NAMES",
    "CharacterizationResult",
    "CiPostulateReport",
    "OperatorTable",
    "PostulateResult",
    "SweepResult",
    "all_tables",
    "apply_semantic",
    "cell_formula",
    "check_characterization",
    "check_ci_postulates",
    "ci1_prime_equiv_witness",
    "ci2_prime_equiv_witness",
    "ci_table",
    "covering_ranking_pairs",
    "drastic_table",
    "level_indicator",
    "postulate_formula",
    "revise",
    "sweep_all_tables",
    "BINARY_OPS",
    "CONTRADICTION_RANKING",
    "NondefinabilityReport",
    "PreorderOp",
    "UNARY_OPS",
    "X0_RANKING",
    "apply_op",
    "closure",
    "forbidden_family_box1",
    "forbidden_family_box2",
    "format_nondefinability_report",
    "verify_nondefinability",
]
