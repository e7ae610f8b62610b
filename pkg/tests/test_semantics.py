import pytest
from hypothesis import given

from tribelief import (
    And,
    Bot,
    Box1,
    Box2,
    Dia1,
    Dia2,
    Implies,
    Not,
    Or,
    TruthValue,
    Var,
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
from tribelief.semantics import box1, box2, conj, dia1, dia2, disj, implies, neg
import reference_tables as ref
from strategies import formulas

F, U, T = TruthValue.FALSE, TruthValue.UNDET, TruthValue.TRUE


def sym(text):
    return TruthValue.from_symbol(text)


@pytest.mark.parametrize("a,b,expected", ref.AND_ROWS)
def test_conj_matches_reference(a, b, expected):
    assert conj(sym(a), sym(b)) == sym(expected)


@pytest.mark.parametrize("a,b,expected", ref.OR_ROWS)
def test_disj_matches_reference(a, b, expected):
    assert disj(sym(a), sym(b)) == sym(expected)


@pytest.mark.parametrize("a,b,expected", ref.IMPLIES_ROWS)
def test_implies_matches_reference(a, b, expected):
    assert implies(sym(a), sym(b)) == sym(expected)


@pytest.mark.parametrize("a,expected", ref.NOT_ROWS)
def test_neg_matches_reference(a, expected):
    assert neg(sym(a)) == sym(expected)


@pytest.mark.parametrize(
    "fn,rows",
    [(dia1, ref.DIA1_ROWS), (box1, ref.BOX1_ROWS), (dia2, ref.DIA2_ROWS), (box2, ref.BOX2_ROWS)],
)
def test_modal_value_maps_match_reference(fn, rows):
    for a, expected in rows:
        assert fn(sym(a)) == sym(expected)


@pytest.mark.parametrize(
    "node,rows",
    [
        (And(Var(0), Var(1)), ref.AND_ROWS),
        (Or(Var(0), Var(1)), ref.OR_ROWS),
        (Implies(Var(0), Var(1)), ref.IMPLIES_ROWS),
    ],
)
def test_eval_binary_connectives(node, rows):
    for a, b, expected in rows:
        assert eval_formula(node, (sym(a), sym(b))) == sym(expected)


@pytest.mark.parametrize(
    "wrap,rows",
    [
        (Not, ref.NOT_ROWS),
        (Dia1, ref.DIA1_ROWS),
        (Box1, ref.BOX1_ROWS),
        (Dia2, ref.DIA2_ROWS),
        (Box2, ref.BOX2_ROWS),
    ],
)
def test_eval_unary_connectives(wrap, rows):
    for a, expected in rows:
        assert eval_formula(wrap(Var(0)), (sym(a),)) == sym(expected)


def test_eval_atoms():
    assert eval_formula(Bot(), (T,)) is F
    assert eval_formula(Var(1), (F, U)) is U


def test_eval_out_of_range_variable():
    with pytest.raises(ValueError, match="out of range"):
        eval_formula(Var(2), (F, U))


def test_eval_rejects_non_formula():
    with pytest.raises(TypeError):
        eval_formula("x0", (F,))


def test_interpretations_counts():
    for n in range(4):
        assert len(interpretations(n)) == 3**n


def test_interpretations_order_n1():
    assert interpretations(1) == ((F,), (U,), (T,))


def test_interpretations_first_position_most_significant():
    worlds = interpretations(2)
    assert worlds[0] == (F, F)
    assert worlds[1] == (F, U)
    assert worlds[3] == (U, F)
    assert worlds[-1] == (T, T)


def test_interpretations_n0():
    assert interpretations(0) == ((),)


def test_interpretations_rejects_negative():
    with pytest.raises(ValueError):
        interpretations(-1)


def test_interpretation_index_matches_enumeration():
    for n in (0, 1, 2, 3):
        for i, w in enumerate(interpretations(n)):
            assert interpretation_index(w) == i


def test_format_interpretation():
    assert format_interpretation((F, U, T)) == "0 u 1"
    assert format_interpretation((F, U, T), sep="") == "0u1"
    assert format_interpretation(()) == ""


@pytest.mark.parametrize("text", ["0,u,1", "0 u 1", "0u1", " 0 , u , 1 "])
def test_parse_interpretation_accepted_shapes(text):
    assert parse_interpretation(text, 3) == (F, U, T)


def test_parse_interpretation_single_value():
    assert parse_interpretation("u", 1) == (U,)


def test_parse_interpretation_errors():
    with pytest.raises(ValueError):
        parse_interpretation("0 u", 3)
    with pytest.raises(ValueError):
        parse_interpretation("0 x 1", 3)
    with pytest.raises(ValueError):
        parse_interpretation("2", 1)


def test_from_symbol_round_trip():
    for v in (F, U, T):
        assert TruthValue.from_symbol(v.symbol) is v
    with pytest.raises(ValueError):
        TruthValue.from_symbol("2")


def test_classify_single_variable():
    models, quasi, counter = classify(Var(0), 1)
    assert models == ((T,),)
    assert quasi == ((U,),)
    assert counter == ((F,),)


def test_classify_partitions_everything():
    f = Implies(And(Var(0), Var(1)), Dia1(Var(0)))
    models, quasi, counter = classify(f, 2)
    assert len(models) + len(quasi) + len(counter) == 9
    assert set(models) | set(quasi) | set(counter) == set(interpretations(2))


def test_entailment_is_directional_across_box1():
    assert entails(Var(0), Box1(Var(0)), 1)
    assert not entails(Box1(Var(0)), Var(0), 1)


def test_bi_entailment_weaker_than_equivalence():
    # <>2 x0 keeps exactly the models of x0 but pushes u down to 0
    assert bi_entails(Var(0), Dia2(Var(0)), 1)
    assert not equiv(Var(0), Dia2(Var(0)), 1)


def test_contradiction_entails_everything():
    assert entails(Bot(), Var(0), 1)
    assert entails(And(Var(0), Not(Dia2(Var(0)))), Var(1), 2)


def test_is_tautology_and_contradiction():
    assert is_contradiction(Bot(), 1)
    assert is_tautology(Not(Bot()), 1)
    assert not is_tautology(Or(Var(0), Not(Var(0))), 1)
    assert not is_contradiction(And(Var(0), Not(Var(0))), 1)


@given(formulas(max_index=1))
def test_box_dualities(f):
    assert equiv(Box1(f), Not(Dia1(Not(f))), 2)
    assert equiv(Box2(f), Not(Dia2(Not(f))), 2)
    assert equiv(Dia1(f), Not(Box1(Not(f))), 2)
    assert equiv(Dia2(f), Not(Box2(Not(f))), 2)


@given(formulas(max_index=1), formulas(max_index=1))
def test_modalities_distribute_over_lattice_connectives(f, g):
    for wrap in (Dia1, Box1, Dia2, Box2):
        assert equiv(wrap(And(f, g)), And(wrap(f), wrap(g)), 2)
        assert equiv(wrap(Or(f, g)), Or(wrap(f), wrap(g)), 2)


@given(formulas(max_index=1))
def test_double_negation(f):
    assert equiv(Not(Not(f)), f, 2)


@given(formulas(max_index=1), formulas(max_index=1))
def test_de_morgan(f, g):
    assert equiv(Not(And(f, g)), Or(Not(f), Not(g)), 2)
    assert equiv(Not(Or(f, g)), And(Not(f), Not(g)), 2)


@given(formulas(max_index=1), formulas(max_index=1))
def test_implication_reduces_to_negation_and_disjunction(f, g):
    assert equiv(Implies(f, g), Or(Not(f), g), 2)


@given(formulas(max_index=1, modal=False, allow_bot=False))
def test_modality_free_fragment_has_no_tautologies(f):
    # without modalities or bot, every connective fixes u, so the all-u
    # interpretation never yields 1 (and never 0 either)
    all_u = (U, U)
    assert eval_formula(f, all_u) is U
    assert not is_tautology(f, 2)
    assert not is_contradiction(f, 2)


@given(formulas(max_index=1))
def test_iterated_box1_is_a_tautology(f):
    assert is_tautology(Box1(Box1(f)), 2)


@given(formulas(max_index=1))
def test_value_profile_agrees_with_eval(f):
    profile = value_profile(f, 2)
    assert profile == tuple(eval_formula(f, w) for w in interpretations(2))


def test_value_profile_shared_memo():
    memo = {}
    f = And(Var(0), Not(Var(0)))
    first = value_profile(f, 1, memo)
    assert value_profile(f, 1, memo) == first
    # subtrees land in the memo too and each entry pins its node
    assert id(f) in memo
    assert all(entry[0] is not None for entry in memo.values())


def test_value_profile_out_of_range_variable():
    with pytest.raises(ValueError, match="out of range"):
        value_profile(Var(1), 1)


def test_truth_table_lines_single_variable():
    assert truth_table_lines(Var(0), 1) == ["0 : 0", "u : u", "1 : 1"]


def test_truth_table_lines_box1():
    assert truth_table_lines(Box1(Var(0)), 1) == ["0 : u", "u : 1", "1 : 1"]


def test_truth_table_lines_n0():
    assert truth_table_lines(Bot(), 0) == [": 0"]


def test_truth_table_lines_two_variables():
    lines = truth_table_lines(And(Var(0), Var(1)), 2)
    assert len(lines) == 9
    assert lines[0] == "0 0 : 0"
    assert lines[-1] == "1 1 : 1"
