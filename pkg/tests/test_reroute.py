import pytest
from hypothesis import given

from conftest import pair_of, pairs_with_ab
from permpairs import (
    DomainError,
    TypeClass,
    analyze,
    classify_type,
    conjugate_by_transposition,
    double_reroute,
    double_reroute_direct,
    predict_branch_type,
    reroute,
    synthetic_genus,
)
from permpairs.graph import is_transitive_via_graph
from permpairs.perm import black_of, format_permutation, white_of
from permpairs.reroute import BRANCH_ROWS, branch_row

GENUS_STEP = {TypeClass.U: 1, TypeClass.N: -1}


def test_reroute_example():
    result = reroute(pair_of("(1,2)(3)", "(1)(2,3)"), 1, 3)
    assert format_permutation(result.pair.white) == "(1W,2)(1B,3)"
    assert format_permutation(result.pair.black) == "(1W)(1B)(2,3)"
    assert format_permutation(result.pair.product) == "(1W,2,1B,3)"
    assert (result.a_white, result.a_black) == (white_of(1), black_of(1))
    assert analyze(result.pair).chi == 2


def test_reroute_of_fixed_a_fixes_a_white():
    result = reroute(pair_of("(1)(2,3)", "(1,2,3)"), 1, 2)
    assert result.pair.white(white_of(1)) == white_of(1)


def test_reroute_rejects_equal_edges():
    with pytest.raises(DomainError):
        reroute(pair_of("(1,2)", "(1,2)"), 1, 1)


def test_double_reroute_matches_direct_form():
    pair = pair_of("(1,2)(3)", "(1)(2,3)")
    twice = double_reroute(pair, 1, 3)
    assert twice == double_reroute_direct(pair, 1, 3)
    assert format_permutation(twice.white) == "(1W,2,3B)(1B,3W)"
    assert not is_transitive_via_graph(twice)
    assert not is_transitive_via_graph(conjugate_by_transposition(pair, 1, 3))


def test_conjugate_examples():
    pair = pair_of("(1,2,3)(4)", "(1,2,4,3)")
    conj = conjugate_by_transposition(pair, 1, 4)
    assert analyze(conj).transitive
    assert (synthetic_genus(pair), synthetic_genus(conj)) == (1, 0)
    s8 = pair_of("(1,2,3)(4,5,6)(7,8)", "(1,7,5)(2,6,4)(3,8)")
    assert not analyze(conjugate_by_transposition(s8, 3, 7)).transitive
    with pytest.raises(DomainError):
        conjugate_by_transposition(pair, 2, 2)


@pytest.mark.parametrize(
    "white, black, a, b, row, predicted",
    [
        ("(1,2)(3)", "(1)(2,3)", 1, 3, "P1.b-fixed", TypeClass.N),
        ("(1,2,3)", "(1,3,2)", 1, 3, "U.b-to-a", TypeClass.P1),
        ("(1,2)(3,4)", "(1)(2)(3)(4)", 1, 3, "P2.3", TypeClass.P2),
    ],
)
def test_branch_examples(white, black, a, b, row, predicted):
    pair = pair_of(white, black)
    assert branch_row(pair, a, b).row_id == row
    assert predict_branch_type(pair, a, b) is predicted
    result = reroute(pair, a, b)
    assert classify_type(result.pair, b, result.a_white) is predicted


def test_branch_rows_are_unique_and_complete():
    ids = [r.row_id for r in BRANCH_ROWS]
    assert len(ids) == len(set(ids)) == 36
    for t in TypeClass:
        assert sum(r.source is t for r in BRANCH_ROWS) == 6


@given(pairs_with_ab())
def test_reroute_changes_genus_by_type(case):
    pair, a, b = case
    t = classify_type(pair, a, b)
    result = reroute(pair, a, b)
    assert synthetic_genus(result.pair) - synthetic_genus(pair) == GENUS_STEP.get(t, 0)
    assert len(result.pair) == len(pair) + 1


@given(pairs_with_ab())
def test_branch_prediction(case):
    pair, a, b = case
    result = reroute(pair, a, b)
    assert predict_branch_type(pair, a, b) is classify_type(result.pair, b, result.a_white)


@given(pairs_with_ab())
def test_double_reroute_and_conjugation_agree(case):
    pair, a, b = case
    twice = double_reroute(pair, a, b)
    assert twice == double_reroute_direct(pair, a, b)
    conj = conjugate_by_transposition(pair, a, b)
    assert is_transitive_via_graph(twice) == is_transitive_via_graph(conj)
    assert synthetic_genus(twice) == synthetic_genus(conj)
