from hypothesis import given

from conftest import pair_of, pairs_with_ab
from permpairs import right_action
from permpairs.pair import ExceptionalClass, classify_exceptional, classify_type, genus_effect, synthetic_genus
from permpairs.reroute import reroute


def test_right_action_product():
    white, black = right_action.to_dicts(pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)"))
    assert right_action.cycle(right_action.rmul(black, white), 1) == [1, 5, 4, 3, 2]


def test_arc_and_position():
    g = {1: 3, 3: 2, 2: 4, 4: 1}
    assert right_action.compute_arc(g, 1, 4) == [3, 2, 4]
    assert right_action.compute_arc(g, 1, 1) == []
    assert right_action.position([5, 6, 7], 7) == 3
    assert right_action.position([5, 6, 7], 1) == 0


def test_genus():
    white, black = right_action.to_dicts(pair_of("(1,2,3,4,5)", "(1,5,3,2,4)"))
    assert right_action.compute_genus(white, black) == 1


@given(pairs_with_ab(max_degree=6))
def test_ported_predicates_agree(case):
    pair, a, b = case
    white, black = right_action.to_dicts(pair)
    assert right_action.type_name(white, black, a, b) == classify_type(pair, a, b).value
    e = classify_exceptional(pair, a, b)
    assert right_action.is_tame_exceptional_1a(white, black, a, b) == (e is ExceptionalClass.TAME_1A)
    assert right_action.is_tame_exceptional_1b(white, black, a, b) == (e is ExceptionalClass.TAME_1B)
    assert right_action.is_tame_exceptional_2(white, black, a, b) == (e is ExceptionalClass.TAME_2)
    assert right_action.is_wild_exceptional(white, black, a, b) == (e is ExceptionalClass.WILD)
    effect = genus_effect(pair, a, b).value
    assert right_action.is_genus_raising(white, black, a, b) == (effect == "Raising")
    assert right_action.is_genus_lowering(white, black, a, b) == (effect == "Lowering")
    assert right_action.compute_genus(white, black) == synthetic_genus(pair)


@given(pairs_with_ab(max_degree=6))
def test_ported_reroute_agrees(case):
    pair, a, b = case
    assert right_action.reroute_as_pair(pair, a, b) == reroute(pair, a, b).pair
