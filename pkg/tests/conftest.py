import pytest
from hypothesis import strategies as st

from permpairs import PermutationPair, parse_pair
from permpairs.perm import GroundSet, Permutation


def pair_of(white, black, degree=None):
    return parse_pair(white, black, degree)


@st.composite
def pairs(draw, min_degree=1, max_degree=7):
    n = draw(st.integers(min_degree, max_degree))
    base = list(range(1, n + 1))
    w = draw(st.permutations(base))
    b = draw(st.permutations(base))
    return PermutationPair(Permutation.from_images(w), Permutation.from_images(b))


@st.composite
def pairs_with_ab(draw, max_degree=7):
    pair = draw(pairs(min_degree=2, max_degree=max_degree))
    n = len(pair)
    a = draw(st.integers(1, n))
    b = draw(st.integers(1, n).filter(lambda x: x != a))
    return pair, a, b


@pytest.fixture
def example_pair():
    return pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)")


@pytest.fixture
def s8_pair():
    return pair_of("(1,2,3)(4,5,6)(7,8)", "(1,7,5)(2,6,4)(3,8)")
