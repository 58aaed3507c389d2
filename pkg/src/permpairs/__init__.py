"""Permutation pairs, the reroute surgery, and exhaustive checks of how
conjugating by a transposition changes genus and transitivity."""
from .errors import DegenerateError, DomainError, ParseError, PermPairError, StructuralError
from .notation import parse_label, parse_pair, parse_permutation
from .pair import (
    ExceptionalClass,
    GenusEffect,
    PairReport,
    PermutationPair,
    TypeClass,
    analyze,
    boundary_walk,
    classify_exceptional,
    classify_type,
    delete_edge,
    euler_characteristic,
    faces_of_edge,
    genus_effect,
    synthetic_genus,
)
from .perm import (
    Color,
    Derived,
    GroundSet,
    Permutation,
    arc,
    compose,
    conjugate,
    cycle_decomposition,
    cycle_to_mapping,
    format_permutation,
    minimal_sequence,
    num_cycles,
    same_orbit,
)
from .reroute import (
    RerouteResult,
    conjugate_by_transposition,
    double_reroute,
    double_reroute_direct,
    predict_branch_type,
    reroute,
)

__version__ = "0.1.0"
