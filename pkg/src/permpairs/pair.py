"""Permutation pairs and everything computed from a single pair.

A pair ``(white, black)`` is the monodromy of a bicolored graph: ``white``
rotates the edges around white vertices and ``black`` around black ones.
Faces correspond to orbits of the product ``white . black``.
"""
from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass

from .errors import DegenerateError, DomainError, StructuralError
from .perm import Permutation, compose, format_permutation, label_key, minimal_sequence


class PermutationPair:
    """An ordered pair of permutations on a shared ground set.

    The product ``compose(white, black)`` is computed once and cached.
    """

    __slots__ = ("white", "black", "_product")

    def __init__(self, white: Permutation, black: Permutation):
        if white.ground != black.ground:
            raise StructuralError("white and black permutations act on different ground sets")
        self.white = white
        self.black = black
        self._product = None

    @property
    def ground(self):
        return self.white.ground

    @property
    def product(self) -> Permutation:
        if self._product is None:
            self._product = compose(self.white, self.black)
        return self._product

    def __len__(self):
        return len(self.white.ground)

    def __eq__(self, other):
        return isinstance(other, PermutationPair) and self.white == other.white and self.black == other.black

    def __hash__(self):
        return hash((self.white, self.black))

    def __repr__(self):
        return f"PermutationPair(white={self.white}, black={self.black})"

    def to_dict(self) -> dict:
        return {"white": format_permutation(self.white), "black": format_permutation(self.black)}


class TypeClass(str, enum.Enum):
    U = "U"
    N = "N"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"

    @property
    def is_p(self) -> bool:
        return self.value.startswith("P")


class ExceptionalClass(str, enum.Enum):
    NONE = "None"
    TAME_1A = "Tame1A"
    TAME_1B = "Tame1B"
    TAME_2 = "Tame2"
    WILD = "Wild"

    @property
    def is_tame(self) -> bool:
        return self in (ExceptionalClass.TAME_1A, ExceptionalClass.TAME_1B, ExceptionalClass.TAME_2)


class GenusEffect(str, enum.Enum):
    RAISING = "Raising"
    LOWERING = "Lowering"
    PRESERVING = "Preserving"

    @property
    def delta(self) -> int:
        return {"Raising": 1, "Lowering": -1, "Preserving": 0}[self.value]


def euler_characteristic(pair: PermutationPair) -> int:
    return pair.white.num_cycles + pair.black.num_cycles - len(pair) + pair.product.num_cycles


def synthetic_genus(pair: PermutationPair) -> int:
    return 1 - euler_characteristic(pair) // 2


def _check_ab(pair, a, b):
    if a == b:
        raise DomainError(f"a and b must be distinct (both are {a})")
    for x in (a, b):
        if x not in pair.ground:
            raise DomainError(f"{x} is not in the ground set")


def classify_type(pair: PermutationPair, a, b) -> TypeClass:
    """Where ``a``, ``white(a)`` and ``b`` sit among the faces."""
    _check_ab(pair, a, b)
    p = pair.product
    wa = pair.white(a)
    oa, owa, ob = p.orbit_id(a), p.orbit_id(wa), p.orbit_id(b)
    if oa == owa == ob:
        # wa == a can never be on an arc leaving a; wa == b always ends it
        return TypeClass.P1 if p.in_arc(a, b, wa) else TypeClass.N
    if oa == owa:
        return TypeClass.P2
    if oa == ob:
        return TypeClass.P3
    if owa == ob:
        return TypeClass.P4
    return TypeClass.U


def _is_tame_1b(pair, a, b, type_ab=None) -> bool:
    if type_ab is None:
        type_ab = classify_type(pair, a, b)
    if type_ab is not TypeClass.P1:
        return False
    p = pair.product
    wb = pair.white(b)
    return p.in_arc(pair.white(a), b, wb)


def classify_exceptional(pair: PermutationPair, a, b) -> ExceptionalClass:
    t = classify_type(pair, a, b)
    if t is TypeClass.P1:
        return ExceptionalClass.TAME_1B if _is_tame_1b(pair, a, b, t) else ExceptionalClass.NONE
    if t is TypeClass.N:
        return ExceptionalClass.TAME_1A if _is_tame_1b(pair, b, a) else ExceptionalClass.NONE
    if t is TypeClass.P3:
        p = pair.product
        if p.orbit_id(pair.white(b)) == p.orbit_id(pair.white(a)):
            return ExceptionalClass.TAME_2
        return ExceptionalClass.NONE
    if t is TypeClass.P2 and classify_type(pair, b, a) is TypeClass.P2:
        return ExceptionalClass.WILD
    return ExceptionalClass.NONE


def genus_effect(pair: PermutationPair, a, b) -> GenusEffect:
    """Predicted change of synthetic genus when white is conjugated by ``(a b)``."""
    _check_ab(pair, a, b)
    p = pair.product
    wa, wb = pair.white(a), pair.white(b)
    slots = (a, wa, b, wb)
    orbits = [p.orbit_id(x) for x in slots]

    def alone(i):
        return all(orbits[j] != orbits[i] for j in range(4) if j != i)

    if (alone(0) or alone(2)) and (alone(1) or alone(3)):
        return GenusEffect.RAISING
    if orbits[0] == orbits[2] and orbits[1] == orbits[3]:
        ab_clear = not p.in_arc(a, b, wa) and not p.in_arc(a, b, wb)
        ba_clear = not p.in_arc(b, a, wa) and not p.in_arc(b, a, wb)
        if ab_clear or ba_clear:
            return GenusEffect.LOWERING
    return GenusEffect.PRESERVING


def faces_of_edge(pair: PermutationPair, e) -> frozenset:
    """The product cycles (faces) bordered by ``e``; one or two of them."""
    p = pair.product
    return frozenset({p.orbit(e), p.orbit(pair.white(e))})


def _splice(perm: Permutation, e, ground) -> Permutation:
    m = perm._map
    out = {}
    for x, y in m.items():
        if x == e:
            continue
        out[x] = m[e] if y == e else y
    return Permutation._trusted(ground, out)


def delete_edge(pair: PermutationPair, e) -> PermutationPair:
    """Remove ``e`` from both permutations by joining its predecessor to its successor."""
    if e not in pair.ground:
        raise DomainError(f"{e} is not in the ground set")
    if len(pair) < 2:
        raise DegenerateError("deleting the only edge would leave an empty ground set")
    ground = pair.ground.without(e)
    return PermutationPair(_splice(pair.white, e, ground), _splice(pair.black, e, ground))


def deletion_face_cycles(pair: PermutationPair, e) -> list:
    """The new product cycles created by deleting a generic edge ``e``,
    constructed from the old faces rather than by recomposing."""
    w, b, p = pair.white, pair.black, pair.product
    we = w(e)
    if we == e or b(e) == e:
        raise DomainError("the explicit construction needs white(e) != e and black(e) != e")
    if p.orbit_id(e) == p.orbit_id(we):
        xs = minimal_sequence(p, e, we)
        ys = minimal_sequence(p, we, e)
        return [tuple(xs[1:-1]), tuple(ys[:-1])]
    # full loops e -> e and w(e) -> w(e), each of length (orbit size + 1)
    xs = p.orbit(e)
    k = xs.index(e)
    xs = xs[k:] + xs[:k]
    ys = p.orbit(we)
    k = ys.index(we)
    ys = ys[k:] + ys[:k]
    return [tuple(xs[1:]) + tuple(ys)]


def boundary_walk(pair: PermutationPair, e) -> tuple:
    """Edges met going around the face of ``e``: e, black(e), product(e), ..."""
    b, p = pair.black, pair.product
    out = []
    x = e
    while True:
        out.append(x)
        out.append(b(x))
        x = p(x)
        if x == e:
            return tuple(out)


@dataclass(frozen=True)
class PairReport:
    chi: int
    genus: int
    nu_white: int
    nu_black: int
    nu_product: int
    transitive: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def to_text(self) -> str:
        d = self.to_dict()
        return "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in d.items())


def analyze(pair: PermutationPair) -> PairReport:
    from .oracle import is_transitive_oracle

    chi = euler_characteristic(pair)
    return PairReport(
        chi=chi,
        genus=1 - chi // 2,
        nu_white=pair.white.num_cycles,
        nu_black=pair.black.num_cycles,
        nu_product=pair.product.num_cycles,
        transitive=is_transitive_oracle(pair),
    )


def restrict_pair(pair: PermutationPair, subset) -> PermutationPair:
    """The pair restricted to a set of edges closed under both permutations."""
    return PermutationPair(pair.white.restrict(subset), pair.black.restrict(subset))


def sorted_labels(xs):
    return sorted(xs, key=label_key)
