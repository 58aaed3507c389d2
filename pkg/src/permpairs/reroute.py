"""The reroute surgery, its iteration, and conjugation by a transposition.

``reroute(pair, a, b)`` detaches edge ``a`` from its white vertex and
reattaches it just before ``b``:

* white: ``a`` is renamed ``aW`` and a new symbol ``aB`` is inserted
  immediately before ``b`` in the cycle of ``b``;
* black: ``a`` is renamed ``aB`` and ``aW`` becomes a new fixed point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .pair import PermutationPair, TypeClass, _check_ab, classify_type
from .perm import GroundSet, Permutation, black_of, conjugate, white_of


@dataclass(frozen=True)
class RerouteResult:
    pair: PermutationPair
    a_white: object
    a_black: object
    source: tuple


def _replace_ground(ground: GroundSet, old, *new) -> GroundSet:
    return GroundSet(tuple(x for x in ground if x != old) + new)


def reroute(pair: PermutationPair, a, b) -> RerouteResult:
    _check_ab(pair, a, b)
    aw, ab = white_of(a), black_of(a)
    ground = _replace_ground(pair.ground, a, aw, ab)

    white = {}
    for x, y in pair.white._map.items():
        if y == b:
            y = ab
        elif y == a:
            y = aw
        white[aw if x == a else x] = y
    white[ab] = b

    black = {}
    for x, y in pair.black._map.items():
        black[ab if x == a else x] = ab if y == a else y
    black[aw] = aw

    new = PermutationPair(Permutation._trusted(ground, white), Permutation._trusted(ground, black))
    return RerouteResult(new, aw, ab, (a, b))


def double_reroute(pair: PermutationPair, a, b) -> PermutationPair:
    """Reroute relative to ``(a, b)``, then the result relative to ``(b, aW)``."""
    first = reroute(pair, a, b)
    return reroute(first.pair, b, first.a_white).pair


def double_reroute_direct(pair: PermutationPair, a, b) -> PermutationPair:
    """The same pair as :func:`double_reroute`, built in one pass."""
    _check_ab(pair, a, b)
    aw, ab, bw, bb = white_of(a), black_of(a), white_of(b), black_of(b)
    ground = GroundSet(tuple(x for x in pair.ground if x not in (a, b)) + (aw, ab, bw, bb))

    def ren_white(x):
        return aw if x == a else bw if x == b else x

    white = {}
    for x, y in pair.white._map.items():
        white[ren_white(x)] = ab if y == b else bb if y == a else y
    white[ab] = bw
    white[bb] = aw

    black = {}
    for x, y in pair.black._map.items():
        black[ab if x == a else bb if x == b else x] = ab if y == a else bb if y == b else y
    black[aw] = aw
    black[bw] = bw
    return PermutationPair(Permutation._trusted(ground, white), Permutation._trusted(ground, black))


def conjugate_by_transposition(pair: PermutationPair, a, b) -> PermutationPair:
    """``(t . white . t, black)`` for ``t = (a b)``."""
    _check_ab(pair, a, b)
    t = Permutation.transposition(pair.ground, a, b)
    return PermutationPair(conjugate(pair.white, t), pair.black)


# Branch prediction.  Each row answers: if the pair is of the given type
# relative to (a, b), what type is the rerouted pair relative to (b, aW)?
# The two degenerate rows (white(b) == b, white(b) == a) come first in every
# table; the regular rows assume white(b) is neither.


@dataclass(frozen=True)
class BranchRow:
    row_id: str
    source: TypeClass
    predicted: TypeClass
    citation: str
    test: Callable


class _Ctx:
    __slots__ = ("p", "a", "wa", "b", "wb")

    def __init__(self, pair, a, b):
        self.p = pair.product
        self.a, self.b = a, b
        self.wa, self.wb = pair.white(a), pair.white(b)

    def same(self, x, y):
        return self.p.orbit_id(x) == self.p.orbit_id(y)

    def on_arc(self, x, y, z):
        return self.p.in_arc(x, y, z)

    def elsewhere(self):
        o = self.p.orbit_id(self.wb)
        return all(self.p.orbit_id(x) != o for x in (self.a, self.wa, self.b))


def _deg_rows(src, if_fixed, if_to_a):
    return [
        BranchRow(f"{src.value}.b-fixed", src, if_fixed,
                  f"{src.value} table: white(b) = b, so the new white(b) is aB; gives {if_fixed.value}",
                  lambda c: c.wb == c.b),
        BranchRow(f"{src.value}.b-to-a", src, if_to_a,
                  f"{src.value} table: white(b) = a, so the new white(b) is aW; gives {if_to_a.value}",
                  lambda c: c.wb == c.a),
    ]


T = TypeClass

BRANCH_ROWS: list = (
    _deg_rows(T.U, T.P1, T.P1)
    + [
        BranchRow("U.1", T.U, T.P1, "U table, case 1: white(b) in the face of a; gives P1",
                  lambda c: c.same(c.wb, c.a)),
        BranchRow("U.2", T.U, T.N, "U table, case 2: white(b) in the face of white(a); gives N",
                  lambda c: c.same(c.wb, c.wa)),
        BranchRow("U.3", T.U, T.P1, "U table, case 3: white(b) in the face of b; gives P1",
                  lambda c: c.same(c.wb, c.b)),
        BranchRow("U.4", T.U, T.P3, "U table, case 4: white(b) in another face; gives P3",
                  lambda c: c.elsewhere()),
    ]
    + _deg_rows(T.N, T.U, T.P4)
    + [
        BranchRow("N.1", T.N, T.U, "N table, case 1: white(b) on the arc a -> b; gives U",
                  lambda c: c.on_arc(c.a, c.b, c.wb)),
        BranchRow("N.2", T.N, T.P2, "N table, case 2 (tame 1A): white(b) on the arc b -> white(a); gives P2",
                  lambda c: c.on_arc(c.b, c.wa, c.wb)),
        BranchRow("N.3", T.N, T.P4, "N table, case 3: white(b) on the arc white(a) -> a; gives P4",
                  lambda c: c.on_arc(c.wa, c.a, c.wb)),
        BranchRow("N.4", T.N, T.U, "N table, case 4: white(b) in another face; gives U",
                  lambda c: c.elsewhere()),
    ]
    + _deg_rows(T.P1, T.N, T.P1)
    + [
        BranchRow("P1.1", T.P1, T.N, "P1 table, case 1: white(b) on the arc a -> white(a); gives N",
                  lambda c: c.on_arc(c.a, c.wa, c.wb)),
        BranchRow("P1.2", T.P1, T.N, "P1 table, case 2 (tame 1B): white(b) on the arc white(a) -> b; gives N",
                  lambda c: c.on_arc(c.wa, c.b, c.wb)),
        BranchRow("P1.3", T.P1, T.P1, "P1 table, case 3: white(b) on the arc b -> a; gives P1",
                  lambda c: c.on_arc(c.b, c.a, c.wb)),
        BranchRow("P1.4", T.P1, T.P3, "P1 table, case 4: white(b) in another face; gives P3",
                  lambda c: c.elsewhere()),
    ]
    + _deg_rows(T.P2, T.P2, T.P4)
    + [
        BranchRow("P2.1", T.P2, T.P4,
                  "P2 table, case 1: white(b) in the face of a, on the arc white(a) -> a; gives P4",
                  lambda c: c.same(c.wb, c.a) and c.on_arc(c.wa, c.a, c.wb)),
        BranchRow("P2.2", T.P2, T.P2,
                  "P2 table, case 2: white(b) in the face of a, off the arc white(a) -> a; gives P2",
                  lambda c: c.same(c.wb, c.a)),
        BranchRow("P2.3", T.P2, T.P2, "P2 table, case 3 (wild): white(b) in the face of b; gives P2",
                  lambda c: c.same(c.wb, c.b)),
        BranchRow("P2.4", T.P2, T.U, "P2 table, case 4: white(b) in another face; gives U",
                  lambda c: c.elsewhere()),
    ]
    + _deg_rows(T.P3, T.P3, T.P1)
    + [
        BranchRow("P3.1", T.P3, T.P3, "P3 table, case 1: white(b) on the arc a -> b; gives P3",
                  lambda c: c.on_arc(c.a, c.b, c.wb)),
        BranchRow("P3.2", T.P3, T.P1, "P3 table, case 2: white(b) on the arc b -> a; gives P1",
                  lambda c: c.on_arc(c.b, c.a, c.wb)),
        BranchRow("P3.3", T.P3, T.N, "P3 table, case 3 (tame 2): white(b) in the face of white(a); gives N",
                  lambda c: c.same(c.wb, c.wa)),
        BranchRow("P3.4", T.P3, T.P3, "P3 table, case 4: white(b) in another face; gives P3",
                  lambda c: c.elsewhere()),
    ]
    + _deg_rows(T.P4, T.P4, T.P4)
    + [
        BranchRow("P4.1", T.P4, T.P4, "P4 table, case 1: white(b) in the face of a; gives P4",
                  lambda c: c.same(c.wb, c.a)),
        BranchRow("P4.2", T.P4, T.P4,
                  "P4 table, case 2: white(b) in the face of b, on the arc white(a) -> b; gives P4",
                  lambda c: c.same(c.wb, c.b) and c.on_arc(c.wa, c.b, c.wb)),
        BranchRow("P4.3", T.P4, T.P2,
                  "P4 table, case 3: white(b) in the face of b, off the arc white(a) -> b; gives P2",
                  lambda c: c.same(c.wb, c.b)),
        BranchRow("P4.4", T.P4, T.U, "P4 table, case 4: white(b) in another face; gives U",
                  lambda c: c.elsewhere()),
    ]
)

_ROWS_BY_TYPE = {t: [r for r in BRANCH_ROWS if r.source is t] for t in TypeClass}


def branch_row(pair: PermutationPair, a, b, type_ab: TypeClass | None = None) -> BranchRow:
    """The first table row that applies to ``(pair, a, b)``."""
    if type_ab is None:
        type_ab = classify_type(pair, a, b)
    ctx = _Ctx(pair, a, b)
    for row in _ROWS_BY_TYPE[type_ab]:
        if row.test(ctx):
            return row
    raise DomainError(f"no {type_ab.value} table row applies to ({a}, {b})")


def predict_branch_type(pair: PermutationPair, a, b) -> TypeClass:
    """Type of ``reroute(pair, a, b)`` relative to ``(b, aW)``, without rerouting."""
    return branch_row(pair, a, b).predicted
