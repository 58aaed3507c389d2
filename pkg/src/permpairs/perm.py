"""Permutations of explicit, labeled finite ground sets.

Composition is functional: ``compose(p, q)(e) == p(q(e))``.  The right-action
cross-check in :mod:`permpairs.right_action` composes the other way round, so
its ``black*white`` is ``compose(white, black)`` here.

Ground-set members are *labels*: a base label is a positive ``int``; a derived
label is a :class:`Derived` instance created by the reroute surgery, e.g.
``Derived(3, Color.BLACK)`` which prints as ``3B``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import DomainError, StructuralError


class Color(str, enum.Enum):
    WHITE = "W"
    BLACK = "B"


@dataclass(frozen=True)
class Derived:
    """A formal symbol ``parent_W`` or ``parent_B`` introduced by a reroute."""

    parent: "Label"
    tag: Color

    def __str__(self):
        return f"{self.parent}{self.tag.value}"

    def __repr__(self):
        return f"Derived({self.parent!r}, {self.tag.name})"


Label = Union[int, Derived]


def label_key(x: Label) -> tuple:
    """Sort key: base labels by index; a derived label right after its parent,
    white before black."""
    if isinstance(x, Derived):
        return label_key(x.parent) + (1 if x.tag is Color.WHITE else 2,)
    return (x,)


def white_of(x: Label) -> Derived:
    return Derived(x, Color.WHITE)


def black_of(x: Label) -> Derived:
    return Derived(x, Color.BLACK)


def _check_label(x):
    if isinstance(x, Derived):
        _check_label(x.parent)
        return
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise StructuralError(f"invalid label {x!r}: base labels are positive integers")


class GroundSet:
    """Immutable ordered set of labels (kept in canonical label order)."""

    __slots__ = ("_elements", "_members")

    def __init__(self, elements: Iterable[Label]):
        elements = list(elements)
        if not elements:
            raise StructuralError("ground set must be nonempty")
        members = frozenset(elements)
        if len(members) != len(elements):
            raise StructuralError("ground set has duplicate elements")
        for x in elements:
            _check_label(x)
        self._elements = tuple(sorted(members, key=label_key))
        self._members = members

    @classmethod
    def range(cls, n: int) -> "GroundSet":
        return cls(range(1, n + 1))

    @property
    def elements(self):
        return self._elements

    def __iter__(self):
        return iter(self._elements)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, x):
        return x in self._members

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return "GroundSet({" + ", ".join(map(str, self._elements)) + "})"

    def without(self, *xs) -> "GroundSet":
        return GroundSet(x for x in self._elements if x not in xs)

    def with_(self, *xs) -> "GroundSet":
        return GroundSet(self._elements + xs)


Cycle = tuple  # nonempty tuple of distinct labels, rotated to start at its minimum


def canonical_cycle(c) -> Cycle:
    c = tuple(c)
    i = min(range(len(c)), key=lambda k: label_key(c[k]))
    return c[i:] + c[:i]


class Permutation:
    """A bijection of a :class:`GroundSet` onto itself.

    Equality is equality of mappings (and therefore of ground sets).  Cycles
    and orbit lookups are computed lazily and cached; the object is otherwise
    immutable.
    """

    __slots__ = ("_ground", "_map", "_cycles", "_orbit_index", "_position", "_hash")

    def __init__(self, mapping: Mapping[Label, Label], ground: GroundSet | Iterable[Label] | None = None):
        if ground is None:
            ground = GroundSet(mapping.keys())
        elif not isinstance(ground, GroundSet):
            ground = GroundSet(ground)
        m = dict(mapping)
        if m.keys() != ground._members:
            raise StructuralError("mapping domain differs from the ground set")
        if set(m.values()) != ground._members:
            raise StructuralError("mapping is not a bijection of the ground set")
        self._init(ground, m)

    def _init(self, ground, m):
        self._ground = ground
        self._map = m
        self._cycles = None
        self._orbit_index = None
        self._position = None
        self._hash = None

    @classmethod
    def _trusted(cls, ground: GroundSet, m: dict) -> "Permutation":
        p = cls.__new__(cls)
        p._init(ground, m)
        return p

    @classmethod
    def identity(cls, ground) -> "Permutation":
        if not isinstance(ground, GroundSet):
            ground = GroundSet.range(ground) if isinstance(ground, int) else GroundSet(ground)
        return cls._trusted(ground, {x: x for x in ground})

    @classmethod
    def from_cycles(cls, cycles, ground=None) -> "Permutation":
        """Build from disjoint cycles.  ``ground`` may be a GroundSet, an
        iterable of labels, an ``int`` degree, or None (the mentioned labels)."""
        cycles = [tuple(c) for c in cycles]
        if ground is None:
            ground = GroundSet(x for c in cycles for x in c)
        elif isinstance(ground, int):
            ground = GroundSet.range(ground)
        elif not isinstance(ground, GroundSet):
            ground = GroundSet(ground)
        m = {x: x for x in ground}
        seen = set()
        for c in cycles:
            for x in c:
                if x not in ground:
                    raise DomainError(f"cycle element {x} is outside the ground set")
                if x in seen:
                    raise StructuralError(f"element {x} appears in more than one cycle position")
                seen.add(x)
            for i, x in enumerate(c):
                m[x] = c[(i + 1) % len(c)]
        return cls._trusted(ground, m)

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Permutation":
        """One-line notation on ``{1..n}``: ``images[i-1]`` is the image of ``i``."""
        images = tuple(images)
        return cls({i + 1: v for i, v in enumerate(images)}, GroundSet.range(len(images)))

    @classmethod
    def transposition(cls, ground, a, b) -> "Permutation":
        if a == b:
            raise DomainError("a transposition needs two distinct elements")
        return cls.from_cycles([(a, b)], ground)

    @property
    def ground(self) -> GroundSet:
        return self._ground

    @property
    def mapping(self) -> Mapping[Label, Label]:
        return dict(self._map)

    def __call__(self, x):
        try:
            return self._map[x]
        except KeyError:
            raise DomainError(f"{x} is not in the ground set") from None

    def __len__(self):
        return len(self._ground)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._map == other._map

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __repr__(self):
        return f"Permutation({format_permutation(self)})"

    def __str__(self):
        return format_permutation(self)

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return Permutation._trusted(self._ground, {v: k for k, v in self._map.items()})

    def is_identity(self) -> bool:
        return all(k == v for k, v in self._map.items())

    def cycles(self) -> list:
        if self._cycles is None:
            seen = set()
            out = []
            for x in self._ground:  # canonical order, so each cycle starts at its minimum
                if x in seen:
                    continue
                c = [x]
                seen.add(x)
                y = self._map[x]
                while y != x:
                    c.append(y)
                    seen.add(y)
                    y = self._map[y]
                out.append(tuple(c))
            self._cycles = out
        return list(self._cycles)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles())

    def _index(self):
        idx, pos = {}, {}
        for i, c in enumerate(self.cycles()):
            for k, y in enumerate(c):
                idx[y] = i
                pos[y] = k
        self._orbit_index = idx
        self._position = pos

    def orbit_id(self, x) -> int:
        """Index (in :meth:`cycles`) of the cycle containing ``x``."""
        if self._orbit_index is None:
            self._index()
        try:
            return self._orbit_index[x]
        except KeyError:
            raise DomainError(f"{x} is not in the ground set") from None

    def orbit(self, x) -> Cycle:
        return self.cycles()[self.orbit_id(x)]

    def steps(self, x, y) -> int:
        """Number of forward steps from ``x`` to ``y`` (0 when equal)."""
        i = self.orbit_id(x)
        if self.orbit_id(y) != i:
            raise DomainError(f"{x} and {y} lie in different orbits")
        pos = self._position
        return (pos[y] - pos[x]) % len(self._cycles[i])

    def in_arc(self, x, y, z) -> bool:
        """Whether ``z`` lies on the arc from ``x`` to ``y``, without building it."""
        d = self.steps(x, y)
        if self.orbit_id(z) != self._orbit_index[x]:
            return False
        return 1 <= self.steps(x, z) <= d

    def restrict(self, subset) -> "Permutation":
        """Restriction to a union of orbits."""
        subset = GroundSet(subset)
        m = {x: self._map[x] for x in subset}
        if set(m.values()) != subset._members:
            raise StructuralError("subset is not stable under the permutation")
        return Permutation._trusted(subset, m)

    def relabel(self, f) -> "Permutation":
        """Transport along the injective relabeling ``f``."""
        return Permutation({f(k): f(v) for k, v in self._map.items()})


def _same_ground(p: Permutation, q: Permutation):
    if p._ground != q._ground:
        raise StructuralError(f"ground sets differ: {p._ground!r} vs {q._ground!r}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``compose(p, q)(e) == p(q(e))``."""
    _same_ground(p, q)
    pm = p._map
    return Permutation._trusted(p._ground, {x: pm[y] for x, y in q._map.items()})


def conjugate(p: Permutation, s: Permutation) -> Permutation:
    """``s . p . s^-1``, i.e. the permutation sending ``s(x)`` to ``s(p(x))``."""
    _same_ground(p, s)
    sm, pm = s._map, p._map
    return Permutation._trusted(p._ground, {sm[x]: sm[pm[x]] for x in pm})


def cycle_decomposition(p: Permutation) -> list:
    return p.cycles()


def num_cycles(p: Permutation) -> int:
    return p.num_cycles


def cycle_to_mapping(c, ground) -> Permutation:
    """The permutation of ``ground`` that acts as the single cycle ``c``."""
    return Permutation.from_cycles([tuple(c)], ground)


def same_orbit(p: Permutation, x, y) -> bool:
    return p.orbit_id(x) == p.orbit_id(y)


def minimal_sequence(p: Permutation, x, y) -> tuple:
    """Shortest ``x = x0, x1, ..., xn = y`` with ``p(xi) = x(i+1)``; ``(x,)`` when x == y."""
    if not same_orbit(p, x, y):
        raise DomainError(f"{x} and {y} lie in different orbits")
    seq = [x]
    m = p._map
    while seq[-1] != y:
        seq.append(m[seq[-1]])
    return tuple(seq)


def arc(p: Permutation, x, y) -> tuple:
    """The minimal sequence from ``x`` to ``y`` without its head; empty when x == y."""
    return minimal_sequence(p, x, y)[1:]


def symmetric_group(n: int):
    """All of S_n on ``{1..n}`` in lexicographic one-line order."""
    from itertools import permutations

    ground = GroundSet.range(n)
    for images in permutations(range(1, n + 1)):
        yield Permutation._trusted(ground, {i + 1: v for i, v in enumerate(images)})


def format_cycle(c) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"


def format_permutation(p: Permutation) -> str:
    """Canonical cycle notation with explicit fixed points, e.g. ``(1,2,3)(4)``."""
    return "".join(format_cycle(c) for c in p.cycles())
