"""Cycle-notation parsing.

Grammar: one or more groups ``( e1, e2, ..., ek )``.  Whitespace is
insignificant and commas are optional.  An element is a decimal integer,
optionally followed by color suffixes (``3B``, ``1WB``) naming derived labels.
Unmentioned base elements ``1..n`` are fixed points, where ``n`` is the
explicit degree or else the largest base element mentioned.
"""
from __future__ import annotations

import re

from .errors import ParseError
from .perm import Color, Derived, GroundSet, Permutation

_ELEMENT = re.compile(r"(\d+)([WB]*)")


def _position(text, i):
    line = text.count("\n", 0, i) + 1
    col = i - (text.rfind("\n", 0, i) + 1) + 1
    return line, col


def _fail(text, i, msg):
    line, col = _position(text, i)
    raise ParseError(msg, text, line, col)


def parse_cycles(text: str) -> list:
    """Tokenize ``text`` into a list of cycles (tuples of labels) with
    positions kept for error messages.  Returns ``[(cycle, [offsets])]``."""
    out = []
    i, n = 0, len(text)
    while True:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        if text[i] != "(":
            _fail(text, i, f"expected '(' but found {text[i]!r}")
        i += 1
        cycle, offsets = [], []
        expect_elem = True
        while True:
            while i < n and text[i].isspace():
                i += 1
            if i >= n:
                _fail(text, i, "unterminated cycle, expected ')'")
            ch = text[i]
            if ch == ")":
                if not cycle:
                    _fail(text, i, "empty cycle")
                if expect_elem:
                    _fail(text, i, "trailing comma in cycle")
                i += 1
                break
            if ch == ",":
                if expect_elem:
                    _fail(text, i, "unexpected ','")
                expect_elem = True
                i += 1
                continue
            m = _ELEMENT.match(text, i)
            if not m:
                _fail(text, i, f"unexpected character {ch!r}")
            value = int(m.group(1))
            if value < 1:
                _fail(text, i, "elements must be positive integers")
            label = value
            for tag in m.group(2):
                label = Derived(label, Color(tag))
            cycle.append(label)
            offsets.append(i)
            i = m.end()
            expect_elem = False
        out.append((tuple(cycle), offsets))
    if not out:
        _fail(text, len(text), "expected at least one cycle")
    return out


def _base_parent(x):
    while isinstance(x, Derived):
        x = x.parent
    return x


def infer_ground(parsed_groups, degree: int | None = None, text_for=None) -> GroundSet:
    """Ground set for one or more parsed permutations (see module doc).

    Base elements whose derived children are mentioned are removed unless
    they are mentioned themselves, since a reroute consumes its parent label.
    """
    mentioned = []
    seen_positions = []
    for text, groups in parsed_groups:
        for cycle, offsets in groups:
            for x, off in zip(cycle, offsets):
                mentioned.append(x)
                seen_positions.append((text, off, x))
    bases = [x for x in mentioned if not isinstance(x, Derived)]
    derived = [x for x in mentioned if isinstance(x, Derived)]
    if degree is not None:
        if degree < 1:
            raise ParseError(f"degree must be positive, got {degree}")
        for text, off, x in seen_positions:
            if not isinstance(x, Derived) and x > degree:
                _fail(text, off, f"element {x} exceeds declared degree {degree}")
        n = degree
    else:
        n = max(bases + [_base_parent(x) for x in derived], default=0)
    elements = set(range(1, n + 1))
    consumed = set()
    for x in derived:
        p = x.parent
        while isinstance(p, Derived):
            consumed.add(p)
            p = p.parent
        consumed.add(p)
    mentioned_set = set(mentioned)
    elements -= {c for c in consumed if c not in mentioned_set}
    elements |= set(derived)
    return GroundSet(elements)


def _build(groups, ground: GroundSet, text: str) -> Permutation:
    image = {}
    for cycle, offsets in groups:
        for x, off in zip(cycle, offsets):
            if x in image:
                _fail(text, off, f"element {x} appears more than once")
            image[x] = None
        for k, x in enumerate(cycle):
            image[x] = cycle[(k + 1) % len(cycle)]
    for x in ground:
        image.setdefault(x, x)
    return Permutation(image, ground)


def parse_permutation(text: str, degree: int | None = None, ground: GroundSet | None = None) -> Permutation:
    groups = parse_cycles(text)
    if ground is None:
        ground = infer_ground([(text, groups)], degree)
    return _build(groups, ground, text)


def parse_pair(white_text: str, black_text: str, degree: int | None = None):
    """Parse both permutations over one jointly inferred ground set."""
    from .pair import PermutationPair

    wg = parse_cycles(white_text)
    bg = parse_cycles(black_text)
    ground = infer_ground([(white_text, wg), (black_text, bg)], degree)
    return PermutationPair(_build(wg, ground, white_text), _build(bg, ground, black_text))


def parse_label(text: str):
    m = _ELEMENT.fullmatch(text.strip())
    if not m or int(m.group(1)) < 1:
        raise ParseError(f"invalid element {text!r}", text)
    label = int(m.group(1))
    for tag in m.group(2):
        label = Derived(label, Color(tag))
    return label
