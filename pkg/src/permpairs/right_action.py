"""A second, deliberately literal implementation of the classifiers and the
reroute in right-action style, kept as an independent cross-check.

Permutations act on the right here: ``x^(g*h) = (x^g)^h``.  So the product
``black*white`` sends ``x`` to ``white(black(x))``, which is
``compose(white, black)`` elsewhere in this package.  Permutations are plain
dicts on ``{1..n}`` and positions are 1-based.
"""
from __future__ import annotations

from .errors import DomainError
from .pair import PermutationPair
from .perm import GroundSet, Permutation, black_of, white_of


def rmul(g: dict, h: dict) -> dict:
    """Right-action ``g*h``: apply g first, then h."""
    return {x: h[g[x]] for x in g}


def identity(n: int) -> dict:
    return {i: i for i in range(1, n + 1)}


def cycle(g: dict, a) -> list:
    """The cycle of a under g, starting at a."""
    out = [a]
    x = g[a]
    while x != a:
        out.append(x)
        x = g[x]
    return out


def cycle_decomposition(g: dict) -> list:
    seen = set()
    out = []
    for x in sorted(g):
        if x not in seen:
            c = cycle(g, x)
            seen.update(c)
            out.append(c)
    return out


def position(seq, x) -> int:
    """1-based index of x in seq, 0 when absent."""
    try:
        return seq.index(x) + 1
    except ValueError:
        return 0


def make_cycle_coercible(c, n: int) -> list:
    """Two-row image list (1-based, padded with index 0) of the cycle c."""
    looped = list(c) + [c[0]]
    tworow = [None]
    for i in range(1, n + 1):
        if i in looped:
            tworow.append(looped[looped.index(i) + 1])
        else:
            tworow.append(i)
    return tworow


def coerce(tworow: list) -> dict:
    return {i: tworow[i] for i in range(1, len(tworow))}


def compute_genus(white: dict, black: dict) -> int:
    n = len(white)
    chi = len(cycle_decomposition(white)) + len(cycle_decomposition(black)) - n
    chi += len(cycle_decomposition(rmul(black, white)))
    return 1 - chi // 2


def reroute(white: dict, black: dict, a: int, b: int):
    """Returns (W, B) on {1..n+1}: integer a plays aW and n+1 plays aB."""
    n = len(white)
    W = identity(n + 1)
    B = identity(n + 1)
    for c in cycle_decomposition(white):
        if b in c:
            cnew = make_cycle_coercible(c, n + 1)
            cnew[position(cnew[1:], b)] = n + 1
            cnew[n + 1] = b
            W = rmul(W, coerce(cnew))
        else:
            W = rmul(W, coerce(make_cycle_coercible(c, n + 1)))
    for c in cycle_decomposition(black):
        if a in c:
            cnew = make_cycle_coercible(c, n + 1)
            cnew[position(cnew[1:], a)] = n + 1
            cnew[n + 1] = cnew[a]
            cnew[a] = a
            B = rmul(B, coerce(cnew))
        else:
            B = rmul(B, coerce(make_cycle_coercible(c, n + 1)))
    return W, B


def compute_arc(g: dict, a, b):
    if a == b:
        return []
    aorbit = cycle(g, a)
    arc = []
    for i in range(2, len(aorbit) + 1):
        arc.append(aorbit[i - 1])
        if aorbit[i - 1] == b:
            return arc
    return None  # caller's responsibility: b was not in the orbit of a


def is_type_u(white, black, a, b) -> bool:
    g = rmul(black, white)
    aorbit = cycle(g, a)
    wa = white[a]
    if b in aorbit or wa in aorbit:
        return False
    borbit = cycle(g, b)
    if wa in borbit:
        return False
    return True


def is_type_n(white, black, a, b) -> bool:
    g = rmul(black, white)
    aorbit = cycle(g, a)
    wa = white[a]
    if b not in aorbit or wa not in aorbit:
        return False
    return wa not in compute_arc(g, a, b)


def is_type_p(white, black, a, b) -> bool:
    return not (is_type_u(white, black, a, b) or is_type_n(white, black, a, b))


def is_type_p1(white, black, a, b) -> bool:
    g = rmul(black, white)
    aorbit = cycle(g, a)
    wa = white[a]
    if b not in aorbit or wa not in aorbit:
        return False
    return wa in compute_arc(g, a, b)


def is_type_p2(white, black, a, b) -> bool:
    aorbit = cycle(rmul(black, white), a)
    return white[a] in aorbit and b not in aorbit


def is_type_p3(white, black, a, b) -> bool:
    aorbit = cycle(rmul(black, white), a)
    return b in aorbit and white[a] not in aorbit


def is_type_p4(white, black, a, b) -> bool:
    borbit = cycle(rmul(black, white), b)
    return white[a] in borbit and a not in borbit


def is_tame_exceptional_1b(white, black, a, b) -> bool:
    acycle = cycle(rmul(black, white), a)
    wa, wb = white[a], white[b]
    if b not in acycle or wa not in acycle or wb not in acycle:
        return False
    x = position(acycle, wa)
    y = position(acycle, wb)
    z = position(acycle, b)
    return 1 < x < y <= z  # last inequality weak


def is_tame_exceptional_1a(white, black, a, b) -> bool:
    return is_tame_exceptional_1b(white, black, b, a)


def is_tame_exceptional_2(white, black, a, b) -> bool:
    g = rmul(black, white)
    wa, wb = white[a], white[b]
    aorbit = cycle(g, a)
    waorbit = cycle(g, wa)
    return a not in waorbit and b in aorbit and wb in waorbit


def is_tame_exceptional(white, black, a, b) -> bool:
    return (
        is_tame_exceptional_1a(white, black, a, b)
        or is_tame_exceptional_1b(white, black, a, b)
        or is_tame_exceptional_2(white, black, a, b)
    )


def is_wild_exceptional(white, black, a, b) -> bool:
    return is_type_p2(white, black, a, b) and is_type_p2(white, black, b, a)


def is_exceptional(white, black, a, b) -> bool:
    return is_tame_exceptional(white, black, a, b) or is_wild_exceptional(white, black, b, a)


def is_genus_raising(white, black, a, b) -> bool:
    g = rmul(black, white)
    aorbit = cycle(g, a)
    if b in aorbit:
        return False
    wa, wb = white[a], white[b]
    borbit = cycle(g, b)
    if (wa in aorbit or wb in aorbit) and (wa in borbit or wb in borbit):
        return False
    waorbit = cycle(g, wa)
    if wb in waorbit:
        return False
    wborbit = cycle(g, wb)
    if (a in waorbit or b in waorbit) and (a in wborbit or b in wborbit):
        return False
    return True


def is_genus_lowering(white, black, a, b) -> bool:
    g = rmul(black, white)
    aorbit = cycle(g, a)
    if b not in aorbit:
        return False
    wa, wb = white[a], white[b]
    waorbit = cycle(g, wa)
    if wb not in waorbit:
        return False
    arcab = compute_arc(g, a, b)
    arcba = compute_arc(g, b, a)
    return (wa not in arcab and wb not in arcab) or (wa not in arcba and wb not in arcba)


def is_genus_preserving(white, black, a, b) -> bool:
    return not (is_genus_raising(white, black, a, b) or is_genus_lowering(white, black, a, b))


# Adapters between PermutationPair and the integer encoding.


def to_dicts(pair: PermutationPair):
    ground = pair.ground.elements
    n = len(ground)
    if tuple(ground) != tuple(range(1, n + 1)):
        raise DomainError("the integer encoding needs the ground set {1..n}")
    return dict(pair.white._map), dict(pair.black._map)


def reroute_as_pair(pair: PermutationPair, a: int, b: int) -> PermutationPair:
    """Run the integer reroute and rename a to aW and n+1 to aB."""
    white, black = to_dicts(pair)
    n = len(white)
    W, B = reroute(white, black, a, b)
    aw, ab = white_of(a), black_of(a)

    def name(x):
        return aw if x == a else ab if x == n + 1 else x

    ground = GroundSet(name(x) for x in W)
    return PermutationPair(
        Permutation({name(x): name(y) for x, y in W.items()}, ground),
        Permutation({name(x): name(y) for x, y in B.items()}, ground),
    )


def type_name(white, black, a, b) -> str:
    """The unique type name according to the ported predicates, or a list of
    all that hold if they are not mutually exclusive."""
    hits = [
        name
        for name, f in (
            ("U", is_type_u),
            ("N", is_type_n),
            ("P1", is_type_p1),
            ("P2", is_type_p2),
            ("P3", is_type_p3),
            ("P4", is_type_p4),
        )
        if f(white, black, a, b)
    ]
    return hits[0] if len(hits) == 1 else "+".join(hits) or "none"
