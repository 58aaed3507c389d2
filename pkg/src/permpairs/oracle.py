"""Independent ground truth and exhaustive enumeration.

Transitivity here is decided by closing an orbit under both permutations and
their inverses.  It deliberately shares no code with the graph model.
"""
from __future__ import annotations

from collections import deque
from itertools import permutations

from .errors import DomainError
from .pair import PermutationPair
from .perm import GroundSet, Permutation

DEFAULT_CAP = 5


def is_transitive_oracle(pair: PermutationPair) -> bool:
    gens = [pair.white._map, pair.black._map]
    gens += [{v: k for k, v in g.items()} for g in gens]
    ground = pair.ground.elements
    start = ground[0]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(ground)


def symmetric_group_images(n: int):
    """All one-line image tuples of S_n in lexicographic order."""
    return list(permutations(range(1, n + 1)))


def _perm(ground, images):
    return Permutation._trusted(ground, {i + 1: v for i, v in enumerate(images)})


def enumerate_pairs(degree: int, cap: int = DEFAULT_CAP):
    """Every ``(pair, a, b)`` with ``pair`` in S_n x S_n and ``a != b``.

    Order: white, then black (both lexicographic in one-line notation), then
    a, then b.  One pair object is shared by all of its (a, b).
    """
    if not 2 <= degree <= cap:
        raise DomainError(f"degree must be between 2 and {cap}, got {degree}")
    ground = GroundSet.range(degree)
    group = [_perm(ground, im) for im in symmetric_group_images(degree)]
    for w in group:
        for b in group:
            pair = PermutationPair(w, b)
            for a in range(1, degree + 1):
                for bb in range(1, degree + 1):
                    if a != bb:
                        yield pair, a, bb


def expected_case_count(degree: int) -> int:
    from math import factorial

    return factorial(degree) ** 2 * degree * (degree - 1)


# Fast tuple-level helpers used by the exhaustive tree check.  A permutation of
# {0..n-1} is a tuple of images.


def _t_compose(p, q):
    return tuple(p[x] for x in q)


def _t_cycles(p) -> int:
    n = len(p)
    seen = [False] * n
    count = 0
    for i in range(n):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return count


def _t_transitive(p, q) -> bool:
    n = len(p)
    pi = [0] * n
    qi = [0] * n
    for i in range(n):
        pi[p[i]] = i
        qi[q[i]] = i
    seen = [False] * n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        x = stack.pop()
        for y in (p[x], q[x], pi[x], qi[x]):
            if not seen[y]:
                seen[y] = True
                reached += 1
                stack.append(y)
    return reached == n


def _t_conjugate(p, s):
    out = [0] * len(p)
    for x in range(len(p)):
        out[s[x]] = s[p[x]]
    return tuple(out)


def _t_cycle_type(p):
    n = len(p)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if not seen[i]:
            k = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths))


def tree_pairs(n: int):
    """All (white, black) image tuples on n edges that are transitive, have
    synthetic genus 0, and whose product is a single cycle."""
    group = list(permutations(range(n)))
    for w in group:
        nw = _t_cycles(w)
        for b in group:
            # chi = nw + nb - n + 1 must be 2
            if nw + _t_cycles(b) - n + 1 != 2:
                continue
            if _t_cycles(_t_compose(w, b)) != 1:
                continue
            if _t_transitive(w, b):
                yield w, b


def check_tree_case(max_edges: int = 6, literal_up_to: int = 4) -> dict:
    """Check: for a tree pair and any s, (white^s, black) is transitive iff
    its product is a single cycle.

    For ``n <= literal_up_to`` every s in S_n is tried.  Above that, white^s
    is instead run over the whole conjugacy class of white, which is exactly
    the set of values white^s takes; each class is checked once per black.
    """
    stats = {"trees": 0, "checks": 0, "failures": 0, "first_failure": None, "per_n": {}}
    for n in range(1, max_edges + 1):
        group = list(permutations(range(n)))
        by_type = {}
        for p in group:
            by_type.setdefault(_t_cycle_type(p), []).append(p)
        done = set()
        trees = checks = 0
        for w, b in tree_pairs(n):
            trees += 1
            if n <= literal_up_to:
                candidates = (_t_conjugate(w, s) for s in group)
            else:
                key = (_t_cycle_type(w), b)
                if key in done:
                    continue
                done.add(key)
                candidates = by_type[key[0]]
            for ws in candidates:
                checks += 1
                lhs = _t_transitive(ws, b)
                rhs = _t_cycles(_t_compose(ws, b)) == 1
                if lhs != rhs:
                    stats["failures"] += 1
                    if stats["first_failure"] is None:
                        stats["first_failure"] = {"white": w, "black": b, "conjugate": ws}
        stats["trees"] += trees
        stats["checks"] += checks
        stats["per_n"][n] = {"trees": trees, "checks": checks}
    return stats


def verify_all(degree: int, **kwargs):
    """Run the full theorem suite; see :mod:`permpairs.verify`."""
    from .verify import verify_all as _verify_all

    return _verify_all(degree, **kwargs)
