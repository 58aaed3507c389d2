"""Bicolored multigraph models of permutation pairs.

White vertices are white orbits, black vertices are black orbits, and each
ground element is an edge joining the two orbits containing it.  A vertex is
named by its color and the smallest label in its orbit.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .pair import PermutationPair, _check_ab, classify_exceptional
from .perm import Color, format_cycle, label_key


@dataclass(frozen=True, order=False)
class Vertex:
    color: Color
    rep: object

    def __str__(self):
        return f"{self.color.value}{self.rep}"

    def sort_key(self):
        return (0 if self.color is Color.WHITE else 1, label_key(self.rep))


@dataclass(frozen=True)
class BicoloredGraph:
    white_vertices: tuple
    black_vertices: tuple
    edges: tuple  # (label, white vertex, black vertex), sorted by label
    _white_of: dict = field(repr=False, compare=False, default_factory=dict)
    _black_of: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def vertices(self):
        return self.white_vertices + self.black_vertices

    def white_vertex(self, e) -> Vertex:
        return self._white_of[e]

    def black_vertex(self, e) -> Vertex:
        return self._black_of[e]

    def without_edges(self, *labels) -> "BicoloredGraph":
        """Same vertices, fewer edges.  Vertices may become isolated."""
        keep = tuple(t for t in self.edges if t[0] not in labels)
        return BicoloredGraph(self.white_vertices, self.black_vertices, keep, self._white_of, self._black_of)


def build_model(pair: PermutationPair) -> BicoloredGraph:
    white_of, black_of = {}, {}
    whites, blacks = [], []
    for c in pair.white.cycles():
        v = Vertex(Color.WHITE, c[0])
        whites.append(v)
        for x in c:
            white_of[x] = v
    for c in pair.black.cycles():
        v = Vertex(Color.BLACK, c[0])
        blacks.append(v)
        for x in c:
            black_of[x] = v
    edges = tuple((x, white_of[x], black_of[x]) for x in pair.ground)
    return BicoloredGraph(tuple(whites), tuple(blacks), edges, white_of, black_of)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def component_labels(graph: BicoloredGraph) -> dict:
    """Map each vertex to a representative of its connected component."""
    uf = _UnionFind(graph.vertices)
    for _, w, b in graph.edges:
        uf.union(w, b)
    return {v: uf.find(v) for v in graph.vertices}


def components(graph: BicoloredGraph) -> list:
    """Connected components as ``(vertices, edge labels)``, in a stable order."""
    labels = component_labels(graph)
    groups = {}
    for v in graph.vertices:
        groups.setdefault(labels[v], (set(), set()))[0].add(v)
    for e, w, _ in graph.edges:
        groups[labels[w]][1].add(e)
    out = [(frozenset(vs), frozenset(es)) for vs, es in groups.values()]
    out.sort(key=lambda ve: min(v.sort_key() for v in ve[0]))
    return out


def num_components(graph: BicoloredGraph) -> int:
    return len(set(component_labels(graph).values()))


def is_transitive_via_graph(pair: PermutationPair) -> bool:
    return num_components(build_model(pair)) == 1


def component_pairs(pair: PermutationPair) -> list:
    """The pair restricted to each connected component of its model."""
    from .pair import restrict_pair

    return [restrict_pair(pair, es) for _, es in components(build_model(pair))]


# Walks are tuples alternating Vertex, edge label, Vertex, ..., Vertex.

TRIMS = ("none", "first", "last", "both")


def walk_from_sequence(pair: PermutationPair, seq, trim: str = "none") -> tuple:
    """The walk traced by a product-sequence ``x0, ..., xn``.

    The untrimmed walk uses the edges ``x0, black(x0), x1, ..., black(x(n-1)), xn``
    and runs from the white vertex of x0 to the black vertex of xn.  ``trim``
    drops the first edge, the last edge, or both.
    """
    if trim not in TRIMS:
        raise DomainError(f"trim must be one of {TRIMS}, got {trim!r}")
    seq = list(seq)
    if not seq:
        raise DomainError("a sequence needs at least one term")
    p, black = pair.product, pair.black
    for x, y in zip(seq, seq[1:]):
        if p(x) != y:
            raise DomainError(f"not a product-sequence: product({x}) = {p(x)}, not {y}")
    model = build_model(pair)
    extended = []
    for x in seq[:-1]:
        extended += [x, black(x)]
    extended.append(seq[-1])
    # vertex shared by consecutive extended edges alternates black, white, ...
    first = trim in ("first", "both")
    last = trim in ("last", "both")
    lo = 1 if first else 0
    hi = len(extended) - 1 if last else len(extended)
    if lo >= hi:
        # nothing left: a zero-length walk at the black vertex of x0
        return (model.black_vertex(seq[0]),)
    # even positions are xi (entered at white side), odd positions black(xi)
    if lo % 2 == 0:
        walk = [model.white_vertex(extended[lo])]
    else:
        walk = [model.black_vertex(extended[lo])]
    for k in range(lo, hi):
        e = extended[k]
        walk.append(e)
        walk.append(model.black_vertex(e) if k % 2 == 0 else model.white_vertex(e))
    return tuple(walk)


def walk_colors(walk) -> str:
    """Render a walk as in ``W,1,B,2,W``: vertices by color, edges by label."""
    return ",".join(x.color.value if isinstance(x, Vertex) else str(x) for x in walk)


def is_valid_walk(graph: BicoloredGraph, walk) -> bool:
    ends = {e: (w, b) for e, w, b in graph.edges}
    if len(walk) % 2 == 0:
        return False
    for k in range(1, len(walk), 2):
        e = walk[k]
        if e not in ends:
            return False
        u, v = walk[k - 1], walk[k + 1]
        if {u, v} != set(ends[e]):
            return False
    return True


def _deleted_labels(pair, a, b):
    _check_ab(pair, a, b)
    model = build_model(pair)
    labels = component_labels(model.without_edges(a, b))
    ends = {
        "white_a": model.white_vertex(a),
        "black_a": model.black_vertex(a),
        "white_b": model.white_vertex(b),
        "black_b": model.black_vertex(b),
    }
    return labels, ends


WILD_WALKS = (("white_a", "black_a"), ("white_b", "black_b"), ("white_a", "white_b"), ("black_a", "black_b"))


def wild_walk_criterion(pair: PermutationPair, a, b) -> bool:
    """Whether one of the four walks exists once edges a and b are removed.

    For a transitive pair this decides connectivity after conjugating white
    by the transposition ``(a b)``.
    """
    from .oracle import is_transitive_oracle

    if not is_transitive_oracle(pair):
        raise DomainError("the walk criteria need a transitive pair")
    labels, ends = _deleted_labels(pair, a, b)
    return any(labels[ends[u]] == labels[ends[v]] for u, v in WILD_WALKS)


def tame_walk_criterion(pair: PermutationPair, a, b) -> bool:
    """The two-walk criterion, valid when (a, b) is tame exceptional."""
    from .oracle import is_transitive_oracle

    if not classify_exceptional(pair, a, b).is_tame:
        raise DomainError(f"({a}, {b}) is not tame exceptional")
    if not is_transitive_oracle(pair):
        raise DomainError("the walk criteria need a transitive pair")
    labels, ends = _deleted_labels(pair, a, b)
    return any(labels[ends[u]] == labels[ends[v]] for u, v in WILD_WALKS[:2])


def two_walks_exist(pair: PermutationPair, a, b) -> bool:
    """The two-walk condition without the tame precondition."""
    labels, ends = _deleted_labels(pair, a, b)
    return any(labels[ends[u]] == labels[ends[v]] for u, v in WILD_WALKS[:2])


def model_partition(pair: PermutationPair) -> tuple:
    """The model as label-level data: (white orbits, black orbits) as sets of
    frozensets.  Two pairs with equal partitions have identical models up to
    the choice of vertex names."""
    return (
        {frozenset(c) for c in pair.white.cycles()},
        {frozenset(c) for c in pair.black.cycles()},
    )


def expected_rerouted_model(pair: PermutationPair, a, b) -> tuple:
    """The model after rerouting, predicted by graph surgery: drop edge a,
    add a black vertex holding only aW (hung off white_a) and an edge aB from
    black_a to white_b."""
    from .perm import black_of, white_of

    _check_ab(pair, a, b)
    aw, ab = white_of(a), black_of(a)
    whites = set()
    for c in pair.white.cycles():
        s = set(c)
        if a in s:
            s = (s - {a}) | {aw}
        if b in s:
            s = s | {ab}
        whites.add(frozenset(s))
    blacks = set()
    for c in pair.black.cycles():
        s = set(c)
        if a in s:
            s = (s - {a}) | {ab}
        blacks.add(frozenset(s))
    blacks.add(frozenset({aw}))
    return whites, blacks


def _dot_id(v: Vertex) -> str:
    return f'"{v.color.value}{v.rep}"'


def export_dot(graph: BicoloredGraph, name: str = "model") -> str:
    """Graphviz text; stable for equal inputs."""
    lines = [f"graph {name} {{", "  node [shape=circle, label=\"\"];"]
    for v in sorted(graph.white_vertices, key=Vertex.sort_key):
        lines.append(f"  {_dot_id(v)} [style=solid, fillcolor=white];")
    for v in sorted(graph.black_vertices, key=Vertex.sort_key):
        lines.append(f"  {_dot_id(v)} [style=filled, fillcolor=black];")
    for e, w, b in sorted(graph.edges, key=lambda t: label_key(t[0])):
        lines.append(f'  {_dot_id(w)} -- {_dot_id(b)} [label="{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def describe_vertex(pair: PermutationPair, v: Vertex) -> str:
    perm = pair.white if v.color is Color.WHITE else pair.black
    return f"{v} = {format_cycle(perm.orbit(v.rep))}"
