"""Plumbing graphs: decorated trees with a negative-definite intersection form.

A plumbing graph is a tree whose vertices carry an Euler number (the
self-intersection of the corresponding exceptional curve); all genus
decorations are implicitly zero.  Validation happens at construction
time: every downstream formula assumes negative definiteness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re

from .errors import (
    EmptySubset,
    GraphSyntaxError,
    UnknownVertex,
    ValidationError,
)
from . import exactlin

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")


class PlumbingGraph:
    """Immutable decorated tree with validated intersection form.

    Vertex order is the declaration order and drives every deterministic
    iteration in the package.
    """

    __slots__ = ("names", "euler", "edges", "_index", "_adj", "_hash")

    def __init__(self, vertices, edges, validate=True):
        names = tuple(str(n) for n, _ in vertices)
        euler = tuple(int(e) for _, e in vertices)
        for n in names:
            if not _NAME_RE.match(n):
                raise ValidationError(f"invalid vertex name {n!r}")
        if len(set(names)) != len(names):
            raise ValidationError("duplicate vertex name")
        index = {n: i for i, n in enumerate(names)}
        edge_set = set()
        for a, b in edges:
            if a not in index or b not in index:
                raise UnknownVertex(f"edge endpoint {a!r} or {b!r} not declared")
            i, j = index[a], index[b]
            if i == j:
                raise ValidationError(f"self-loop at {a!r}")
            key = (min(i, j), max(i, j))
            if key in edge_set:
                raise ValidationError(f"multi-edge between {a!r} and {b!r}")
            edge_set.add(key)
        self.names = names
        self.euler = euler
        self.edges = frozenset(edge_set)
        self._index = index
        adj = [[] for _ in names]
        for i, j in sorted(edge_set):
            adj[i].append(j)
            adj[j].append(i)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._hash = hash((names, euler, self.edges))
        if validate:
            self._validate()

    # -- basic structure ------------------------------------------------

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def neighbors(self, name):
        return tuple(self.names[j] for j in self._adj[self.index(name)])

    def matrix(self):
        """The intersection matrix as a list of integer rows."""
        m = [[0] * self.n for _ in range(self.n)]
        for i, e in enumerate(self.euler):
            m[i][i] = e
        for i, j in self.edges:
            m[i][j] = 1
            m[j][i] = 1
        return m

    def _validate(self):
        n = self.n
        if n == 0:
            raise ValidationError("graph has no vertices")
        if len(self.edges) != n - 1:
            raise ValidationError(
                f"not a tree: {n} vertices need {n - 1} edges, "
                f"got {len(self.edges)}"
            )
        seen = [False] * n
        stack = [0]
        seen[0] = True
        while stack:
            i = stack.pop()
            for j in self._adj[i]:
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        if not all(seen):
            raise ValidationError("not a tree: graph is disconnected")
        minors = exactlin.leading_minors(self.matrix())
        for k, d in enumerate(minors, start=1):
            if (-1) ** k * d <= 0:
                raise ValidationError(
                    f"not negative definite: leading principal minor "
                    f"{k} is {d}"
                )

    # -- value semantics ------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, PlumbingGraph)
            and self.names == other.names
            and self.euler == other.euler
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PlumbingGraph({len(self.names)} vertices, det={intersection_data(self).det})"


@dataclass(frozen=True)
class IntersectionData:
    """Exact data attached to the intersection form of one graph."""

    matrix: tuple  # tuple of tuples of int
    inverse: tuple  # tuple of tuples of Fraction
    det: int
    group_order: int  # |L'/L| = |det|


@lru_cache(maxsize=None)
def intersection_data(g: PlumbingGraph) -> IntersectionData:
    m = g.matrix()
    inv = exactlin.invert(m)
    det = exactlin.det_bareiss(m)
    check = exactlin.mat_mul(m, inv)
    if check != exactlin.identity(g.n):
        raise AssertionError("inverse verification failed")
    return IntersectionData(
        matrix=tuple(tuple(row) for row in m),
        inverse=tuple(tuple(row) for row in inv),
        det=det,
        group_order=abs(det),
    )


# -- graph file format ---------------------------------------------------


def parse_graph(text: str) -> PlumbingGraph:
    """Parse the line-oriented graph file format.

    ``vertex <name> <euler>`` declares a vertex, ``edge <a> <b>`` an edge
    between previously declared vertices; ``#`` starts a comment.  A
    ``genus`` token anywhere is rejected: nonzero genus is not supported
    and must not be silently dropped.
    """
    vertices = []
    names = set()
    edges = []
    edge_keys = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if "genus" in toks:
            raise GraphSyntaxError(
                f"line {lineno}: genus decorations are not supported"
            )
        if toks[0] == "vertex":
            if len(toks) != 3:
                raise GraphSyntaxError(
                    f"line {lineno}: expected 'vertex <name> <euler>'"
                )
            name = toks[1]
            if not _NAME_RE.match(name):
                raise GraphSyntaxError(f"line {lineno}: bad vertex name {name!r}")
            if name in names:
                raise GraphSyntaxError(f"line {lineno}: duplicate vertex {name!r}")
            try:
                e = int(toks[2])
            except ValueError:
                raise GraphSyntaxError(
                    f"line {lineno}: bad euler number {toks[2]!r}"
                ) from None
            names.add(name)
            vertices.append((name, e))
        elif toks[0] == "edge":
            if len(toks) != 3:
                raise GraphSyntaxError(f"line {lineno}: expected 'edge <a> <b>'")
            a, b = toks[1], toks[2]
            for x in (a, b):
                if x not in names:
                    raise GraphSyntaxError(
                        f"line {lineno}: edge endpoint {x!r} not declared"
                    )
            key = (min(a, b), max(a, b))
            if a == b or key in edge_keys:
                raise GraphSyntaxError(
                    f"line {lineno}: bad edge {a!r}-{b!r}"
                )
            edge_keys.add(key)
            edges.append((a, b))
        else:
            raise GraphSyntaxError(f"line {lineno}: unknown directive {toks[0]!r}")
    return PlumbingGraph(vertices, edges)


def serialize_graph(g: PlumbingGraph) -> str:
    lines = [f"vertex {n} {e}" for n, e in zip(g.names, g.euler)]
    for i, j in sorted(g.edges):
        lines.append(f"edge {g.names[i]} {g.names[j]}")
    return "\n".join(lines) + "\n"


# -- induced subgraphs ----------------------------------------------------


def subgraph(g: PlumbingGraph, subset) -> list[PlumbingGraph]:
    """Induced subgraph on ``subset``, split into connected components.

    Vertex names are preserved, which is the whole vertex correspondence.
    Components are ordered by their smallest vertex index; any induced
    subgraph of a negative-definite tree is again a negative-definite
    forest, so each component validates.
    """
    idxs = sorted({g.index(v) for v in subset})
    if not idxs:
        raise EmptySubset("vertex subset is empty")
    chosen = set(idxs)
    seen = set()
    components = []
    for start in idxs:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in g._adj[i]:
                if j in chosen and j not in seen:
                    seen.add(j)
                    stack.append(j)
        comp.sort()
        comp_set = set(comp)
        verts = [(g.names[i], g.euler[i]) for i in comp]
        edges = [
            (g.names[i], g.names[j])
            for i, j in g.edges
            if i in comp_set and j in comp_set
        ]
        components.append(PlumbingGraph(verts, edges))
    return components
