"""Simplices, simplicial complexes, and the dual graph of a closed manifold.

All types here are immutable after construction and safe to share across
threads; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Tuple

from .errors import InvalidConeError, InvalidInputError, NotAManifoldError


class Simplex:
    """A simplex given by its strictly increasing tuple of vertex ids."""

    __slots__ = ("vertices", "_hash")

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(sorted(vertices))
        if not vs:
            raise InvalidInputError("a simplex needs at least one vertex")
        prev = -1
        for v in vs:
            if not isinstance(v, int) or v < 0:
                raise InvalidInputError(f"vertex ids must be non-negative integers, got {v!r}")
            if v == prev:
                raise InvalidInputError(f"duplicate vertex {v} in simplex")
            prev = v
        self.vertices: Tuple[int, ...] = vs
        self._hash = hash(vs)

    @classmethod
    def _from_sorted(cls, vs: Tuple[int, ...]) -> "Simplex":
        """Fast path for internally produced, already strictly increasing tuples."""
        s = object.__new__(cls)
        s.vertices = vs
        s._hash = hash(vs)
        return s

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def is_face_of(self, other: "Simplex") -> bool:
        """True iff every vertex of self occurs in other (improper faces included)."""
        a, b = self.vertices, other.vertices
        if len(a) > len(b):
            return False
        j = 0
        nb = len(b)
        for v in a:
            while j < nb and b[j] < v:
                j += 1
            if j == nb or b[j] != v:
                return False
            j += 1
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, Simplex) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Simplex") -> bool:
        return (len(self.vertices), self.vertices) < (len(other.vertices), other.vertices)

    def __repr__(self) -> str:
        return "Simplex(%s)" % ",".join(map(str, self.vertices))


def boundary(s: Simplex) -> frozenset:
    """All facets (codimension-1 faces); empty for a vertex."""
    vs = s.vertices
    if len(vs) == 1:
        return frozenset()
    make = Simplex._from_sorted
    return frozenset(make(vs[:i] + vs[i + 1 :]) for i in range(len(vs)))


def cone(s: Simplex, apex: int) -> Simplex:
    """The simplex spanned by s and one extra apex vertex."""
    if apex in s.vertices:
        raise InvalidConeError(f"apex {apex} already belongs to {s!r}")
    vs = s.vertices
    if apex > vs[-1]:
        return Simplex._from_sorted(vs + (apex,))
    return Simplex(vs + (apex,))


class SimplicialComplex:
    """A face-closed set of simplices, indexed by dimension."""

    __slots__ = ("_simplices", "_by_dim", "_vertices")

    def __init__(self, simplices: Iterable[Simplex]):
        fs = frozenset(simplices)
        by_dim: Dict[int, List[Simplex]] = {}
        for s in fs:
            by_dim.setdefault(s.dim, []).append(s)
            for f in boundary(s):
                if f not in fs:
                    raise InvalidInputError(f"not face-closed: {f!r} (facet of {s!r}) is missing")
        self._simplices = fs
        self._by_dim = {q: tuple(sorted(ss)) for q, ss in by_dim.items()}
        self._vertices = frozenset(v for s in fs for v in s.vertices)

    @classmethod
    def closure(cls, simplices: Iterable[Simplex]) -> "SimplicialComplex":
        """Build the smallest complex containing the given simplices."""
        seen = set()
        stack = list(simplices)
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            stack.extend(boundary(s))
        return cls(seen)

    @property
    def n(self) -> int:
        return len(self._simplices)

    @property
    def dim(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    def of_dim(self, q: int) -> Tuple[Simplex, ...]:
        return self._by_dim.get(q, ())

    def simplex_set(self) -> frozenset:
        return self._simplices

    def __contains__(self, s: Simplex) -> bool:
        return s in self._simplices

    def __iter__(self) -> Iterator[Simplex]:
        for q in sorted(self._by_dim):
            yield from self._by_dim[q]

    def __len__(self) -> int:
        return len(self._simplices)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, dim={self.dim})"


@dataclass(frozen=True)
class ComponentLabels:
    """Dense component ids, ordered by the smallest vertex id they contain."""

    count: int
    of_vertex: dict

    def label(self, s: Simplex) -> int:
        return self.of_vertex[s.vertices[0]]


def connected_components(c: SimplicialComplex) -> ComponentLabels:
    """Label vertices (hence simplices) by connected component."""
    parent = {v: v for v in c.vertices}

    def find(v: int) -> int:
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for s in c:
        vs = s.vertices
        for a, b in zip(vs, vs[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    roots = sorted({find(v) for v in c.vertices})
    index = {r: i for i, r in enumerate(roots)}
    return ComponentLabels(len(roots), {v: index[find(v)] for v in c.vertices})


class DualGraph:
    """Graph on the top-dimensional simplices of a closed p-manifold.

    Vertex i is dual to ``vertex_simplices[i]``; edge j joins the duals of
    the two p-cofaces of ``edge_simplices[j]``.
    """

    __slots__ = ("p", "vertex_simplices", "edge_simplices", "edges", "vertex_of", "edge_of")

    def __init__(self, p, vertex_simplices, edge_simplices, edges):
        self.p = p
        self.vertex_simplices: Tuple[Simplex, ...] = tuple(vertex_simplices)
        self.edge_simplices: Tuple[Simplex, ...] = tuple(edge_simplices)
        self.edges: Tuple[Tuple[int, int], ...] = tuple(edges)
        self.vertex_of = {s: i for i, s in enumerate(self.vertex_simplices)}
        self.edge_of = {s: i for i, s in enumerate(self.edge_simplices)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_simplices)

    @property
    def n_edges(self) -> int:
        return len(self.edge_simplices)


def dual_graph(K: SimplicialComplex, p: int) -> DualGraph:
    """Dual graph of a closed simplicial p-manifold.

    Requires every (p-1)-simplex to have exactly two p-cofaces and every
    simplex to be the face of some p-simplex (so K is pure of dimension p).
    """
    if p < 1:
        raise InvalidInputError("dual graph needs p >= 1")
    if K.dim > p:
        offender = K.of_dim(K.dim)[0]
        raise NotAManifoldError(f"{offender!r} has dimension {K.dim} > p = {p}")

    top = K.of_dim(p)
    cofaces: Dict[Simplex, List[int]] = {}
    for i, s in enumerate(top):
        for f in boundary(s):
            cofaces.setdefault(f, []).append(i)

    ridges = K.of_dim(p - 1)
    for f in ridges:
        k = len(cofaces.get(f, ()))
        if k != 2:
            raise NotAManifoldError(f"{f!r} has {k} cofaces of dimension {p}, expected 2")

    pure_faces = set(top)
    for s in top:
        stack = list(boundary(s))
        while stack:
            f = stack.pop()
            if f in pure_faces:
                continue
            pure_faces.add(f)
            stack.extend(boundary(f))
    for s in K:
        if s not in pure_faces:
            raise NotAManifoldError(f"{s!r} is not a face of any {p}-simplex")

    edges = [tuple(sorted(cofaces[f])) for f in ridges]
    return DualGraph(p, top, ridges, edges)
