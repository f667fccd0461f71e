"""Combinatorial model of the complete convex geometric graph on 2m vertices.

Vertices are the residues 0..2m-1 in circular order around a convex polygon.
Everything is exact integer arithmetic: an edge is an unordered label pair,
its direction is the label sum mod 2m, its order is the shorter circular gap
between its endpoints, and crossing is decided by arc interleaving. No
coordinates appear anywhere in the model; only the SVG renderer maps labels
to points.

Context(m) fixes the half-order m >= 2 and carries derived tables (canonical
edge indexing, direction classes). All operations take the context explicitly
and all public values are immutable.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

__all__ = [
    "Context",
    "Edge",
    "EdgeSet",
    "SimplePath",
    "crosses",
    "direction",
    "direction_class",
    "format_edge",
    "format_edge_set",
    "is_boundary",
    "is_noncrossing_path",
    "is_simple_hamiltonian_path",
    "is_simple_perfect_matching",
    "order",
    "parse_edge",
    "parse_edge_set",
    "reflect",
    "reflect_path",
    "rotate",
    "rotate_path",
]


class Edge(collections.namedtuple("Edge", ["a", "b"])):
    """Unordered vertex pair, canonicalized so that a < b.

    Being a tuple, edges sort lexicographically, which is exactly the dense
    index order of Context.all_edges.
    """

    __slots__ = ()

    def __new__(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"degenerate edge [{a},{a}]")
        if a > b:
            a, b = b, a
        return super().__new__(cls, a, b)

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


# An edge set is a plain frozenset of Edge values. Canonical iteration order
# is sorted(), which coincides with the dense index order of Context.
EdgeSet = frozenset[Edge]


@dataclass(frozen=True)
class Context:
    """The complete convex geometric graph on n = 2m cyclically labeled vertices.

    m = 1 would make every edge a boundary edge and the families degenerate,
    so construction requires m >= 2.
    """

    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"half-order m must be >= 2, got {self.m}")

    @property
    def n(self) -> int:
        return 2 * self.m

    @cached_property
    def num_edges(self) -> int:
        return self.n * (self.n - 1) // 2

    @cached_property
    def all_edges(self) -> tuple[Edge, ...]:
        """Every edge once, in lexicographic (a, b) order.

        The position of an edge in this tuple is its dense index; bitsets over
        these indices are how the hitting-set layer sees edge sets.
        """
        n = self.n
        return tuple(Edge(a, b) for a in range(n) for b in range(a + 1, n))

    @cached_property
    def _index_of(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.all_edges)}

    def edge_index(self, e: Edge) -> int:
        try:
            return self._index_of[e]
        except KeyError:
            raise ValueError(f"edge {e} is not an edge of the 2m-gon with m={self.m}") from None

    def edge_at(self, index: int) -> Edge:
        if not 0 <= index < self.num_edges:
            raise ValueError(f"edge index {index} out of range 0..{self.num_edges - 1}")
        return self.all_edges[index]

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex label {v} out of range 0..{self.n - 1}")
        return v

    @cached_property
    def direction_classes(self) -> tuple[EdgeSet, ...]:
        """direction_classes[k] is the set of all edges with direction k.

        Odd k gives a class of m pairwise parallel edges (a perfect matching);
        even k gives m-1 edges, because the two vertices v with 2v = k mod 2m
        have no partner. The classes partition the edge set.
        """
        buckets: list[list[Edge]] = [[] for _ in range(self.n)]
        for e in self.all_edges:
            buckets[(e.a + e.b) % self.n].append(e)
        return tuple(frozenset(b) for b in buckets)


def direction(e: Edge, ctx: Context) -> int:
    """Direction class of an edge: (a + b) mod 2m. Parallel means equal direction."""
    return (e.a + e.b) % ctx.n


def order(e: Edge, ctx: Context) -> int:
    """Circular span of an edge: min(b - a, 2m - (b - a)), between 1 and m.

    The parity of the order always equals the parity of the direction.
    """
    gap = (e.b - e.a) % ctx.n
    return min(gap, ctx.n - gap)


def is_boundary(e: Edge, ctx: Context) -> bool:
    """True iff the edge joins circularly adjacent vertices (order 1)."""
    return order(e, ctx) == 1


def crosses(e1: Edge, e2: Edge, ctx: Context) -> bool:
    """True iff the two chords cross in the open interior of the polygon.

    Edges sharing an endpoint never cross. For four distinct endpoints the
    chords cross exactly when the endpoints of e2 interleave with those of e1
    around the circle; this is pure modular arithmetic, no coordinates.
    """
    if len({e1.a, e1.b, e2.a, e2.b}) < 4:
        return False
    n = ctx.n
    span = (e1.b - e1.a) % n
    in_arc_a = 0 < (e2.a - e1.a) % n < span
    in_arc_b = 0 < (e2.b - e1.a) % n < span
    return in_arc_a != in_arc_b


def direction_class(k: int, ctx: Context) -> EdgeSet:
    """All edges of direction k, 0 <= k < 2m."""
    if not 0 <= k < ctx.n:
        raise ValueError(f"direction {k} out of range 0..{ctx.n - 1}")
    return ctx.direction_classes[k]


def rotate(s: Iterable[Edge], r: int, ctx: Context) -> EdgeSet:
    """Rotate an edge set by r vertices; directions shift by 2r mod 2m."""
    n = ctx.n
    return frozenset(Edge((e.a + r) % n, (e.b + r) % n) for e in s)


def reflect(s: Iterable[Edge], axis: int, ctx: Context) -> EdgeSet:
    """Reflect an edge set by v -> axis - v mod 2m; direction k maps to 2*axis - k."""
    n = ctx.n
    return frozenset(Edge((axis - e.a) % n, (axis - e.b) % n) for e in s)


@dataclass(frozen=True)
class SimplePath:
    """A vertex sequence whose consecutive pairs are its edges.

    A path and its reversal denote the same object; canonical() picks the
    lexicographically smaller of the two readings. Construction does not
    validate; use is_noncrossing_path / is_simple_hamiltonian_path.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(Edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def edge_set(self) -> EdgeSet:
        return frozenset(self.edges())

    def canonical(self) -> "SimplePath":
        rev = self.vertices[::-1]
        return self if self.vertices <= rev else SimplePath(rev)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.vertices)


def rotate_path(p: SimplePath, r: int, ctx: Context) -> SimplePath:
    return SimplePath(tuple((v + r) % ctx.n for v in p.vertices))


def reflect_path(p: SimplePath, axis: int, ctx: Context) -> SimplePath:
    return SimplePath(tuple((axis - v) % ctx.n for v in p.vertices))


def is_noncrossing_path(p: SimplePath, ctx: Context) -> bool:
    """True iff p visits distinct valid vertices and no two of its edges cross."""
    vs = p.vertices
    if len(vs) == 0 or len(set(vs)) != len(vs):
        return False
    if not all(0 <= v < ctx.n for v in vs):
        return False
    es = p.edges()
    return not any(crosses(es[i], es[j], ctx) for i in range(len(es)) for j in range(i + 1, len(es)))


def is_simple_hamiltonian_path(p: SimplePath, ctx: Context) -> bool:
    """True iff p is a noncrossing path visiting all 2m vertices."""
    return len(p.vertices) == ctx.n and is_noncrossing_path(p, ctx)


def is_simple_perfect_matching(s: EdgeSet, ctx: Context) -> bool:
    """True iff s is a noncrossing perfect matching: m edges, all 2m vertices, no crossing."""
    edges = sorted(s)
    if len(edges) != ctx.m:
        return False
    touched = [v for e in edges for v in e]
    if len(set(touched)) != ctx.n or not all(0 <= v < ctx.n for v in touched):
        return False
    return not any(
        crosses(edges[i], edges[j], ctx) for i in range(len(edges)) for j in range(i + 1, len(edges))
    )


def format_edge(e: Edge) -> str:
    return str(e)


def parse_edge(text: str) -> Edge:
    """Parse 'a-b' into an Edge."""
    parts = text.strip().split("-")
    if len(parts) != 2:
        raise ValueError(f"bad edge text {text!r}, expected 'a-b'")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"bad edge text {text!r}, expected integer endpoints") from None
    if a < 0 or b < 0:
        raise ValueError(f"bad edge text {text!r}, endpoints must be nonnegative")
    return Edge(a, b)


def format_edge_set(s: Iterable[Edge]) -> str:
    """Serialize an edge set as 'a-b,c-d,...' sorted in canonical index order."""
    return ",".join(str(e) for e in sorted(s))


def parse_edge_set(text: str) -> EdgeSet:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(parse_edge(part) for part in text.split(","))
