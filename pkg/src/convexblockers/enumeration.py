"""Exhaustive enumeration of the two path/matching families.

M(ctx): all simple (noncrossing) perfect matchings of the 2m-gon.
H(ctx): all simple (noncrossing) Hamiltonian paths.

Both enumerators are exact and deterministic. H is produced by two independent
algorithms, a pruned DFS oracle and a fast arc-ends recursion, which the test
suite cross-validates set against set; production callers use the fast one.
Families are materialized and sorted into canonical order up to m = 7 and
streamed in deterministic recursion order beyond that.
"""

from __future__ import annotations

from typing import Iterator

from .geometry import Context, Edge, EdgeSet, SimplePath
from .witnesses import zigzag_arc

__all__ = [
    "boundary_hamiltonian_paths",
    "canonical_shp_family",
    "canonical_spm_family",
    "enumerate_shp",
    "enumerate_shp_dfs",
    "enumerate_spm",
    "odd_position_matching",
]

# Families up to this half-order are materialized and globally sorted; larger
# ones stream in recursion order to keep memory flat.
MATERIALIZE_MAX_M = 7


def _spm_segments(segment: tuple[int, ...]) -> Iterator[frozenset[Edge]]:
    """Noncrossing perfect matchings of a contiguous vertex segment.

    The first vertex pairs with some partner at odd distance; the chord splits
    the segment into an inner and an outer part that are matched recursively.
    Completeness and the noncrossing property are both consequences of the
    split: any chord of the matching either nests inside or stays outside.
    """
    if not segment:
        yield frozenset()
        return
    first = segment[0]
    for idx in range(1, len(segment), 2):
        chord = Edge(first, segment[idx])
        for inner in _spm_segments(segment[1:idx]):
            for outer in _spm_segments(segment[idx + 1 :]):
                yield inner | outer | {chord}


def enumerate_spm(ctx: Context) -> Iterator[EdgeSet]:
    """Yield every simple perfect matching exactly once, canonically ordered."""
    gen = _spm_segments(tuple(range(ctx.n)))
    if ctx.m <= MATERIALIZE_MAX_M:
        yield from sorted(gen, key=lambda s: tuple(sorted(s)))
    else:
        yield from gen


def enumerate_shp(ctx: Context) -> Iterator[SimplePath]:
    """Yield every simple Hamiltonian path once, canonically ordered (fast path).

    A noncrossing Hamiltonian path, read from either end, keeps the unvisited
    vertices a contiguous circular arc and always steps to one of the two arc
    ends. Conversely every end-choice string yields a noncrossing path, so
    scanning all starts and all 2^(2m-2) choice strings produces each
    undirected path exactly twice; canonical readings deduplicate.
    """
    n = ctx.n
    seen: set[tuple[int, ...]] = set()
    for start in range(n):
        for bits in range(1 << (n - 2)):
            lo = (start + 1) % n
            hi = (start - 1) % n
            seq = [start]
            for step in range(n - 2):
                if (bits >> step) & 1:
                    seq.append(lo)
                    lo = (lo + 1) % n
                else:
                    seq.append(hi)
                    hi = (hi - 1) % n
            seq.append(lo)  # lo == hi: the last vertex is forced
            tup = tuple(seq)
            rev = tup[::-1]
            seen.add(tup if tup <= rev else rev)
    ordered: Iterator[tuple[int, ...]] = iter(sorted(seen)) if ctx.m <= MATERIALIZE_MAX_M else iter(seen)
    for tup in ordered:
        yield SimplePath(tup)


def enumerate_shp_dfs(ctx: Context) -> list[SimplePath]:
    """Oracle enumerator for H: depth-first extension with crossing pruning.

    Grows simple paths one vertex at a time, rejecting any extension edge that
    crosses an edge already on the path. Independent of enumerate_shp; the
    tests require the two outputs to agree as sets.
    """
    n = ctx.n
    idx = ctx.edge_index
    cross_mask = [0] * ctx.num_edges
    from .geometry import crosses  # local import keeps module load light

    for i, e1 in enumerate(ctx.all_edges):
        for j in range(i + 1, ctx.num_edges):
            if crosses(e1, ctx.all_edges[j], ctx):
                cross_mask[i] |= 1 << j
                cross_mask[j] |= 1 << i

    found: set[tuple[int, ...]] = set()
    path: list[int] = []

    def extend(used: int, edge_bits: int) -> None:
        if len(path) == n:
            tup = tuple(path)
            rev = tup[::-1]
            found.add(tup if tup <= rev else rev)
            return
        last = path[-1]
        for v in range(n):
            if (used >> v) & 1:
                continue
            ei = idx(Edge(last, v))
            if cross_mask[ei] & edge_bits:
                continue
            path.append(v)
            extend(used | (1 << v), edge_bits | (1 << ei))
            path.pop()

    for start in range(n):
        path = [start]
        extend(1 << start, 0)
    return [SimplePath(t) for t in sorted(found)]


def odd_position_matching(p: SimplePath, ctx: Context) -> EdgeSet:
    """The matching formed by the 1st, 3rd, 5th, ... edges of a Hamiltonian path.

    Any Hamiltonian path on 2m vertices has 2m-1 edges; the m odd-position
    ones touch every vertex exactly once, and if the path is noncrossing the
    result is a simple perfect matching contained in the path.
    """
    if len(p.vertices) != ctx.n:
        raise ValueError(f"path visits {len(p.vertices)} vertices, expected {ctx.n}")
    return frozenset(p.edges()[0::2])


def canonical_spm_family(ctx: Context) -> list[EdgeSet]:
    """m pairwise disjoint simple perfect matchings: the odd direction classes.

    D(1), D(3), ..., D(2m-1) each consist of m parallel edges covering all
    vertices, are noncrossing, and are pairwise disjoint since direction
    classes partition the edge set. They certify that blocking M needs at
    least m edges. (The even classes have only m-1 edges and cannot serve.)
    """
    return [ctx.direction_classes[k] for k in range(1, ctx.n, 2)]


def canonical_shp_family(ctx: Context) -> list[SimplePath]:
    """m pairwise edge-disjoint simple Hamiltonian paths.

    Path i is the zig-zag i, i+1, i-1, i+2, ... whose edge set is exactly
    D(2i) united with D(2i+1); consecutive direction pairs are disjoint, so
    the paths share no edge and certify that blocking H needs at least m
    edges.
    """
    n = ctx.n
    return [SimplePath(zigzag_arc(n, i + 1, i, from_first=False)).canonical() for i in range(ctx.m)]


def boundary_hamiltonian_paths(ctx: Context) -> list[SimplePath]:
    """The 2m Hamiltonian paths that run along the boundary circuit.

    Dropping any single boundary edge from the circuit leaves a simple
    Hamiltonian path; these are the 2m of them, canonically read.
    """
    n = ctx.n
    return [SimplePath(tuple((start + i) % n for i in range(n))).canonical() for start in range(n)]
