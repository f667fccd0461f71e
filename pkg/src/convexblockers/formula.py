"""The explicit caterpillar family of blockers and its structural checks.

A candidate blocker is described by three parameters: a rotation r, a
boundary-run length t with 2 <= t <= m, and a strictly increasing offset
sequence epsilon of length m - t drawn from 1..m-2. Before rotation the edge
set is

    [i-1, i]                       for 1 <= i <= t          (the boundary run)
    [t+j-1-eps_j, t+j+eps_j]       for 1 <= j <= m-t        (the diagonals)

where eps_j is the j-th offset. Strict growth of the offsets pins every label
into 0..2m-2, so the whole set is computed without wraparound and rotated by
r afterwards. The edge in overall position p has direction 2p-1+2r: the family
uses every odd direction exactly once, and consecutive edges advance the
direction by 2.

The structural checks are deliberately independent of the generator: they
look only at an edge set (tree shape, crossings, caterpillar spine, root
monotonicity) so they can judge solver output that never saw the formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .geometry import (
    Context,
    Edge,
    EdgeSet,
    crosses,
    direction,
    is_boundary,
    order,
    rotate,
)

__all__ = [
    "BlockerSpec",
    "CaterpillarReport",
    "direction_sweep_check",
    "enumerate_formula_family",
    "iter_blocker_specs",
    "parse_blocker_spec",
    "realize",
    "validate_structure",
]


@dataclass(frozen=True)
class BlockerSpec:
    """Parameters (r, t, epsilons) of one member of the explicit family."""

    r: int
    t: int
    epsilons: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilons", tuple(self.epsilons))

    def to_json_dict(self) -> dict:
        return {"r": self.r, "t": self.t, "epsilons": list(self.epsilons)}


def parse_blocker_spec(text: str) -> BlockerSpec:
    """Parse 'r:t:e1,e2,...' (offsets part may be empty) into a BlockerSpec."""
    parts = text.strip().split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"bad spec text {text!r}, expected 'r:t:e1,e2,...'")
    r, t = int(parts[0]), int(parts[1])
    eps: tuple[int, ...] = ()
    if len(parts) == 3 and parts[2]:
        eps = tuple(int(x) for x in parts[2].split(","))
    return BlockerSpec(r=r, t=t, epsilons=eps)


def _validate(spec: BlockerSpec, ctx: Context) -> None:
    m = ctx.m
    if not 2 <= spec.t <= m:
        raise ValueError(f"t={spec.t} out of range 2..{m}")
    eps = spec.epsilons
    if len(eps) != m - spec.t:
        raise ValueError(f"expected {m - spec.t} offsets for t={spec.t}, got {len(eps)}")
    if eps:
        if not all(eps[i] < eps[i + 1] for i in range(len(eps) - 1)):
            raise ValueError(f"offsets must be strictly increasing, got {eps}")
        if eps[0] < 1 or eps[-1] > m - 2:
            raise ValueError(f"offsets must lie in 1..{m - 2}, got {eps}")


def realize(spec: BlockerSpec, ctx: Context) -> EdgeSet:
    """The edge set described by a spec.

    Strictly increasing offsets bounded by m-2 force
    eps_j <= t+j-2, so the backward endpoint t+j-1-eps_j stays >= 1 and the
    forward endpoint stays <= 2m-2: no label wraps before the final rotation.
    """
    _validate(spec, ctx)
    t = spec.t
    edges = [Edge(i - 1, i) for i in range(1, t + 1)]
    for j, eps in enumerate(spec.epsilons, start=1):
        edges.append(Edge(t + j - 1 - eps, t + j + eps))
    return rotate(edges, spec.r % ctx.n, ctx)


def iter_blocker_specs(ctx: Context) -> Iterator[BlockerSpec]:
    """Every valid (r, t, epsilons) triple, in deterministic order."""
    m = ctx.m
    for r in range(ctx.n):
        for t in range(2, m + 1):
            for eps in itertools.combinations(range(1, m - 1), m - t):
                yield BlockerSpec(r=r, t=t, epsilons=eps)


def enumerate_formula_family(ctx: Context) -> list[EdgeSet]:
    """All realized members, deduplicated and canonically sorted."""
    family = {realize(spec, ctx) for spec in iter_blocker_specs(ctx)}
    return sorted(family, key=lambda s: tuple(sorted(s)))


@dataclass(frozen=True)
class CaterpillarReport:
    """Shape report for an edge set.

    boundary_spine is a longest path of the tree consisting entirely of
    boundary edges, with at least 2 edges, in canonical reading; None when no
    such path exists (or the set is not a tree).
    """

    is_tree: bool
    is_noncrossing: bool
    is_caterpillar: bool
    boundary_spine: tuple[int, ...] | None
    direction_profile: tuple[int, ...]

    def passes(self) -> bool:
        return self.is_tree and self.is_noncrossing and self.is_caterpillar and self.boundary_spine is not None


def _adjacency(s: EdgeSet) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for e in sorted(s):
        adj.setdefault(e.a, []).append(e.b)
        adj.setdefault(e.b, []).append(e.a)
    return adj


def _tree_path(adj: dict[int, list[int]], u: int, v: int) -> tuple[int, ...] | None:
    """The unique simple u..v path in a tree, as a vertex tuple."""
    stack = [(u, (u,))]
    while stack:
        node, path = stack.pop()
        if node == v:
            return path
        for w in adj[node]:
            if len(path) < 2 or w != path[-2]:
                stack.append((w, path + (w,)))
    return None


def validate_structure(s: EdgeSet, ctx: Context) -> CaterpillarReport:
    """Shape-check an edge set: tree, noncrossing, caterpillar, boundary spine."""
    edges = sorted(s)
    if not edges:
        raise ValueError("cannot validate an empty edge set")
    for e in edges:
        ctx.check_vertex(e.a)
        ctx.check_vertex(e.b)

    adj = _adjacency(s)
    vertices = sorted(adj)

    # Tree: connected on the touched vertices with |E| = |V| - 1.
    seen = {vertices[0]}
    frontier = [vertices[0]]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    is_tree = len(seen) == len(vertices) and len(edges) == len(vertices) - 1

    is_noncrossing = not any(
        crosses(edges[i], edges[j], ctx) for i in range(len(edges)) for j in range(i + 1, len(edges))
    )

    is_caterpillar = False
    boundary_spine: tuple[int, ...] | None = None
    if is_tree:
        # Removing all leaves of a tree leaves a tree; it is a path (or empty)
        # exactly when no remaining vertex keeps three non-leaf neighbours.
        leaves = {v for v in vertices if len(adj[v]) == 1}
        is_caterpillar = all(
            sum(1 for w in adj[v] if w not in leaves) <= 2 for v in vertices if v not in leaves
        )

        # Longest paths of the tree; accept any that is all boundary edges.
        paths: dict[tuple[int, int], tuple[int, ...]] = {}
        for i, u in enumerate(vertices):
            for v in vertices[i + 1 :]:
                p = _tree_path(adj, u, v)
                if p is not None:
                    paths[(u, v)] = p
        diameter = max(len(p) for p in paths.values()) - 1
        candidates = []
        for p in paths.values():
            if len(p) - 1 != diameter or diameter < 2:
                continue
            if all(is_boundary(Edge(p[i], p[i + 1]), ctx) for i in range(len(p) - 1)):
                rev = p[::-1]
                candidates.append(p if p <= rev else rev)
        if candidates:
            boundary_spine = min(candidates)

    profile = tuple(sorted(direction(e, ctx) for e in edges))
    return CaterpillarReport(
        is_tree=is_tree,
        is_noncrossing=is_noncrossing,
        is_caterpillar=is_caterpillar,
        boundary_spine=boundary_spine,
        direction_profile=profile,
    )


def direction_sweep_check(s: EdgeSet, ctx: Context) -> bool:
    """Monotone-roots test: does the edge set look like a realized spec?

    Requires one edge per odd direction and none even; the boundary edges must
    form a single consecutive run of length >= 2 (the spine). Reading the
    remaining edges by increasing direction beyond the spine's, each must join
    an interior spine vertex (its root) to a vertex off the closed spine, with
    the roots weakly decreasing. Equivalent to membership in the realized
    family, but computed without the generator.
    """
    n, m = ctx.n, ctx.m
    dirs: dict[int, list[Edge]] = {}
    for e in s:
        dirs.setdefault(direction(e, ctx), []).append(e)
    if sorted(dirs) != list(range(1, n, 2)):
        return False
    if any(len(v) != 1 for v in dirs.values()):
        return False

    positions = {e.a if e.b - e.a == 1 else e.b for e in s if is_boundary(e, ctx)}
    t = len(positions)
    if t < 2:
        return False
    starts = [x for x in positions if (x - 1) % n not in positions]
    if len(starts) != 1:
        return False
    v0 = starts[0]
    closed = {(v0 + i) % n for i in range(t + 1)}
    interior = {(v0 + i) % n for i in range(1, t)}

    prev_root_offset = t
    for j in range(1, m - t + 1):
        d = (2 * v0 + 2 * (t + j) - 1) % n
        e = dirs[d][0]
        ends_in = [v for v in (e.a, e.b) if v in interior]
        if len(ends_in) != 1:
            return False
        root = ends_in[0]
        other = e.b if root == e.a else e.a
        if other in closed:
            return False
        rho = (root - v0) % n
        if rho > prev_root_offset:
            return False
        prev_root_offset = rho
    return True
