"""Exact minimum hitting sets.

min_hitting_sets is the trust anchor of the toolkit: a branch-and-bound
search over an abstract SetSystem that returns the exact minimum size and
*all* optimal solutions. It sees nothing but index sets, so its answers are
independent of any geometric reasoning they are later compared against.

Bounds are deliberately simple: the lower bound is the number of still-unhit
members of a few precomputed pairwise-disjoint packings (each needs its own
element), the upper bound is a greedy cover. Search state lives in Python
big-int bitmasks over member indices, which keeps the per-node cost at a
handful of word operations even for thousands of members.

directional_blocker_search is the geometric counterpart: it scans only
candidates with one edge per odd direction class, pruned by deadline masks.
Its agreement with the generic solver is established by tests, never assumed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .geometry import Context, Edge, EdgeSet

__all__ = [
    "DirectionalResult",
    "SetSystem",
    "SolverConfig",
    "SolverResult",
    "directional_blocker_search",
    "is_blocking_set",
    "min_hitting_sets",
]


class NodeLimitExceeded(Exception):
    """Raised internally when the search exceeds its node budget."""


@dataclass(frozen=True)
class SetSystem:
    """A finite ground set 0..ground_size-1 and a list of nonempty subsets."""

    ground_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.ground_size < 0:
            raise ValueError("ground_size must be nonnegative")
        norm = []
        for s in self.sets:
            t = tuple(sorted(set(s)))
            if not t:
                raise ValueError("member sets must be nonempty")
            if t[0] < 0 or t[-1] >= self.ground_size:
                raise ValueError(f"set {t} has elements outside 0..{self.ground_size - 1}")
            norm.append(t)
        object.__setattr__(self, "sets", tuple(norm))

    def to_json_dict(self) -> dict:
        return {"ground_size": self.ground_size, "sets": [list(s) for s in self.sets]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "SetSystem":
        return cls(ground_size=int(d["ground_size"]), sets=tuple(tuple(int(x) for x in s) for s in d["sets"]))


@dataclass(frozen=True)
class SolverConfig:
    node_limit: int = 1_000_000_000


@dataclass(frozen=True)
class SolverResult:
    """Outcome of an exact search.

    status "complete" means min_size is proven and solutions is the full set
    of optima. status "incomplete" means the node budget ran out; min_size is
    then only the best size seen (or -1 if none) and solutions may be partial.
    """

    min_size: int
    solutions: tuple[tuple[int, ...], ...]
    status: str
    nodes: int

    def to_json_dict(self) -> dict:
        return {
            "min_size": self.min_size,
            "solutions": [list(s) for s in self.solutions],
            "status": self.status,
            "nodes": self.nodes,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SolverResult":
        return cls(
            min_size=int(d["min_size"]),
            solutions=tuple(tuple(int(x) for x in s) for s in d["solutions"]),
            status=str(d["status"]),
            nodes=int(d["nodes"]),
        )


def _greedy_packings(masks: list[int]) -> list[int]:
    """A few pairwise-disjoint subfamilies, returned as member-index bitmasks.

    Scanning orders differ so at least one packing tends to survive deep into
    the search. Deterministic by construction.
    """
    k = len(masks)
    orders = [range(k), range(k - 1, -1, -1), list(range(k // 2, k)) + list(range(k // 2))]
    packings: list[int] = []
    for order in orders:
        union = 0
        chosen = 0
        for i in order:
            if not masks[i] & union:
                union |= masks[i]
                chosen |= 1 << i
        if chosen not in packings:
            packings.append(chosen)
    return packings


def min_hitting_sets(system: SetSystem, config: SolverConfig | None = None) -> SolverResult:
    """Exact minimum-size hitting sets of a set system, all of them.

    Branches on the elements of the lowest-index unhit member (members are
    pre-sorted by size so that branch factors stay small), prunes with the
    packing lower bound, and deduplicates solutions found along different
    branch orders. Two phases: prove the minimum size, then enumerate every
    solution of exactly that size.
    """
    if config is None:
        config = SolverConfig()
    if not system.sets:
        raise ValueError("set system has no member sets")

    # Deduplicate member sets and order them by size: identical members are
    # redundant for hitting, and small members make good branch points.
    unique = sorted(set(system.sets), key=lambda s: (len(s), s))
    k = len(unique)
    full = (1 << k) - 1
    elem_lists = [list(s) for s in unique]
    cov: dict[int, int] = {}
    for i, s in enumerate(unique):
        for e in s:
            cov[e] = cov.get(e, 0) | (1 << i)

    member_masks = [sum(1 << e for e in s) for s in unique]
    packings = _greedy_packings(member_masks)

    nodes = 0
    limit = config.node_limit

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise NodeLimitExceeded

    def lower_bound(hit: int) -> int:
        rest = full ^ hit
        lb = 1
        for p in packings:
            c = (p & rest).bit_count()
            if c > lb:
                lb = c
        return lb

    def first_unhit(hit: int) -> int:
        x = full ^ hit
        return (x & -x).bit_length() - 1

    # Greedy upper bound: repeatedly take the element covering most unhit members.
    hit = 0
    greedy_size = 0
    while hit != full:
        rest = full ^ hit
        best_e = min(cov, key=lambda e: (-(cov[e] & rest).bit_count(), e))
        hit |= cov[best_e]
        greedy_size += 1

    best = greedy_size
    status = "complete"

    def search_min(hit: int, depth: int) -> None:
        nonlocal best
        tick()
        if hit == full:
            if depth < best:
                best = depth
            return
        if depth + lower_bound(hit) >= best:
            return
        for e in elem_lists[first_unhit(hit)]:
            search_min(hit | cov[e], depth + 1)

    solutions: set[tuple[int, ...]] = set()

    def enum_all(hit: int, depth: int, chosen: list[int], bound: int) -> None:
        tick()
        if hit == full:
            solutions.add(tuple(sorted(chosen)))
            return
        if depth == bound or depth + lower_bound(hit) > bound:
            return
        for e in elem_lists[first_unhit(hit)]:
            chosen.append(e)
            enum_all(hit | cov[e], depth + 1, chosen, bound)
            chosen.pop()

    try:
        search_min(0, 0)
        enum_all(0, 0, [], best)
    except NodeLimitExceeded:
        # best is still a valid upper bound (greedy completed); solutions may
        # be missing or partial, which status makes explicit.
        status = "incomplete"

    return SolverResult(
        min_size=best,
        solutions=tuple(sorted(solutions)),
        status=status,
        nodes=nodes,
    )


def is_blocking_set(candidate: EdgeSet, family: Iterable[EdgeSet]) -> bool:
    """True iff the candidate intersects every member of the family."""
    fam = list(family)
    if not fam:
        warnings.warn("is_blocking_set called with an empty family; vacuously true", stacklevel=2)
        return True
    return all(candidate & member for member in fam)


@dataclass(frozen=True)
class DirectionalResult:
    solutions: tuple[EdgeSet, ...]
    nodes: int


def directional_blocker_search(ctx: Context, family: Iterable[EdgeSet]) -> DirectionalResult:
    """All size-m blocking sets with exactly one edge per odd direction class.

    Scans the m odd classes in direction order, choosing one edge from each.
    A family member can only ever be hit through its own odd-direction edges,
    so each member carries a deadline: the last class position at which one of
    its odd edges could still be chosen. After filling a position, every
    member whose deadline has passed must already be hit, or the branch dies.
    """
    fam = [frozenset(f) for f in family]
    if not fam:
        raise ValueError("directional search needs a nonempty family")
    m, n = ctx.m, ctx.n
    classes = [sorted(ctx.direction_classes[2 * i + 1]) for i in range(m)]
    pos_of_dir = {2 * i + 1: i for i in range(m)}

    fcount = len(fam)
    all_bits = (1 << fcount) - 1
    cov: dict[Edge, int] = {}
    deadline_bucket = [0] * m
    for fi, member in enumerate(fam):
        last = -1
        for e in member:
            d = (e.a + e.b) % n
            if d % 2 == 1:
                p = pos_of_dir[d]
                cov[e] = cov.get(e, 0) | (1 << fi)
                last = max(last, p)
        if last < 0:
            # No odd-direction edge at all: unhittable in this search space.
            return DirectionalResult(solutions=(), nodes=0)
        deadline_bucket[last] |= 1 << fi
    cum_deadline = []
    acc = 0
    for p in range(m):
        acc |= deadline_bucket[p]
        cum_deadline.append(acc)

    solutions: list[EdgeSet] = []
    chosen: list[Edge] = []
    nodes = 0

    def rec(pos: int, hit: int) -> None:
        nonlocal nodes
        if pos == m:
            solutions.append(frozenset(chosen))
            return
        must = cum_deadline[pos]
        for e in classes[pos]:
            nodes += 1
            h2 = hit | cov.get(e, 0)
            if must & (all_bits ^ h2):
                continue
            chosen.append(e)
            rec(pos + 1, h2)
            chosen.pop()

    rec(0, 0)
    solutions.sort(key=lambda s: tuple(sorted(s)))
    return DirectionalResult(solutions=tuple(solutions), nodes=nodes)
