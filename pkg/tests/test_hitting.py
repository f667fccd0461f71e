"""Exact hitting-set machinery vs. naive subset enumeration."""

import json
import random

import pytest

from convexblockers import (
    Context,
    Edge,
    SetSystem,
    SolverConfig,
    SolverResult,
    directional_blocker_search,
    enumerate_shp,
    enumerate_spm,
    is_blocking_set,
    min_hitting_sets,
    parse_edge_set,
)
from oracles import naive_min_hitting_sets, random_set_system


def _solve(ground, sets, **cfg):
    system = SetSystem(ground_size=ground, sets=tuple(tuple(s) for s in sets))
    config = SolverConfig(**cfg) if cfg else SolverConfig()
    return min_hitting_sets(system, config)


def test_set_system_validation():
    with pytest.raises(ValueError):
        SetSystem(ground_size=3, sets=((0, 3),))  # element out of range
    with pytest.raises(ValueError):
        SetSystem(ground_size=3, sets=((),))  # empty set is unhittable
    s = SetSystem(ground_size=3, sets=((2, 0, 2), (1,)))
    assert s.sets == ((0, 2), (1,))  # normalized: sorted, deduplicated


def test_set_system_json_roundtrip():
    s = SetSystem(ground_size=5, sets=((0, 3), (1, 2, 4)))
    d = s.to_json_dict()
    assert json.loads(json.dumps(d)) == d
    assert SetSystem.from_json_dict(d) == s
    r = SolverResult(min_size=2, solutions=((0, 1), (0, 2)), status="complete", nodes=17)
    assert SolverResult.from_json_dict(json.loads(json.dumps(r.to_json_dict()))) == r


def test_single_element_sets_force_union():
    res = _solve(4, [(0,), (1,)])
    assert res.min_size == 2
    assert res.solutions == ((0, 1),)
    assert res.status == "complete"


def test_empty_system_rejected():
    # hitting nothing is vacuous; the solver refuses rather than answer 0
    with pytest.raises(ValueError):
        _solve(5, [])


def test_duplicate_and_superset_members():
    # duplicates collapse; a superset never changes the answer
    res = _solve(6, [(0, 1), (1, 0), (0, 1, 5)])
    assert res.min_size == 1
    assert res.solutions == ((0,), (1,))


def test_disjoint_sets_lower_bound():
    res = _solve(9, [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
    assert res.min_size == 3
    assert len(res.solutions) == 27


def test_m2_matchings_frozen():
    ctx = Context(2)
    fam = list(enumerate_spm(ctx))
    system = SetSystem(
        ctx.num_edges, tuple(tuple(sorted(ctx.edge_index(e) for e in s)) for s in fam)
    )
    res = min_hitting_sets(system)
    assert res.min_size == 2
    sols = {frozenset(ctx.edge_at(i) for i in sol) for sol in res.solutions}
    assert sols == {
        parse_edge_set("0-1,0-3"),
        parse_edge_set("0-1,1-2"),
        parse_edge_set("0-3,2-3"),
        parse_edge_set("1-2,2-3"),
    }


def test_random_systems_match_naive_oracle():
    rng = random.Random(20240331)
    for trial in range(200):
        ground, sets = random_set_system(rng)
        want_size, want_sols = naive_min_hitting_sets(ground, sets)
        res = _solve(ground, sets)
        assert res.status == "complete"
        assert res.min_size == want_size, (trial, ground, sets)
        assert set(res.solutions) == set(want_sols), (trial, ground, sets)


def test_solutions_actually_hit():
    rng = random.Random(7)
    for _ in range(40):
        ground, sets = random_set_system(rng, ground_max=10, sets_max=15)
        res = _solve(ground, sets)
        for sol in res.solutions:
            assert all(set(sol) & set(s) for s in sets)


def test_node_limit_reports_incomplete():
    rng = random.Random(99)
    ground, sets = random_set_system(rng, ground_max=14, sets_max=40)
    res = _solve(ground, sets, node_limit=3)
    assert res.status == "incomplete"
    # the reported size is still a genuine upper bound from the greedy start
    assert res.min_size >= naive_min_hitting_sets(ground, sets)[0]


def test_is_blocking_set():
    ctx = Context(2)
    fam = [s for s in enumerate_spm(ctx)]
    assert is_blocking_set(parse_edge_set("0-1,1-2"), fam)
    assert not is_blocking_set(parse_edge_set("0-1"), fam)
    with pytest.warns(UserWarning):
        assert is_blocking_set(parse_edge_set("0-1"), [])


def test_directional_search_matches_generic():
    for m in (2, 3, 4):
        ctx = Context(m)
        fam = [p.edge_set() for p in enumerate_shp(ctx)]
        system = SetSystem(
            ctx.num_edges,
            tuple(tuple(sorted(ctx.edge_index(e) for e in s)) for s in fam),
        )
        generic = min_hitting_sets(system)
        assert generic.min_size == m
        generic_sets = {
            frozenset(ctx.edge_at(i) for i in sol) for sol in generic.solutions
        }
        direct = directional_blocker_search(ctx, fam)
        assert set(direct.solutions) == generic_sets
        assert direct.nodes > 0


def test_directional_search_unhittable_member():
    # a member with no odd-direction edge can never be hit in this scheme
    ctx = Context(3)
    fam = [parse_edge_set("0-2,2-4")]  # directions 2 and 0, both even
    res = directional_blocker_search(ctx, fam)
    assert res.solutions == ()


def test_directional_search_rejects_empty_family():
    with pytest.raises(ValueError):
        directional_blocker_search(Context(3), [])
