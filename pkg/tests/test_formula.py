"""Blocker formula realization, structure validation, direction sweep."""

import itertools

import pytest

from convexblockers import (
    BlockerSpec,
    Context,
    Edge,
    canonical_spm_family,
    direction,
    direction_sweep_check,
    enumerate_formula_family,
    format_edge_set,
    is_blocking_set,
    iter_blocker_specs,
    parse_blocker_spec,
    parse_edge_set,
    realize,
    validate_structure,
)

KNOWN_12GON_BLOCKER = "0-1,1-2,1-10,2-3,2-5,2-7"


def test_realize_known_12gon_blocker():
    ctx = Context(6)
    spec = BlockerSpec(r=0, t=3, epsilons=(1, 2, 4))
    assert format_edge_set(realize(spec, ctx)) == KNOWN_12GON_BLOCKER


def test_realize_star_case():
    # t = 2 with epsilons 1,2,...,m-2 fans every diagonal out of one vertex
    ctx = Context(6)
    spec = BlockerSpec(r=0, t=2, epsilons=(1, 2, 3, 4))
    assert format_edge_set(realize(spec, ctx)) == "0-1,1-2,1-4,1-6,1-8,1-10"


def test_realize_all_boundary_case():
    # t = m needs no epsilons: a boundary path of m edges
    ctx = Context(3)
    assert format_edge_set(realize(BlockerSpec(0, 3, ()), ctx)) == "0-1,1-2,2-3"
    assert format_edge_set(realize(BlockerSpec(5, 3, ()), ctx)) == "0-1,0-5,1-2"


def test_realize_rotation_consistency():
    ctx = Context(5)
    base = realize(BlockerSpec(0, 3, (1, 3)), ctx)
    for r in range(ctx.n):
        rot = realize(BlockerSpec(r, 3, (1, 3)), ctx)
        assert rot == frozenset(
            Edge((e.a + r) % ctx.n, (e.b + r) % ctx.n) for e in base
        )


def test_spec_validation():
    ctx = Context(4)
    bad = [
        BlockerSpec(0, 1, (1, 1, 1)),  # t < 2
        BlockerSpec(0, 5, ()),  # t > m
        BlockerSpec(0, 3, ()),  # wrong epsilon count
        BlockerSpec(0, 3, (0,)),  # epsilon below 1
        BlockerSpec(0, 3, (3,)),  # epsilon above m-2
        BlockerSpec(0, 2, (2, 1)),  # not increasing
        BlockerSpec(0, 2, (1, 1)),  # not strictly increasing
    ]
    for spec in bad:
        with pytest.raises(ValueError):
            realize(spec, ctx)


def test_parse_blocker_spec():
    assert parse_blocker_spec("0:3:1,2,4") == BlockerSpec(0, 3, (1, 2, 4))
    assert parse_blocker_spec("7:4:") == BlockerSpec(7, 4, ())
    assert parse_blocker_spec("7:4") == BlockerSpec(7, 4, ())
    with pytest.raises(ValueError):
        parse_blocker_spec("3:1,2")
    with pytest.raises(ValueError):
        parse_blocker_spec("a:3:1")


def test_iter_blocker_specs_all_valid_and_complete():
    ctx = Context(4)
    specs = list(iter_blocker_specs(ctx))
    assert len(specs) == len(set(specs))
    # r ranges over 2m rotations; per t the epsilon choices are C(m-2, m-t)
    per_r = sum(
        len(list(itertools.combinations(range(1, ctx.m - 1), ctx.m - t)))
        for t in range(2, ctx.m + 1)
    )
    assert len(specs) == ctx.n * per_r
    for spec in specs:
        realize(spec, ctx)  # must not raise


def test_formula_members_block_both_families():
    from convexblockers import enumerate_shp, enumerate_spm

    for m in (2, 3, 4):
        ctx = Context(m)
        spms = list(enumerate_spm(ctx))
        shps = [p.edge_set() for p in enumerate_shp(ctx)]
        for s in enumerate_formula_family(ctx):
            assert is_blocking_set(s, spms)
            assert is_blocking_set(s, shps)


def test_formula_family_m2_frozen():
    fam = enumerate_formula_family(Context(2))
    assert [format_edge_set(s) for s in fam] == [
        "0-1,0-3",
        "0-1,1-2",
        "0-3,2-3",
        "1-2,2-3",
    ]


def test_formula_family_sizes_small_m(theorem_reports):
    for m in (2, 3, 4, 5, 6):
        fam = enumerate_formula_family(Context(m))
        assert len(fam) == len(set(fam))
        assert len(fam) == theorem_reports[m].counts["blockers_spm"]


def test_spec_to_blocker_injective_small_m():
    # every realized set comes from exactly one (r, t, epsilons) triple here;
    # measured, not a stated identity
    for m in (2, 3, 4, 5, 6):
        ctx = Context(m)
        seen = {}
        for spec in iter_blocker_specs(ctx):
            key = realize(spec, ctx)
            assert key not in seen, (m, spec, seen[key])
            seen[key] = spec


def test_validate_structure_known_blocker():
    rep = validate_structure(parse_edge_set(KNOWN_12GON_BLOCKER), Context(6))
    assert rep.is_tree and rep.is_noncrossing and rep.is_caterpillar
    assert rep.boundary_spine == (0, 1, 2, 3)
    assert rep.direction_profile == (1, 3, 5, 7, 9, 11)
    assert rep.passes()


def test_validate_structure_rejects_non_tree():
    rep = validate_structure(parse_edge_set("0-1,2-3"), Context(2))
    assert not rep.is_tree
    assert not rep.passes()
    # a cycle has the right edge count only when it spans fewer vertices
    rep2 = validate_structure(parse_edge_set("0-1,1-2,0-2"), Context(3))
    assert not rep2.is_tree


def test_validate_structure_rejects_crossing():
    rep = validate_structure(parse_edge_set("0-2,1-3,1-2"), Context(2))
    assert not rep.is_noncrossing


def test_validate_structure_non_caterpillar():
    # a spider: three length-2 legs from one hub is a tree, not a caterpillar
    ctx = Context(5)
    rep = validate_structure(parse_edge_set("0-4,4-2,4-7,2-1,7-8,0-9"), ctx)
    assert rep.is_tree
    if rep.is_noncrossing:
        assert not rep.is_caterpillar


def test_validate_structure_star_short_spine():
    # the t=2 star keeps only one boundary run of length 2
    ctx = Context(6)
    rep = validate_structure(parse_edge_set("0-1,1-2,1-4,1-6,1-8,1-10"), ctx)
    assert rep.is_caterpillar
    assert rep.boundary_spine == (0, 1, 2)


def test_validate_structure_rejects_empty_and_out_of_range():
    with pytest.raises(ValueError):
        validate_structure(frozenset(), Context(3))
    with pytest.raises(ValueError):
        validate_structure(parse_edge_set("0-9"), Context(3))


def test_every_formula_member_passes_structure(theorem_reports):
    for m in (2, 3, 4, 5):
        ctx = Context(m)
        for s in enumerate_formula_family(ctx):
            rep = validate_structure(s, ctx)
            assert rep.passes(), (m, format_edge_set(s))
            assert rep.boundary_spine is not None
            assert rep.direction_profile == tuple(range(1, ctx.n, 2))


def test_direction_sweep_accepts_exactly_formula_family():
    # the sweep check recognizes formula membership among one-per-direction
    # candidate sets built from odd direction classes
    for m in (2, 3, 4):
        ctx = Context(m)
        fam = set(enumerate_formula_family(ctx))
        classes = [sorted(ctx.direction_classes[k]) for k in range(1, ctx.n, 2)]
        for combo in itertools.product(*classes):
            s = frozenset(combo)
            if len(s) < ctx.m:
                continue
            assert direction_sweep_check(s, ctx) == (s in fam), format_edge_set(s)


def test_direction_sweep_negative_vectors():
    ctx5 = Context(5)
    # roots must weakly decrease while directions increase; here they grow
    assert not direction_sweep_check(parse_edge_set("0-1,1-2,2-3,1-6,2-7"), ctx5)
    ctx3 = Context(3)
    # two edges in one direction
    assert not direction_sweep_check(parse_edge_set("0-1,1-2,3-4"), ctx3)
    # boundary edges split into two runs
    assert not direction_sweep_check(parse_edge_set("0-1,2-3,0-3"), ctx3)
    # wrapped boundary run is still a single run: this one is fine
    assert direction_sweep_check(parse_edge_set("0-1,0-5,1-2"), ctx3)


def test_direction_sweep_rejects_wrong_size():
    ctx = Context(3)
    assert not direction_sweep_check(parse_edge_set("0-1,1-2"), ctx)
    assert not direction_sweep_check(parse_edge_set("0-1,1-2,2-3,3-4"), ctx)


def test_odd_classes_are_not_blockers_of_each_other():
    # sanity for the sweep test above: a full odd class is one-per-direction
    # only when m = 1, so none of the canonical SPMs sneaks into the family
    ctx = Context(3)
    for s in canonical_spm_family(ctx):
        assert len({direction(e, ctx) for e in s}) == 1
        assert not direction_sweep_check(s, ctx)
