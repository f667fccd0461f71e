"""End-to-end theorem reports and their failure detection."""

import json

import pytest

from convexblockers import (
    Context,
    Edge,
    SolverConfig,
    TheoremReport,
    boundary_hamiltonian_paths,
    check_boundary_edges_consecutive,
    check_one_per_odd_direction,
    direction_class,
    parse_edge_set,
    verify_theorems,
)

SHP_COUNT = {m: 2 * m * 2 ** (2 * m - 3) for m in range(2, 8)}
CATALAN = {2: 2, 3: 5, 4: 14, 5: 42, 6: 132}


def test_report_counts_and_flags(theorem_reports):
    for m, rep in theorem_reports.items():
        assert rep.m == m
        assert rep.status == "pass"
        assert rep.counts["spm"] == CATALAN[m]
        assert rep.counts["shp"] == SHP_COUNT[m]
        assert rep.counts["blockers_spm"] == rep.counts["blockers_shp"]
        assert rep.counts["formula_family"] == rep.counts["blockers_spm"]
        assert rep.min_sizes == {"spm": m, "shp": m}
        assert rep.equalities == {
            "blockers_shp_eq_blockers_spm": True,
            "blockers_spm_eq_formula_family": True,
        }
        assert rep.counterexample is None
        assert rep.solver["spm"]["status"] == "complete"
        assert rep.solver["shp"]["status"] == "complete"


def test_report_structure_block(theorem_reports):
    for rep in theorem_reports.values():
        st = rep.structure
        assert st["checked"] == rep.counts["blockers_spm"]
        assert st["all_simple_caterpillar"]
        assert st["all_boundary_spine"]
        assert st["all_direction_sweep"]
        assert st["one_per_odd_direction"]
        assert st["boundary_edges_consecutive"]


def test_report_json_roundtrip(theorem_reports):
    rep = theorem_reports[3]
    d = rep.to_json_dict()
    again = TheoremReport.from_json_dict(json.loads(rep.canonical_json()))
    assert again == rep
    assert json.loads(json.dumps(d)) == d
    # canonical form is sorted and compact
    text = rep.canonical_json()
    assert text == json.dumps(json.loads(text), sort_keys=True, separators=(",", ":"))


def test_report_hash_covers_content(theorem_reports):
    rep = theorem_reports[2]
    d = rep.to_json_dict()
    assert d["content_hash"] == rep.content_hash
    # hashing is over everything except the hash itself
    import hashlib

    stripped = {k: v for k, v in d.items() if k != "content_hash"}
    blob = json.dumps(stripped, sort_keys=True, separators=(",", ":"))
    assert hashlib.sha256(blob.encode()).hexdigest() == rep.content_hash


def test_reports_deterministic(theorem_reports):
    fresh = verify_theorems(3)
    assert fresh.canonical_json() == theorem_reports[3].canonical_json()


def test_passes_matches_status(theorem_reports):
    for rep in theorem_reports.values():
        assert rep.passes() == (rep.status == "pass")


def test_verify_rejects_bad_m():
    with pytest.raises(ValueError):
        verify_theorems(1)


def test_verify_inconclusive_on_tiny_node_limit():
    rep = verify_theorems(3, SolverConfig(node_limit=2))
    assert rep.status == "inconclusive"
    assert not rep.passes()


def test_check_one_per_odd_direction():
    ctx = Context(3)
    good = parse_edge_set("0-1,1-2,2-3")
    assert check_one_per_odd_direction([good], ctx)
    assert not check_one_per_odd_direction([parse_edge_set("0-1,1-2,3-4")], ctx)
    assert not check_one_per_odd_direction([parse_edge_set("0-1,1-2,0-2")], ctx)
    assert not check_one_per_odd_direction([good, parse_edge_set("0-1,1-2")], ctx)
    assert check_one_per_odd_direction([], ctx)


def test_check_boundary_edges_consecutive():
    ctx = Context(3)
    assert check_boundary_edges_consecutive([parse_edge_set("0-1,1-2,2-5")], ctx)
    assert check_boundary_edges_consecutive([parse_edge_set("0-1,0-5,1-4")], ctx)
    assert not check_boundary_edges_consecutive([parse_edge_set("0-1,2-3,1-4")], ctx)
    # a single boundary edge or none at all is a failure for these families
    assert not check_boundary_edges_consecutive([parse_edge_set("0-3,1-4,2-5")], ctx)


def test_boundary_circuit_control_family():
    # control: against the 2m boundary Hamiltonian paths alone, two opposite
    # boundary edges already hit everything, so the theorem-level minimum m
    # genuinely depends on the full family, not an artifact of the solver
    from convexblockers import SetSystem, min_hitting_sets

    ctx = Context(3)
    fam = [p.edge_set() for p in boundary_hamiltonian_paths(ctx)]
    system = SetSystem(
        ctx.num_edges,
        tuple(tuple(sorted(ctx.edge_index(e) for e in s)) for s in fam),
    )
    res = min_hitting_sets(system)
    assert res.min_size == 2
    for sol in res.solutions:
        edges = [ctx.edge_at(i) for i in sol]
        assert all((e.b - e.a) % ctx.n in (1, ctx.n - 1) for e in edges)


def _mutated_family(fam, drop=None, add=None):
    out = [s for s in fam if s != drop]
    if add is not None:
        out.append(add)
    return out


def test_formula_mismatch_detected_via_comparison():
    # simulate a wrong formula by comparing solver blockers against a
    # deliberately damaged family; the set comparison must notice
    from convexblockers import enumerate_formula_family, enumerate_spm
    from convexblockers import SetSystem, min_hitting_sets

    ctx = Context(3)
    fam = list(enumerate_formula_family(ctx))
    spms = list(enumerate_spm(ctx))
    system = SetSystem(
        ctx.num_edges,
        tuple(tuple(sorted(ctx.edge_index(e) for e in s)) for s in spms),
    )
    blockers = {
        frozenset(ctx.edge_at(i) for i in sol)
        for sol in min_hitting_sets(system).solutions
    }
    assert blockers == set(fam)
    damaged = set(_mutated_family(fam, drop=fam[0]))
    assert blockers != damaged
    swapped = set(_mutated_family(fam, drop=fam[0], add=parse_edge_set("0-2,1-3,2-4")))
    assert blockers != swapped


@pytest.mark.parametrize("m", [2, 3, 4])
def test_every_blocker_is_minimal_exhaustively(m):
    # remove any single edge from any blocker: some family member escapes
    import itertools

    from convexblockers import enumerate_formula_family, enumerate_spm, is_blocking_set

    ctx = Context(m)
    spms = list(enumerate_spm(ctx))
    for blocker in enumerate_formula_family(ctx):
        assert is_blocking_set(blocker, spms)
        for e in blocker:
            assert not is_blocking_set(blocker - {e}, spms)
    # and no smaller set at all blocks (full subset scan, small m only)
    if m <= 3:
        for size in range(m):
            for combo in itertools.combinations(ctx.all_edges, size):
                assert not is_blocking_set(frozenset(combo), spms)
