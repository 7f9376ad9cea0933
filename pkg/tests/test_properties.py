"""Property tests over random symmetries, placements and sampled patterns."""

import math

from hypothesis import assume, given, strategies as st

from tredoku.analysis import (
    PREDICATES,
    check_run_lengths,
    is_nonsingular,
    is_tredoku,
    is_weak_tredoku,
    leaves,
    run_count_bounds_hold,
    stats,
)
from tredoku.constructions import Existence, ParameterTriple, classify_parameters
from tredoku.formats import dump_pattern, parse_pattern
from tredoku.lattice import (
    POINT_GROUP,
    OverlapError,
    Pattern,
    Symmetry,
    Tile,
    TileType,
    apply_symmetry,
    canonical_form,
    canonical_key,
)
from tredoku.puzzle import GroupKind, all_subcells, groupings, solve, verify_solution

from shared import census, naive_fixed_sets

census_pattern = st.sampled_from(census(8, "weak")[0])
tredoku_pattern = st.sampled_from(census(8, "tredoku")[0])
connected_set = st.integers(1, 5).flatmap(lambda n: st.sampled_from(naive_fixed_sets(n))).map(Pattern)
symmetry = st.builds(
    lambda g, a, b: Symmetry(g.rotation, g.reflected, (a, b)),
    st.sampled_from(POINT_GROUP),
    st.integers(-20, 20),
    st.integers(-20, 20),
)
tile = st.builds(Tile, st.integers(-6, 6), st.integers(-6, 6), st.sampled_from(list(TileType)))


@given(census_pattern, symmetry)
def test_canonical_form_invariant(p, g):
    q = apply_symmetry(p, g)
    assert canonical_form(q) == canonical_form(p)
    assert canonical_form(canonical_form(q)) == canonical_form(q)


@given(connected_set, symmetry)
def test_predicates_and_stats_invariant(p, g):
    q = apply_symmetry(p, g)
    for pred in PREDICATES.values():
        assert pred(p) == pred(q)
    assert check_run_lengths(p) == check_run_lengths(q)
    if check_run_lengths(p):
        assert stats(p).triple == stats(q).triple


@given(connected_set)
def test_counting_identity(p):
    # a connected set of at least two tiles puts every tile in a run of length 3
    assume(len(p) >= 3 and check_run_lengths(p))
    s = stats(p)
    assert s.leaves == 2 * s.tau - 3 * s.rho
    assert 0 <= s.leaves <= s.tau
    assert s.leaves == len(leaves(p))


@given(connected_set)
def test_predicate_hierarchy(p):
    if is_tredoku(p):
        assert is_weak_tredoku(p) and PREDICATES["generalized"](p)
    if is_weak_tredoku(p):
        assert is_nonsingular(p)
        s = stats(p)
        assert s.leaves <= math.ceil(s.tau / 2) + 1


@given(tredoku_pattern)
def test_run_count_bounds(p):
    assert run_count_bounds_hold(p)


@given(st.lists(tile, min_size=1, max_size=12))
def test_pattern_document_round_trip(tiles):
    try:
        p = Pattern(tiles)
    except OverlapError:
        assume(False)
    assume(len(p) >= 3)
    assert parse_pattern(dump_pattern(p)) == p


@given(st.integers(3, 40), st.integers(0, 30))
def test_existing_triples_respect_bounds(tau, rho):
    t = ParameterTriple.from_runs(tau, rho)
    if classify_parameters(t) is Existence.EXISTS:
        assert 0 <= t.leaves <= math.ceil(tau / 2) + 1
        assert 3 * rho <= 2 * tau <= 4 * rho + 2


@given(tredoku_pattern)
def test_groupings_structure(p):
    gs = groupings(p)
    boxes = [g for g in gs if g.kind is GroupKind.BOX]
    lines = [g for g in gs if g.kind is GroupKind.LINE]
    s = stats(p)
    assert len(boxes) == s.tau and len(lines) == 3 * s.rho
    cells = all_subcells(p)
    assert sorted(c for g in boxes for c in g.cells) == sorted(cells)
    per_cell = {c: 0 for c in cells}
    for g in lines:
        for c in g.cells:
            per_cell[c] += 1
    assert set(per_cell.values()) <= {0, 1, 2}


@given(tredoku_pattern, st.permutations(range(1, 10)))
def test_relabelled_solutions_valid(p, perm):
    a = solve(p).assignment
    assert verify_solution(p, {c: perm[v - 1] for c, v in a.items()})


@given(census_pattern)
def test_keys_unique_within_census(p):
    assert canonical_key(p.tiles) == canonical_key(canonical_form(p).tiles)
