
import pytest

from tredoku import figures as fig
from tredoku.analysis import PREDICATES, is_nonsingular, leaves, maximal_runs, stats
from tredoku.enumeration import (
    EnumQuery,
    SearchConfig,
    catalog_classes,
    count_hexagon,
    enumerate_by_augmentation,
    enumerate_patterns,
    enumerate_verdant,
    hexagon_triangles,
    placed_patterns,
    search_zero_leaf,
    verdant_classes,
    verify_theorem_main,
    verify_theorem_main_weak,
    BudgetExceeded,
)
from tredoku.lattice import Pattern, canonical_key, tile_triangles

from shared import census, naive_fixed_sets

MAX_NAIVE = 6


def naive_classes(n_max, variant):
    pred = PREDICATES[variant]
    out = set()
    for n in range(3, n_max + 1):
        for s in naive_fixed_sets(n):
            p = Pattern(s)
            if pred(p):
                out.add(canonical_key(p.tiles))
    return sorted(out)


def keys(pats):
    return [canonical_key(p.tiles) for p in pats]


@pytest.mark.parametrize("variant", ["tredoku", "weak", "generalized"])
def test_run_decision_engine_matches_naive_oracle(variant):
    pats, rep = enumerate_patterns(EnumQuery(MAX_NAIVE, variant), workers=1)
    assert rep.complete
    assert keys(pats) == naive_classes(MAX_NAIVE, variant)


@pytest.mark.parametrize("variant", ["tredoku", "weak", "generalized"])
def test_augmentation_engine_matches_naive_oracle(variant):
    pats = enumerate_by_augmentation(EnumQuery(MAX_NAIVE, variant))
    assert keys(pats) == naive_classes(MAX_NAIVE, variant)


def test_engines_agree_at_seven():
    for variant in ("tredoku", "generalized"):
        a = keys(enumerate_by_augmentation(EnumQuery(7, variant)))
        b = keys(census(7, variant)[0])
        assert a == b


def test_no_duplicate_classes():
    pats = census(8, "weak")[0]
    assert len(set(keys(pats))) == len(pats)


def test_tredoku_three_tiles_empty():
    pats, _ = enumerate_patterns(EnumQuery(3, "tredoku"), workers=1)
    assert pats == []


def test_weak_three_tiles_are_single_runs():
    pats, _ = enumerate_patterns(EnumQuery(3, "weak"), workers=1)
    assert pats
    for p in pats:
        assert sorted(len(r) for r in maximal_runs(p)) == [1, 1, 1, 3]
        assert leaves(p) == set(p.tiles)


def test_five_tile_tredoku():
    pats, rep = enumerate_patterns(EnumQuery(5, "tredoku", min_tiles=5), workers=1)
    assert len(pats) == 4
    assert all(stats(p).triple == (5, 2, 4) for p in pats)
    assert sorted(keys(pats)) == sorted(keys(fig.drawing(d) for d in fig.VERDANT[5]))


def test_filters():
    pats, rep = enumerate_patterns(EnumQuery(8, "tredoku", rho=4, leaves=4), workers=1)
    assert set(rep.counts) == {(8, 4, 4)}
    assert all(stats(p).triple == (8, 4, 4) for p in pats)


# -- existence checks at desk scale -----------------------------------------------------


EXISTING_UP_TO_9 = {(5, 2, 4), (6, 3, 3), (7, 3, 5), (7, 4, 2), (8, 4, 4), (8, 5, 1), (9, 4, 6), (9, 5, 3), (9, 6, 0)}


def test_main_existence_up_to_eight():
    rep = verify_theorem_main(8, workers=1)
    assert rep.ok
    assert rep.census.triples() == {t for t in EXISTING_UP_TO_9 if t[0] <= 8}


def test_weak_existence_up_to_eight():
    rep = verify_theorem_main_weak(8, workers=1)
    assert rep.ok
    found = rep.census.triples()
    assert (3, 1, 3) in found
    assert not found & {(4, 2, 2), (5, 3, 1), (6, 4, 0)}


def test_weak_census_nonsingular():
    assert all(is_nonsingular(p) for p in census(8, "weak")[0])


# -- zero-leaf searches ------------------------------------------------------------------


def test_zero_leaf_six_empty():
    assert search_zero_leaf(6, workers=1).patterns == []


def test_zero_leaf_nine():
    res = search_zero_leaf(9, workers=1)
    assert res.complete
    assert canonical_key(fig.drawing(fig.ZERO_LEAF_9).tiles) in keys(res.patterns)
    for p in res.patterns:
        assert all(n % 3 == 0 for n in stats(p).type_counts)


@pytest.mark.parametrize("pruned", [True, False])
def test_zero_leaf_twelve_empty(pruned):
    res = search_zero_leaf(12, pruned=pruned, workers=1)
    assert res.complete and res.patterns == []


def test_zero_leaf_pruning_saves_work():
    a = search_zero_leaf(12, pruned=True, workers=1)
    b = search_zero_leaf(12, pruned=False, workers=1)
    assert a.nodes < b.nodes


def test_zero_leaf_not_multiple_of_three():
    assert search_zero_leaf(10, workers=1).patterns == []


# -- verdant ------------------------------------------------------------------------------------


def test_verdant_up_to_nine():
    rep = enumerate_verdant(9, workers=1)
    assert rep.complete
    assert rep.counts == {(5, 2, 4): 4, (7, 3, 5): 1, (9, 4, 6): 1}
    assert verdant_classes(9, workers=1) == catalog_classes(9)


# -- hexagons -----------------------------------------------------------------------------------


def test_hexagon_region_sizes():
    assert len(hexagon_triangles(1)) == 6
    assert len(hexagon_triangles(2)) == 24


@pytest.mark.parametrize("variant", ["tredoku", "weak", "generalized"])
def test_hexagon_one_empty(variant):
    assert count_hexagon(1, variant, workers=1).placed == 0


def test_hexagon_monotone_and_within_region():
    region = hexagon_triangles(2)
    h1, h2 = count_hexagon(1, workers=1), count_hexagon(2, workers=1)
    assert h2.placed >= h1.placed and h2.classes > 0
    placed, _, _ = placed_patterns(SearchConfig(max_tiles=12, region=region), workers=1)
    for ts in placed:
        assert all(x in region for t in ts for x in tile_triangles(t))


def test_hexagon_placed_count_matches_oracle():
    # every tredoku placement inside the side-2 hexagon, found by filtering all
    # translates of all connected tile sets
    region = hexagon_triangles(2)
    found = set()
    for n in range(3, 7):
        for s in naive_fixed_sets(n):
            for da in range(-3, 4):
                for db in range(-3, 4):
                    moved = [t._replace(a=t.a + da, b=t.b + db) for t in s]
                    if all(x in region for t in moved for x in tile_triangles(t)):
                        p = Pattern(moved)
                        if PREDICATES["tredoku"](p):
                            found.add(frozenset(moved))
    big = [ts for ts in placed_patterns(SearchConfig(max_tiles=12, region=region), workers=1)[0]
           if len(ts) <= 6 and PREDICATES["tredoku"](Pattern(ts))]
    assert {frozenset(ts) for ts in big} == found


def test_hexagon_limit():
    with pytest.raises(BudgetExceeded):
        count_hexagon(3, max_side=2)


# -- parallel determinism and budgets ------------------------------------------------------------


def test_worker_count_does_not_change_results():
    a, ra = enumerate_patterns(EnumQuery(7, "weak"), workers=1)
    b, rb = enumerate_patterns(EnumQuery(7, "weak"), workers=3)
    assert keys(a) == keys(b) and ra.counts == rb.counts


def test_budget_marks_incomplete():
    _, rep = enumerate_patterns(EnumQuery(8, "tredoku"), workers=1, node_budget=50)
    assert not rep.complete


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("TREDOKU_NODE_BUDGET", "50")
    _, rep = enumerate_patterns(EnumQuery(8, "tredoku"), workers=1)
    assert not rep.complete


def test_by_tau_totals():
    rep = census(8, "tredoku")[1]
    assert sum(rep.by_tau().values()) == sum(rep.counts.values())
    assert set(t for t, _, _ in rep.counts) == set(rep.by_tau())
