"""Exhaustive symmetry-reduced search for patterns with runs of length 1 or 3.

The main engine grows a pattern one *run* at a time.  It starts from a root
tile that will be the smallest tile of the finished pattern (under the
``(b, a, type)`` order) and repeatedly takes the first run segment whose two
ends are not yet sealed.  For that segment it chooses, side by side, whether
to seal the end (the triangle beyond it must stay empty) or to place one more
tile there; the segment must finish with length 1 or 3.  Every placed pattern
that is edge-connected with runs in {1, 3} is produced exactly once per
translation class, and congruent copies are merged through the canonical form.

A second, slower engine does textbook canonical augmentation over all
edge-connected tile sets; it exists to cross-check the first.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .analysis import PREDICATES, VARIANTS, is_verdant, stats
from .constructions import (
    Existence,
    ParameterTriple,
    classify_parameters,
    feasible_triples,
    leaf_bound,
    verdant_catalog,
)
from .lattice import (
    Pattern,
    Tile,
    TileType,
    TriCell,
    Up,
    canonical_key,
    pattern_from_key,
    side_directions,
    tile_from_triangles,
    tile_sort_key,
    tile_triangles,
    triangle_neighbors,
    triangle_vertices,
)

WORKERS_ENV = "TREDOKU_WORKERS"
BUDGET_ENV = "TREDOKU_NODE_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


def default_workers() -> int:
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def default_budget() -> int | None:
    v = os.environ.get(BUDGET_ENV)
    return int(v) if v else None


# ---------------------------------------------------------------------------
# Queries and reports


@dataclass(frozen=True)
class EnumQuery:
    max_tiles: int
    variant: str = "tredoku"
    rho: int | None = None
    leaves: int | None = None
    hexagon_side: int | None = None
    min_tiles: int = 3

    def __post_init__(self):
        if self.max_tiles < 3:
            raise ValueError("max_tiles must be at least 3")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")


@dataclass
class CensusReport:
    counts: dict = field(default_factory=dict)  # (tau, rho, leaves) -> number of congruence classes
    nodes: int = 0
    wall_time: float = 0.0
    complete: bool = True

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [(*k, self.counts[k]) for k in sorted(self.counts)]

    def by_tau(self) -> dict[int, int]:
        out: Counter = Counter()
        for (tau, _, _), n in self.counts.items():
            out[tau] += n
        return dict(sorted(out.items()))

    def triples(self) -> set:
        return {k for k, n in self.counts.items() if n}


# ---------------------------------------------------------------------------
# Run-decision engine


@dataclass(frozen=True)
class SearchConfig:
    max_tiles: int
    exact: bool = False  # only emit patterns with exactly max_tiles tiles
    allow_short_runs: bool = True  # False: every run must reach length 3
    prune: bool = True  # lower bounds on the tiles still needed
    region: frozenset | None = None  # allowed triangles
    node_budget: int | None = None
    max_long_runs: int | None = None  # cap on runs of length 3


def _tile_key(t) -> tuple[int, int, int]:
    return (t[1], t[0], t[2])


# Plain-tuple geometry for the inner loop: triangles are (a, b, orient) and
# tiles (a, b, type), with directions and types as small ints.
_ACROSS = (
    ((0, -1), (-1, 0), (0, 0)),  # from an Up triangle, across D1, D2, D3
    ((0, 1), (1, 0), (0, 0)),  # from a Down triangle
)
_DOWN_OFFSET = ((0, 0), (-1, 0), (0, -1))  # Top, Left, Right
_INTERNAL = (2, 1, 0)  # internal edge direction of Top, Left, Right
_SIDES = tuple(tuple(int(d) for d in side_directions(TileType(k))) for k in range(3))


def _tris(t):
    a, b, k = t
    da, db = _DOWN_OFFSET[k]
    return (a, b, 0), (a + da, b + db, 1)


def _across(x, d):
    a, b, o = x
    da, db = _ACROSS[o][d]
    return (a + da, b + db, 1 - o)


def _tiles_at(x, d) -> list:
    """The two tiles containing triangle ``x`` whose internal edge is not parallel to ``d``."""
    a, b, o = x
    if o == 0:
        return [(a, b, k) for k in range(3) if _INTERNAL[k] != d]
    out = []
    for e, (k, da, db) in enumerate(((2, 0, 1), (1, 1, 0), (0, 0, 0))):
        if e != d:
            out.append((a + da, b + db, k))
    return out


class _Search:
    def __init__(self, cfg: SearchConfig, root: Tile, emit: Callable[[list], None]):
        self.cfg = cfg
        self.root = tuple(root[:2]) + (int(root[2]),)
        self.root_key = _tile_key(self.root)
        self.emit = emit
        self.tri: dict = {}
        self.tiles: list = []
        self.forbidden: set = set()
        self.nodes = 0
        self.type_counts = [0, 0, 0]
        self.region = None if cfg.region is None else {tuple((x[0], x[1], int(x[2]))) for x in cfg.region}

    # -- primitive moves ------------------------------------------------------

    def _fits(self, t) -> bool:
        if self.tiles and (t[1], t[0], t[2]) <= self.root_key:
            return False
        region = self.region
        for x in _tris(t):
            if x in self.tri or x in self.forbidden:
                return False
            if region is not None and x not in region:
                return False
        return True

    def _place(self, t) -> bool:
        """Place ``t``; undo and return False if some run grows past 3."""
        for x in _tris(t):
            self.tri[x] = t
        self.tiles.append(t)
        self.type_counts[t[2]] += 1
        for d in _SIDES[t[2]]:
            if len(self.run(t, d)[0]) > 3:
                self._unplace(t)
                return False
        return True

    def _unplace(self, t) -> None:
        for x in _tris(t):
            del self.tri[x]
        self.tiles.pop()
        self.type_counts[t[2]] -= 1

    def run(self, t, d):
        """Maximal run through ``t`` parallel to ``d`` and its two exit triangles."""
        tri = self.tri
        sides, exits = [], []
        for x in _tris(t):
            seq = []
            while True:
                across = _across(x, d)
                nxt = tri.get(across)
                if nxt is None or len(seq) > 3:
                    break
                seq.append(nxt)
                p, q = _tris(nxt)
                x = q if p == across else p
            sides.append(seq)
            exits.append(across)
        return sides[0][::-1] + [t] + sides[1], exits

    def _sealed(self, t, d) -> bool:
        f = self.forbidden
        for x in _tris(t):
            # walk to the exit on this side
            tri = self.tri
            while True:
                across = _across(x, d)
                nxt = tri.get(across)
                if nxt is None:
                    break
                p, q = _tris(nxt)
                x = q if p == across else p
            if across not in f:
                return False
        return True

    # -- bounds -----------------------------------------------------------------

    def _long_counts(self) -> tuple[int, int]:
        """Runs already of length 2 or 3 (each ends with length 3) and how many have length 2."""
        seen = set()
        runs = pairs = 0
        for t in self.tiles:
            for d in _SIDES[t[2]]:
                if (t, d) in seen:
                    continue
                tiles, _ = self.run(t, d)
                for s in tiles:
                    seen.add((s, d))
                runs += len(tiles) > 1
                pairs += len(tiles) == 2
        return runs, pairs

    def _needed(self) -> int:
        """Lower bound on tiles still to be placed when every run must reach length 3."""
        short = [[0, 0, 0, 0] for _ in range(3)]
        seen = set()
        for t in self.tiles:
            for d in _SIDES[t[2]]:
                if (t, d) in seen:
                    continue
                tiles, exits = self.run(t, d)
                for s in tiles:
                    seen.add((s, d))
                if not (exits[0] in self.forbidden and exits[1] in self.forbidden):
                    short[d][len(tiles)] += 1
        # a new tile can join two length-1 segments into a run of 3
        best = max(c[2] + c[1] // 2 + 2 * (c[1] % 2) for c in short)
        # every type count is a multiple of 3 when all runs have length 3
        return max(best, sum((-n) % 3 for n in self.type_counts))

    # -- search -------------------------------------------------------------------

    def start(self) -> None:
        if not self._fits(self.root):
            return
        self._place(self.root)
        self.search(0)
        self._unplace(self.root)

    def search(self, first: int) -> None:
        self.nodes += 1
        cfg = self.cfg
        if cfg.node_budget is not None and self.nodes > cfg.node_budget:
            raise BudgetExceeded(self.nodes)
        n = len(self.tiles)
        if cfg.prune and not cfg.allow_short_runs and n + self._needed() > cfg.max_tiles:
            return
        if cfg.max_long_runs is not None:
            runs, pairs = self._long_counts()
            if runs > cfg.max_long_runs:
                return
            # each run still to start shares a tile with the rest, so adds at most 2 tiles
            if cfg.exact and n + pairs + 2 * (cfg.max_long_runs - runs) < cfg.max_tiles:
                return
        tiles = self.tiles
        for i in range(first, n):
            t = tiles[i]
            for d in _SIDES[t[2]]:
                if not self._sealed(t, d):
                    self.grow(t, d, 0, i)
                    return
        if not cfg.exact or n == cfg.max_tiles:
            self.emit(list(tiles))

    def grow(self, t, d, side: int, first: int) -> None:
        if side == 2:
            length = len(self.run(t, d)[0])
            if length == 3 or (length == 1 and self.cfg.allow_short_runs):
                self.search(first)
            return
        tiles, exits = self.run(t, d)
        x = exits[side]
        if x in self.forbidden:
            self.grow(t, d, side + 1, first)
            return
        # seal this end
        self.forbidden.add(x)
        self.grow(t, d, side + 1, first)
        self.forbidden.discard(x)
        # or put another tile there
        if len(tiles) < 3 and len(self.tiles) < self.cfg.max_tiles:
            for s in _tiles_at(x, d):
                if self._fits(s) and self._place(s):
                    self.grow(t, d, side, first)
                    self._unplace(s)


def _roots(cfg: SearchConfig) -> list[Tile]:
    if cfg.region is None:
        return [Tile(0, 0, k) for k in TileType]
    out = set()
    for x in cfg.region:
        for other, _ in triangle_neighbors(x):
            if other in cfg.region:
                out.add(tile_from_triangles(x, other))
    return sorted(out, key=tile_sort_key)


def _run_roots(args) -> tuple[list[tuple], int, bool]:
    """Worker: search from each root; return emitted placed tile lists (sorted), nodes, complete."""
    cfg, roots, accept_name = args
    accept = _ACCEPTORS[accept_name] if isinstance(accept_name, str) else accept_name
    found: list[tuple] = []
    nodes = 0
    complete = True
    for r in roots:
        def emit(ts, found=found):
            if accept(ts):
                found.append(tuple(sorted((Tile(a, b, TileType(k)) for a, b, k in ts), key=_tile_key)))
        s = _Search(cfg, r, emit)
        try:
            s.start()
        except BudgetExceeded:
            complete = False
        nodes += s.nodes
        if not complete:
            break
    return found, nodes, complete


def _accept_any(ts) -> bool:
    return True


_ACCEPTORS = {"any": _accept_any}


def placed_patterns(
    cfg: SearchConfig,
    accept: Callable[[list[Tile]], bool] | str = "any",
    workers: int | None = None,
) -> tuple[list[tuple], int, bool]:
    """All placed tile sets found by the run-decision search, sorted, plus node count and completeness.

    Without a region the root is fixed at the origin, so each result is one
    translation class; with a region every placement inside it is returned.
    """
    workers = default_workers() if workers is None else workers
    roots = _roots(cfg)
    if cfg.node_budget is not None and workers > 1:
        cfg = SearchConfig(**{**cfg.__dict__, "node_budget": max(1, cfg.node_budget // workers)})
    if workers <= 1 or len(roots) <= 1:
        results = [_run_roots((cfg, roots, accept))]
    else:
        chunks = [roots[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_roots, [(cfg, c, accept) for c in chunks if c]))
    found = sorted(x for r in results for x in r[0])
    return found, sum(r[1] for r in results), all(r[2] for r in results)


# ---------------------------------------------------------------------------
# Public enumeration API


def hexagon_triangles(m: int) -> frozenset:
    """Unit triangles inside the regular hexagon of side ``m`` centred on the origin."""
    def inside(p):
        a, b = p
        return max(abs(a), abs(b), abs(a + b)) <= m

    out = set()
    for a in range(-m - 1, m + 1):
        for b in range(-m - 1, m + 1):
            for x in (Up(a, b), TriCell(a, b, 1)):
                if all(inside(v) for v in triangle_vertices(x)):
                    out.add(x)
    return frozenset(out)


def _classes(placed: Iterable[tuple], q: EnumQuery) -> dict[tuple, Pattern]:
    pred = PREDICATES[q.variant]
    out: dict[tuple, Pattern] = {}
    keys = {canonical_key(ts) for ts in placed if len(ts) >= q.min_tiles}
    for k in sorted(keys):
        p = pattern_from_key(k)
        if not pred(p):
            continue
        s = stats(p)
        if q.rho is not None and s.rho != q.rho:
            continue
        if q.leaves is not None and s.leaves != q.leaves:
            continue
        out[k] = p
    return out


def enumerate_patterns(
    q: EnumQuery,
    workers: int | None = None,
    node_budget: int | None = None,
) -> tuple[list[Pattern], CensusReport]:
    """One canonical representative per congruence class satisfying ``q``."""
    t0 = time.perf_counter()
    budget = default_budget() if node_budget is None else node_budget
    region = hexagon_triangles(q.hexagon_side) if q.hexagon_side is not None else None
    cfg = SearchConfig(max_tiles=q.max_tiles, region=region, node_budget=budget)
    placed, nodes, complete = placed_patterns(cfg, workers=workers)
    classes = _classes(placed, q)
    report = CensusReport(nodes=nodes, complete=complete)
    counts: Counter = Counter(stats(p).triple for p in classes.values())
    report.counts = dict(sorted(counts.items()))
    report.wall_time = time.perf_counter() - t0
    return [classes[k] for k in sorted(classes)], report


# ---------------------------------------------------------------------------
# Canonical augmentation (independent cross-check engine)


def _neighbour_tiles(tiles: Iterable[Tile]) -> set[Tile]:
    occupied = {x for t in tiles for x in tile_triangles(t)}
    out = set()
    for x in occupied:
        for y, _ in triangle_neighbors(x):
            if y in occupied:
                continue
            for z, _ in triangle_neighbors(y):
                if z not in occupied:
                    out.add(tile_from_triangles(y, z))
    return out


def _max_run(tiles) -> int:
    from .analysis import maximal_runs

    return max(len(r) for r in maximal_runs(Pattern(tiles)))


def _is_cut(tiles: list[Tile], t: Tile) -> bool:
    from .analysis import is_edge_connected

    rest = [s for s in tiles if s != t]
    return bool(rest) and not is_edge_connected(Pattern(rest))


def _canonical_deletion_key(tiles: tuple) -> tuple:
    """Canonical key of the pattern left after the canonical deletion."""
    best = None
    for t in tiles:
        if len(tiles) > 1 and _is_cut(list(tiles), t):
            continue
        k = canonical_key([s for s in tiles if s != t])
        if best is None or k < best:
            best = k
    return best


def augmentation_classes(max_tiles: int) -> dict[int, list[tuple]]:
    """Canonical keys of all edge-connected tile sets with runs of length <= 3, by size.

    Each child is kept only when deleting the tile whose removal gives the
    least canonical remainder leads back to its parent's class.
    """
    level = sorted({canonical_key([Tile(0, 0, k)]) for k in TileType})
    out = {1: level}
    for n in range(2, max_tiles + 1):
        nxt = set()
        for key in level:
            parent = pattern_from_key(key)
            for t in _neighbour_tiles(parent.tiles):
                child = tuple(parent.tiles | {t})
                if _max_run(child) > 3:
                    continue
                ck = canonical_key(child)
                if ck in nxt:
                    continue
                if len(child) > 1 and _is_cut(list(child), t):
                    continue
                if _canonical_deletion_key(child) == canonical_key([s for s in child if s != t]):
                    nxt.add(ck)
        level = sorted(nxt)
        out[n] = level
    return out


def enumerate_by_augmentation(q: EnumQuery) -> list[Pattern]:
    if q.hexagon_side is not None:
        raise ValueError("augmentation engine does not support regions")
    by_size = augmentation_classes(q.max_tiles)
    placed = [k for n, ks in by_size.items() for k in ks]
    classes = _classes([tuple(pattern_from_key(k).tiles) for k in placed], q)
    return [classes[k] for k in sorted(classes)]


# ---------------------------------------------------------------------------
# Theorem checks


def classify_weak_parameters(t: ParameterTriple) -> Existence:
    tau, rho, lf = t.astuple()
    if tau < 3 or lf != 2 * tau - 3 * rho or lf < 0 or lf > tau:
        return Existence.INFEASIBLE
    if lf > leaf_bound(tau):
        return Existence.EXCLUDED_BY_LEAF_BOUND
    if (tau, rho, lf) in {(3, 2, 0), (4, 2, 2), (5, 3, 1), (6, 4, 0), (12, 8, 0)}:
        return Existence.EXCLUDED_SPORADIC
    return Existence.EXISTS


@dataclass
class TheoremReport:
    max_tiles: int
    variant: str
    census: CensusReport
    disagreements: list = field(default_factory=list)  # (triple, expected, found)

    @property
    def ok(self) -> bool:
        return self.census.complete and not self.disagreements


def verify_existence(max_tiles: int, variant: str = "tredoku", workers: int | None = None) -> TheoremReport:
    classify = classify_parameters if variant == "tredoku" else classify_weak_parameters
    _, census = enumerate_patterns(EnumQuery(max_tiles, variant), workers=workers)
    found = census.triples()
    rep = TheoremReport(max_tiles, variant, census)
    for t in feasible_triples(max_tiles):
        expected = classify(t) is Existence.EXISTS
        if expected != (t.astuple() in found):
            rep.disagreements.append((t.astuple(), expected, not expected))
    return rep


def verify_theorem_main(max_tiles: int, workers: int | None = None) -> TheoremReport:
    return verify_existence(max_tiles, "tredoku", workers)


def verify_theorem_main_weak(max_tiles: int, workers: int | None = None) -> TheoremReport:
    return verify_existence(max_tiles, "weak", workers)


@dataclass
class ZeroLeafResult:
    tau: int
    patterns: list
    nodes: int
    complete: bool
    pruned: bool
    wall_time: float


def search_zero_leaf(
    tau: int,
    pruned: bool = True,
    workers: int | None = None,
    node_budget: int | None = None,
    variant: str = "tredoku",
) -> ZeroLeafResult:
    """All congruence classes of zero-leaf patterns with exactly ``tau`` tiles."""
    t0 = time.perf_counter()
    if tau % 3 or tau < 3:
        return ZeroLeafResult(tau, [], 0, True, pruned, 0.0)
    budget = default_budget() if node_budget is None else node_budget
    cfg = SearchConfig(max_tiles=tau, exact=True, allow_short_runs=False, prune=pruned, node_budget=budget)
    placed, nodes, complete = placed_patterns(cfg, workers=workers)
    q = EnumQuery(max(tau, 3), variant, leaves=0)
    classes = _classes(placed, q)
    pats = [classes[k] for k in sorted(classes)]
    return ZeroLeafResult(tau, pats, nodes, complete, pruned, time.perf_counter() - t0)


@dataclass
class TwelveReport:
    pruned: ZeroLeafResult
    unpruned: ZeroLeafResult
    nine_tile_type_counts: list
    weak_candidates_12: int  # zero-leaf run structures at 12 tiles before topology checks

    @property
    def agree(self) -> bool:
        keys = lambda r: [canonical_key(p.tiles) for p in r.patterns]
        return keys(self.pruned) == keys(self.unpruned)


def verify_lemma_12_structure(workers: int | None = None, node_budget: int | None = None) -> TwelveReport:
    """Run the 12-tile zero-leaf search with and without the counting bounds."""
    pruned = search_zero_leaf(12, True, workers, node_budget)
    unpruned = search_zero_leaf(12, False, workers, node_budget)
    nine = search_zero_leaf(9, True, workers)
    counts = sorted(stats(p).type_counts for p in nine.patterns)
    cfg = SearchConfig(max_tiles=12, exact=True, allow_short_runs=False, prune=True)
    placed, _, _ = placed_patterns(cfg, workers=workers)
    return TwelveReport(pruned, unpruned, counts, len({canonical_key(ts) for ts in placed}))


def _verdant_of_size(tau: int, workers: int | None) -> tuple[tuple[Pattern, ...], int, bool]:
    return _verdant_search(tau, workers, default_budget())


@lru_cache(maxsize=None)
def _verdant_search(tau: int, workers: int | None, budget: int | None) -> tuple[tuple[Pattern, ...], int, bool]:
    # cached: enumerate_verdant and verdant_classes both need the same searches
    rho = (tau - 1) // 2
    cfg = SearchConfig(max_tiles=tau, exact=True, max_long_runs=rho, node_budget=budget)
    placed, nodes, complete = placed_patterns(cfg, workers=workers)
    classes = _classes(placed, EnumQuery(tau, "tredoku", rho=rho, leaves=rho + 2, min_tiles=tau))
    pats = tuple(classes[k] for k in sorted(classes))
    assert all(is_verdant(p) for p in pats)
    return pats, nodes, complete


def enumerate_verdant(max_tiles: int, workers: int | None = None) -> CensusReport:
    """Counts of verdant patterns (2 rho + 1 tiles, rho + 2 leaves) for each odd size up to ``max_tiles``."""
    t0 = time.perf_counter()
    report = CensusReport()
    for tau in range(5, max_tiles + 1, 2):
        pats, nodes, complete = _verdant_of_size(tau, workers)
        rho = (tau - 1) // 2
        report.counts[(tau, rho, rho + 2)] = len(pats)
        report.nodes += nodes
        report.complete &= complete
    report.wall_time = time.perf_counter() - t0
    return report


def verdant_classes(max_tiles: int, workers: int | None = None) -> list[tuple]:
    out = []
    for tau in range(5, max_tiles + 1, 2):
        out += [canonical_key(p.tiles) for p in _verdant_of_size(tau, workers)[0]]
    return sorted(out)


def catalog_classes(max_tiles: int) -> list[tuple]:
    return sorted(canonical_key(p.tiles) for p in verdant_catalog() if len(p) <= max_tiles)


@dataclass
class HexagonCount:
    side: int
    variant: str
    placed: int
    classes: int
    nodes: int


def count_hexagon(m: int, variant: str = "tredoku", max_side: int = 2, workers: int | None = None) -> HexagonCount:
    """Patterns of ``variant`` lying inside the side-``m`` hexagon: placed copies and congruence classes."""
    if m < 1:
        raise ValueError("side must be at least 1")
    if m > max_side:
        raise BudgetExceeded(f"hexagon side {m} exceeds the configured limit {max_side}")
    region = hexagon_triangles(m)
    cfg = SearchConfig(max_tiles=len(region) // 2, region=region, node_budget=default_budget())
    placed, nodes, complete = placed_patterns(cfg, workers=workers)
    if not complete:
        raise BudgetExceeded(f"node budget exhausted after {nodes} nodes")
    pred = PREDICATES[variant]
    good = [ts for ts in placed if len(ts) >= 3 and pred(Pattern(ts))]
    return HexagonCount(m, variant, len(good), len({canonical_key(ts) for ts in good}), nodes)


def iter_emitted(max_tiles: int, variant: str = "weak", workers: int | None = None) -> Iterator[Pattern]:
    """Convenience: stream the canonical representatives of a census."""
    pats, _ = enumerate_patterns(EnumQuery(max_tiles, variant), workers=workers)
    yield from pats
