"""Runs, leaves, statistics and the validity predicates for patterns."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import networkx as nx

from .lattice import (
    Direction,
    Pattern,
    Tile,
    TriCell,
    Up,
    Down,
    neighbor_across,
    side_directions,
    tile_sort_key,
    tile_triangles,
    tile_vertices,
    triangle_edges,
    triangle_neighbors,
    triangle_vertices,
)


class RunDirection(Enum):
    LR = "LR"
    RT = "RT"
    LT = "LT"


# A run's shared edges are parallel to the one side direction its two
# admissible tile types have in common.
RUN_DIRECTION = {
    Direction.D3: RunDirection.LR,
    Direction.D2: RunDirection.RT,
    Direction.D1: RunDirection.LT,
}


@dataclass(frozen=True)
class Run:
    tiles: tuple
    shared_dir: Direction

    @property
    def run_dir(self) -> RunDirection:
        return RUN_DIRECTION[self.shared_dir]

    def __len__(self) -> int:
        return len(self.tiles)

    def is_end(self, t: Tile) -> bool:
        return t == self.tiles[0] or t == self.tiles[-1]


@dataclass(frozen=True)
class PatternStats:
    tau: int
    rho: int
    leaves: int
    run_census: tuple[int, int, int, int]  # runs of length 3 holding 0..3 leaves
    type_counts: tuple[int, int, int]
    run_lengths: tuple[int, ...]

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.tau, self.rho, self.leaves)


class LeafUndefinedError(ValueError):
    """Raised when leaves are requested for a pattern with a run of length 2 or >= 4."""


# ---------------------------------------------------------------------------
# Runs


def _walk(tri_map: dict, t: Tile, d: Direction) -> list[Tile]:
    """Tiles of the maximal run through ``t`` whose shared edges are parallel to ``d``."""
    sides = []
    for tri in tile_triangles(t):
        seq = []
        while True:
            across = neighbor_across(tri, d)
            nxt = tri_map.get(across)
            if nxt is None:
                break
            seq.append(nxt)
            tri = next(x for x in tile_triangles(nxt) if x != across)
        sides.append(seq)
    return sides[0][::-1] + [t] + sides[1]


def maximal_runs(p: Pattern) -> list[Run]:
    tri_map = p.triangles()
    seen = set()
    runs = []
    for t in p.sorted():
        for d in side_directions(t.type):
            if (t, d) in seen:
                continue
            tiles = _walk(tri_map, t, d)
            if tile_sort_key(tiles[-1]) < tile_sort_key(tiles[0]):
                tiles.reverse()
            for s in tiles:
                seen.add((s, d))
            runs.append(Run(tuple(tiles), d))
    return runs


def runs_by_tile(p: Pattern) -> dict[Tile, list[Run]]:
    out: dict[Tile, list[Run]] = {t: [] for t in p.tiles}
    for r in maximal_runs(p):
        for t in r.tiles:
            out[t].append(r)
    return out


def check_run_lengths(p: Pattern) -> bool:
    return all(len(r) in (1, 3) for r in maximal_runs(p))


def leaves(p: Pattern) -> set[Tile]:
    by_tile = runs_by_tile(p)
    bad = sorted({len(r) for rs in by_tile.values() for r in rs} - {1, 3})
    if bad:
        raise LeafUndefinedError(f"leaves undefined: run of length {bad[0]} present")
    return {t for t, rs in by_tile.items() if sorted(len(r) for r in rs) == [1, 3]}


def stats(p: Pattern) -> PatternStats:
    runs = maximal_runs(p)
    lf = leaves(p)
    long_runs = [r for r in runs if len(r) == 3]
    census = [0, 0, 0, 0]
    for r in long_runs:
        census[sum(t in lf for t in r.tiles)] += 1
    counts = [0, 0, 0]
    for t in p.tiles:
        counts[t.type] += 1
    return PatternStats(
        tau=len(p),
        rho=len(long_runs),
        leaves=len(lf),
        run_census=tuple(census),
        type_counts=tuple(counts),
        run_lengths=tuple(sorted(len(r) for r in runs)),
    )


# ---------------------------------------------------------------------------
# Connectivity and topology


def tile_graph(p: Pattern) -> nx.Graph:
    """Tiles as vertices, edges between tiles sharing a full edge."""
    g = nx.Graph()
    g.add_nodes_from(p.tiles)
    tri_map = p.triangles()
    for t in p.tiles:
        for tri in tile_triangles(t):
            for n, _ in triangle_neighbors(tri):
                s = tri_map.get(n)
                if s is not None and s != t:
                    g.add_edge(t, s)
    return g


def is_edge_connected(p: Pattern) -> bool:
    return len(p) > 0 and nx.is_connected(tile_graph(p))


def _region_connected(tris: Iterable[TriCell]) -> bool:
    """Path-connectivity of a union of closed triangles (union-find on corners)."""
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for tri in tris:
        vs = triangle_vertices(tri)
        for v in vs:
            parent.setdefault(v, v)
        r0 = find(vs[0])
        for v in vs[1:]:
            rv = find(v)
            if rv != r0:
                parent[rv] = r0
    roots = {find(v) for v in parent}
    return len(roots) == 1


def euler_characteristic(p: Pattern) -> int:
    tris = list(p.triangles())
    verts = {v for t in tris for v in triangle_vertices(t)}
    edges = {e for t in tris for e in triangle_edges(t)}
    return len(verts) - len(edges) + len(tris)


def is_region_connected(p: Pattern) -> bool:
    return len(p) > 0 and _region_connected(p.triangles())


def is_simply_connected(p: Pattern) -> bool:
    if len(p) == 0:
        raise ValueError("empty pattern")
    return is_region_connected(p) and euler_characteristic(p) == 1


def removal_disconnectors(p: Pattern) -> list[Tile]:
    """Tiles whose removal leaves a region that is not path-connected."""
    out = []
    for t in p.sorted():
        rest = [tri for s in p.tiles if s != t for tri in tile_triangles(s)]
        if rest and not _region_connected(rest):
            out.append(t)
    return out


def is_removal_connected(p: Pattern) -> bool:
    return not removal_disconnectors(p)


TRIANGLES_AROUND = (
    lambda a, b: Up(a, b),
    lambda a, b: Down(a - 1, b),
    lambda a, b: Up(a - 1, b),
    lambda a, b: Down(a - 1, b - 1),
    lambda a, b: Up(a, b - 1),
    lambda a, b: Down(a, b - 1),
)


def fan_graph(p: Pattern, corner: tuple[int, int], tri_map: dict | None = None) -> nx.Graph:
    """Tiles having ``corner`` as a corner, joined when they share an edge."""
    if tri_map is None:
        tri_map = p.triangles()
    nodes = {tri_map[f(*corner)] for f in TRIANGLES_AROUND if f(*corner) in tri_map}
    g = nx.Graph()
    g.add_nodes_from(nodes)
    for t in nodes:
        for tri in tile_triangles(t):
            for n, _ in triangle_neighbors(tri):
                s = tri_map.get(n)
                if s is not None and s != t and s in nodes:
                    g.add_edge(t, s)
    return g


def is_singular_at(p: Pattern, corner: tuple[int, int], tri_map: dict | None = None) -> bool:
    if tri_map is None:
        tri_map = p.triangles()
    around = [f(*corner) for f in TRIANGLES_AROUND]
    if all(t in tri_map for t in around):
        return False  # interior point
    g = fan_graph(p, corner, tri_map)
    return g.number_of_nodes() > 0 and not nx.is_connected(g)


def singular_points(p: Pattern) -> list:
    tri_map = p.triangles()
    corners = sorted({v for t in p.tiles for v in tile_vertices(t)})
    return [c for c in corners if is_singular_at(p, c, tri_map)]


def is_nonsingular(p: Pattern) -> bool:
    return not singular_points(p)


# ---------------------------------------------------------------------------
# Pattern classes


def is_weak_tredoku(p: Pattern) -> bool:
    return len(p) >= 3 and check_run_lengths(p) and is_edge_connected(p) and is_simply_connected(p)


def is_tredoku(p: Pattern) -> bool:
    return is_weak_tredoku(p) and is_removal_connected(p)


def centre_leaves(p: Pattern) -> list[Tile]:
    """Leaves sitting in the middle of their run of length 3."""
    lf = leaves(p)
    out = []
    for t, rs in runs_by_tile(p).items():
        if t in lf:
            (long_run,) = [r for r in rs if len(r) == 3]
            if not long_run.is_end(t):
                out.append(t)
    return sorted(out, key=tile_sort_key)


def is_tredoku_via_leaf_rule(p: Pattern) -> bool:
    return is_weak_tredoku(p) and not centre_leaves(p)


def is_generalized_tredoku(p: Pattern) -> bool:
    return (
        len(p) >= 3
        and check_run_lengths(p)
        and is_edge_connected(p)
        and is_nonsingular(p)
        and is_removal_connected(p)
    )


def is_verdant(p: Pattern) -> bool:
    if not is_tredoku(p):
        raise ValueError("verdancy is only defined for tredoku patterns")
    s = stats(p)
    by_definition = (s.tau, s.leaves) == (2 * s.rho + 1, s.rho + 2)
    by_leaf_count = s.leaves == math.ceil(s.tau / 2) + 1
    assert by_definition == by_leaf_count, "leaf-count characterisation of verdancy failed"
    return by_definition


def run_count_bounds_hold(p: Pattern) -> bool:
    s = stats(p)
    return 3 * s.rho <= 2 * s.tau and s.tau <= 2 * s.rho + 1


VARIANTS = ("tredoku", "weak", "generalized")

PREDICATES = {
    "tredoku": is_tredoku,
    "weak": is_weak_tredoku,
    "generalized": is_generalized_tredoku,
}


def violations(p: Pattern, variant: str = "tredoku") -> list[str]:
    """Human-readable reasons ``p`` fails ``variant``, most basic first."""
    out = []
    if len(p) < 3:
        out.append(f"size: {len(p)} tiles, at least 3 required")
    bad = sorted({len(r) for r in maximal_runs(p)} - {1, 3})
    if bad:
        out.append(f"Condition 1: run of length {bad[0]}")
    if not is_edge_connected(p):
        out.append("Condition 2: pattern is not edge-connected")
    if variant in ("tredoku", "weak") and len(p) and not is_simply_connected(p):
        out.append(f"Condition 3: region is not simply connected (euler characteristic {euler_characteristic(p)})")
    if variant == "generalized" and len(p) and not is_nonsingular(p):
        out.append(f"nonsingularity: pattern touches at a point {tuple(singular_points(p)[0])}")
    if variant in ("tredoku", "generalized"):
        for t in removal_disconnectors(p):
            where = ""
            try:
                for r in runs_by_tile(p)[t]:
                    if len(r) == 3 and r.tiles[1] == t:
                        where = "centre tile"
                        break
            except Exception:
                pass
            what = where or f"tile {t!r}"
            out.append(f"Condition 4: removal of {what} disconnects")
            break
    return out
