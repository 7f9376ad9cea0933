"""Cached searches and fixtures shared by the test modules."""

from functools import lru_cache

from tredoku import figures as fig
from tredoku.constructions import Existence, classify_parameters, construct, feasible_triples
from tredoku.enumeration import EnumQuery, enumerate_patterns
from tredoku.lattice import Pattern, Tile, TileType

T, L, R = TileType.TOP, TileType.LEFT, TileType.RIGHT

# six tiles around a single uncovered triangle; found as the one generalized
# class with six tiles that is not tredoku
ANNULUS = Pattern([Tile(0, 0, T), Tile(1, 0, T), Tile(-1, 1, R), Tile(1, 1, L), Tile(-1, 2, R), Tile(0, 2, L)])
SINGLE_RUN = Pattern([Tile(0, 0, T), Tile(1, 0, T), Tile(2, 0, T)])


def example7() -> Pattern:
    return fig.drawing(fig.EXAMPLE_7)


@lru_cache(maxsize=None)
def census(max_tiles: int, variant: str, workers: int = 1):
    return enumerate_patterns(EnumQuery(max_tiles, variant), workers=workers)


def weak_upto(n: int = 8) -> list[Pattern]:
    return census(n, "weak")[0]


def tredoku_upto(n: int = 8) -> list[Pattern]:
    return census(n, "tredoku")[0]


@lru_cache(maxsize=None)
def constructed(max_tiles: int = 30) -> tuple:
    out = []
    for t in feasible_triples(max_tiles):
        if classify_parameters(t) is Existence.EXISTS:
            out.append((t, construct(t)))
    return tuple(out)


def _norm(tiles) -> frozenset:
    b0, a0 = min((t.b, t.a) for t in tiles)
    return frozenset(Tile(t.a - a0, t.b - b0, t.type) for t in tiles)


def _touching(tiles) -> set:
    """Tiles not overlapping ``tiles`` that share a full edge with one of them."""
    from tredoku.lattice import tile_from_triangles, tile_triangles, triangle_neighbors

    occupied = {x for t in tiles for x in tile_triangles(t)}
    out = set()
    for x in occupied:
        for y, _ in triangle_neighbors(x):
            if y not in occupied:
                for z, _ in triangle_neighbors(y):
                    if z not in occupied:
                        out.add(tile_from_triangles(y, z))
    return out


@lru_cache(maxsize=None)
def naive_fixed_sets(n: int) -> tuple:
    """Every edge-connected set of ``n`` tiles up to translation, by plain breadth-first growth."""
    if n == 1:
        return tuple(frozenset([Tile(0, 0, k)]) for k in TileType)
    out = set()
    for s in naive_fixed_sets(n - 1):
        for t in _touching(s):
            out.add(_norm(s | {t}))
    return tuple(sorted(out, key=lambda s: sorted(s)))
