"""Triangular lattice geometry: points, triangles, diamond tiles, symmetries.

Coordinates are oblique integers ``(a, b)`` for the point ``a*E1 + b*E2`` with
``E1 = (1, 0)`` and ``E2 = (1/2, sqrt(3)/2)``.  Floating point only appears in
:func:`embed`.

Triangle ``Up(a, b)`` has corners ``(a,b), (a+1,b), (a,b+1)``; ``Down(a, b)``
has corners ``(a+1,b), (a,b+1), (a+1,b+1)``.  A tile is identified by the Up
triangle it contains plus its type:

* ``TOP``   = Up(a,b) + Down(a,b)     internal edge along D3
* ``LEFT``  = Up(a,b) + Down(a-1,b)   internal edge along D2
* ``RIGHT`` = Up(a,b) + Down(a,b-1)   internal edge along D1
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

SQRT3_2 = math.sqrt(3) / 2


class Orient(IntEnum):
    UP = 0
    DOWN = 1


class Direction(IntEnum):
    D1 = 0  # E1, east
    D2 = 1  # E2, northeast
    D3 = 2  # E2 - E1, northwest


DIRECTION_VECTORS = {
    Direction.D1: (1, 0),
    Direction.D2: (0, 1),
    Direction.D3: (-1, 1),
}


class TileType(IntEnum):
    TOP = 0
    LEFT = 1
    RIGHT = 2

    @property
    def label(self) -> str:
        return self.name.lower()


class LatticePoint(NamedTuple):
    a: int
    b: int


class TriCell(NamedTuple):
    a: int
    b: int
    orient: Orient

    def __repr__(self) -> str:
        return f"{'Up' if self.orient == Orient.UP else 'Down'}({self.a},{self.b})"


class Tile(NamedTuple):
    a: int
    b: int
    type: TileType

    def __repr__(self) -> str:
        return f"{TileType(self.type).name.title()}({self.a},{self.b})"


def Up(a: int, b: int) -> TriCell:
    return TriCell(a, b, Orient.UP)


def Down(a: int, b: int) -> TriCell:
    return TriCell(a, b, Orient.DOWN)


def embed(p: tuple[int, int]) -> tuple[float, float]:
    a, b = p
    return (a + 0.5 * b, SQRT3_2 * b)


def edge_direction(p: tuple[int, int], q: tuple[int, int]) -> Direction:
    da, db = q[0] - p[0], q[1] - p[1]
    for d, v in DIRECTION_VECTORS.items():
        if (da, db) == v or (-da, -db) == v:
            return d
    raise ValueError(f"{p}-{q} is not a lattice edge")


# ---------------------------------------------------------------------------
# Triangles


def triangle_vertices(t: TriCell) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
    a, b, o = t
    if o == Orient.UP:
        return LatticePoint(a, b), LatticePoint(a + 1, b), LatticePoint(a, b + 1)
    return LatticePoint(a + 1, b), LatticePoint(a, b + 1), LatticePoint(a + 1, b + 1)


def triangle_from_vertices(vs: Iterable[tuple[int, int]]) -> TriCell:
    vs = list(vs)
    sa = sum(v[0] for v in vs)
    sb = sum(v[1] for v in vs)
    if sa % 3 == 1 and sb % 3 == 1:
        t = Up((sa - 1) // 3, (sb - 1) // 3)
    elif sa % 3 == 2 and sb % 3 == 2:
        t = Down((sa - 2) // 3, (sb - 2) // 3)
    else:
        raise ValueError(f"{vs} is not a unit triangle")
    if sorted(triangle_vertices(t)) != sorted(map(tuple, vs)):
        raise ValueError(f"{vs} is not a unit triangle")
    return t


def triangle_neighbors(t: TriCell) -> tuple[tuple[TriCell, Direction], ...]:
    """The three edge-neighbours of ``t`` with the direction of the shared edge."""
    a, b, o = t
    if o == Orient.UP:
        return (
            (Down(a, b), Direction.D3),
            (Down(a - 1, b), Direction.D2),
            (Down(a, b - 1), Direction.D1),
        )
    return (
        (Up(a, b), Direction.D3),
        (Up(a + 1, b), Direction.D2),
        (Up(a, b + 1), Direction.D1),
    )


def neighbor_across(t: TriCell, d: Direction) -> TriCell:
    for n, nd in triangle_neighbors(t):
        if nd == d:
            return n
    raise AssertionError


def triangle_edges(t: TriCell) -> list[frozenset]:
    p, q, r = triangle_vertices(t)
    return [frozenset((p, q)), frozenset((q, r)), frozenset((p, r))]


# ---------------------------------------------------------------------------
# Tiles

INTERNAL_DIRECTION = {
    TileType.TOP: Direction.D3,
    TileType.LEFT: Direction.D2,
    TileType.RIGHT: Direction.D1,
}
TYPE_OF_INTERNAL = {d: k for k, d in INTERNAL_DIRECTION.items()}


def side_directions(k: TileType) -> tuple[Direction, Direction]:
    inner = INTERNAL_DIRECTION[k]
    d1, d2 = (d for d in Direction if d != inner)
    return d1, d2


def tile_triangles(t: Tile) -> tuple[TriCell, TriCell]:
    a, b, k = t
    if k == TileType.TOP:
        return Up(a, b), Down(a, b)
    if k == TileType.LEFT:
        return Up(a, b), Down(a - 1, b)
    return Up(a, b), Down(a, b - 1)


def tile_from_triangles(s: TriCell, t: TriCell) -> Tile:
    up, down = (s, t) if s.orient == Orient.UP else (t, s)
    if up.orient != Orient.UP or down.orient != Orient.DOWN:
        raise ValueError(f"{s}, {t} do not form a tile")
    for n, d in triangle_neighbors(up):
        if n == down:
            return Tile(up.a, up.b, TYPE_OF_INTERNAL[d])
    raise ValueError(f"{s}, {t} are not edge-adjacent")


def tile_origin(t: Tile) -> LatticePoint:
    """Corner ``o`` with tile = o + [0,1]*u + [0,1]*v for its side vectors u, v."""
    a, b, k = t
    if k == TileType.RIGHT:
        return LatticePoint(a + 1, b - 1)
    return LatticePoint(a, b)


def tile_vertices(t: Tile) -> tuple[LatticePoint, ...]:
    """The four corners in cyclic order, starting at :func:`tile_origin`."""
    o = tile_origin(t)
    u, v = (DIRECTION_VECTORS[d] for d in side_directions(t.type))
    return (
        o,
        LatticePoint(o[0] + u[0], o[1] + u[1]),
        LatticePoint(o[0] + u[0] + v[0], o[1] + u[1] + v[1]),
        LatticePoint(o[0] + v[0], o[1] + v[1]),
    )


def tile_edges(t: Tile) -> list[tuple[frozenset, Direction]]:
    vs = tile_vertices(t)
    out = []
    for i in range(4):
        p, q = vs[i], vs[(i + 1) % 4]
        out.append((frozenset((p, q)), edge_direction(p, q)))
    return out


def tiles_overlap(s: Tile, t: Tile) -> bool:
    return bool(set(tile_triangles(s)) & set(tile_triangles(t)))


def tiles_edge_adjacent(s: Tile, t: Tile) -> Direction | None:
    """Direction of the full edge shared by ``s`` and ``t``, or None."""
    if s == t or tiles_overlap(s, t):
        raise ValueError(f"tiles {s} and {t} overlap")
    ts = set(tile_triangles(t))
    for tri in tile_triangles(s):
        for n, d in triangle_neighbors(tri):
            if n in ts:
                return d
    return None


def tile_sort_key(t: Tile) -> tuple[int, int, int]:
    return (t.b, t.a, int(t.type))


# ---------------------------------------------------------------------------
# Patterns


class OverlapError(ValueError):
    pass


@dataclass(frozen=True)
class Pattern:
    """A finite set of non-overlapping tiles."""

    tiles: frozenset

    def __init__(self, tiles: Iterable = ()):
        ts = frozenset(Tile(t[0], t[1], TileType(t[2])) for t in tiles)
        seen: dict[TriCell, Tile] = {}
        for t in ts:
            for tri in tile_triangles(t):
                if tri in seen:
                    raise OverlapError(f"tiles {seen[tri]} and {t} overlap")
                seen[tri] = t
        object.__setattr__(self, "tiles", ts)

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self) -> Iterator[Tile]:
        return iter(self.sorted())

    def __contains__(self, t) -> bool:
        return t in self.tiles

    def sorted(self) -> list[Tile]:
        return sorted(self.tiles, key=tile_sort_key)

    def key(self) -> tuple:
        return tuple(tile_sort_key(t) for t in self.sorted())

    def triangles(self) -> dict[TriCell, Tile]:
        return {tri: t for t in self.tiles for tri in tile_triangles(t)}

    def translate(self, da: int, db: int) -> "Pattern":
        return Pattern(Tile(t.a + da, t.b + db, t.type) for t in self.tiles)

    def __or__(self, other: "Pattern") -> "Pattern":
        return Pattern(self.tiles | other.tiles)

    def __repr__(self) -> str:
        return f"Pattern({self.sorted()!r})"


# ---------------------------------------------------------------------------
# Symmetries

_ROT60 = ((0, -1), (1, 1))  # (a, b) -> (-b, a + b)
_REFLECT = ((0, 1), (1, 0))  # (a, b) -> (b, a)


def _matmul(m, n):
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _matpow(m, k):
    out = ((1, 0), (0, 1))
    for _ in range(k % 6):
        out = _matmul(m, out)
    return out


def _linear(rotation: int, reflected: bool):
    m = _matpow(_ROT60, rotation)
    return _matmul(m, _REFLECT) if reflected else m


POINT_GROUP_MATRICES = {(r, f): _linear(r, f) for f in (False, True) for r in range(6)}
_MATRIX_TO_ELEMENT = {m: k for k, m in POINT_GROUP_MATRICES.items()}


@dataclass(frozen=True)
class Symmetry:
    """Lattice isometry: optional reflection (swap a, b), then rotation by
    ``rotation * 60`` degrees, then translation."""

    rotation: int = 0
    reflected: bool = False
    translation: tuple[int, int] = (0, 0)

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % 6)
        object.__setattr__(self, "translation", tuple(self.translation))

    @property
    def matrix(self):
        return POINT_GROUP_MATRICES[(self.rotation, self.reflected)]

    def map_point(self, p: tuple[int, int]) -> LatticePoint:
        m = self.matrix
        da, db = self.translation
        return LatticePoint(m[0][0] * p[0] + m[0][1] * p[1] + da, m[1][0] * p[0] + m[1][1] * p[1] + db)

    def map_triangle(self, t: TriCell) -> TriCell:
        return triangle_from_vertices(self.map_point(v) for v in triangle_vertices(t))

    def map_tile(self, t: Tile) -> Tile:
        s, u = tile_triangles(t)
        return tile_from_triangles(self.map_triangle(s), self.map_triangle(u))

    def compose(self, other: "Symmetry") -> "Symmetry":
        """``self`` after ``other``."""
        m = _matmul(self.matrix, other.matrix)
        r, f = _MATRIX_TO_ELEMENT[m]
        t = self.map_point(other.translation)
        return Symmetry(r, f, (t[0], t[1]))

    def inverse(self) -> "Symmetry":
        for (r, f), m in POINT_GROUP_MATRICES.items():
            if _matmul(m, self.matrix) == ((1, 0), (0, 1)):
                lin = Symmetry(r, f)
                t = lin.map_point(self.translation)
                return Symmetry(r, f, (-t[0], -t[1]))
        raise AssertionError


POINT_GROUP = tuple(Symmetry(r, f) for f in (False, True) for r in range(6))
IDENTITY = Symmetry()


@lru_cache(maxsize=None)
def _affine_tile_table(rotation: int, reflected: bool):
    """Per tile type: (matrix, offset, new type) so that
    g(Tile(a,b,k)) = Tile(M(a,b) + offset, new_type)."""
    g = Symmetry(rotation, reflected)
    m = g.matrix
    table = []
    for k in TileType:
        img = g.map_tile(Tile(0, 0, k))
        table.append((m, (img.a, img.b), img.type))
    # sanity check against the direct route on a couple of anchors
    for k in TileType:
        for p in ((1, 0), (0, 1), (2, -3)):
            direct = g.map_tile(Tile(p[0], p[1], k))
            mm, off, nk = table[k]
            fast = Tile(mm[0][0] * p[0] + mm[0][1] * p[1] + off[0], mm[1][0] * p[0] + mm[1][1] * p[1] + off[1], nk)
            assert direct == fast
    return tuple(table)


def map_tiles(tiles: Iterable[Tile], g: Symmetry) -> list[Tile]:
    table = _affine_tile_table(g.rotation, g.reflected)
    da, db = g.translation
    out = []
    for a, b, k in tiles:
        m, off, nk = table[k]
        out.append(Tile(m[0][0] * a + m[0][1] * b + off[0] + da, m[1][0] * a + m[1][1] * b + off[1] + db, nk))
    return out


def apply_symmetry(p: Pattern, g: Symmetry) -> Pattern:
    return Pattern(map_tiles(p.tiles, g))


def _normalized_key(tiles: list[Tile]) -> tuple:
    keys = sorted((b, a, int(k)) for a, b, k in tiles)
    b0, a0, _ = keys[0]
    return tuple((b - b0, a - a0, k) for b, a, k in keys)


def canonical_key(tiles: Iterable[Tile]) -> tuple:
    """Lexicographically least normalized ``(b, a, type)`` tuple over the point group."""
    tiles = list(tiles)
    if not tiles:
        raise ValueError("canonical form of an empty pattern")
    return min(_normalized_key(map_tiles(tiles, g)) for g in POINT_GROUP)


def pattern_from_key(key: tuple) -> Pattern:
    return Pattern(Tile(a, b, TileType(k)) for b, a, k in key)


def canonical_form(p: Pattern) -> Pattern:
    return pattern_from_key(canonical_key(p.tiles))


def orbit(p: Pattern) -> set[tuple]:
    """Distinct translation-normalized images of ``p`` under the point group."""
    return {_normalized_key(map_tiles(p.tiles, g)) for g in POINT_GROUP}
