"""Hand-transcribed example patterns.

Coordinates are in a *drawing frame*: the lattice frame rotated by 120
degrees.  Each entry is ``"<kind> x y"`` where kind is ``t``, ``l`` or ``r``
(the tile type it becomes in the lattice frame).  In the drawing frame a
``t`` tile at (x, y) is Up(x,y)+Down(x,y-1), an ``l`` tile is Up(x,y)+Down(x,y)
and an ``r`` tile is Up(x,y)+Down(x-1,y).  A trailing ``*`` marks a
highlighted tile (a leaf suitable for extension or merging).

Everything here is checked by the test-suite against the validators; nothing is
trusted on transcription alone.
"""

from __future__ import annotations

from .lattice import LatticePoint, Pattern, Symmetry, Tile, TileType

DRAWING_FRAME = Symmetry(rotation=2)

_DRAWING_TYPE = {"t": TileType.RIGHT, "l": TileType.TOP, "r": TileType.LEFT}


def drawing_tile(kind: str, x: int, y: int) -> Tile:
    return DRAWING_FRAME.map_tile(Tile(x, y, _DRAWING_TYPE[kind]))


def drawing_point(x: int, y: int) -> LatticePoint:
    return DRAWING_FRAME.map_point((x, y))


def parse_drawing(text: str) -> tuple[list[Tile], list[Tile]]:
    """Return (tiles, highlighted tiles) for a comma separated drawing list."""
    tiles, marked = [], []
    for item in text.split(","):
        kind, x, y = item.split()
        star = kind.endswith("*")
        t = drawing_tile(kind.rstrip("*"), int(x), int(y))
        tiles.append(t)
        if star:
            marked.append(t)
    return tiles, marked


def drawing(text: str) -> Pattern:
    return Pattern(parse_drawing(text)[0])


def shift(text: str, dx: int, dy: int) -> str:
    out = []
    for item in text.split(","):
        kind, x, y = item.split()
        out.append(f"{kind} {int(x) + dx} {int(y) + dy}")
    return ", ".join(out)


# -- the seven-tile example with two leaves ---------------------------------
EXAMPLE_7 = "t 0 0, r 1 0, r 2 0, l 1 -1, l 2 -1, r 2 -2, l 1 1"

# -- zero leaves --------------------------------------------------------------
ZERO_LEAF_9 = "t -10 0, t -10 -1, t -10 -2, l -9 -1, l -9 -2, l -9 -3, l -11 0, l -11 -1, l -11 -2"
ZERO_LEAF_15 = (
    "t 0 0, t 0 -1, t 0 -2, t -1 -1, t -1 0, l -2 -1, l -2 0, r -1 -2, "
    "t 1 -1, t 2 -2, t 1 0, t 2 -1, r 3 -1, r 2 0, l 3 -2"
)

# -- one leaf -----------------------------------------------------------------
ONE_LEAF = {
    8: "r 0 0, l 1 0, t 0 1, r 1 1, l -1 1, l -1 2, l 0 2, l -2 2",
    11: "t 6 1, t 6 2, t 6 3, t 5 2, t 5 3, t 5 4, l 4 2, r 4 3, t 4 4, t 4 5, r 3 4",
    14: "t 11 1, r 11 0, l 12 0, l 10 1, r 12 1, r 10 2, l 11 2, l 12 2, l 13 2, l 13 3, r 12 3, t 12 4, r 13 4, l 11 4",
    17: (
        "l 17 0, t 19 0, l 18 0, l 18 1, l 19 1, l 18 2, l 19 2, l 17 1, l 17 2, "
        "l 19 3, l 20 3, l 21 3, l 21 4, r 20 4, t 20 5, r 21 5, l 19 5"
    ),
}

# -- two leaves ---------------------------------------------------------------
TWO_LEAF = {
    7: "r -4 -1, l -6 -1, r -6 0, l -5 0, t -6 1, r -5 1, l -7 1",
    10: "t 0 0, t 0 1, t 0 2, t -1 1, t -1 2, t -1 3, t 1 -1, r -2 2, t -2 3, t -2 4",
}

# -- three leaves -------------------------------------------------------------
THREE_LEAF = {
    6: "l -1 0, l -1 1, t -2 2, t -3 3, r -1 2, r 0 2",
    9: "r 6 0, r 7 0, t 5 0, l 3 3, r 4 1, l 5 1, t 4 2, r 5 2, l 3 2",
    12: "t 12 0, t 12 1, t 12 2, t 11 1, t 11 2, t 11 3, t 13 -1, r 14 -1, t 13 -2, r 10 2, t 10 3, t 10 4",
}

# -- four leaves (highlighted leaf admits the staircase extension) -------------
FOUR_LEAF = {
    5: "t 0 0, t 0 1, t 0 -1, t 1 -1, t -1 1",
    8: "t -1 3, l -2 2, r 1 1, t 0 0, t 0 1, t -1 1, t -1 2, t* 1 -1",
}

# -- families with a stretchable staircase of top tiles -------------------------
# family(n) = bottom cap + staircase(n) + top cap shifted by n * (-1, 2)

TOP_CAP_LONG = "r 0 2, l -2 2, r -2 3, l -1 3, t -2 4, r -1 4, l -3 4"
TOP_CAP_SHORT = "r 0 2, l -2 2"
BOTTOM_CAPS = {
    0: "r 0 -1, l 1 -1, l 0 -2, t 1 -2, r 2 -2, l 2 -3, r 1 -3",
    1: "r 0 -1, t 1 -1, t 1 -2, t 1 -3, t 2 -4, r 3 -4, l 3 -5, t 3 -3, l 2 -3",
    2: "r 0 -1, l 1 -1",
    4: "r 1 1, t* 1 -1",
}
FAMILY_CAPS = {  # leaves -> (top cap, bottom cap, staircase offset, base size)
    0: (TOP_CAP_LONG, BOTTOM_CAPS[0], 0, 18),
    1: (TOP_CAP_LONG, BOTTOM_CAPS[1], 0, 20),
    2: (TOP_CAP_LONG, BOTTOM_CAPS[2], 0, 13),
    3: (TOP_CAP_SHORT, BOTTOM_CAPS[1], 0, 15),
    4: (TOP_CAP_SHORT, BOTTOM_CAPS[4], 1, 11),
}


def staircase(n: int) -> str:
    items = []
    for k in range(n + 1):
        items += [f"t {-k} {2 * k}", f"t {-k} {2 * k + 1}", f"t {-k - 1} {2 * k + 1}"]
    items.append(f"t {-(n + 1)} {2 * (n + 1)}")
    return ", ".join(items)


def family(leaves: int, i: int) -> str:
    """Drawing list of the ``i``-th member of the stretchable family with ``leaves`` leaves."""
    top, bottom, offset, _ = FAMILY_CAPS[leaves]
    n = i + offset
    return ", ".join([bottom, staircase(n), shift(top, -n, 2 * n)])


# -- staircase extension at a highlighted leaf --------------------------------
# The leaf sits at t(0,0); tiles are added two at a time, period two.
EXTENSION_LEAF = "t 0 0"
_EXTENSION_PAIRS = [("r 1 0", "t 0 -1"), ("t 1 -2", "l -1 -1")]


def extension_tiles(j: int) -> str:
    items = []
    for step in range(j):
        a, b = _EXTENSION_PAIRS[step % 2]
        k = step // 2
        items += [shift(a, k, -2 * k), shift(b, k, -2 * k)]
    return ", ".join(items)


# -- verdant patterns (2 rho + 1 tiles, rho + 2 leaves) ------------------------
VERDANT = {
    5: [
        "t 0 0, t* 0 1, t* 0 -1, t* 1 -1, t* -1 1",
        "t 0 0, t 0 1, t* 0 -1, l* 1 -1, t* -1 1",
        "t 0 0, t* 0 1, t* 0 -1, l* 1 -1, l* -1 0",
        "t 0 0, t 0 1, r* 0 -1, l* 1 -1, t -1 1",
    ],
    7: ["t 0 0, t 0 1, t 0 2, t* 1 -1, l* -1 0, t -1 2, l 1 0"],
    9: ["t 0 0, t 0 1, t 1 0, r 1 1, l -1 1, r -1 2, t -1 3, r -2 2, r -2 3"],
    11: [
        "t* 0 0, t 0 1, t 0 2, t -1 3, t -1 4, t -1 5, l* 1 0, l -1 1, l -2 3, t -2 5, l 0 3",
        "t 0 0, t 0 1, t 0 2, t -1 3, t -1 4, t -1 5, t* 1 0, l -1 1, l -2 3, t -2 5, l 0 3",
    ],
    13: [
        "t 0 0, t -1 1, t -2 2, t -2 3, t -3 4, t -3 5, t -4 6, t -3 6, l -2 4, l -4 4, r -2 1, t -1 0, r 0 1",
        # "t -3 5" is the only tile that completes this drawing to a verdant pattern
        "t -2 3, t -3 4, t -3 5, t -4 6, t -3 6, l -2 4, l -4 4, r -2 2, r -3 2, t -2 1, r -1 1, r 0 1, r 0 0",
    ],
    17: [
        "t 0 0, t 0 1, t 0 2, t 1 -1, l -1 0, t -1 2, l 1 0, t 1 -2, t 1 -3, l 0 -2, "
        "l 2 -3, t 2 -4, t 2 -5, t 2 -6, l 1 -5, t 3 -6, l 3 -5"
    ],
}

# upper-diagonal examples used by construct(), keyed by rho
UPPER_DIAGONAL = {
    2: FOUR_LEAF[5],
    3: "t 0 0, t 0 1, t 0 2, t 1 -1, l -1 0, t -1 2, l 1 0",
    4: "t 0 0, t 0 1, t 1 0, r 1 1, l -1 1, r -1 2, t -1 3, r -2 2, r -2 3",
    5: "t 0 0, t 0 1, t 0 2, t -1 3, t -1 4, t -1 5, l 1 0, l -1 1, l -2 3, t -2 5, l 0 3",
    6: "t 0 0, t -1 1, t -2 2, t -2 3, t -3 4, t -3 5, t -4 6, t -3 6, l -2 4, l -4 4, r -2 1, t -1 0, r 0 1",
    8: VERDANT[17][0],
}

# -- corner configurations: (drawing, marked corner, singular?) -----------------
FAN_FIXTURES = [
    ("t 0 0", (1, 0), False),
    ("t 0 0, t 0 1", (1, 0), False),
    ("t 0 0, r 1 0, r 2 -1", (1, 0), False),
    ("t 0 0, t 1 0", (1, 0), True),
    ("l 0 -1, l 1 0, r 0 0", (1, 0), True),
    ("t 1 -1, l 1 0, r 0 0", (1, 0), True),
]
