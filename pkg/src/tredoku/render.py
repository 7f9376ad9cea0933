"""SVG, TikZ and plain-text pictures of patterns.

Pictures are turned 30 degrees clockwise from the lattice frame so that top
tiles stand upright.  Top tiles are left white, left tiles dark and right
tiles light.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import Pattern, Tile, TileType, embed, tile_vertices

FILL = {TileType.TOP: "#ffffff", TileType.LEFT: "#6e6e6e", TileType.RIGHT: "#c8c8c8"}
TIKZ_FILL = {TileType.TOP: "white", TileType.LEFT: "black!55", TileType.RIGHT: "black!20"}
TIKZ_MACRO = {TileType.TOP: "toptile", TileType.LEFT: "lefttile", TileType.RIGHT: "righttile"}
ASCII_CHAR = {TileType.TOP: "T", TileType.LEFT: "L", TileType.RIGHT: "R"}

_C, _S = math.cos(math.radians(-30)), math.sin(math.radians(-30))


@dataclass(frozen=True)
class RenderOptions:
    format: str = "svg"  # svg | tikz | ascii
    shading: bool = True
    scale: float = 40.0

    def __post_init__(self):
        if self.format not in ("svg", "tikz", "ascii"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def picture_point(p) -> tuple[float, float]:
    x, y = embed(p)
    return (_C * x - _S * y, _S * x + _C * y)


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(p: Pattern, opts: RenderOptions = RenderOptions()) -> str:
    k = opts.scale
    polys = []
    xs, ys = [], []
    for t in p.sorted():
        pts = [picture_point(v) for v in tile_vertices(t)]
        pts = [(k * x, -k * y) for x, y in pts]
        xs += [x for x, _ in pts]
        ys += [y for _, y in pts]
        fill = FILL[t.type] if opts.shading else "none"
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        polys.append(f'  <polygon points="{coords}" fill="{fill}" stroke="black" stroke-width="1"/>')
    pad = k * 0.25
    if xs:
        x0, y0 = min(xs) - pad, min(ys) - pad
        w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    else:
        x0 = y0 = 0.0
        w = h = 1.0
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
    )
    return "\n".join([head, *polys, "</svg>"]) + "\n"


def render_tikz(p: Pattern, opts: RenderOptions = RenderOptions(format="tikz")) -> str:
    """A tikzpicture with one macro call per tile; macros take the oblique anchor (a, b)."""
    unit = _fmt(opts.scale / 40.0)
    e1, e2 = picture_point((1, 0)), picture_point((0, 1))
    lines = []
    for k in TileType:
        corners = tile_vertices(Tile(0, 0, k))
        path = " -- ".join(f"($(#1,#2)+({c[0]},{c[1]})$)" for c in corners) + " -- cycle"
        fill = TIKZ_FILL[k] if opts.shading else "white"
        lines.append(f"\\providecommand{{\\{TIKZ_MACRO[k]}}}[2]{{\\filldraw[fill={fill}] {path};}}")
    lines.append(
        f"\\begin{{tikzpicture}}[x={{({_fmt(e1[0])}*{unit}cm,{_fmt(e1[1])}*{unit}cm)}},"
        f" y={{({_fmt(e2[0])}*{unit}cm,{_fmt(e2[1])}*{unit}cm)}}]"
    )
    for t in p.sorted():
        lines.append(f"  \\{TIKZ_MACRO[t.type]}{{{t.a}}}{{{t.b}}}")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render_ascii(p: Pattern, opts: RenderOptions = RenderOptions(format="ascii")) -> str:
    """One character per unit triangle.

    Row ``b`` holds Up(a, b) at column 2a+b and Down(a, b) at 2a+b+1, so
    vertical neighbours share a horizontal lattice edge.  Up halves are upper
    case, down halves lower case; empty triangles are dots.
    """
    cells = {}
    for t, tile in p.triangles().items():
        ch = ASCII_CHAR[tile.type] if opts.shading else "#"
        cells[(t.b, 2 * t.a + t.b + int(t.orient))] = ch if t.orient == 0 else ch.lower()
    if not cells:
        return "\n"
    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    out = []
    for r in range(max(rows), min(rows) - 1, -1):
        out.append("".join(cells.get((r, c), ".") for c in range(min(cols), max(cols) + 1)).rstrip("."))
    return "\n".join(out) + "\n"


def render_pattern(p: Pattern, opts: RenderOptions = RenderOptions()) -> str:
    if opts.format == "svg":
        return render_svg(p, opts)
    if opts.format == "tikz":
        return render_tikz(p, opts)
    return render_ascii(p, opts)
