"""Versioned JSON documents for patterns, puzzles and solutions, and the census table."""

from __future__ import annotations

import csv
import io
import json
import warnings
from typing import Any

from .lattice import OverlapError, Pattern, Tile, TileType

FORMAT_VERSION = "1"
TYPE_NAMES = {TileType.TOP: "top", TileType.LEFT: "left", TileType.RIGHT: "right"}
TYPE_BY_NAME = {v: k for k, v in TYPE_NAMES.items()}
CENSUS_HEADER = ("tau", "rho", "leaves", "count")


class FormatError(ValueError):
    """Malformed document; ``where`` names the offending field."""

    def __init__(self, where: str, reason: str):
        super().__init__(f"{where}: {reason}")
        self.where = where
        self.reason = reason


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}", f"invalid JSON ({exc.msg})") from None


def _check_keys(obj: Any, where: str, required: set, optional: set = frozenset()) -> None:
    if not isinstance(obj, dict):
        raise FormatError(where, "expected an object")
    unknown = set(obj) - required - optional
    if unknown:
        raise FormatError(where, f"unknown field(s) {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise FormatError(where, f"missing field(s) {sorted(missing)}")


def _int(obj: dict, key: str, where: str) -> int:
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{where}.{key}", f"expected an integer, got {v!r}")
    return v


def _tiles_from(doc: dict) -> list[Tile]:
    if doc["format_version"] != FORMAT_VERSION:
        raise FormatError("format_version", f"unsupported version {doc['format_version']!r}")
    raw = doc["tiles"]
    if not isinstance(raw, list):
        raise FormatError("tiles", "expected a list")
    if not raw:
        raise FormatError("tiles", "empty tile list")
    tiles: list[Tile] = []
    seen: dict[Tile, int] = {}
    for n, item in enumerate(raw):
        where = f"tiles[{n}]"
        _check_keys(item, where, {"a", "b", "type"})
        name = item["type"]
        if name not in TYPE_BY_NAME:
            raise FormatError(f"{where}.type", f"bad tile type {name!r}")
        t = Tile(_int(item, "a", where), _int(item, "b", where), TYPE_BY_NAME[name])
        if t in seen:
            raise FormatError(where, f"duplicate of tiles[{seen[t]}]")
        seen[t] = n
        tiles.append(t)
    if len(tiles) < 3:
        warnings.warn(f"pattern has only {len(tiles)} tile(s)", stacklevel=3)
    return tiles


def _pattern(tiles: list[Tile]) -> Pattern:
    try:
        return Pattern(tiles)
    except OverlapError as exc:
        raise FormatError("tiles", f"overlap: {exc}") from None


def _tile_dict(t: Tile) -> dict:
    return {"a": t.a, "b": t.b, "type": TYPE_NAMES[t.type]}


# -- patterns ------------------------------------------------------------------


def pattern_to_dict(p: Pattern) -> dict:
    return {"format_version": FORMAT_VERSION, "tiles": [_tile_dict(t) for t in p.sorted()]}


def dump_pattern(p: Pattern) -> str:
    return json.dumps(pattern_to_dict(p), indent=1) + "\n"


def parse_pattern(text: str) -> Pattern:
    doc = _load(text)
    _check_keys(doc, "document", {"format_version", "tiles"})
    return _pattern(_tiles_from(doc))


# -- puzzles and solutions -------------------------------------------------------


def _cell_entries(doc: dict, key: str, tiles: list[Tile]) -> dict:
    raw = doc[key]
    if not isinstance(raw, list):
        raise FormatError(key, "expected a list")
    out = {}
    for n, item in enumerate(raw):
        where = f"{key}[{n}]"
        _check_keys(item, where, {"tile_index", "i", "j", "value"})
        k, i, j, v = (_int(item, f, where) for f in ("tile_index", "i", "j", "value"))
        if not 0 <= k < len(tiles):
            raise FormatError(f"{where}.tile_index", f"{k} out of range")
        if not (0 <= i < 3 and 0 <= j < 3):
            raise FormatError(where, "sub-cell indices must be 0, 1 or 2")
        if not 1 <= v <= 9:
            raise FormatError(f"{where}.value", f"{v} outside 1..9")
        cell = (tiles[k], i, j)
        if cell in out:
            raise FormatError(where, "cell given twice")
        out[cell] = v
    return out


def parse_puzzle(text: str) -> tuple[Pattern, dict, list[Tile]]:
    """Pattern, clues keyed by (tile, i, j), and the document's tile order."""
    doc = _load(text)
    _check_keys(doc, "document", {"format_version", "tiles", "clues"})
    tiles = _tiles_from(doc)
    return _pattern(tiles), _cell_entries(doc, "clues", tiles), tiles


def _entries(values: dict, tiles: list[Tile]) -> list[dict]:
    index = {t: n for n, t in enumerate(tiles)}
    rows = [
        {"tile_index": index[c[0]], "i": c[1], "j": c[2], "value": v}
        for c, v in values.items()
    ]
    return sorted(rows, key=lambda r: (r["tile_index"], r["i"], r["j"]))


def dump_puzzle(p: Pattern, clues: dict) -> str:
    tiles = p.sorted()
    doc = pattern_to_dict(p)
    doc["clues"] = _entries(clues, tiles)
    return json.dumps(doc, indent=1) + "\n"


def dump_solution(p: Pattern, values: dict, tiles: list[Tile] | None = None) -> str:
    tiles = tiles or p.sorted()
    doc = {"format_version": FORMAT_VERSION, "tiles": [_tile_dict(t) for t in tiles]}
    doc["values"] = _entries(values, tiles)
    return json.dumps(doc, indent=1) + "\n"


def parse_solution(text: str) -> tuple[Pattern, dict]:
    doc = _load(text)
    _check_keys(doc, "document", {"format_version", "tiles", "values"})
    tiles = _tiles_from(doc)
    return _pattern(tiles), _cell_entries(doc, "values", tiles)


# -- census ---------------------------------------------------------------------


def census_csv(rows) -> str:
    """Rows of (tau, rho, leaves, count) as CSV, sorted, with a header line."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CENSUS_HEADER)
    for r in sorted(tuple(r) for r in rows):
        w.writerow(r)
    return buf.getvalue()


def parse_census(text: str) -> list[tuple[int, int, int, int]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CENSUS_HEADER:
        raise FormatError("header", f"expected {','.join(CENSUS_HEADER)}")
    return [tuple(int(x) for x in row) for row in reader if row]
