"""Number placement on a pattern: every tile is cut into a 3x3 grid of small
diamonds, and each tile's nine cells as well as every line of nine cells
running along a run of length 3 must hold 1..9 exactly once."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .analysis import check_run_lengths, is_tredoku, maximal_runs
from .lattice import DIRECTION_VECTORS, Direction, Pattern, Tile, embed, side_directions, tile_origin, tile_vertices

ALL = (1 << 9) - 1


class SubCell(NamedTuple):
    tile: Tile
    i: int  # index along the tile's first side direction
    j: int  # index along the second


class GroupKind(Enum):
    BOX = "box"
    LINE = "line"


@dataclass(frozen=True)
class Grouping:
    kind: GroupKind
    cells: tuple  # nine SubCells, ordered


class SolveStatus(Enum):
    SOLVED = "solved"
    UNSAT = "unsat"
    CAPPED = "capped"


@dataclass
class SolveResult:
    status: SolveStatus
    assignment: dict | None
    nodes: int


def subcells(t: Tile) -> list[SubCell]:
    return [SubCell(t, i, j) for i in range(3) for j in range(3)]


def subcell_centre(c: SubCell) -> tuple[float, float]:
    """Euclidean centre of a sub-cell, used to check geometry."""
    o = tile_origin(c.tile)
    u, v = (DIRECTION_VECTORS[d] for d in side_directions(c.tile.type))
    s, t = (c.i + 0.5) / 3, (c.j + 0.5) / 3
    return embed((o[0] + s * u[0] + t * v[0], o[1] + s * u[1] + t * v[1]))


def _bucket(c: SubCell, e: Direction) -> int:
    first, _ = side_directions(c.tile.type)
    return c.i if e == first else c.j


def _tile_centre(t: Tile) -> tuple[float, float]:
    pts = [embed(v) for v in tile_vertices(t)]
    return (sum(x for x, _ in pts) / 4, sum(y for _, y in pts) / 4)


def groupings(p: Pattern) -> list[Grouping]:
    """One box per tile, then three lines per run of length 3."""
    if not check_run_lengths(p):
        raise ValueError("groupings need every run to have length 1 or 3")
    if not is_tredoku(p):
        warnings.warn("pattern is not a tredoku pattern", stacklevel=2)
    out = [Grouping(GroupKind.BOX, tuple(subcells(t))) for t in p.sorted()]
    for run in maximal_runs(p):
        if len(run) != 3:
            continue
        e = run.shared_dir
        (x0, y0), (x1, y1) = _tile_centre(run.tiles[0]), _tile_centre(run.tiles[-1])

        def along(c: SubCell) -> float:
            x, y = subcell_centre(c)
            return (x - x0) * (x1 - x0) + (y - y0) * (y1 - y0)

        for k in range(3):
            cells = []
            for t in run.tiles:
                row = [c for c in subcells(t) if _bucket(c, e) == k]
                cells += sorted(row, key=along)
            out.append(Grouping(GroupKind.LINE, tuple(cells)))
    return out


def all_subcells(p: Pattern) -> list[SubCell]:
    return [c for t in p.sorted() for c in subcells(t)]


# ---------------------------------------------------------------------------
# Solver


class _Board:
    def __init__(self, p: Pattern):
        self.cells = all_subcells(p)
        self.index = {c: n for n, c in enumerate(self.cells)}
        self.groups = [[self.index[c] for c in g.cells] for g in groupings(p)]
        self.member = [[] for _ in self.cells]
        for gi, g in enumerate(self.groups):
            for n in g:
                self.member[n].append(gi)
        self.peers = [sorted({m for gi in self.member[n] for m in self.groups[gi]} - {n}) for n in range(len(self.cells))]


def _candidates(board: _Board, vals: list[int], n: int) -> int:
    used = 0
    for m in board.peers[n]:
        if vals[m]:
            used |= 1 << (vals[m] - 1)
    return ALL & ~used


def _propagate(board: _Board, vals: list[int]) -> bool:
    """Fill naked and hidden singles in place; False on contradiction."""
    changed = True
    while changed:
        changed = False
        cand = {}
        for n, v in enumerate(vals):
            if not v:
                c = _candidates(board, vals, n)
                if not c:
                    return False
                if c & (c - 1) == 0:
                    vals[n] = c.bit_length()
                    changed = True
                else:
                    cand[n] = c
        if changed:
            continue
        for g in board.groups:
            placed = 0
            for n in g:
                if vals[n]:
                    placed |= 1 << (vals[n] - 1)
            for bit in range(9):
                mask = 1 << bit
                if placed & mask:
                    continue
                spots = [n for n in g if not vals[n] and cand.get(n, 0) & mask]
                if not spots:
                    return False
                if len(spots) == 1:
                    vals[spots[0]] = bit + 1
                    changed = True
                    break
            if changed:
                break
    return True


def _consistent(board: _Board, vals: list[int]) -> bool:
    for g in board.groups:
        seen = 0
        for n in g:
            v = vals[n]
            if v:
                if seen >> (v - 1) & 1:
                    return False
                seen |= 1 << (v - 1)
    return True


def _search(board: _Board, vals: list[int], state: dict, limit: int, node_cap: int | None):
    """Depth-first search; yields complete value lists."""
    state["nodes"] += 1
    if node_cap is not None and state["nodes"] > node_cap:
        state["capped"] = True
        return
    if not _propagate(board, vals):
        return
    best, best_c, best_k = None, 0, 10
    for n, v in enumerate(vals):
        if not v:
            c = _candidates(board, vals, n)
            k = bin(c).count("1")
            if k < best_k:
                best, best_c, best_k = n, c, k
                if k <= 1:
                    break
    if best is None:
        yield list(vals)
        return
    for bit in range(9):
        if best_c >> bit & 1:
            nxt = list(vals)
            nxt[best] = bit + 1
            yield from _search(board, nxt, state, limit, node_cap)
            if state["found"] >= limit or state.get("capped"):
                return


def _initial(board: _Board, clues: dict) -> list[int] | None:
    vals = [0] * len(board.cells)
    for c, v in clues.items():
        c = SubCell(*c)
        if c not in board.index:
            raise ValueError(f"clue cell {c} is not part of the pattern")
        if not 1 <= v <= 9:
            raise ValueError(f"clue value {v} outside 1..9")
        vals[board.index[c]] = v
    return vals if _consistent(board, vals) else None


def solve(p: Pattern, clues: dict | None = None, node_cap: int | None = 200_000) -> SolveResult:
    """Fill every sub-cell so each grouping is a permutation of 1..9."""
    board = _Board(p)
    vals = _initial(board, clues or {})
    if vals is None:
        return SolveResult(SolveStatus.UNSAT, None, 0)
    state = {"nodes": 0, "found": 0}
    for sol in _search(board, vals, state, 1, node_cap):
        return SolveResult(SolveStatus.SOLVED, dict(zip(board.cells, sol)), state["nodes"])
    status = SolveStatus.CAPPED if state.get("capped") else SolveStatus.UNSAT
    return SolveResult(status, None, state["nodes"])


def count_solutions(p: Pattern, clues: dict | None = None, cap: int = 2, node_cap: int | None = None) -> int:
    """Number of completions of ``clues``, stopping once ``cap`` are found."""
    board = _Board(p)
    vals = _initial(board, clues or {})
    if vals is None:
        return 0
    state = {"nodes": 0, "found": 0}
    for _ in _search(board, vals, state, cap, node_cap):
        state["found"] += 1
        if state["found"] >= cap:
            break
    return state["found"]


def verify_solution(p: Pattern, assignment: dict) -> bool:
    cells = all_subcells(p)
    missing = [c for c in cells if c not in assignment]
    if missing:
        raise ValueError(f"assignment is incomplete: {len(missing)} cells empty")
    full = set(range(1, 10))
    return all({assignment[c] for c in g.cells} == full for g in groupings(p))
