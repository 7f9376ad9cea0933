"""Explicit tredoku patterns for every admissible parameter triple, plus the
operators that grow patterns: staircase extension at a leaf, 2-leaf extension
and merging along a shared leaf."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import figures as fig
from .analysis import (
    leaves,
    is_tredoku,
    runs_by_tile,
    stats,
    violations,
)
from .lattice import (
    POINT_GROUP,
    Pattern,
    Symmetry,
    Tile,
    apply_symmetry,
    canonical_key,
    neighbor_across,
    tile_from_triangles,
    tile_sort_key,
    tile_triangles,
    tile_vertices,
    tiles_overlap,
    triangle_edges,
    triangle_neighbors,
)


class ConstructionError(ValueError):
    pass


class Existence(Enum):
    EXISTS = "Exists"
    EXCLUDED_BY_LEAF_BOUND = "ExcludedByLeafBound"
    EXCLUDED_SPORADIC = "ExcludedSporadic"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class ParameterTriple:
    tau: int
    rho: int
    leaves: int

    def astuple(self) -> tuple[int, int, int]:
        return (self.tau, self.rho, self.leaves)

    @classmethod
    def from_runs(cls, tau: int, rho: int) -> "ParameterTriple":
        return cls(tau, rho, 2 * tau - 3 * rho)


SPORADIC_EXCLUSIONS = frozenset({(3, 1, 3), (3, 2, 0), (4, 2, 2), (5, 3, 1), (6, 4, 0), (12, 8, 0), (15, 7, 9)})


def leaf_bound(tau: int) -> int:
    return math.ceil(tau / 2) + 1


def classify_parameters(t: ParameterTriple) -> Existence:
    tau, rho, lf = t.astuple()
    if tau < 0 or rho < 0 or lf != 2 * tau - 3 * rho or lf < 0 or lf > tau:
        return Existence.INFEASIBLE
    if lf > leaf_bound(tau):
        return Existence.EXCLUDED_BY_LEAF_BOUND
    if (tau, rho, lf) in SPORADIC_EXCLUSIONS:
        return Existence.EXCLUDED_SPORADIC
    if rho >= 9 and (tau, lf) == (2 * rho + 1, rho + 2):
        return Existence.EXCLUDED_SPORADIC
    return Existence.EXISTS


def feasible_triples(max_tiles: int, min_tiles: int = 3):
    """All triples satisfying the counting identity with 0 <= leaves <= tau."""
    for tau in range(min_tiles, max_tiles + 1):
        for rho in range(0, 2 * tau // 3 + 1):
            lf = 2 * tau - 3 * rho
            if 0 <= lf <= tau:
                yield ParameterTriple(tau, rho, lf)


# ---------------------------------------------------------------------------
# Staircase extension at a leaf


def _placements_of(template_leaf: Tile, leaf: Tile):
    """Symmetries sending ``template_leaf`` onto ``leaf``, in point-group order."""
    for h in POINT_GROUP:
        img = h.map_tile(template_leaf)
        if img.type == leaf.type:
            yield Symmetry(h.rotation, h.reflected, (leaf.a - img.a, leaf.b - img.b))


def _check_growth(p: Pattern, q: Pattern, dtau: int, drho: int, dleaves: int) -> str | None:
    if not is_tredoku(q):
        return "; ".join(violations(q)) or "result is not a tredoku pattern"
    s0, s1 = stats(p), stats(q)
    want = (s0.tau + dtau, s0.rho + drho, s0.leaves + dleaves)
    if s1.triple != want:
        return f"stats {s1.triple}, expected {want}"
    return None


def extend_at_leaf(p: Pattern, leaf: Tile, j: int) -> Pattern:
    """Add ``j`` new runs and ``2j`` tiles in a staircase hanging off ``leaf``.

    The staircase applies when the ``2j`` cells it needs are free and the
    grown pattern is still tredoku with ``j`` more leaves.  Every placement
    of the staircase that maps its root onto ``leaf`` is tried in turn.
    """
    if j < 1:
        raise ValueError("j must be at least 1")
    if leaf not in p:
        raise ConstructionError(f"{leaf} is not a tile of the pattern")
    if leaf not in leaves(p):
        raise ConstructionError(f"{leaf} is not a leaf")
    root = fig.drawing_tile("t", 0, 0)
    extra = fig.parse_drawing(fig.extension_tiles(j))[0]
    tri_map = p.triangles()
    reasons = []
    for g in _placements_of(root, leaf):
        new = [g.map_tile(t) for t in extra]
        if any(tri in tri_map for t in new for tri in tile_triangles(t)):
            reasons.append("cells occupied")
            continue
        q = Pattern(p.tiles | set(new))
        why = _check_growth(p, q, 2 * j, j, j)
        if why is None:
            return q
        reasons.append(why)
    raise ConstructionError(f"staircase extension blocked at {leaf}: {sorted(set(reasons))}")


# ---------------------------------------------------------------------------
# 2-leaf extension


def _short_direction(p: Pattern, t: Tile):
    (short,) = [r.shared_dir for r in runs_by_tile(p)[t] if len(r) == 1]
    return short


def _meets_only_inside(p: Pattern, s: Tile, t: Tile) -> bool:
    """True when the closed tile ``s`` meets the pattern region only within ``t``."""
    t_verts = set(tile_vertices(t))
    s_verts = set(tile_vertices(s))
    for u in p.tiles:
        if u == t:
            continue
        if tiles_overlap(s, u):
            return False
        if (s_verts & set(tile_vertices(u))) - t_verts:
            return False
    return True


def two_leaf_candidates(p: Pattern, t: Tile) -> tuple[list[Tile], list[Tile]]:
    """Candidate tiles on the two sides of ``t`` along its length-1 run."""
    if t not in p:
        raise ConstructionError(f"{t} is not a tile of the pattern")
    if t not in leaves(p):
        raise ConstructionError(f"{t} is not a leaf")
    d = _short_direction(p, t)
    sides = []
    for tri in tile_triangles(t):
        across = neighbor_across(tri, d)
        opts = []
        for other, e in triangle_neighbors(across):
            if e == d:
                continue
            s = tile_from_triangles(across, other)
            if _meets_only_inside(p, s, t):
                opts.append(s)
        sides.append(sorted(opts, key=tile_sort_key))
    return sides[0], sides[1]


def two_leaf_placements(p: Pattern, t: Tile) -> list[tuple[Tile, Tile]]:
    """All (s1, s2) giving a valid 2-leaf extension at ``t``."""
    side1, side2 = two_leaf_candidates(p, t)
    out = []
    for s1 in side1:
        for s2 in side2:
            if tiles_overlap(s1, s2):
                continue
            q = Pattern(p.tiles | {s1, s2})
            if _check_growth(p, q, 2, 1, 1) is None:
                out.append((s1, s2))
    return out


def two_leaf_extension(p: Pattern, t: Tile, choice: int = 0) -> Pattern:
    side1, side2 = two_leaf_candidates(p, t)
    problems = []
    if not side1:
        problems.append("no admissible tile on the first side")
    if not side2:
        problems.append("no admissible tile on the second side")
    if problems:
        raise ConstructionError("; ".join(problems))
    placements = two_leaf_placements(p, t)
    if not placements:
        raise ConstructionError("every candidate placement breaks the tredoku conditions")
    if not 0 <= choice < len(placements):
        raise ConstructionError(f"choice {choice} out of range ({len(placements)} placements)")
    s1, s2 = placements[choice]
    return Pattern(p.tiles | {s1, s2})


# ---------------------------------------------------------------------------
# Merging


def _closed_cells(p: Pattern):
    tris = set(p.triangles())
    edges = {e for tri in tris for e in triangle_edges(tri)}
    verts = {v for e in edges for v in e}
    return tris, edges, verts


def merge_problems(p1: Pattern, p2: Pattern, t: Tile) -> list[str]:
    out = []
    if t not in p1 or t not in p2:
        return ["shared tile missing from one of the patterns"]
    tris1, edges1, verts1 = _closed_cells(p1)
    tris2, edges2, verts2 = _closed_cells(p2)
    tt, te, tv = _closed_cells(Pattern([t]))
    if (tris1 & tris2) != tt or not (edges1 & edges2) <= te or not (verts1 & verts2) <= tv:
        out.append("regions meet outside the shared tile")
    long_dirs = []
    for name, p in (("first", p1), ("second", p2)):
        try:
            if t not in leaves(p):
                out.append(f"shared tile is not a leaf of the {name} pattern")
                continue
        except ValueError as exc:
            out.append(f"{name} pattern: {exc}")
            continue
        (run,) = [r for r in runs_by_tile(p)[t] if len(r) == 3]
        if not run.is_end(t):
            out.append(f"shared tile is the centre of its run in the {name} pattern")
        long_dirs.append(run.shared_dir)
    if len(long_dirs) == 2 and long_dirs[0] == long_dirs[1]:
        out.append("the two runs through the shared tile have the same direction")
    return out


def merge(p1: Pattern, p2: Pattern, t: Tile) -> Pattern:
    problems = merge_problems(p1, p2, t)
    if problems:
        raise ConstructionError("; ".join(problems))
    q = Pattern(p1.tiles | p2.tiles)
    s1, s2 = stats(p1), stats(p2)
    if not is_tredoku(q):
        raise ConstructionError("merged pattern fails: " + "; ".join(violations(q)))
    want = (s1.tau + s2.tau - 1, s1.rho + s2.rho, s1.leaves + s2.leaves - 2)
    if stats(q).triple != want:
        raise ConstructionError(f"merged stats {stats(q).triple}, expected {want}")
    return q


def merges(p1: Pattern, p2: Pattern) -> list[Pattern]:
    """Every valid merging of ``p1`` with a congruent copy of ``p2``, one per congruence class."""
    found = {}
    l1 = sorted(leaves(p1), key=tile_sort_key)
    l2 = sorted(leaves(p2), key=tile_sort_key)
    for t in l1:
        for u in l2:
            for g in _placements_of(u, t):
                q2 = apply_symmetry(p2, g)
                if merge_problems(p1, q2, t):
                    continue
                try:
                    q = merge(p1, q2, t)
                except ConstructionError:
                    continue
                found.setdefault(canonical_key(q.tiles), q)
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# Weak staircases and verdant patterns


def weak_staircase(rho: int) -> Pattern:
    """Weak (but not tredoku) pattern: ``rho`` runs turning alternately, 2 rho + 1 tiles."""
    if rho < 1:
        raise ValueError("rho must be at least 1")
    items = [(0, 0), (0, 1), (0, 2)]
    x, y = 0, 2
    for k in range(2, rho + 1):
        if k % 2 == 0:
            items += [(x - 1, y), (x - 2, y)]
            x -= 2
        else:
            items += [(x, y + 1), (x, y + 2)]
            y += 2
    return Pattern(fig.drawing_tile("l", a, b) for a, b in items)


def verdant_catalog() -> list[Pattern]:
    return [fig.drawing(text) for tau in sorted(fig.VERDANT) for text in fig.VERDANT[tau]]


# ---------------------------------------------------------------------------
# construct()


def _fixed(table: dict, tau: int):
    return table.get(tau)


def _family_member(leaves_: int, tau: int):
    base = fig.FAMILY_CAPS[leaves_][3]
    if tau >= base and (tau - base) % 3 == 0:
        return fig.family(leaves_, (tau - base) // 3)
    return None


def _four_leaf_base(tau: int) -> tuple[Pattern, Tile]:
    text = fig.FOUR_LEAF[8] if tau == 8 else _family_member(4, tau)
    if text is None:
        raise ConstructionError(f"no four-leaf base with {tau} tiles")
    tiles, marked = fig.parse_drawing(text)
    return Pattern(tiles), marked[0]


def _drawing_for(tau: int, rho: int, lf: int) -> str | None:
    if lf == 0:
        return {9: fig.ZERO_LEAF_9, 15: fig.ZERO_LEAF_15}.get(tau) or _family_member(0, tau)
    if lf == 1:
        return _fixed(fig.ONE_LEAF, tau) or _family_member(1, tau)
    if lf == 2:
        return _fixed(fig.TWO_LEAF, tau) or _family_member(2, tau)
    if lf == 3:
        return _fixed(fig.THREE_LEAF, tau) or _family_member(3, tau)
    if lf == 4 and tau != 5:
        return _fixed(fig.FOUR_LEAF, tau) or _family_member(4, tau)
    if lf == rho + 2 and tau == 2 * rho + 1:
        return fig.UPPER_DIAGONAL.get(rho)
    return None


def construct(t: ParameterTriple) -> Pattern:
    """A tredoku pattern with exactly the requested (tau, rho, leaves)."""
    verdict = classify_parameters(t)
    if verdict is not Existence.EXISTS:
        raise ConstructionError(f"{t.astuple()} is {verdict.value}")
    tau, rho, lf = t.astuple()
    text = _drawing_for(tau, rho, lf)
    if text is not None:
        p = fig.drawing(text)
    else:
        j = lf - 4
        base, leaf = _four_leaf_base(tau - 2 * j)
        p = extend_at_leaf(base, leaf, j)
    if not is_tredoku(p) or stats(p).triple != (tau, rho, lf):
        raise ConstructionError(f"internal: construction for {t.astuple()} failed validation")
    return p


__all__ = [
    "ConstructionError",
    "Existence",
    "ParameterTriple",
    "SPORADIC_EXCLUSIONS",
    "classify_parameters",
    "construct",
    "extend_at_leaf",
    "feasible_triples",
    "leaf_bound",
    "merge",
    "merge_problems",
    "merges",
    "two_leaf_candidates",
    "two_leaf_extension",
    "two_leaf_placements",
    "verdant_catalog",
    "weak_staircase",
]
