"""Tredoku patterns: diamond tilings of the triangular lattice with runs of length 1 or 3."""

from .lattice import (
    Direction,
    Down,
    Pattern,
    Symmetry,
    Tile,
    TileType,
    TriCell,
    Up,
    apply_symmetry,
    canonical_form,
    tile_triangles,
    tiles_edge_adjacent,
)
from .analysis import (
    PatternStats,
    Run,
    check_run_lengths,
    euler_characteristic,
    is_generalized_tredoku,
    is_nonsingular,
    is_removal_connected,
    is_simply_connected,
    is_tredoku,
    is_tredoku_via_leaf_rule,
    is_verdant,
    is_weak_tredoku,
    leaves,
    maximal_runs,
    run_count_bounds_hold,
    stats,
    tile_graph,
)
from .constructions import (
    Existence,
    ParameterTriple,
    classify_parameters,
    construct,
    extend_at_leaf,
    merge,
    two_leaf_extension,
    verdant_catalog,
    weak_staircase,
)

__all__ = [
    "Direction", "Down", "Pattern", "Symmetry", "Tile", "TileType", "TriCell", "Up",
    "apply_symmetry", "canonical_form", "tile_triangles", "tiles_edge_adjacent",
    "PatternStats", "Run", "check_run_lengths", "euler_characteristic", "is_generalized_tredoku",
    "is_nonsingular", "is_removal_connected", "is_simply_connected", "is_tredoku",
    "is_tredoku_via_leaf_rule", "is_verdant", "is_weak_tredoku", "leaves", "maximal_runs",
    "run_count_bounds_hold", "stats", "tile_graph",
    "Existence", "ParameterTriple", "classify_parameters", "construct", "extend_at_leaf", "merge",
    "two_leaf_extension", "verdant_catalog", "weak_staircase",
]

__version__ = "0.1.0"
