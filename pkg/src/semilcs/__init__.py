"""Semi-local LCS: score one string against every substring of another.

The scores live in an implicit form, a permutation of m+n seaweed
endpoints (CriticalPointSet), computable by several routes that must all
agree: the O(mn) seaweed sweep, full network simulation, a quadtree that
exploits sparsity of matches, run-length compressed evaluation, and a
contour-guided sweep for dissimilar strings.
"""

from .core import (
    CharString,
    CriticalPointSet,
    DenseScoreMatrix,
    HalfIntCoord,
    MatchLists,
    build_match_lists,
    dense_semilocal_oracle,
    llcs_dp,
)
from .netsim import (
    DiamondInstance,
    DiamondStats,
    EqualPolicy,
    diamond_outputs,
    extract_critical_points,
    network_semilocal,
    seaweed_inputs,
    simulate_lcsnet,
)
from .rle import (
    RleStats,
    RleString,
    format_rle_text,
    parse_rle_text,
    rle_decode,
    rle_encode,
    rle_semilocal,
)
from .seaweed import SeaweedFront, seaweed_core, seaweed_row_step
from .sparse import (
    Block,
    SparseStats,
    count_block_matches,
    merge_output_sort,
    sparse_semilocal,
)
from .zeroone import (
    BandedStats,
    BoundarySet,
    ContourSet,
    ContourStats,
    boundary_sets,
    dominant_matches,
    llcs_01,
    llcs_banded,
    semilocal_contour,
    stray_cells,
    trace_contours,
)

__version__ = "0.1.0"

__all__ = [
    "CharString",
    "CriticalPointSet",
    "DenseScoreMatrix",
    "HalfIntCoord",
    "MatchLists",
    "build_match_lists",
    "dense_semilocal_oracle",
    "llcs_dp",
    "DiamondInstance",
    "DiamondStats",
    "EqualPolicy",
    "diamond_outputs",
    "extract_critical_points",
    "network_semilocal",
    "seaweed_inputs",
    "simulate_lcsnet",
    "RleStats",
    "RleString",
    "format_rle_text",
    "parse_rle_text",
    "rle_decode",
    "rle_encode",
    "rle_semilocal",
    "SeaweedFront",
    "seaweed_core",
    "seaweed_row_step",
    "Block",
    "SparseStats",
    "count_block_matches",
    "merge_output_sort",
    "sparse_semilocal",
    "BandedStats",
    "BoundarySet",
    "ContourSet",
    "ContourStats",
    "boundary_sets",
    "dominant_matches",
    "llcs_01",
    "llcs_banded",
    "semilocal_contour",
    "stray_cells",
    "trace_contours",
]
