"""Exact search and verification for squares and isosceles right
triangles spanned by finite integer point sets."""

from squarespan.beam import BeamConfig, BeamResult, beam_search
from squarespan.bounds import (
    BoundReport,
    ilp_assignment_from_pointset,
    ilp_export,
    rit_bound_report,
    square_bound_report,
)
from squarespan.corpus import (
    load_default_corpus,
    parse_corpus,
    render_grid,
    verify_corpus,
)
from squarespan.extension import EnumTable, enumerate_classes
from squarespan.geometry import (
    PointSet,
    count_axis_parallel_squares,
    count_rit,
    count_squares,
    rits_of,
    squares_of,
    srit_minus_3sq,
)
from squarespan.realize import (
    OrientedSquareSet,
    RealizabilityReport,
    grid_embed,
    is_realizable,
    oss_from_pointset,
    parse_oss,
    solve_gauged,
)
from squarespan.similarity import (
    canonical_key,
    centered_key,
    normalize_to_grid,
    similar,
)

__all__ = [
    "BeamConfig",
    "BeamResult",
    "BoundReport",
    "EnumTable",
    "OrientedSquareSet",
    "PointSet",
    "RealizabilityReport",
    "beam_search",
    "canonical_key",
    "centered_key",
    "count_axis_parallel_squares",
    "count_rit",
    "count_squares",
    "enumerate_classes",
    "grid_embed",
    "ilp_assignment_from_pointset",
    "ilp_export",
    "is_realizable",
    "load_default_corpus",
    "normalize_to_grid",
    "oss_from_pointset",
    "parse_corpus",
    "parse_oss",
    "render_grid",
    "rit_bound_report",
    "rits_of",
    "similar",
    "solve_gauged",
    "square_bound_report",
    "squares_of",
    "srit_minus_3sq",
    "verify_corpus",
]

__version__ = "0.1.0"
