"""Locally correct Fréchet matchings between polygonal curves.

The continuous matching is built by recursively splitting both curves at a
critical event of the free-space diagram; the discrete matching grows a
tree of locally correct grid paths in row-major order.
"""

from .curves import Curve, CurveError, point_at, subcurve, validate_curve
from .discrete import (
    MatchGrid,
    MatchTree,
    build_grid,
    compute_discrete_lcfm,
    discrete_frechet,
    lcfm_grid_path,
)
from .events import CriticalEvent, enumerate_events
from .fileio import ParseError, parse_curve_file
from .freespace import decide_connected, decide_standard, free_interval
from .matching import (
    ParamMatching,
    compute_lcfm,
    frechet_distance,
    matching_max_distance,
)
from .oracles import (
    VerificationReport,
    bottleneck_path_value,
    verify_lc_continuous,
    verify_lc_discrete,
)
from .svg import render_svg
from .cli import run_command

__all__ = [
    "Curve",
    "CurveError",
    "validate_curve",
    "point_at",
    "subcurve",
    "free_interval",
    "decide_standard",
    "decide_connected",
    "CriticalEvent",
    "enumerate_events",
    "ParamMatching",
    "frechet_distance",
    "matching_max_distance",
    "compute_lcfm",
    "MatchGrid",
    "MatchTree",
    "build_grid",
    "discrete_frechet",
    "lcfm_grid_path",
    "compute_discrete_lcfm",
    "VerificationReport",
    "bottleneck_path_value",
    "verify_lc_discrete",
    "verify_lc_continuous",
    "ParseError",
    "parse_curve_file",
    "render_svg",
    "run_command",
]

__version__ = "0.1.0"
