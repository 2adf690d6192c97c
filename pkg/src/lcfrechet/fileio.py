"""Plain-text formats for curves and matchings.

A curve file holds one ``x y`` point per line.  Blank lines and lines whose
first non-blank character is ``#`` are skipped.  Matching files use the same
layout: diagram parameters ``x y`` for continuous matchings, node indices
``i j`` for discrete ones.
"""

from __future__ import annotations

import numpy as np

from .curves import Curve, CurveError, validate_curve
from .matching import ParamMatching

__all__ = [
    "ParseError",
    "parse_points",
    "parse_curve_file",
    "read_curve",
    "format_matching",
    "parse_matching",
    "format_node_path",
    "parse_node_path",
]


class ParseError(ValueError):
    """Malformed input file; ``line`` is 1-based (``None`` for whole-file)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def parse_points(text: str, kind=float) -> list[tuple]:
    """Two-column rows of ``text`` converted with ``kind``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 2 fields, got {len(fields)}", lineno)
        try:
            rows.append(tuple(kind(f) for f in fields))
        except ValueError:
            raise ParseError(f"malformed number in {line!r}", lineno) from None
    if not rows:
        raise ParseError("no points in file")
    return rows


def parse_curve_file(text: str) -> Curve:
    """Curve from the text of a curve file.

    Examples
    --------
    >>> parse_curve_file("# comment\\n1 2\\n").vertices.tolist()
    [[1.0, 2.0]]
    """
    pts = parse_points(text)
    try:
        return validate_curve(pts)
    except CurveError as exc:
        raise ParseError(str(exc)) from None


def read_curve(path) -> Curve:
    with open(path, encoding="utf-8") as fh:
        return parse_curve_file(fh.read())


def format_matching(M: ParamMatching) -> str:
    # repr keeps every bit, so the file verifies exactly as computed
    return "".join(f"{x!r} {y!r}\n" for x, y in M.path.tolist())


def parse_matching(text: str) -> ParamMatching:
    return ParamMatching(np.array(parse_points(text)))


def format_node_path(path) -> str:
    return "".join(f"{i} {j}\n" for i, j in path)


def parse_node_path(text: str) -> list[tuple[int, int]]:
    return parse_points(text, kind=int)
