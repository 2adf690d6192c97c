"""Polygonal curves in the plane.

A curve with vertices ``p_0, ..., p_m`` is treated as the piecewise-linear
map ``[0, m] -> R^2`` with ``P(i + lam) = (1 - lam) p_i + lam p_{i+1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Curve",
    "validate_curve",
    "point_at",
    "subcurve",
    "subcurve_breakpoints",
]

MERGE_TOL = 1e-12


class CurveError(ValueError):
    """Raised for malformed curve input."""


@dataclass(frozen=True, eq=False)
class Curve:
    """Immutable polygonal curve.

    Use :func:`validate_curve` to build one from raw points; the constructor
    assumes the vertices are already clean.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float).reshape(-1, 2)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return np.array_equal(self.vertices, other.vertices)

    def __hash__(self):
        return hash(self.vertices.tobytes())

    def __repr__(self):
        pts = ", ".join(f"({x:g}, {y:g})" for x, y in self.vertices)
        return f"Curve([{pts}])"

    def edge(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        return self.vertices[i], self.vertices[i + 1]


def validate_curve(points) -> Curve:
    """Build a :class:`Curve`, collapsing consecutive duplicate points.

    Raises
    ------
    CurveError
        If no points are given, the shape is not ``(k, 2)`` or any
        coordinate is NaN or infinite.
    """
    arr = np.asarray(points, dtype=float)
    if arr.size == 0:
        raise CurveError("curve has no points")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise CurveError(f"expected (k, 2) points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise CurveError("non-finite coordinate in curve")
    keep = [0]
    for k in range(1, len(arr)):
        if not np.array_equal(arr[k], arr[keep[-1]]):
            keep.append(k)
    return Curve(arr[keep])


def point_at(c: Curve, s: float) -> np.ndarray:
    """Point ``P(s)`` for a parameter ``0 <= s <= m``.

    Integer parameters return the stored vertex exactly.
    """
    m = c.m
    if not (0 <= s <= m) or math.isnan(s):
        raise ValueError(f"parameter {s} outside [0, {m}]")
    i = int(math.floor(s))
    lam = s - i
    if lam == 0:
        return c.vertices[i].copy()
    a, b = c.vertices[i], c.vertices[i + 1]
    return (1 - lam) * a + lam * b


def subcurve_breakpoints(c: Curve, a: float, b: float) -> list[float]:
    """Parameters of ``c`` at the vertices of ``subcurve(c, a, b)``.

    Sub-parameter ``k`` of the subcurve corresponds to ``bps[k]`` and the
    subcurve is affine between consecutive breakpoints, so the list is the
    exact map from sub-diagram coordinates back to ``c``.
    """
    if a > b:
        raise ValueError(f"subcurve bounds reversed: {a} > {b}")
    if a < 0 or b > c.m:
        raise ValueError(f"subcurve bounds [{a}, {b}] outside [0, {c.m}]")
    params = [a]
    pts = [point_at(c, a)]
    for k in range(int(math.floor(a)) + 1, int(math.ceil(b))):
        params.append(float(k))
        pts.append(c.vertices[k])
    if b != a:
        params.append(b)
        pts.append(point_at(c, b))
    out_params = [params[0]]
    last = pts[0]
    for k in range(1, len(params)):
        if np.max(np.abs(pts[k] - last)) <= MERGE_TOL:
            # the end parameter must survive a merge so the map ends at b
            if k == len(params) - 1 and len(out_params) > 1:
                out_params[-1] = params[k]
            continue
        out_params.append(params[k])
        last = pts[k]
    return out_params


def subcurve(c: Curve, a: float, b: float) -> Curve:
    """Subcurve of ``c`` between parameters ``a`` and ``b``.

    ``a == b`` yields a single-point curve.
    """
    bps = subcurve_breakpoints(c, a, b)
    return Curve(np.array([point_at(c, t) for t in bps]))
