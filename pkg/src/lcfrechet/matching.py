"""Locally correct Fréchet matchings between polygonal curves.

A matching is represented by its path in the parameter diagram: a monotone
polyline from ``(0, 0)`` to ``(m, n)`` that is linear inside each cell.  The
recursive construction splits both curves at an event that is needed for the
diagram to become connected at the smallest possible value and matches the
two halves independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import Curve, point_at, subcurve, subcurve_breakpoints
from .events import (
    CriticalEvent,
    candidate_values,
    dedup_same_boundary,
    enumerate_events,
    group_values,
)
from .freespace import decide_connected, decide_standard

__all__ = [
    "ParamMatching",
    "check_matching",
    "matching_max_distance",
    "matched_distances",
    "frechet_distance",
    "min_connecting_value",
    "find_realizing_event",
    "split_at_event",
    "compute_lcfm",
]

SNAP_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ParamMatching:
    """Monotone path through the diagram; ``path`` has shape ``(k, 2)``."""

    path: np.ndarray

    def __post_init__(self):
        p = np.array(self.path, dtype=float).reshape(-1, 2)
        p.setflags(write=False)
        object.__setattr__(self, "path", p)

    def __len__(self):
        return len(self.path)

    def __eq__(self, other):
        if not isinstance(other, ParamMatching):
            return NotImplemented
        return np.array_equal(self.path, other.path)


def check_matching(M: ParamMatching, m: int, n: int) -> None:
    """Raise ``ValueError`` unless ``M`` is a valid matching path for an
    ``m x n`` diagram (endpoints, monotonicity, one cell per piece)."""
    p = M.path
    if len(p) == 0:
        raise ValueError("empty matching")
    if tuple(p[0]) != (0.0, 0.0) or tuple(p[-1]) != (float(m), float(n)):
        raise ValueError(f"matching must run from (0, 0) to ({m}, {n})")
    if np.any(np.diff(p, axis=0) < 0):
        raise ValueError("matching is not monotone")
    if np.any(p[:, 0] > m) or np.any(p[:, 1] > n):
        raise ValueError("matching leaves the diagram")
    for a, b in zip(p[:-1], p[1:]):
        # both ends of a piece must lie in one closed cell
        if math.floor(a[0]) + 1 < b[0] or math.floor(a[1]) + 1 < b[1]:
            raise ValueError(f"piece {tuple(a)} -> {tuple(b)} crosses a cell")


def matched_distances(P: Curve, Q: Curve, M: ParamMatching) -> np.ndarray:
    """Distance between the matched points at every path vertex."""
    ps = np.array([point_at(P, x) for x in M.path[:, 0]])
    qs = np.array([point_at(Q, y) for y in M.path[:, 1]])
    diff = ps - qs
    return np.hypot(diff[:, 0], diff[:, 1])


def matching_max_distance(P: Curve, Q: Curve, M: ParamMatching,
                          a: int = 0, b: int | None = None) -> float:
    """Largest matched distance between path vertices ``a`` and ``b``.

    The distance is convex along each linear piece, so the maximum over a
    stretch of the matching is attained at one of its vertices.
    """
    k = len(M.path)
    if b is None:
        b = k - 1
    if not (0 <= a <= b < k):
        raise IndexError(f"vertex range [{a}, {b}] outside [0, {k - 1}]")
    return float(matched_distances(P, Q, M)[a:b + 1].max())


def _point_curve_distance(p, c: Curve) -> float:
    diff = c.vertices - p
    return float(np.hypot(diff[:, 0], diff[:, 1]).max())


def frechet_distance(P: Curve, Q: Curve) -> float:
    """Fréchet distance of two polygonal curves.

    Binary search over the sorted critical values with the standard
    decision procedure.

    Examples
    --------
    >>> from lcfrechet.curves import validate_curve
    >>> frechet_distance(validate_curve([(0, 0), (2, 0)]),
    ...                  validate_curve([(0, 1), (2, 1)]))
    1.0
    """
    if P.m == 0:
        return _point_curve_distance(P.vertices[0], Q)
    if Q.m == 0:
        return _point_curve_distance(Q.vertices[0], P)
    vals = candidate_values(P, Q)
    lo_bound = max(math.hypot(*(P.vertices[0] - Q.vertices[0])),
                   math.hypot(*(P.vertices[-1] - Q.vertices[-1])))
    vals = vals[vals >= lo_bound]
    lo, hi = 0, len(vals) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if decide_standard(P, Q, float(vals[mid])):
            hi = mid
        else:
            lo = mid + 1
    return float(vals[lo])


def min_connecting_value(P: Curve, Q: Curve):
    """Smallest critical value at which the diagram is connected.

    Returns ``(eps_r, events)``: the value and its group of concurrent
    events (deduplicated per boundary, in the fixed event order).  Decisions
    are run at the largest value of the group.
    """
    events = enumerate_events(P, Q)
    groups = group_values(events)
    lo, hi = 0, len(groups) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if decide_connected(P, Q, groups[mid][-1].value):
            hi = mid
        else:
            lo = mid + 1
    group = groups[lo]
    return group[-1].value, dedup_same_boundary(group)


def find_realizing_event(P: Curve, Q: Curve, trace: list | None = None
                         ) -> CriticalEvent:
    """Event ``e_r`` of a minimal realizing set.

    With ``E`` the ordered group at the connecting value, finds the ``r``
    for which the first ``r`` events still connect the diagram (all later
    ones blocked) but the first ``r - 1`` do not.  ``trace`` collects the
    ``(k, connected)`` probes.
    """
    eps, group = min_connecting_value(P, Q)

    def ok(k):
        res = decide_connected(P, Q, eps, blocked=group[k:])
        if trace is not None:
            trace.append((k, res))
        return res

    lo, hi = 1, len(group)
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid + 1
    return group[lo - 1]


def _snap(x: float) -> float:
    r = round(x)
    return float(r) if abs(x - r) <= SNAP_TOL else x


def _segment_with_crossings(a, b):
    """Straight diagram segment with explicit vertices at grid crossings."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ts = {0.0, 1.0}
    for axis in (0, 1):
        lo, hi = a[axis], b[axis]
        if hi > lo:
            for g in range(math.floor(lo) + 1, math.ceil(hi)):
                ts.add((g - lo) / (hi - lo))
    pts = []
    for t in sorted(ts):
        pt = a + t * (b - a)
        for axis in (0, 1):
            # crossings must land exactly on the grid line
            if a[axis] != b[axis]:
                pt[axis] = _snap(pt[axis])
        pts.append(pt)
    pts[0], pts[-1] = a, b
    return pts


def split_at_event(P: Curve, Q: Curve, e: CriticalEvent):
    """Cut both curves at event ``e``.

    Returns ``(P1, Q1, P2, Q2, piece, cuts)`` where ``piece`` is the list of
    diagram points matched by the event itself and ``cuts`` the diagram
    coordinates ``(xs, ys, xe, ye)`` where the first pair ends and the second
    begins.
    """
    m, n = P.m, Q.m
    xs, ys = (_snap(v) for v in e.start.diagram_point())
    xe, ye = (_snap(v) for v in e.end.diagram_point())
    if (xs, ys) == (0.0, 0.0) or (xe, ye) == (float(m), float(n)):
        raise RuntimeError(f"event {e} lies on an excluded boundary")
    P1, Q1 = subcurve(P, 0.0, xs), subcurve(Q, 0.0, ys)
    P2, Q2 = subcurve(P, xe, float(m)), subcurve(Q, ye, float(n))
    if (xs, ys) == (xe, ye):
        piece = [np.array([xs, ys])]
    else:
        piece = _segment_with_crossings((xs, ys), (xe, ye))
    return P1, Q1, P2, Q2, piece, (xs, ys, xe, ye)


def _base_path(m: int, n: int) -> np.ndarray:
    if m == 0:
        return np.array([(0.0, float(y)) for y in range(n + 1)])
    if n == 0:
        return np.array([(float(x), 0.0) for x in range(m + 1)])
    return np.array([(0.0, 0.0), (1.0, 1.0)])


def _map_params(bps: list[float], s: np.ndarray) -> np.ndarray:
    out = np.empty_like(s)
    last = len(bps) - 1
    for idx, v in enumerate(s):
        if float(v).is_integer():
            out[idx] = bps[int(v)]
        else:
            k = min(int(math.floor(v)), last - 1)
            out[idx] = bps[k] + (v - k) * (bps[k + 1] - bps[k])
    return out


def compute_lcfm(P: Curve, Q: Curve) -> ParamMatching:
    """Locally correct Fréchet matching of ``P`` and ``Q``.

    Examples
    --------
    >>> from lcfrechet.curves import validate_curve
    >>> compute_lcfm(validate_curve([(0, 0), (1, 0)]),
    ...              validate_curve([(0, 1), (1, 1)])).path.tolist()
    [[0.0, 0.0], [1.0, 1.0]]
    """
    m, n = P.m, Q.m
    if m == 0 or n == 0 or (m == 1 and n == 1):
        return ParamMatching(_base_path(m, n))
    e = find_realizing_event(P, Q)
    P1, Q1, P2, Q2, piece, (xs, ys, xe, ye) = split_at_event(P, Q, e)
    mu1 = compute_lcfm(P1, Q1).path
    mu2 = compute_lcfm(P2, Q2).path
    first = np.column_stack([
        _map_params(subcurve_breakpoints(P, 0.0, xs), mu1[:, 0]),
        _map_params(subcurve_breakpoints(Q, 0.0, ys), mu1[:, 1]),
    ])
    second = np.column_stack([
        _map_params(subcurve_breakpoints(P, xe, float(m)), mu2[:, 0]),
        _map_params(subcurve_breakpoints(Q, ye, float(n)), mu2[:, 1]),
    ])
    pts = list(first) + list(piece) + list(second)
    path = [pts[0]]
    for pt in pts[1:]:
        if not np.array_equal(pt, path[-1]):
            path.append(pt)
    return ParamMatching(np.array(path))
