"""Free space on cell boundaries and the reachability sweeps.

Diagram conventions (0-based throughout the package): the diagram of ``P``
(``m`` edges) and ``Q`` (``n`` edges) is ``[0, m] x [0, n]``; cell ``(i, j)``
is ``[i, i+1] x [j, j+1]``.  The vertical boundary ``x = i`` inside row ``j``
is the *left* side of cell ``(i, j)`` (``i`` may equal ``m``), the horizontal
boundary ``y = j`` inside column ``i`` is its *bottom* side (``j`` may equal
``n``).  Offsets along a boundary are in ``[0, 1]``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import NamedTuple, Optional

import numpy as np

from .curves import Curve

__all__ = [
    "Interval",
    "free_interval",
    "free_boundaries",
    "decide_standard",
    "decide_connected",
    "ReachabilityState",
    "DECISION_SLACK",
]

# Decisions evaluate the free space at eps * (1 + DECISION_SLACK).  Critical
# values closer than 1e-9 relative are merged into one group elsewhere, so
# the slack never reaches the next critical value but keeps tangential
# passages open against rounding.
DECISION_SLACK = 1e-10
DISC_TOL = 1e-12


class Interval(NamedTuple):
    lo: float
    hi: float


def _free_bounds(p, a, b, eps: float):
    """Vectorised free intervals of points ``p`` (k, 2) against segments
    ``a -> b`` (l, 2).  Returns ``(lo, hi)`` arrays of shape (k, l), NaN where
    the interval is empty."""
    p = np.asarray(p, dtype=float).reshape(-1, 1, 2)
    a = np.asarray(a, dtype=float).reshape(1, -1, 2)
    b = np.asarray(b, dtype=float).reshape(1, -1, 2)
    d = b - a
    dd = np.einsum("...k,...k->...", d, d)
    if np.any(dd == 0.0):
        raise ValueError("degenerate segment")
    if eps < 0 or not math.isfinite(eps):
        raise ValueError(f"invalid eps {eps}")
    ap = p - a
    tc = np.einsum("...k,...k->...", ap, d) / dd
    foot = ap - tc[..., None] * d
    h2 = np.einsum("...k,...k->...", foot, foot)
    disc = eps * eps - h2
    # tangency: treat near-zero discriminants as exactly zero
    tol = DISC_TOL * np.maximum(dd, eps * eps)
    disc = np.where(np.abs(disc) <= tol, 0.0, disc)
    # endpoint freeness is decided by direct distances, which is exact for
    # vertex-vertex critical values
    start_free = np.hypot(ap[..., 0], ap[..., 1]) <= eps
    bp = p - b
    end_free = np.hypot(bp[..., 0], bp[..., 1]) <= eps
    w = np.sqrt(np.maximum(disc, 0.0) / dd)
    lo = tc - w
    hi = tc + w
    lo = np.where(start_free, 0.0, lo)
    hi = np.where(start_free, np.maximum(hi, 0.0), hi)
    lo = np.where(end_free, np.minimum(lo, 1.0), lo)
    hi = np.where(end_free, 1.0, hi)
    lo = np.maximum(lo, 0.0)
    hi = np.minimum(hi, 1.0)
    empty = (lo > hi) | ((disc < 0) & ~start_free & ~end_free)
    lo = np.where(empty, np.nan, lo)
    hi = np.where(empty, np.nan, hi)
    return lo, hi


def free_interval(p, a, b, eps: float) -> Optional[Interval]:
    """Parameters ``t`` in ``[0, 1]`` with ``|p - seg(t)| <= eps``.

    ``seg(t) = (1 - t) a + t b``.  Returns ``None`` for an empty set.
    """
    lo, hi = _free_bounds(p, a, b, eps)
    if math.isnan(lo[0, 0]):
        return None
    return Interval(float(lo[0, 0]), float(hi[0, 0]))


def _as_intervals(lo, hi):
    return [[None if math.isnan(l) else Interval(l, h) for l, h in zip(lr, hr)]
            for lr, hr in zip(lo.tolist(), hi.tolist())]


def free_boundaries(P: Curve, Q: Curve, eps: float):
    """All boundary free intervals at ``eps``.

    Returns ``(LF, BF)`` where ``LF[i][j]`` is the free part of the left side
    of cell ``(i, j)`` (vertex ``p_i`` against edge ``q_j q_{j+1}``) and
    ``BF[i][j]`` the free part of the bottom side (``q_j`` against
    ``p_i p_{i+1}``).
    """
    pv, qv = P.vertices, Q.vertices
    LF = _as_intervals(*_free_bounds(pv, qv[:-1], qv[1:], eps))
    lo, hi = _free_bounds(qv, pv[:-1], pv[1:], eps)
    BF = _as_intervals(lo.T, hi.T)
    return LF, BF


def _narrow(reach: Optional[Interval], free: Optional[Interval]):
    """Part of ``free`` reachable monotonically from ``reach`` across a cell."""
    if reach is None or free is None:
        return None
    lo = max(reach.lo, free.lo)
    if lo > free.hi:
        return None
    return Interval(lo, free.hi)


def decide_standard(P: Curve, Q: Curve, eps: float) -> bool:
    """Is there a monotone free path from ``(0, 0)`` to ``(m, n)`` at ``eps``?"""
    m, n = P.m, Q.m
    if m < 1 or n < 1:
        raise ValueError("decide_standard needs m >= 1 and n >= 1")
    e = eps * (1 + DECISION_SLACK)
    pv, qv = P.vertices, Q.vertices
    if math.hypot(*(pv[0] - qv[0])) > e or math.hypot(*(pv[m] - qv[n])) > e:
        return False
    LF, BF = free_boundaries(P, Q, e)
    LR = [[None] * n for _ in range(m + 1)]
    BR = [[None] * (n + 1) for _ in range(m)]
    # reachable along the diagram's left and bottom edges
    for j in range(n):
        f = LF[0][j]
        if f is None or f.lo > 0:
            break
        LR[0][j] = f
        if f.hi < 1:
            break
    for i in range(m):
        f = BF[i][0]
        if f is None or f.lo > 0:
            break
        BR[i][0] = f
        if f.hi < 1:
            break
    for i in range(m):
        for j in range(n):
            left, bottom = LR[i][j], BR[i][j]
            if bottom is not None:
                LR[i + 1][j] = LF[i + 1][j]
            else:
                LR[i + 1][j] = _narrow(left, LF[i + 1][j])
            if left is not None:
                BR[i][j + 1] = BF[i][j + 1]
            else:
                BR[i][j + 1] = _narrow(bottom, BF[i][j + 1])
    return LR[m][n - 1] is not None or BR[m - 1][n] is not None


class ReachabilityState:
    """Reachable intervals and entry points of one connectivity sweep.

    ``LR[i][j]`` / ``BR[i][j]`` are the reachable parts of the left / bottom
    side of cell ``(i, j)``; ``LE[i][j]`` is the column the reaching paths
    entered row ``j`` through (the largest ``i' < i`` with non-empty
    ``BR[i'][j]``), ``BE[i][j]`` the analogous row for column ``i``.
    """

    def __init__(self, m: int, n: int):
        self.m, self.n = m, n
        self.LR = [[None] * n for _ in range(m + 1)]
        self.BR = [[None] * (n + 1) for _ in range(m)]
        self.LE = [[None] * n for _ in range(m + 1)]
        self.BE = [[None] * (n + 1) for _ in range(m)]

    def connected(self) -> bool:
        m, n = self.m, self.n
        return (self.LR[m - 1][n - 1] is not None
                or self.BR[m - 1][n - 1] is not None)


def _blocked_index(blocked):
    vert = defaultdict(list)
    horiz = defaultdict(list)
    for ev in blocked:
        end = ev.end
        if end.side == "left":
            vert[(end.col, end.row)].append(ev)
        else:
            horiz[(end.col, end.row)].append(ev)
    return vert, horiz


def _apply_vertical_block(state, vert, i, j):
    evs = vert.get((i, j))
    if not evs or state.LR[i][j] is None:
        return
    entry = state.LE[i][j]
    # an event is needed iff the reaching paths entered the row before the
    # passage starts
    if any(entry < ev.start.col for ev in evs):
        state.LR[i][j] = None
        state.LE[i][j] = None


def _apply_horizontal_block(state, horiz, i, j):
    evs = horiz.get((i, j))
    if not evs or state.BR[i][j] is None:
        return
    entry = state.BE[i][j]
    if any(entry < ev.start.row for ev in evs):
        state.BR[i][j] = None
        state.BE[i][j] = None


def connectivity_sweep(P: Curve, Q: Curve, eps: float, blocked=()):
    """Run the cell-(0,0)-to-cell-(m-1,n-1) sweep and return its state."""
    m, n = P.m, Q.m
    if m < 1 or n < 1 or m + n <= 2:
        raise ValueError("connectivity needs m, n >= 1 and m + n > 2")
    e = eps * (1 + DECISION_SLACK)
    LF, BF = free_boundaries(P, Q, e)
    vert, horiz = _blocked_index(blocked)
    st = ReachabilityState(m, n)
    # paths may start anywhere on the boundary of cell (0, 0)
    if m > 1 or n > 1:
        st.LR[1][0] = LF[1][0]
        st.LE[1][0] = 0 if LF[1][0] is not None else None
        _apply_vertical_block(st, vert, 1, 0)
        st.BR[0][1] = BF[0][1]
        st.BE[0][1] = 0 if BF[0][1] is not None else None
        _apply_horizontal_block(st, horiz, 0, 1)
    for i in range(m):
        for j in range(n):
            if i == 0 and j == 0:
                continue
            left, bottom = st.LR[i][j], st.BR[i][j]
            if i + 1 <= m:
                if bottom is not None:
                    st.LR[i + 1][j] = LF[i + 1][j]
                    st.LE[i + 1][j] = i if LF[i + 1][j] is not None else None
                else:
                    r = _narrow(left, LF[i + 1][j])
                    st.LR[i + 1][j] = r
                    st.LE[i + 1][j] = st.LE[i][j] if r is not None else None
                _apply_vertical_block(st, vert, i + 1, j)
            if left is not None:
                st.BR[i][j + 1] = BF[i][j + 1]
                st.BE[i][j + 1] = j if BF[i][j + 1] is not None else None
            else:
                r = _narrow(bottom, BF[i][j + 1])
                st.BR[i][j + 1] = r
                st.BE[i][j + 1] = st.BE[i][j] if r is not None else None
            _apply_horizontal_block(st, horiz, i, j + 1)
    return st


def decide_connected(P: Curve, Q: Curve, eps: float, blocked=()) -> bool:
    """Can a monotone free path join the boundaries of cells ``(0, 0)`` and
    ``(m-1, n-1)`` at ``eps`` without relying on a ``blocked`` event?"""
    return connectivity_sweep(P, Q, eps, blocked).connected()
