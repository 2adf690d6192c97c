"""Critical events of the free-space diagram.

Three kinds of thresholds make passages open as ``eps`` grows:

* ``A`` -- the diagram corners ``(0, 0)`` / ``(m, n)`` become free;
* ``B`` -- a single cell boundary becomes free (vertex against edge);
* ``C`` -- a horizontal (row) or vertical (column) passage opens between
  two boundaries of the same row or column (two vertices equidistant from a
  point of an edge).

Positions use the boundary conventions of :mod:`lcfrechet.freespace`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .curves import Curve

__all__ = [
    "BoundaryPos",
    "CriticalEvent",
    "type_b_value",
    "type_c_value",
    "enumerate_events",
    "candidate_values",
    "group_values",
    "dedup_same_boundary",
    "VALUE_RTOL",
]

VALUE_RTOL = 1e-9


class BoundaryPos(NamedTuple):
    """A point on a cell boundary: ``side`` of cell ``(col, row)``."""

    col: int
    row: int
    side: str  # "left" or "bottom"
    offset: float

    def diagram_point(self) -> tuple[float, float]:
        if self.side == "left":
            return (float(self.col), self.row + self.offset)
        return (self.col + self.offset, float(self.row))

    def __str__(self):
        return f"{self.side}({self.col},{self.row},{self.offset:.12g})"


@dataclass(frozen=True)
class CriticalEvent:
    kind: str  # "A", "B" or "C"
    value: float
    end: BoundaryPos
    start: BoundaryPos
    orientation: Optional[str] = None  # "row" / "column" for type C

    def sort_key(self):
        e, s = self.end, self.start
        return (self.value, e.row, e.col, e.side, e.offset,
                s.col, s.row, s.offset)

    def order_key(self):
        """Tie-breaking key without the value."""
        return self.sort_key()[1:]

    def recompute_value(self, P: Curve, Q: Curve) -> float:
        """Opening distance recomputed from the stored positions."""
        x, y = self.end.diagram_point()
        pe = _param_point(P, x)
        qe = _param_point(Q, y)
        return float(math.hypot(*(pe - qe)))


def _param_point(c: Curve, s: float) -> np.ndarray:
    from .curves import point_at

    return point_at(c, min(max(s, 0.0), float(c.m)))


def type_b_value(v, a, b) -> tuple[float, float]:
    """Distance from ``v`` to segment ``a -> b`` and the clamped foot offset."""
    v = np.asarray(v, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = b - a
    t = float((v - a) @ d) / float(d @ d)
    t = min(max(t, 0.0), 1.0)
    if t == 0.0:
        diff = v - a
    elif t == 1.0:
        diff = v - b
    else:
        diff = v - (a + t * d)
    return float(math.hypot(*diff)), t


def type_c_value(u, w, a, b) -> Optional[tuple[float, float]]:
    """Where the bisector of ``u`` and ``w`` crosses segment ``a -> b``.

    Returns ``(|u - x|, offset of x)`` or ``None`` if the bisector misses the
    segment (or runs parallel to it).
    """
    u = np.asarray(u, dtype=float)
    w = np.asarray(w, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    normal = w - u
    d = b - a
    den = float(d @ normal)
    if den == 0.0:
        return None
    mid = 0.5 * (u + w)
    t = float((mid - a) @ normal) / den
    if not (0.0 <= t <= 1.0):
        return None
    x = a + t * d if 0.0 < t < 1.0 else (a if t == 0.0 else b)
    return float(math.hypot(*(u - x))), t


# -- vectorised candidate values ---------------------------------------------

def _b_values(pts, a, b):
    """Point-segment distances and clamped offsets, shape (k, l)."""
    pts = pts[:, None, :]
    a = a[None, :, :]
    d = b[None, :, :] - a
    dd = np.einsum("...k,...k->...", d, d)
    t = np.clip(np.einsum("...k,...k->...", pts - a, d) / dd, 0.0, 1.0)
    foot = a + t[..., None] * d
    foot = np.where((t == 1.0)[..., None], b[None, :, :], foot)
    diff = pts - foot
    return np.hypot(diff[..., 0], diff[..., 1]), t


def _c_values(pts, a, b):
    """Bisector crossings for all vertex pairs ``k < l`` against all segments.

    Returns ``(k, l, seg, value, offset)`` arrays for crossings inside the
    segments.
    """
    kk, ll = np.triu_indices(len(pts), 1)
    if len(kk) == 0 or len(a) == 0:
        empty = np.zeros(0)
        return (empty.astype(int),) * 3 + (empty, empty)
    u = pts[kk][:, None, :]
    w = pts[ll][:, None, :]
    normal = w - u
    d = (b - a)[None, :, :]
    den = np.einsum("...k,...k->...", d, normal)
    mid = 0.5 * (u + w)
    num = np.einsum("...k,...k->...", mid - a[None, :, :], normal)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = num / den
    ok = (den != 0.0) & (t >= 0.0) & (t <= 1.0)
    pi, si = np.nonzero(ok)
    t = t[pi, si]
    x = a[si] + t[:, None] * (b - a)[si]
    x = np.where((t == 1.0)[:, None], b[si], x)
    diff = pts[kk[pi]] - x
    val = np.hypot(diff[:, 0], diff[:, 1])
    return kk[pi], ll[pi], si, val, t


def candidate_values(P: Curve, Q: Curve) -> np.ndarray:
    """Sorted unique critical values of all kinds (no exclusions).

    The Fréchet distance of ``P`` and ``Q`` is one of these values.
    """
    pv, qv = P.vertices, Q.vertices
    vals = [np.array([math.hypot(*(pv[0] - qv[0])),
                      math.hypot(*(pv[-1] - qv[-1]))])]
    if P.m >= 1:
        vals.append(_b_values(qv, pv[:-1], pv[1:])[0].ravel())
        vals.append(_c_values(qv, pv[:-1], pv[1:])[3])
    if Q.m >= 1:
        vals.append(_b_values(pv, qv[:-1], qv[1:])[0].ravel())
        vals.append(_c_values(pv, qv[:-1], qv[1:])[3])
    return np.unique(np.concatenate(vals))


def _excluded(pos: BoundaryPos, m: int, n: int) -> bool:
    if pos.col == 0 and pos.row == 0:
        return True  # left or bottom side of the first cell
    if pos.side == "left" and pos.col == m and pos.row == n - 1:
        return True  # right side of the last cell
    if pos.side == "bottom" and pos.col == m - 1 and pos.row == n:
        return True  # top side of the last cell
    return False


def enumerate_events(P: Curve, Q: Curve) -> list[CriticalEvent]:
    """All type B and type C events usable for splitting, in a fixed order.

    Events touching the left/bottom side of cell ``(0, 0)`` or the
    right/top side of cell ``(m-1, n-1)`` are dropped; this removes both
    corner (type A) events.  Type C candidates are kept only where they
    really open a passage: the crossing must be the lowest free point of the
    earlier boundary and the highest free point of the later one.
    """
    m, n = P.m, Q.m
    if m < 1 or n < 1 or m + n <= 2:
        raise ValueError("event enumeration needs m, n >= 1 and m + n > 2")
    pv, qv = P.vertices, Q.vertices
    events = []

    # type B: p_i against q_j q_{j+1} lies on the left side of cell (i, j)
    val, t = _b_values(pv, qv[:-1], qv[1:])
    for i in range(m + 1):
        for j in range(n):
            pos = BoundaryPos(i, j, "left", float(t[i, j]))
            if not _excluded(pos, m, n):
                events.append(CriticalEvent("B", float(val[i, j]), pos, pos))
    val, t = _b_values(qv, pv[:-1], pv[1:])
    for j in range(n + 1):
        for i in range(m):
            pos = BoundaryPos(i, j, "bottom", float(t[j, i]))
            if not _excluded(pos, m, n):
                events.append(CriticalEvent("B", float(val[j, i]), pos, pos))

    # type C rows: p_k, p_l (k < l) against edge q_j q_{j+1}
    events += _c_events(pv, qv, m, n, row=True)
    events += _c_events(qv, pv, m, n, row=False)
    events.sort(key=CriticalEvent.sort_key)
    return events


def _c_events(verts, other, m, n, row):
    a, b = other[:-1], other[1:]
    kk, ll, si, val, t = _c_values(verts, a, b)
    if len(kk) == 0:
        return []
    d = b - a
    dd = np.einsum("ij,ij->i", d, d)
    # unclamped projections of both vertices onto the edge line
    proj_k = np.einsum("ij,ij->i", verts[kk] - a[si], d[si]) / dd[si]
    proj_l = np.einsum("ij,ij->i", verts[ll] - a[si], d[si]) / dd[si]
    real = (t <= proj_k + 1e-12) & (t >= proj_l - 1e-12)
    out = []
    for k, l, s, v, tt, ok in zip(kk.tolist(), ll.tolist(), si.tolist(),
                                  val.tolist(), t.tolist(), real.tolist()):
        if not ok:
            continue
        if row:
            start = BoundaryPos(k, s, "left", tt)
            end = BoundaryPos(l, s, "left", tt)
        else:
            start = BoundaryPos(s, k, "bottom", tt)
            end = BoundaryPos(s, l, "bottom", tt)
        if _excluded(start, m, n) or _excluded(end, m, n):
            continue
        out.append(CriticalEvent("C", v, end, start,
                                 "row" if row else "column"))
    return out


def group_values(events, rtol: float = VALUE_RTOL):
    """Split a value-sorted event list into groups of concurrent events.

    Consecutive values within ``rtol * max(1, value)`` chain into one group.
    """
    groups = []
    for ev in events:
        if groups and ev.value - groups[-1][-1].value <= rtol * max(1.0, ev.value):
            groups[-1].append(ev)
        else:
            groups.append([ev])
    return groups


def dedup_same_boundary(events):
    """Keep one type C event per end boundary: the one starting last.

    Row passages ending on the same boundary lie in the same row; only the
    one starting at the largest column matters (largest row for column
    passages).  Type B events are returned unchanged.
    """
    best = {}
    out = []
    for ev in events:
        if ev.kind != "C":
            out.append(ev)
            continue
        key = (ev.end.side, ev.end.col, ev.end.row)
        start = ev.start.col if ev.orientation == "row" else ev.start.row
        cur = best.get(key)
        if cur is None or start > cur[0]:
            best[key] = (start, ev)
    out.extend(ev for _, ev in best.values())
    out.sort(key=CriticalEvent.order_key)
    return out
