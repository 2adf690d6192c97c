"""SVG pictures of two curves, their matching and the free-space diagram.

Output is deterministic: coordinates are printed with fixed precision and
nothing depends on time or environment.
"""

from __future__ import annotations

import numpy as np

from .curves import Curve, point_at
from .freespace import free_interval
from .matching import ParamMatching, compute_lcfm, frechet_distance

__all__ = ["render_svg", "leader_indices", "diagram_axes", "free_region"]

PANEL = 400.0
MARGIN = 20.0
N_LEADERS = 32
FREE_SAMPLES = 16


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _points(pts) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)


def leader_indices(k: int, count: int = N_LEADERS) -> np.ndarray:
    """Path-vertex indices of ``count`` leaders, evenly spread over ``k``."""
    return np.rint(np.linspace(0, k - 1, count)).astype(int)


def diagram_axes(c: Curve) -> np.ndarray:
    """Cumulative relative edge lengths: where each vertex sits on the axis."""
    if c.m == 0:
        return np.zeros(1)
    lengths = np.hypot(*np.diff(c.vertices, axis=0).T)
    acc = np.concatenate([[0.0], np.cumsum(lengths)])
    return acc / acc[-1]


def _axis_map(axis: np.ndarray, s: float) -> float:
    """Position of parameter ``s`` on an axis scaled by edge length."""
    if len(axis) == 1:
        return 0.0
    k = min(int(s), len(axis) - 2)
    return float(axis[k] + (s - k) * (axis[k + 1] - axis[k]))


def free_region(P: Curve, Q: Curve, i: int, j: int, eps: float,
                samples: int = FREE_SAMPLES):
    """Polygon (in diagram coordinates) of the free part of cell ``(i, j)``.

    The free part of a cell is convex, so it is traced by its lowest and
    highest free points on ``samples + 1`` vertical lines.  Returns an empty
    list if no sampled line meets it.
    """
    a, b = Q.edge(j)
    lower, upper = [], []
    for s in np.linspace(i, i + 1, samples + 1):
        iv = free_interval(point_at(P, float(s)), a, b, eps)
        if iv is None:
            continue
        lower.append((float(s), j + iv.lo))
        upper.append((float(s), j + iv.hi))
    return lower + upper[::-1]


def _fit(points, box):
    """Uniform scale and shift fitting ``points`` into ``box``."""
    x0, y0, w, h = box
    lo = points.min(axis=0)
    span = np.maximum(points.max(axis=0) - lo, 1e-12)
    scale = min(w / span[0], h / span[1])
    off = np.array([x0 + (w - scale * span[0]) / 2,
                    y0 + (h - scale * span[1]) / 2])

    def to_svg(p):
        p = np.atleast_2d(p)
        x = off[0] + scale * (p[:, 0] - lo[0])
        # flip y so the picture has the usual orientation
        y = off[1] + scale * (span[1] - (p[:, 1] - lo[1]))
        return np.column_stack([x, y])

    return to_svg


def render_svg(P: Curve, Q: Curve, M: ParamMatching | None = None,
               diagram: bool = False, leaders: int = N_LEADERS) -> str:
    """SVG with both curves, leaders between matched points and, on request,
    the free-space diagram at the Fréchet distance with the matching path.

    ``M`` defaults to the locally correct matching of ``P`` and ``Q``.
    """
    if M is None:
        M = compute_lcfm(P, Q)
    width = PANEL + 2 * MARGIN + (PANEL + MARGIN if diagram else 0.0)
    height = PANEL + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    to_svg = _fit(np.vstack([P.vertices, Q.vertices]),
                  (MARGIN, MARGIN, PANEL, PANEL))

    out.append('<g id="leaders" stroke="#999999" stroke-width="0.5">')
    path = M.path
    for k in leader_indices(len(path), leaders):
        (x1, y1), = to_svg(point_at(P, float(path[k, 0])))
        (x2, y2), = to_svg(point_at(Q, float(path[k, 1])))
        out.append(f'<line class="leader" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                   f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append("</g>")
    for name, c, colour in (("P", P, "#1f77b4"), ("Q", Q, "#d62728")):
        out.append(f'<polyline class="curve" id="curve-{name}" fill="none" '
                   f'stroke="{colour}" stroke-width="2" '
                   f'points="{_points(to_svg(c.vertices))}"/>')

    if diagram:
        out.extend(_diagram(P, Q, path, PANEL + 2 * MARGIN))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _diagram(P: Curve, Q: Curve, path: np.ndarray, x0: float):
    ax, ay = diagram_axes(P), diagram_axes(Q)

    def to_svg(pts):
        return [(x0 + PANEL * _axis_map(ax, x),
                 MARGIN + PANEL * (1.0 - _axis_map(ay, y))) for x, y in pts]

    eps = frechet_distance(P, Q)
    out = [f'<g id="diagram" data-eps="{eps!r}">',
           f'<rect x="{_fmt(x0)}" y="{_fmt(MARGIN)}" width="{_fmt(PANEL)}" '
           f'height="{_fmt(PANEL)}" fill="#eeeeee" stroke="#000000"/>']
    for i in range(P.m):
        for j in range(Q.m):
            poly = free_region(P, Q, i, j, eps)
            if poly:
                out.append(f'<polygon class="free" data-cell="{i} {j}" '
                           f'fill="#ffffff" stroke="#444444" stroke-width="0.5" '
                           f'points="{_points(to_svg(poly))}"/>')
    for x in ax[1:-1]:
        gx = x0 + PANEL * x
        out.append(f'<line class="grid" x1="{_fmt(gx)}" y1="{_fmt(MARGIN)}" '
                   f'x2="{_fmt(gx)}" y2="{_fmt(MARGIN + PANEL)}" stroke="#000000" '
                   f'stroke-width="0.3"/>')
    for y in ay[1:-1]:
        gy = MARGIN + PANEL * (1.0 - y)
        out.append(f'<line class="grid" x1="{_fmt(x0)}" y1="{_fmt(gy)}" '
                   f'x2="{_fmt(x0 + PANEL)}" y2="{_fmt(gy)}" stroke="#000000" '
                   f'stroke-width="0.3"/>')
    out.append(f'<polyline class="path" fill="none" stroke="#2ca02c" '
               f'stroke-width="2" points="{_points(to_svg(path))}"/>')
    out.append("</g>")
    return out
