"""Brute-force verifiers for local correctness.

These are deliberately simple (quadratic or exponential) and share no
code with the tree construction in :mod:`lcfrechet.discrete`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .curves import Curve, subcurve
from .matching import (
    ParamMatching,
    check_matching,
    frechet_distance,
    matched_distances,
)

__all__ = [
    "VerificationReport",
    "bottleneck_path_value",
    "enumerate_monotone_paths",
    "verify_lc_discrete",
    "verify_lc_continuous",
    "NEG_INF",
]

NEG_INF = float("-inf")
CONT_TOL = 1e-9
MAX_ENUM_SIDE = 5


@dataclass
class VerificationReport:
    """Outcome of a check; ``failures`` holds ``(witness, expected, observed)``."""

    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed


def _values(g):
    return getattr(g, "values", g)


def bottleneck_path_value(g, s, t, include_first: bool = True) -> float:
    """Minimum over monotone paths ``s -> t`` of the largest node value.

    With ``include_first=False`` the value at ``s`` is left out, which
    gives ``-inf`` for ``s == t``.
    """
    vals = np.asarray(_values(g), dtype=float)
    (si, sj), (ti, tj) = s, t
    if si > ti or sj > tj:
        raise ValueError(f"{s} is not below-left of {t}")
    w, h = ti - si + 1, tj - sj + 1
    D = np.full((w, h), np.inf)
    for a in range(w):
        for b in range(h):
            v = vals[si + a, sj + b]
            if a == 0 and b == 0:
                D[a, b] = v if include_first else NEG_INF
                continue
            best = np.inf
            if a > 0:
                best = min(best, D[a - 1, b])
            if b > 0:
                best = min(best, D[a, b - 1])
            if a > 0 and b > 0:
                best = min(best, D[a - 1, b - 1])
            D[a, b] = max(v, best)
    return float(D[-1, -1])


def enumerate_monotone_paths(g, s, t) -> list[list[tuple[int, int]]]:
    """Every path from ``s`` to ``t`` using right, up and diagonal steps."""
    (si, sj), (ti, tj) = s, t
    if si > ti or sj > tj:
        raise ValueError(f"{s} is not below-left of {t}")
    if ti - si + 1 > MAX_ENUM_SIDE or tj - sj + 1 > MAX_ENUM_SIDE:
        raise ValueError("rectangle too large to enumerate paths")
    out = []

    def walk(node, acc):
        if node == (ti, tj):
            out.append(acc)
            return
        i, j = node
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            nxt = (i + di, j + dj)
            if nxt[0] <= ti and nxt[1] <= tj:
                walk(nxt, acc + [nxt])

    walk((si, sj), [(si, sj)])
    return out


def _check_path(path):
    for (a, b), (c, d) in zip(path[:-1], path[1:]):
        if (c - a, d - b) not in ((1, 0), (0, 1), (1, 1)):
            raise ValueError(f"path step {(a, b)} -> {(c, d)} is not monotone")


def verify_lc_discrete(g, path) -> VerificationReport:
    """Check every subpath of ``path`` against the bottleneck optimum.

    Witnesses are 1-based position pairs ``(t1, t2)`` along the path.
    """
    vals = np.asarray(_values(g), dtype=float)
    path = [tuple(int(c) for c in p) for p in path]
    _check_path(path)
    report = VerificationReport()
    k = len(path)
    for a in range(k):
        run = NEG_INF
        for b in range(a, k):
            run = max(run, vals[path[b]])
            best = bottleneck_path_value(vals, path[a], path[b])
            if run != best:
                report.failures.append(((a + 1, b + 1), best, run))
    return report


def verify_lc_continuous(P: Curve, Q: Curve, M: ParamMatching,
                         tol: float = CONT_TOL) -> VerificationReport:
    """Compare every sub-matching between two path vertices with the Fréchet
    distance of the matched subcurves.

    Pairs of path vertices suffice: the matching is linear in every cell and
    the distance is convex along each piece, so maxima over any stretch sit
    at path vertices.  Witnesses are 0-based vertex index pairs.
    """
    check_matching(M, P.m, Q.m)
    d = matched_distances(P, Q, M)
    path = M.path
    report = VerificationReport()
    k = len(path)
    for a in range(k):
        run = d[a]
        for b in range(a + 1, k):
            run = max(run, d[b])
            sub_p = subcurve(P, path[a, 0], path[b, 0])
            sub_q = subcurve(Q, path[a, 1], path[b, 1])
            expected = frechet_distance(sub_p, sub_q)
            if abs(run - expected) > tol:
                report.failures.append(((a, b), expected, float(run)))
    return report
