"""Locally correct discrete Fréchet matchings in O(mn) time.

The grid ``G[i, j] = |p_i - q_j|`` is covered incrementally by a tree rooted
at ``G[0, 0]`` in which every path is strongly locally correct (optimal for
the maximum that leaves out its first node).  New nodes are attached to the
candidate parent whose path to the nearest common ancestor has the smallest
maximum; those maxima come from shortcuts, cached ``(sink, max)`` pairs that
link a node to the sink of each face of the tree next to its parent edge.

Orientation: the growth nodes (nodes with a neighbour not yet in the tree)
form a staircase running from the bottom-right to the top-left.  For two
consecutive growth nodes the face between them lies on the *upper-left*
side of the earlier one's tree path and on the *lower-right* side of the
later one's, hence the ``ul_*`` / ``lr_*`` shortcut slots.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import Curve

__all__ = [
    "MatchGrid",
    "MatchTree",
    "build_grid",
    "discrete_frechet",
    "compute_discrete_lcfm",
    "lcfm_grid_path",
    "DEFAULT_PREFERENCE",
    "NEG_INF",
]

NEG_INF = float("-inf")
# G[i-1, j] > G[i-1, j-1] > G[i, j-1]
DEFAULT_PREFERENCE = ("left", "diag", "below")


@dataclass(frozen=True, eq=False)
class MatchGrid:
    """``values[i, j]`` is the distance between ``p_i`` and ``q_j``."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 2 or v.size == 0:
            raise ValueError("grid must be a non-empty 2-D array")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise ValueError("grid values must be finite and non-negative")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def shape(self):
        return self.values.shape


def build_grid(P: Curve, Q: Curve) -> MatchGrid:
    diff = P.vertices[:, None, :] - Q.vertices[None, :, :]
    return MatchGrid(np.hypot(diff[..., 0], diff[..., 1]))


def discrete_frechet(g) -> float:
    """Discrete Fréchet distance by the Eiter-Mannila recurrence."""
    vals = np.asarray(getattr(g, "values", g), dtype=float)
    rows, cols = vals.shape
    D = np.empty_like(vals)
    D[0, 0] = vals[0, 0]
    for i in range(1, rows):
        D[i, 0] = max(D[i - 1, 0], vals[i, 0])
    for j in range(1, cols):
        D[0, j] = max(D[0, j - 1], vals[0, j])
    for i in range(1, rows):
        for j in range(1, cols):
            D[i, j] = max(vals[i, j],
                          min(D[i - 1, j], D[i - 1, j - 1], D[i, j - 1]))
    return float(D[-1, -1])


class MatchTree:
    """Incremental shortcut tree over a :class:`MatchGrid`.

    Nodes are addressed as ``(i, j)`` grid coordinates.  After
    :meth:`build`, :meth:`path` returns the matching from ``(0, 0)`` to
    ``(m, n)``.

    Attributes
    ----------
    extensions : int
        Total number of shortcut extensions performed.
    removals : list of (int, int)
        ``(k, extensions)`` per removed dead path, ``k`` counting the nodes
        of the path including the surviving first node.
    """

    def __init__(self, grid, preference=DEFAULT_PREFERENCE):
        if not isinstance(grid, MatchGrid):
            grid = MatchGrid(grid)
        if sorted(preference) != ["below", "diag", "left"]:
            raise ValueError(f"bad preference order {preference!r}")
        self.grid = grid
        self.preference = tuple(preference)
        self.m = grid.shape[0] - 1
        self.n = grid.shape[1] - 1
        size = (self.m + 1) * (self.n + 1)
        self._val = grid.values.ravel().tolist()
        self._parent = [-1] * size
        self._outdeg = [0] * size
        self._inserted = [False] * size
        self._removed = [False] * size
        self._ul_sink = [-1] * size
        self._ul_max = [NEG_INF] * size
        self._lr_sink = [-1] * size
        self._lr_max = [NEG_INF] * size
        self.extensions = 0
        self.removals = []
        self._inserted[0] = True
        self._initialised = False
        self._cursor = (1, 1)
        self._last = None

    # -- addressing -------------------------------------------------------

    def _id(self, i, j):
        return i * (self.n + 1) + j

    def _ij(self, v):
        return divmod(v, self.n + 1)

    def _depth_key(self, v):
        i, j = divmod(v, self.n + 1)
        return i + j

    # -- construction -----------------------------------------------------

    def _attach(self, v, p):
        self._parent[v] = p
        self._outdeg[p] += 1
        self._inserted[v] = True

    def init_border(self):
        """Add the first row and first column as chains from the root."""
        if self._initialised:
            return
        for i in range(1, self.m + 1):
            self._attach(self._id(i, 0), self._id(i - 1, 0))
        for j in range(1, self.n + 1):
            self._attach(self._id(0, j), self._id(0, j - 1))
        self._initialised = True

    def build(self):
        self.init_border()
        for i in range(1, self.m + 1):
            for j in range(1, self.n + 1):
                self.add(i, j)
        return self

    def candidate_maxima(self, i, j):
        """Path maxima of the three candidate parents of ``(i, j)``.

        Returns ``{(a, b): (max a -> nca, max b -> nca)}`` for the pairs
        ``(below, diag)``, ``(diag, left)`` and ``(below, left)`` keyed by
        grid coordinates; an empty path gives ``-inf``.
        """
        c1, c2, c3 = self._id(i - 1, j), self._id(i - 1, j - 1), self._id(i, j - 1)
        r = self._candidate_values(c1, c2, c3)
        (v3_32, v2_32, nca32), (v2_21, v1_21, nca21), (v3_31, v1_31, _) = r
        a1, a2, a3 = (i - 1, j), (i - 1, j - 1), (i, j - 1)
        return {
            (a3, a2): (v3_32, v2_32),
            (a2, a1): (v2_21, v1_21),
            (a3, a1): (v3_31, v1_31),
        }

    def nca_max(self, a, b):
        """Maxima from candidate parents ``a`` and ``b`` of the next node to
        their nearest common ancestor, that ancestor excluded."""
        table = self.candidate_maxima(*self._cursor)
        a, b = tuple(a), tuple(b)
        if (a, b) in table:
            return table[(a, b)]
        if (b, a) in table:
            vb, va = table[(b, a)]
            return va, vb
        raise ValueError(f"{a} and {b} are not candidate parents of "
                         f"{self._cursor}")

    def _candidate_values(self, c1, c2, c3):
        val, parent = self._val, self._parent
        if parent[c3] == c2:
            nca32, v3_32, v2_32 = c2, val[c3], NEG_INF
        else:
            nca32, v3_32, v2_32 = self._ul_sink[c3], self._ul_max[c3], self._lr_max[c2]
        if parent[c1] == c2:
            nca21, v2_21, v1_21 = c2, NEG_INF, val[c1]
        else:
            nca21, v2_21, v1_21 = self._ul_sink[c2], self._ul_max[c2], self._lr_max[c1]
        if nca32 == nca21:
            nca31, v3_31, v1_31 = nca32, v3_32, v1_21
        elif self._depth_key(nca32) < self._depth_key(nca21):
            # nca21 sits below nca32 on the path of the diagonal candidate
            nca31, v3_31 = nca32, v3_32
            v1_31 = max(v1_21, val[nca21], self._lr_max[nca21])
        else:
            nca31, v1_31 = nca21, v1_21
            v3_31 = max(v3_32, val[nca32], self._ul_max[nca32])
        return ((v3_32, v2_32, nca32), (v2_21, v1_21, nca21),
                (v3_31, v1_31, nca31))

    def _choose(self, c1, c2, c3, r):
        (v3_32, v2_32, _), (v2_21, v1_21, _), (v3_31, v1_31, _) = r
        ok = {
            "left": v1_21 <= v2_21 and v1_31 <= v3_31,
            "diag": v2_21 <= v1_21 and v2_32 <= v3_32,
            "below": v3_32 <= v2_32 and v3_31 <= v1_31,
        }
        node = {"left": c1, "diag": c2, "below": c3}
        for name in self.preference:
            if ok[name]:
                return node[name]
        raise RuntimeError("no candidate parent dominates the others")

    def add(self, i, j):
        """Attach ``(i, j)`` to the tree (one step of the sweep)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise ValueError(f"({i}, {j}) is not an interior grid node")
        c1, c2, c3 = self._id(i - 1, j), self._id(i - 1, j - 1), self._id(i, j - 1)
        g = self._id(i, j)
        ins = self._inserted
        if not (ins[c1] and ins[c2] and ins[c3]) or ins[g]:
            raise RuntimeError(f"({i}, {j}) added out of order")
        self._cursor = (i, j)
        r = self._candidate_values(c1, c2, c3)
        nca32, nca21 = r[0][2], r[1][2]
        p = self._choose(c1, c2, c3, r)
        self._attach(g, p)
        self._last = (c1, c2, c3, nca32, nca21)

        val, parent = self._val, self._parent
        face32 = parent[c3] != c2
        face21 = parent[c1] != c2
        ul_s, ul_m, lr_s, lr_m = self._ul_sink, self._ul_max, self._lr_sink, self._lr_max

        if p == c2:
            if face32:
                lr_s[g], lr_m[g] = nca32, max(val[g], lr_m[c2])
            else:
                ul_s[c3], ul_m[c3] = c2, val[c3]
                lr_s[g], lr_m[g] = c2, val[g]
            if face21:
                ul_s[g], ul_m[g] = nca21, max(val[g], ul_m[c2])
            else:
                lr_s[c1], lr_m[c1] = c2, val[c1]
                ul_s[g], ul_m[g] = c2, val[g]
        elif p == c1:
            if not face21:
                if not face32:
                    ul_s[c3], ul_m[c3] = c2, val[c3]
                    lr_s[c1], lr_m[c1] = c2, val[c1]
                else:
                    lr_s[c1], lr_m[c1] = nca32, max(val[c1], lr_m[c2])
            elif not face32:
                ul_s[c3], ul_m[c3] = nca21, max(val[c3], ul_m[c2])
            else:
                self.retire_dead_path(self._ij(c2))
            lr_s[g], lr_m[g] = lr_s[c1], max(val[g], lr_m[c1])
        else:
            if not face32:
                if not face21:
                    ul_s[c3], ul_m[c3] = c2, val[c3]
                    lr_s[c1], lr_m[c1] = c2, val[c1]
                else:
                    ul_s[c3], ul_m[c3] = nca21, max(val[c3], ul_m[c2])
            elif not face21:
                lr_s[c1], lr_m[c1] = nca32, max(val[c1], lr_m[c2])
            else:
                self.retire_dead_path(self._ij(c2))
            ul_s[g], ul_m[g] = ul_s[c3], max(val[g], ul_m[c3])
        self._cursor = (i, j + 1) if j < self.n else (i + 1, 1)

    def _retire(self, c1, c2, c3, nca32, nca21):
        """Remove the dead path ending at ``c2`` and extend shortcuts.

        The faces on both sides of the dead path merge; the one whose sink
        lies deeper loses it, and the shortcuts pointing there are extended
        to the shallower sink.
        """
        val, parent = self._val, self._parent
        done = 0
        if nca32 == nca21:
            keep = nca32
        elif self._depth_key(nca32) > self._depth_key(nca21):
            keep = nca32
            ext = max(val[nca32], self._ul_max[nca32])
            v = c3
            while v != nca32:
                self._ul_sink[v] = nca21
                self._ul_max[v] = max(self._ul_max[v], ext)
                done += 1
                v = parent[v]
        else:
            keep = nca21
            ext = max(val[nca21], self._lr_max[nca21])
            v = c1
            while v != nca21:
                self._lr_sink[v] = nca32
                self._lr_max[v] = max(self._lr_max[v], ext)
                done += 1
                v = parent[v]
        k = 1
        v = c2
        while v != keep:
            nxt = parent[v]
            self._removed[v] = True
            self._outdeg[nxt] -= 1
            k += 1
            v = nxt
        self.extensions += done
        self.removals.append((k, done))

    def retire_dead_path(self, end):
        """Remove the dead path ending at ``end`` and extend shortcuts.

        ``end`` must be the diagonal candidate of the node inserted last and
        must have no children; :meth:`add` calls this itself.
        """
        if self._last is None:
            raise RuntimeError("no insertion to retire a dead path for")
        c1, c2, c3, nca32, nca21 = self._last
        v = self._id(*end)
        if v != c2 or self._removed[v]:
            raise ValueError(f"{end} is not the diagonal candidate of the "
                             "last insertion")
        if self._outdeg[v] != 0:
            raise ValueError(f"{end} is not dead")
        self._retire(c1, c2, c3, nca32, nca21)

    # -- queries ----------------------------------------------------------

    def parent(self, node):
        v = self._parent[self._id(*node)]
        return None if v < 0 else self._ij(v)

    def contains(self, node):
        v = self._id(*node)
        return self._inserted[v] and not self._removed[v]

    def path_from_root(self, node):
        v = self._id(*node)
        out = []
        while v >= 0:
            out.append(self._ij(v))
            v = self._parent[v]
        return out[::-1]

    def path(self):
        return self.path_from_root((self.m, self.n))

    def shortcut(self, node, side):
        """``(sink, max)`` stored on ``side`` ("ul" or "lr") of ``node``."""
        v = self._id(*node)
        s = (self._ul_sink if side == "ul" else self._lr_sink)[v]
        mx = (self._ul_max if side == "ul" else self._lr_max)[v]
        return (None, NEG_INF) if s < 0 else (self._ij(s), mx)

    def nodes(self):
        return [self._ij(v) for v in range(len(self._val))
                if self._inserted[v] and not self._removed[v]]

    def is_growth(self, node):
        i, j = node
        if not self.contains(node):
            return False
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            a, b = i + di, j + dj
            if a <= self.m and b <= self.n and not self._inserted[self._id(a, b)]:
                return True
        return False

    def status(self):
        """Map every inserted node to growth / living / dead / removed."""
        out = {}
        live = set()
        for v in range(len(self._val)):
            if not self._inserted[v]:
                continue
            node = self._ij(v)
            if self._removed[v]:
                out[node] = "removed"
            elif self.is_growth(node):
                out[node] = "growth"
                u = self._parent[v]
                while u >= 0 and u not in live:
                    live.add(u)
                    u = self._parent[u]
        for v in live:
            node = self._ij(v)
            if out.get(node) is None:
                out[node] = "living"
        for v in range(len(self._val)):
            if self._inserted[v]:
                out.setdefault(self._ij(v), "dead")
        return out


def lcfm_grid_path(values, preference=DEFAULT_PREFERENCE):
    """Locally correct path through a grid of non-negative values."""
    return MatchTree(values, preference).build().path()


def compute_discrete_lcfm(P: Curve, Q: Curve, preference=DEFAULT_PREFERENCE):
    """Locally correct discrete Fréchet matching as a list of ``(i, j)``."""
    return lcfm_grid_path(build_grid(P, Q), preference)
