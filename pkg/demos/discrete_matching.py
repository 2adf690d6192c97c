"""Discrete locally correct matching and the shortcut tree.

Builds the tree on a random grid, prints the matching and the work
counters, and checks the result with the bottleneck oracle.
"""

import numpy as np

from lcfrechet import MatchTree, discrete_frechet, verify_lc_discrete

rng = np.random.default_rng(7)
g = rng.integers(0, 6, (6, 8)).astype(float)
print(g.T[::-1].astype(int))  # rows drawn top to bottom, origin bottom-left

tree = MatchTree(g).build()
path = tree.path()
print("path:", path)
print("path max", max(g[p] for p in path), "discrete Frechet", discrete_frechet(g))
print("locally correct:", verify_lc_discrete(g, path).passed)
print("dead paths removed:", len(tree.removals),
      "shortcut extensions:", tree.extensions)

big = MatchTree(rng.uniform(0, 1, (150, 150))).build()
print(f"150 x 150: {big.extensions / 150 ** 2:.2f} extensions per node")
