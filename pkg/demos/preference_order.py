"""Why the tie-breaking order of candidate parents matters.

Candidates of G[i, j] are G[i-1, j] ("left"), G[i-1, j-1] ("diag") and
G[i, j-1] ("below").  Ties are broken left > diag > below.  Putting the
diagonal first or last breaks local correctness.  The grids below are the
smallest found by random search and shrinking; transposing a grid swaps
left and below.
"""

import numpy as np

from lcfrechet import lcfm_grid_path, verify_lc_discrete

DIAG_FIRST = np.array([[0, 3, 0, 0], [2, 2, 0, 0],
                       [0, 0, 1, 0], [0, 0, 2, 0]], dtype=float)
DIAG_LAST = np.array([[0, 2, 0, 1, 0], [0, 2, 0, 3, 0],
                      [0, 0, 2, 0, 0]], dtype=float)

CASES = [(("diag", "below", "left"), DIAG_FIRST),
         (("diag", "left", "below"), DIAG_FIRST.T),
         (("left", "below", "diag"), DIAG_LAST),
         (("below", "left", "diag"), DIAG_LAST.T)]

for order, g in CASES:
    rep = verify_lc_discrete(g, lcfm_grid_path(g, order))
    witness, expected, observed = rep.failures[0]
    ok = verify_lc_discrete(g, lcfm_grid_path(g)).passed
    print(f"{' > '.join(order)} on {g.shape[0]}x{g.shape[1]}: subpath {witness} "
          f"reaches {observed:g} where {expected:g} is possible; "
          f"left > diag > below is locally correct: {ok}")
