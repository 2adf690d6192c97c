"""Locally correct matching of two polygonal curves.

Computes the Fréchet distance, the matching, checks local correctness with
the brute-force verifier and writes an SVG with the free-space diagram.

    python3 demos/continuous_matching.py [out.svg]
"""

import sys

from lcfrechet import (
    compute_lcfm,
    frechet_distance,
    matching_max_distance,
    render_svg,
    validate_curve,
    verify_lc_continuous,
)

P = validate_curve([(0, 0), (2, 1), (4, 0), (6, 2), (8, 0)])
Q = validate_curve([(0, 1), (3, 3), (5, 1), (8, 1)])

d = frechet_distance(P, Q)
M = compute_lcfm(P, Q)
print(f"Frechet distance     {d:.6f}")
print(f"matching max dist    {matching_max_distance(P, Q, M):.6f}")
print("matching path (diagram parameters):")
for x, y in M.path:
    print(f"  {x:8.4f} {y:8.4f}")
print("locally correct:", verify_lc_continuous(P, Q, M).passed)

out = sys.argv[1] if len(sys.argv) > 1 else "continuous_matching.svg"
with open(out, "w", encoding="utf-8") as fh:
    fh.write(render_svg(P, Q, M, diagram=True))
print("wrote", out)
