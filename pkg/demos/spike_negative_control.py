"""Not every Fréchet matching is locally correct.

Q has a spike of height 2 in the middle of a straight run that P follows
exactly.  Any matching is free to do whatever it likes away from the spike
as long as nothing exceeds the spike's cost; the stretched matching below
lets P race ahead while Q is still on its first edge.  It reaches the
Fréchet distance but fails local correctness on the stretch before the
spike.
"""

from lcfrechet import (
    ParamMatching,
    compute_lcfm,
    frechet_distance,
    matching_max_distance,
    validate_curve,
    verify_lc_continuous,
)

P = validate_curve([(0, 0), (4, 0)])
Q = validate_curve([(0, 0), (1, 0), (2, 2), (3, 0), (4, 0)])
stretched = ParamMatching([(0, 0), (0.475, 0), (0.475, 1), (0.5, 2),
                           (0.75, 3), (1, 4)])

print("Frechet distance:", frechet_distance(P, Q))
print("stretched max distance:", matching_max_distance(P, Q, stretched))
rep = verify_lc_continuous(P, Q, stretched)
(a, b), expected, observed = rep.failures[0]
print(f"stretched: {len(rep.failures)} failing vertex pairs, first ({a}, {b}):"
      f" subcurves have distance {expected:.3f} but the matching reaches"
      f" {observed:.3f}")

M = compute_lcfm(P, Q)
print("computed matching:", M.path.tolist())
print("computed matching locally correct:", verify_lc_continuous(P, Q, M).passed)
