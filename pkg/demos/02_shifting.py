"""Shifting a cross-intersecting pair until nothing moves.

Each (A, B)-shift swaps A out for a larger B where it can. On a pair of
cross t-intersecting families the joint shift keeps the pair cross
t-intersecting, so we can push both families up the cube and watch the
total size of their members rise.
"""

import random
from fractions import Fraction

from xfam import SetFamily, is_cross_t_intersecting, measure, t_dual
from xfam.shift import check_layer_sandwich, min_member_size, stabilize_pair

rng = random.Random(2)
n, t = 6, 2

seed = SetFamily(n, rng.sample(range(1 << n), 2))
F2 = t_dual(seed, t)
F1 = t_dual(F2, t)
F1 = SetFamily(n, [s for s in F1.members if rng.random() < 0.5] or [F1.members[-1]])
print(f"start: |F1|={len(F1)} |F2|={len(F2)} cross-{t}: {is_cross_t_intersecting(F1, F2, t)}")

G1, G2, trace = stabilize_pair(F1, F2, t)
print(f"{len(trace.steps)} effective shifts, potential {trace.initial_potential} -> {trace.final_potential}"
      f" (cap {trace.potential_bound})")
for i, step in enumerate(trace.steps[:8], 1):
    print(f"  {i:2d}  level {step.level}  A={step.to_dict()['A']}  B={step.to_dict()['B']}  potential {step.potential}")

assert is_cross_t_intersecting(G1, G2, t)
u1, u2 = min_member_size(G1), min_member_size(G2)
print(f"smallest members: {u1} + {u2} >= n + t - 1 = {n + t - 1}")
print("layer sandwich holds:", check_layer_sandwich(G1) and check_layer_sandwich(G2))

p = Fraction(2, 3)
print(f"mu_{p}: {measure(F1, p)} -> {measure(G1, p)},  {measure(F2, p)} -> {measure(G2, p)}")

# The CSV form is ready for plotting potential against step.
print(trace.to_csv().splitlines()[0])
