"""Exact p-biased measures of the standard intersecting families.

Run with ``python demos/01_measures_and_families.py``.
"""

from fractions import Fraction

from xfam import (
    frankl_family,
    is_t_intersecting,
    katona_family,
    measure,
    principal_family,
    t_dual,
)
from xfam.rational import format_rational

n, t = 6, 2

# All supersets of {1, 2}: the obvious 2-intersecting family.
star = principal_family(n, {1, 2})
print(f"principal family on [{n}] fixing {{1,2}}: {len(star)} sets")

# Frankl's families trade a bigger kernel for a looser condition on it.
for r in range(3):
    fam = frankl_family(n, t, r)
    assert is_t_intersecting(fam, t)
    row = "  ".join(f"p={format_rational(p)}: {format_rational(measure(fam, p))}"
                    for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)))
    print(f"A_{r}({n},{t})  {row}")

# Past p = 1/2 the size-threshold family wins.
K = katona_family(n, t)
for p in (Fraction(1, 2), Fraction(2, 3)):
    print(f"K({n},{t}) at p={format_rational(p)}: {format_rational(measure(K, p))}")

# The largest family cross 2-intersecting with the star is the star itself.
assert t_dual(star, t) == star
print("the star is its own 2-dual")

# Measures stay exact at large n; 24 is the ceiling.
big = principal_family(24, {1, 2, 3})
print("principal 3-star on [24] at p=1/7:", format_rational(measure(big, Fraction(1, 7))))
