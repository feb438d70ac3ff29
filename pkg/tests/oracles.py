"""Brute-force reference implementations.

Everything here works on plain frozensets and tuples straight from the
definitions, sharing no code with the bit-parallel library paths.
"""

from fractions import Fraction
from itertools import chain, combinations, product


def subsets(n):
    ground = range(1, n + 1)
    return [frozenset(c) for c in chain.from_iterable(combinations(ground, k) for k in range(n + 1))]


def fam(sets):
    return frozenset(frozenset(s) for s in sets)


def to_oracle(F):
    return fam(F.sets())


def measure(family, n, p):
    p = Fraction(p)
    return sum((p ** len(S) * (1 - p) ** (n - len(S)) for S in family), Fraction(0))


def is_cross(F1, F2, t):
    return all(len(A & B) >= t for A in F1 for B in F2)


def dual(family, n, t):
    return frozenset(S for S in subsets(n) if all(len(S & A) >= t for A in family))


def is_upset(family, n):
    ground = set(range(1, n + 1))
    return all(S | {e} in family for S in family for e in ground - S)


def scan_upsets(n):
    """Indicators (bit s = mask s) of every upward-closed family, by scanning all 2^(2^n)."""
    N = 1 << n
    out = set()
    for ind in range(1 << N):
        if all(not (ind >> s & 1) or all(ind >> (s | 1 << i) & 1 for i in range(n)) for s in range(N)):
            out.add(ind)
    return out


def all_families(n):
    cube = subsets(n)
    for bits in range(1 << len(cube)):
        yield frozenset(S for i, S in enumerate(cube) if bits >> i & 1)


def shift(family, A, B):
    A, B = frozenset(A), frozenset(B)
    out = set()
    for F in family:
        img = (F - A) | B
        if A <= F and not (B & F) and img not in family:
            out.add(img)
        else:
            out.add(F)
    return frozenset(out)


def disjoint_pairs(n, k):
    ground = range(1, n + 1)
    for A in combinations(ground, k):
        rest = [e for e in ground if e not in A]
        for B in combinations(rest, k + 1):
            yield frozenset(A), frozenset(B)


def stable(family, n, k):
    return all(shift(family, A, B) == family for A, B in disjoint_pairs(n, k))


# -- sequences -------------------------------------------------------------


def cube(m, n):
    return list(product(range(1, m + 1), repeat=n))


def meet(x, y):
    return tuple(a if a == b else 0 for a, b in zip(x, y))


def clears(x, y, t):
    z = meet(x, y)
    if isinstance(t, int):
        return sum(1 for v in z if v) >= t
    return all(sum(1 for v in z if v == i) >= ti for i, ti in enumerate(t, 1))


def seq_dual(H, m, n, t):
    return frozenset(y for y in cube(m, n) if all(clears(x, y, t) for x in H))


def below_p(x, y, P):
    return all(a == b or a not in P for a, b in zip(x, y))


def closure(H, m, n, P):
    return frozenset(y for y in cube(m, n) if any(below_p(x, y, P) for x in H))


def seq_product_max(m, n, t):
    """Max ``|H1| * |dual(H1)|`` over every ``H1``, by depth-first search
    carrying the running partner set."""
    vecs = cube(m, n)
    partner = {x: frozenset(y for y in vecs if clears(x, y, t)) for x in vecs}
    best = 0

    def go(i, size, part):
        nonlocal best
        best = max(best, size * len(part))
        for j in range(i, len(vecs)):
            go(j + 1, size + 1, part & partner[vecs[j]])

    go(0, 0, frozenset(vecs))
    return best


def seq_self_max(m, n, t):
    """Largest ``H`` with every pair (including ``x`` with itself) clearing ``t``."""
    vecs = cube(m, n)
    best = 0

    def go(i, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for j in range(i, len(vecs)):
            x = vecs[j]
            if clears(x, x, t) and all(clears(x, y, t) for y in chosen):
                go(j + 1, chosen + [x])

    go(0, [])
    return best
