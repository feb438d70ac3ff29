"""Families of subsets of ``[n]``, the p-biased measure and the standard
extremal constructions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from . import bits
from .rational import as_rational

__all__ = [
    "SetFamily",
    "mask_of",
    "elems_of",
    "measure",
    "is_t_intersecting",
    "is_cross_t_intersecting",
    "principal_family",
    "frankl_family",
    "katona_family",
    "up_closure",
    "t_dual",
    "power_set",
    "layer_family",
]


def mask_of(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << (e - 1)
    return m


def elems_of(mask: int) -> list[int]:
    return [i + 1 for i in bits.iter_bits(mask)]


@dataclass(frozen=True)
class SetFamily:
    """An immutable family of subsets of ``[n]``.

    ``members`` holds the subsets as bitmasks in ascending order.  Any
    iterable of masks is accepted and normalised; duplicates collapse.
    """

    n: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        bits.check_n(self.n)
        ms = tuple(sorted(set(int(m) for m in self.members)))
        if ms and (ms[0] < 0 or ms[-1] >> self.n):
            bad = ms[0] if ms[0] < 0 else ms[-1]
            raise ValueError(f"mask {bad} is not a subset of [{self.n}]")
        object.__setattr__(self, "members", ms)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        out = []
        for s in sets:
            s = list(s)
            for e in s:
                if not 1 <= e <= n:
                    raise ValueError(f"element {e} outside [1, {n}]")
            out.append(mask_of(s))
        return cls(n, out)

    @classmethod
    def from_indicator(cls, n: int, ind: int) -> "SetFamily":
        fam = cls(n, np.flatnonzero(bits.from_indicator(ind, 1 << n)).tolist())
        fam.__dict__["indicator"] = ind
        return fam

    @cached_property
    def indicator(self) -> int:
        if len(self.members) < 64:
            ind = 0
            for m in self.members:
                ind |= 1 << m
            return ind
        flags = np.zeros(1 << self.n, dtype=bool)
        flags[list(self.members)] = True
        return bits.to_indicator(flags)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask) -> bool:
        return (self.indicator >> mask) & 1 == 1

    def issubset(self, other: "SetFamily") -> bool:
        return self.indicator & ~other.indicator == 0

    def sets(self) -> list[list[int]]:
        return [elems_of(m) for m in self.members]

    def size_counts(self) -> tuple[int, ...]:
        return bits.layer_counts(self.n, self.indicator)

    def complement_family(self) -> "SetFamily":
        """All subsets of ``[n]`` that are *not* members."""
        return SetFamily.from_indicator(self.n, bits.full(self.n) & ~self.indicator)

    def __repr__(self):
        return f"SetFamily(n={self.n}, {self.sets()})"


def power_set(n: int) -> SetFamily:
    return SetFamily.from_indicator(n, bits.full(n))


def layer_family(n: int, k: int) -> SetFamily:
    return SetFamily.from_indicator(n, bits.layers(n)[k])


def _check_p(p) -> Fraction:
    p = as_rational(p)
    if not 0 < p < 1:
        raise ValueError(f"p={p} must lie strictly between 0 and 1")
    return p


def measure(F: SetFamily, p) -> Fraction:
    """Exact p-biased measure: each member ``S`` weighs ``p^|S| (1-p)^(n-|S|)``."""
    p = _check_p(p)
    num = bits.mask_size_weights(F.n, F.size_counts(), p.numerator, p.denominator)
    return Fraction(num, p.denominator**F.n)


def _as_array(F: SetFamily) -> np.ndarray:
    return np.fromiter(F.members, dtype=np.uint32, count=len(F))


def is_cross_t_intersecting(F1: SetFamily, F2: SetFamily, t: int) -> bool:
    if F1.n != F2.n:
        raise ValueError(f"families live on different ground sets ({F1.n} vs {F2.n})")
    if not F1.members or not F2.members:
        return True
    small, big = sorted((F1, F2), key=len)
    arr = _as_array(big)
    for f in small.members:
        if np.bitwise_count(arr & np.uint32(f)).min() < t:
            return False
    return True


def is_t_intersecting(F: SetFamily, t: int) -> bool:
    return is_cross_t_intersecting(F, F, t)


def principal_family(n: int, T: Iterable[int]) -> SetFamily:
    """All supersets of ``T``."""
    T = list(T)
    for e in T:
        if not 1 <= e <= n:
            raise ValueError(f"T is not a subset of [{n}]: element {e}")
    tm = mask_of(T)
    return SetFamily.from_indicator(n, bits.to_indicator((bits.masks(n) & np.uint32(tm)) == tm))


def frankl_family(n: int, t: int, r: int) -> SetFamily:
    """Sets meeting ``[t + 2r]`` in at least ``t + r`` elements."""
    if t < 1 or r < 0:
        raise ValueError(f"need t >= 1 and r >= 0, got t={t}, r={r}")
    if t + 2 * r > n:
        raise ValueError(f"t + 2r = {t + 2 * r} exceeds n = {n}")
    head = np.uint32((1 << (t + 2 * r)) - 1)
    return SetFamily.from_indicator(n, bits.to_indicator(np.bitwise_count(bits.masks(n) & head) >= t + r))


def katona_family(n: int, t: int) -> SetFamily:
    """The Katona family ``K(n, t)``.

    Even ``n + t``: every set of size at least ``(n+t)/2``.  Odd ``n + t``:
    every set of size at least ``(n+t+1)/2`` plus the ``(n+t-1)/2``-subsets
    of ``[n-1]``.
    """
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")
    s = bits.sizes(n)
    if (n + t) % 2 == 0:
        flags = s >= (n + t) // 2
    else:
        lower = (n + t - 1) // 2
        top_free = (bits.masks(n) >> (n - 1)) & 1 == 0
        flags = (s > lower) | ((s == lower) & top_free)
    return SetFamily.from_indicator(n, bits.to_indicator(flags))


def up_closure(F: SetFamily) -> SetFamily:
    return SetFamily.from_indicator(F.n, bits.up_closure(F.n, F.indicator))


def t_dual(F: SetFamily, t: int) -> SetFamily:
    """The maximal partner ``{S : |S & A| >= t for all A in F}``.

    The empty family has the whole power set as partner.
    """
    return SetFamily.from_indicator(F.n, bits.dual(F.n, F.indicator, t, F.members))


def k_subsets(n: int, k: int) -> list[int]:
    """Masks of all k-subsets of ``[n]`` in ascending order."""
    return sorted(mask_of(c) for c in combinations(range(1, n + 1), k))
