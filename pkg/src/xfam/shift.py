"""(A, B)-shifts, stability and the joint stabilization schedule."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import bits
from .setfam import SetFamily, elems_of, is_cross_t_intersecting, mask_of

__all__ = [
    "ShiftSpec",
    "TraceStep",
    "StabilizationTrace",
    "shift_AB",
    "level_pairs",
    "is_stable",
    "is_fully_stable",
    "stabilize_pair",
    "potential",
    "min_member_size",
    "check_layer_sandwich",
]


@dataclass(frozen=True)
class ShiftSpec:
    """A pair of disjoint masks; members move from containing ``A`` to containing ``B``."""

    A: int
    B: int

    def __post_init__(self):
        if self.A < 0 or self.B < 0:
            raise ValueError("shift masks must be non-negative")
        if self.A & self.B:
            raise ValueError(f"A={elems_of(self.A)} and B={elems_of(self.B)} overlap")

    @classmethod
    def from_sets(cls, A, B) -> "ShiftSpec":
        return cls(mask_of(A), mask_of(B))

    @property
    def level(self) -> int:
        return self.A.bit_count()


def shift_AB(F: SetFamily, s: ShiftSpec) -> SetFamily:
    if (s.A | s.B) >> F.n:
        raise ValueError(f"shift {elems_of(s.A)} -> {elems_of(s.B)} leaves [{F.n}]")
    ind = bits.shift(F.n, F.indicator, s.A, s.B)
    if ind == F.indicator:
        return F
    return SetFamily.from_indicator(F.n, ind)


@lru_cache(maxsize=None)
def level_pairs(n: int, k: int) -> tuple[tuple[int, int], ...]:
    """Disjoint ``(A, B)`` with ``|A| = k`` and ``|B| = k + 1``, sorted by
    ``(A-mask, B-mask)``."""
    out = []
    ground = range(n)
    for a in combinations(ground, k):
        am = sum(1 << i for i in a)
        rest = [i for i in ground if not am >> i & 1]
        for b in combinations(rest, k + 1):
            out.append((am, sum(1 << i for i in b)))
    out.sort()
    return tuple(out)


def is_stable(F: SetFamily, k: int) -> bool:
    """True iff every (k, k+1)-shift fixes ``F``."""
    if not 0 <= k <= F.n - 1:
        raise ValueError(f"level k={k} outside 0..{F.n - 1}")
    ind = F.indicator
    return all(bits.shift(F.n, ind, a, b) == ind for a, b in level_pairs(F.n, k))


def is_fully_stable(F: SetFamily) -> bool:
    return all(is_stable(F, k) for k in range(F.n))


def potential(*families: SetFamily) -> int:
    """Total member size, summed over the given families."""
    return sum(sum(k * c for k, c in enumerate(F.size_counts())) for F in families)


@dataclass(frozen=True)
class TraceStep:
    level: int
    A: int
    B: int
    potential: int

    def to_dict(self) -> dict:
        return {"level": self.level, "A": elems_of(self.A), "B": elems_of(self.B), "potential": self.potential}


@dataclass
class StabilizationTrace:
    n: int
    initial_potential: int
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def final_potential(self) -> int:
        return self.steps[-1].potential if self.steps else self.initial_potential

    def is_monotone(self) -> bool:
        pots = [self.initial_potential] + [s.potential for s in self.steps]
        return all(a < b for a, b in zip(pots, pots[1:]))

    @property
    def potential_bound(self) -> int:
        return 2 * self.n * 2**self.n

    def to_json(self) -> str:
        return json.dumps([s.to_dict() for s in self.steps])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["step", "level", "A", "B", "potential"])
        for i, s in enumerate(self.steps, 1):
            w.writerow([i, s.level, " ".join(map(str, elems_of(s.A))), " ".join(map(str, elems_of(s.B))), s.potential])
        return buf.getvalue()


def stabilize_pair(F1: SetFamily, F2: SetFamily, t: int):
    """Shift a cross t-intersecting pair until both are stable at every level.

    Each effective shift is applied to both families.  Levels are scanned
    upward and the scan restarts at level 0 after every change, so a
    level-k shift only ever acts on a pair already stable below k.  Returns
    ``(F1*, F2*, trace)``.
    """
    if F1.n != F2.n:
        raise ValueError(f"families live on different ground sets ({F1.n} vs {F2.n})")
    if not is_cross_t_intersecting(F1, F2, t):
        raise ValueError(f"input pair is not cross {t}-intersecting")
    n = F1.n
    i1, i2 = F1.indicator, F2.indicator
    pot = potential(F1, F2)
    trace = StabilizationTrace(n, pot)
    level = 0
    while level < n:
        for a, b in level_pairs(n, level):
            j1 = bits.shift(n, i1, a, b)
            j2 = bits.shift(n, i2, a, b)
            if j1 != i1 or j2 != i2:
                # every moved member gains exactly one element
                pot += ((i1 ^ j1).bit_count() + (i2 ^ j2).bit_count()) // 2
                i1, i2 = j1, j2
                trace.steps.append(TraceStep(level, a, b, pot))
                level = 0
                break
        else:
            level += 1
    out1 = F1 if i1 == F1.indicator else SetFamily.from_indicator(n, i1)
    out2 = F2 if i2 == F2.indicator else SetFamily.from_indicator(n, i2)
    return out1, out2, trace


def min_member_size(F: SetFamily) -> int:
    if not F.members:
        raise ValueError("empty family has no minimum member size")
    return min(m.bit_count() for m in F.members)


def check_layer_sandwich(F: SetFamily) -> bool:
    """True iff every set larger than the smallest member is a member."""
    u = min_member_size(F)
    above = 0
    for lay in bits.layers(F.n)[u + 1 :]:
        above |= lay
    return F.indicator & above == above
