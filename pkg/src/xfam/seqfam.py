"""Families of integer sequences in ``[m]^n``.

A sequence ``x = (x_1, ..., x_n)`` is stored as its base-m index
``sum (x_j - 1) m^(n-j)``, so ascending index order is lexicographic order
of the sequences.  For ``m = 2`` the index doubles as a bitmask (bit set
means symbol 2) and agreement between two sequences is an XNOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .bits import to_indicator

__all__ = [
    "SeqFamily",
    "encode",
    "decode",
    "meet",
    "symbol_count",
    "is_cross_tvec_intersecting",
    "is_cross_t_intersecting_seq",
    "is_tvec_intersecting",
    "seq_dual",
    "is_p_complete",
    "p_complete_closure",
    "correlation_check",
    "cylinder",
    "full_seq_family",
]

MAX_DENSE = 1 << 24


def _check_shape(m: int, n: int) -> None:
    if m < 2 or n < 1:
        raise ValueError(f"need m >= 2 and n >= 1, got m={m}, n={n}")


def _check_dense(m: int, n: int) -> None:
    if m**n > MAX_DENSE:
        raise ValueError(f"m^n = {m}^{n} exceeds the dense limit 2^24")


@lru_cache(maxsize=None)
def coords(m: int, n: int) -> np.ndarray:
    """``coords(m, n)[idx]`` is the sequence with index ``idx`` (symbols 1..m)."""
    _check_dense(m, n)
    idx = np.arange(m**n, dtype=np.int64)
    out = np.empty((m**n, n), dtype=np.int8)
    for j in range(n - 1, -1, -1):
        out[:, j] = idx % m + 1
        idx //= m
    out.flags.writeable = False
    return out


def encode(m: int, x: Sequence[int]) -> int:
    idx = 0
    for v in x:
        if not 1 <= v <= m:
            raise ValueError(f"symbol {v} outside [1, {m}]")
        idx = idx * m + (v - 1)
    return idx


def decode(m: int, n: int, idx: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        idx, r = divmod(idx, m)
        out.append(r + 1)
    return tuple(reversed(out))


@dataclass(frozen=True)
class SeqFamily:
    m: int
    n: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        _check_shape(self.m, self.n)
        ms = tuple(sorted(set(int(x) for x in self.members)))
        if ms and (ms[0] < 0 or ms[-1] >= self.m**self.n):
            raise ValueError(f"sequence index out of range for [{self.m}]^{self.n}")
        object.__setattr__(self, "members", ms)

    @classmethod
    def from_seqs(cls, m: int, n: int, seqs: Iterable[Sequence[int]]) -> "SeqFamily":
        out = []
        for x in seqs:
            x = list(x)
            if len(x) != n:
                raise ValueError(f"sequence {x} has length {len(x)}, expected {n}")
            out.append(encode(m, x))
        return cls(m, n, out)

    @classmethod
    def from_flags(cls, m: int, n: int, flags: np.ndarray) -> "SeqFamily":
        return cls(m, n, np.flatnonzero(flags).tolist())

    @cached_property
    def flags(self) -> np.ndarray:
        f = np.zeros(self.m**self.n, dtype=bool)
        f[list(self.members)] = True
        return f

    def seqs(self) -> list[tuple[int, ...]]:
        return [decode(self.m, self.n, x) for x in self.members]

    def issubset(self, other: "SeqFamily") -> bool:
        return set(self.members) <= set(other.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, idx) -> bool:
        return idx in set(self.members)

    def __repr__(self):
        return f"SeqFamily(m={self.m}, n={self.n}, {self.seqs()})"


def full_seq_family(m: int, n: int) -> SeqFamily:
    return SeqFamily(m, n, range(m**n))


def meet(x: Sequence[int], y: Sequence[int], m: int | None = None) -> tuple[int, ...]:
    """Coordinatewise agreement: ``x_i`` where ``x_i == y_i``, else 0."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if m is not None:
        for v in (*x, *y):
            if not 1 <= v <= m:
                raise ValueError(f"symbol {v} outside [1, {m}]")
    return tuple(a if a == b else 0 for a, b in zip(x, y))


def symbol_count(z: Sequence[int], i: int) -> int:
    return sum(1 for v in z if v == i)


def _threshold(t, m: int, n: int):
    """Normalise a threshold: an int is a total count, a sequence is per symbol."""
    if isinstance(t, (int, np.integer)):
        t = int(t)
        if not 0 <= t <= n:
            raise ValueError(f"threshold t={t} outside 0..{n}")
        return t
    tv = tuple(int(v) for v in t)
    if len(tv) != m:
        raise ValueError(f"threshold vector needs {m} entries, got {len(tv)}")
    if min(tv) < 0:
        raise ValueError("threshold entries must be non-negative")
    if sum(tv) > n:
        raise ValueError(f"threshold sum {sum(tv)} exceeds n={n}")
    return tv


def _meets(C: np.ndarray, x: np.ndarray, t) -> np.ndarray:
    """Rows ``y`` of ``C`` whose meet with ``x`` clears threshold ``t``."""
    eq = C == x
    if isinstance(t, int):
        return eq.sum(axis=1) >= t
    ok = np.ones(len(C), dtype=bool)
    for i, ti in enumerate(t, 1):
        if ti:
            ok &= eq[:, x == i].sum(axis=1) >= ti
    return ok


def _meets_binary(n: int, x: int, t) -> np.ndarray:
    # m = 2: set bit = symbol 2, agreement pattern = XNOR
    full = (1 << n) - 1
    ys = np.arange(1 << n, dtype=np.uint32)
    agree = ~(ys ^ np.uint32(x)) & np.uint32(full)
    if isinstance(t, int):
        return np.bitwise_count(agree) >= t
    ones = np.bitwise_count(agree & np.uint32(full & ~x))
    twos = np.bitwise_count(agree & np.uint32(x))
    return (ones >= t[0]) & (twos >= t[1])


def meets_flags(m: int, n: int, x: int, t, fast: bool = True) -> np.ndarray:
    """Boolean vector over ``[m]^n``: does ``y`` clear ``t`` against ``x``."""
    t = _threshold(t, m, n)
    if m == 2 and fast:
        return _meets_binary(n, x, t)
    C = coords(m, n)
    return _meets(C, C[x], t)


@lru_cache(maxsize=None)
def threshold_table(m: int, n: int, t) -> tuple[int, ...]:
    """Indicator ints of :func:`meets_flags` for every sequence index."""
    if m**n > 1 << 12:
        raise ValueError("threshold tables are for small cubes only")
    return tuple(to_indicator(meets_flags(m, n, x, t)) for x in range(m**n))


def _same_space(H1: SeqFamily, H2: SeqFamily) -> None:
    if (H1.m, H1.n) != (H2.m, H2.n):
        raise ValueError(f"families differ in shape: [{H1.m}]^{H1.n} vs [{H2.m}]^{H2.n}")


def _cross(H1: SeqFamily, H2: SeqFamily, t) -> bool:
    _same_space(H1, H2)
    t = _threshold(t, H1.m, H1.n)
    if not H1.members or not H2.members:
        return True
    C2 = np.array([decode(H2.m, H2.n, y) for y in H2.members], dtype=np.int8)
    for x in H1.members:
        if not _meets(C2, np.array(decode(H1.m, H1.n, x), dtype=np.int8), t).all():
            return False
    return True


def is_cross_tvec_intersecting(H1: SeqFamily, H2: SeqFamily, t: Sequence[int]) -> bool:
    """Every cross meet has at least ``t[i-1]`` coordinates equal to ``i``."""
    if isinstance(t, (int, np.integer)):
        raise TypeError("use is_cross_t_intersecting_seq for a plain threshold")
    return _cross(H1, H2, tuple(t))


def is_cross_t_intersecting_seq(H1: SeqFamily, H2: SeqFamily, t: int) -> bool:
    """Every cross meet has at least ``t`` non-zero coordinates."""
    return _cross(H1, H2, int(t))


def is_tvec_intersecting(H: SeqFamily, t) -> bool:
    return _cross(H, H, t if isinstance(t, int) else tuple(t))


def seq_dual(H: SeqFamily, t) -> SeqFamily:
    """Largest family cross-intersecting ``H`` at threshold ``t``.

    ``t`` is an int (non-zero count) or a per-symbol vector.
    """
    _check_dense(H.m, H.n)
    t = _threshold(t, H.m, H.n)
    ok = np.ones(H.m**H.n, dtype=bool)
    for x in H.members:
        ok &= meets_flags(H.m, H.n, x, t)
        if not ok.any():
            break
    return SeqFamily.from_flags(H.m, H.n, ok)


def _symbols(P: Iterable[int], m: int) -> frozenset[int]:
    P = frozenset(int(i) for i in P)
    if not P <= frozenset(range(1, m + 1)):
        raise ValueError(f"symbol set {sorted(P)} is not inside [1, {m}]")
    if len(P) == m:
        raise ValueError(f"symbol set must be a proper subset of [{m}]")
    return P


def p_complete_closure(H: SeqFamily, P: Iterable[int]) -> SeqFamily:
    """All ``y`` reachable from a member by changing coordinates whose symbol is outside ``P``."""
    P = _symbols(P, H.m)
    C = coords(H.m, H.n)
    ok = np.zeros(H.m**H.n, dtype=bool)
    for x in H.members:
        xv = C[x]
        pinned = [j for j in range(H.n) if int(xv[j]) in P]
        ok |= (C[:, pinned] == xv[pinned]).all(axis=1)
    return SeqFamily.from_flags(H.m, H.n, ok)


def is_p_complete(H: SeqFamily, P: Iterable[int]) -> bool:
    return p_complete_closure(H, P).members == H.members


def correlation_check(H1: SeqFamily, H2: SeqFamily, P: Iterable[int], Q: Iterable[int]) -> bool:
    """Check ``|H1 & H2| * m^n <= |H1| * |H2|`` for a P-complete ``H1`` and
    a Q-complete ``H2`` with ``P``, ``Q`` disjoint and non-empty."""
    _same_space(H1, H2)
    P, Q = _symbols(P, H1.m), _symbols(Q, H1.m)
    if not P or not Q:
        raise ValueError("hypothesis violated: P and Q must be non-empty")
    if P & Q:
        raise ValueError(f"hypothesis violated: P and Q share {sorted(P & Q)}")
    if not is_p_complete(H1, P):
        raise ValueError(f"hypothesis violated: H1 is not {sorted(P)}-complete")
    if not is_p_complete(H2, Q):
        raise ValueError(f"hypothesis violated: H2 is not {sorted(Q)}-complete")
    common = len(set(H1.members) & set(H2.members))
    return common * H1.m**H1.n <= len(H1) * len(H2)


def cylinder(m: int, n: int, pins: dict[int, int]) -> SeqFamily:
    """Sequences with ``x_j = pins[j]`` for each pinned coordinate ``j`` (1-based)."""
    C = coords(m, n)
    ok = np.ones(m**n, dtype=bool)
    for j, v in pins.items():
        ok &= C[:, j - 1] == v
    return SeqFamily.from_flags(m, n, ok)
