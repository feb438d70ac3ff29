"""Bit-parallel kernels over the Boolean cube.

A family on ``[n]`` is stored two ways.  A *mask* is one subset, element
``i`` (1-based) living at bit ``i - 1``.  An *indicator* is one Python int
with ``2**n`` bits, bit ``s`` set iff mask ``s`` is a member.  Indicator
operations act on every member at once, which is what keeps the exhaustive
searches cheap.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_N = 24
# t_dual tables are materialised only up to this size
TABLE_N = 8


def check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"ground set size n={n} outside 1..{MAX_N}")


def to_indicator(flags: np.ndarray) -> int:
    """Pack a boolean vector (index = mask) into an indicator int."""
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def from_indicator(ind: int, size: int) -> np.ndarray:
    raw = ind.to_bytes((size + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size].astype(bool)


def iter_bits(x: int):
    """Yield the positions of set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@lru_cache(maxsize=None)
def masks(n: int) -> np.ndarray:
    a = np.arange(1 << n, dtype=np.uint32)
    a.flags.writeable = False
    return a


@lru_cache(maxsize=None)
def sizes(n: int) -> np.ndarray:
    s = np.bitwise_count(masks(n)).astype(np.int8)
    s.flags.writeable = False
    return s


@lru_cache(maxsize=None)
def full(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def layers(n: int) -> tuple[int, ...]:
    """``layers(n)[k]`` is the indicator of all k-subsets of ``[n]``."""
    s = sizes(n)
    return tuple(to_indicator(s == k) for k in range(n + 1))


@lru_cache(maxsize=None)
def lacking(n: int) -> tuple[int, ...]:
    """``lacking(n)[i]`` is the indicator of masks without bit ``i``."""
    m = masks(n)
    return tuple(to_indicator((m >> i) & 1 == 0) for i in range(n))


def layer_counts(n: int, ind: int) -> tuple[int, ...]:
    return tuple((ind & lay).bit_count() for lay in layers(n))


def up_closure(n: int, ind: int) -> int:
    for i in range(n):
        ind |= (ind & lacking(n)[i]) << (1 << i)
    return ind


def is_up_closed(n: int, ind: int) -> bool:
    return up_closure(n, ind) == ind


def meets_flags(n: int, f: int, t: int) -> np.ndarray:
    """Boolean vector of masks ``s`` with ``|s & f| >= t``."""
    return np.bitwise_count(masks(n) & np.uint32(f)) >= t


@lru_cache(maxsize=None)
def threshold_table(n: int, t: int) -> tuple[int, ...]:
    """Indicator of ``{s : |s & f| >= t}`` for every mask ``f``."""
    if n > TABLE_N:
        raise ValueError(f"threshold table only for n <= {TABLE_N}")
    return tuple(to_indicator(meets_flags(n, f, t)) for f in range(1 << n))


def dual(n: int, ind: int, t: int, members=None) -> int:
    """Indicator of the largest family cross t-intersecting ``ind``.

    ``members`` may carry the member masks when the caller already has
    them; for large ``n`` that avoids unpacking the indicator.
    """
    if n <= TABLE_N:
        table = threshold_table(n, t)
        out = full(n)
        for f in iter_bits(ind):
            out &= table[f]
            if not out:
                break
        return out
    if members is None:
        members = np.flatnonzero(from_indicator(ind, 1 << n)).tolist()
    ok = np.ones(1 << n, dtype=bool)
    m = masks(n)
    for f in members:
        ok &= np.bitwise_count(m & np.uint32(f)) >= t
        if not ok.any():
            break
    return to_indicator(ok)


@lru_cache(maxsize=2048)
def shift_source(n: int, a: int, b: int) -> int:
    """Indicator of masks ``f`` with ``a`` inside and ``b`` outside."""
    return to_indicator((masks(n) & np.uint32(a | b)) == a)


def shift(n: int, ind: int, a: int, b: int) -> int:
    """Apply the (a, b)-shift to an indicator.

    For a movable mask ``f`` the image ``(f - a) | b`` is numerically
    ``f - a + b``, so the whole family moves by one big-int shift.
    """
    movable = ind & shift_source(n, a, b)
    if not movable:
        return ind
    delta = b - a
    img = movable << delta if delta >= 0 else movable >> -delta
    free = img & ~ind
    if not free:
        return ind
    src = free >> delta if delta >= 0 else free << -delta
    return (ind & ~src) | free


def mask_size_weights(n: int, counts, num: int, den: int) -> int:
    """Numerator of ``sum_k counts[k] p^k (1-p)^(n-k)`` over ``den**n``
    for ``p = num/den``."""
    q = den - num
    total = 0
    for k, c in enumerate(counts):
        if c:
            total += c * num**k * q ** (n - k)
    return total
