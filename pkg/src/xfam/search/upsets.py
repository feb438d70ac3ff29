"""Enumeration of superset-closed families (the free distributive lattice).

An up-set ``U`` on ``[n]`` splits on element ``n`` into the up-sets
``U0 = {S in U : n not in S}`` and ``U1 = {S - {n} : n in S in U}`` of
``[n-1]``, and ``U0`` is contained in ``U1``.  Conversely every such nested
pair glues back into an up-set.  In indicator form the glue is
``U0 | (U1 << 2**(n-1))``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from ..setfam import SetFamily

MAX_UPSET_N = 6


@lru_cache(maxsize=None)
def _upsets_array(n: int) -> np.ndarray:
    if n == 0:
        return np.array([0, 1], dtype=np.uint64)
    prev = _upsets_array(n - 1)
    half = np.uint64(1 << (n - 1))
    chunks = []
    for u1 in prev:
        lower = prev[(prev & ~u1) == 0]
        chunks.append(lower | (u1 << half))
    out = np.concatenate(chunks)
    out.flags.writeable = False
    return out


def _iter_indicators(n: int) -> Iterator[int]:
    if n <= 5:
        yield from upset_indicators(n)
        return
    prev = _upsets_array(n - 1)
    half = 1 << (n - 1)
    for u1 in prev.tolist():
        for u0 in prev[(prev & ~np.uint64(u1)) == 0].tolist():
            yield u0 | (u1 << half)


@lru_cache(maxsize=None)
def upset_indicators(n: int) -> tuple[int, ...]:
    """Indicators of every up-set on ``[n]``, ``n <= 5``, in enumeration order."""
    if not 0 <= n <= 5:
        raise ValueError(f"cached up-set list only for n <= 5, got {n}")
    return tuple(_upsets_array(n).tolist())


def enumerate_upsets(n: int) -> Iterator[SetFamily]:
    """Yield every superset-closed family on ``[n]`` exactly once."""
    if not 1 <= n <= MAX_UPSET_N:
        raise ValueError(f"up-set enumeration needs 1 <= n <= {MAX_UPSET_N}, got {n}")
    for ind in _iter_indicators(n):
        yield SetFamily.from_indicator(n, ind)


def count_upsets(n: int) -> int:
    if not 1 <= n <= MAX_UPSET_N:
        raise ValueError(f"up-set enumeration needs 1 <= n <= {MAX_UPSET_N}, got {n}")
    if n <= 5:
        return len(upset_indicators(n))
    prev = _upsets_array(n - 1)
    return int(sum(((prev & ~u1) == 0).sum() for u1 in prev))
