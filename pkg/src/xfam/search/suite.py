"""Named parameter grids run by ``xfam report``."""

from __future__ import annotations

from fractions import Fraction

from .verify import (
    verify_af,
    verify_daykin,
    verify_katona_single,
    verify_le3_reduction,
    verify_tm1,
    verify_tm2,
    verify_tm3,
    verify_tm4,
    verify_uniform_cross,
)


def product_measure_grid():
    for t in (1, 3):
        ps = sorted({Fraction(1, 8), Fraction(1, 6), Fraction(1, 5), Fraction(1, t + 2)})
        for n in range(t, 6):
            for p1 in ps:
                for p2 in ps:
                    yield n, t, p1, p2


def min_measure_grid():
    for n in range(1, 6):
        for t in range(1, n + 1):
            for p in (Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)):
                yield n, t, p


def reduction_grid():
    for m in range(2, 17):
        n = 1
        while m**n <= 16 and n <= 5:
            for t in range(1, n + 1):
                if m >= t + 1:
                    yield m, n, t
            n += 1


def desk_suite(workers: int = 1):
    """Every bound check of the desk-scale acceptance grid, as reports."""
    for n, t, p1, p2 in product_measure_grid():
        yield verify_tm1(n, t, p1, p2, workers=workers)
    for n, t, p in min_measure_grid():
        yield verify_tm3(n, t, p, workers=workers)
    for m, n, t in ((3, 2, 1), (4, 2, 1), (4, 2, 2)):
        yield verify_tm2(m, n, t)
    for m, n, tv in ((3, 2, (1, 1, 0)), (2, 3, (1, 1)), (2, 4, (1, 1))):
        yield verify_tm4(m, n, tv)
    for m, n, t in ((3, 2, 1), (4, 2, 2)):
        yield verify_af(m, n, t)
    for n in range(1, 6):
        for t in range(1, n + 1):
            yield verify_katona_single(n, t, workers=workers)
    for m, n, t in reduction_grid():
        yield verify_le3_reduction(m, n, t)
    for n, a, b in ((4, 2, 2), (5, 2, 3)):
        yield verify_daykin(n, a, b)
    for n in (4, 5):
        yield verify_uniform_cross(n, 3, 3, 3)


SUITES = {"desk": desk_suite}
