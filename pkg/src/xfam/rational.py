"""Exact rational arithmetic.

Every measure and bound in the package is a :class:`fractions.Fraction`.
Fractions are kept in lowest terms with the sign on the numerator, compare
by cross-multiplication and never touch floating point, which is exactly the
contract the verifiers need.  This module adds the few helpers the rest of
the code relies on: strict construction from integers, a single dispatch
point for binary operations, and the ``num/den`` text form.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from numbers import Integral

Rational = Fraction

__all__ = ["Rational", "rat_make", "rat_arith", "parse_rational", "format_rational", "as_rational"]


def rat_make(num: int, den: int = 1) -> Fraction:
    """Build a reduced fraction from two integers.

    >>> rat_make(-3, -6)
    Fraction(1, 2)
    """
    if not isinstance(num, Integral) or not isinstance(den, Integral):
        raise TypeError("rat_make takes integers only")
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/0")
    return Fraction(int(num), int(den))


_BINARY = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def _cmp(a: Fraction, b: Fraction) -> int:
    # cross-multiplication; denominators are positive
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def rat_arith(a: Fraction, b, op: str):
    """Apply ``op`` to ``a`` and ``b``.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``div``, ``cmp`` or ``pow``.
    ``cmp`` returns -1, 0 or 1.  For ``pow`` the second argument is a
    non-negative integer exponent.
    """
    a = as_rational(a)
    if op == "pow":
        if not isinstance(b, Integral) or b < 0:
            raise ValueError("pow needs a non-negative integer exponent")
        return a ** int(b)
    b = as_rational(b)
    if op == "cmp":
        return _cmp(a, b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("division by zero rational")
    try:
        return _BINARY[op](a, b)
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``.  Decimal and float notation is rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        a = int(num)
        b = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational of the form a/b: {text!r}") from None
    return rat_make(a, b)


def format_rational(x) -> str:
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"
