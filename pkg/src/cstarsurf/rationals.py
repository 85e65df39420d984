"""Exact rational scalars.

All weights, divisor coefficients and intersection numbers in this package
are :class:`fractions.Fraction` values; there is no floating point anywhere
in the core.  ``Fraction`` already guarantees lowest terms and a positive
denominator, which is exactly the normal form we need, so this module only
adds the string codec used in JSON I/O ("p/q", or "n" for integers) and the
floor/fractional-part split.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

Q = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParseError(f"cannot interpret {value!r} as a rational number")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "n"; the denominator must be nonzero."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Render as "p/q", or plain "n" when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def floor_frac(q) -> tuple[int, Fraction]:
    """Split q into (floor(q), {q}) with 0 <= {q} < 1.

    The fractional part of a negative non-integer is positive, e.g.
    floor_frac(-2/3) == (-1, 1/3).
    """
    q = as_rational(q)
    fl = q.numerator // q.denominator
    return fl, q - fl
