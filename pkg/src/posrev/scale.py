"""Exact degrees on the unit scale.

Degrees of possibility, necessity and clause weights are exact rationals in
[0, 1], represented as plain ``fractions.Fraction`` values. Floats are
refused everywhere: binary rounding would silently break the exact-equality
contracts the operators rely on.
"""

from __future__ import annotations

import re
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# a/b, an integer, or a decimal with at most six fractional digits
_SCALE_RE = re.compile(r"(\d+/\d+|\d+\.\d{1,6}|\d+)$")


def as_scale(value: Fraction | int | str) -> Fraction:
    """Coerce ``value`` to an exact degree in [0, 1].

    Accepts Fractions, ints and strings understood by ``Fraction``; floats
    are rejected to keep the arithmetic exact.
    """
    if isinstance(value, float):
        raise TypeError(
            "float degrees are not accepted; pass a Fraction, int or string "
            "such as '1/3' or '0.25'"
        )
    v = Fraction(value)
    if not ZERO <= v <= ONE:
        raise ValueError(f"degree {v} outside [0, 1]")
    return v


def parse_scale(text: str) -> Fraction:
    """Parse the textual degree syntax: ``a/b`` or a decimal with <= 6 digits.

    Raises ValueError on anything else; file parsers wrap this into a
    located ParseError.
    """
    text = text.strip()
    if not _SCALE_RE.match(text):
        raise ValueError(
            f"bad degree {text!r}: expected a/b or a decimal with at most "
            "six fractional digits"
        )
    try:
        v = Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"bad degree {text!r}: zero denominator") from None
    if not ZERO <= v <= ONE:
        raise ValueError(f"degree {v} outside [0, 1]")
    return v


def format_scale(value: Fraction) -> str:
    """Canonical text for a degree: lowest-terms ``a/b``, or ``a`` when integral."""
    return str(value)


def format_scale_decimal(value: Fraction, digits: int = 6) -> str:
    """Decimal rendering used by the command line's --decimal switch."""
    quotient, remainder = divmod(value.numerator * 10**digits, value.denominator)
    # round half to even on the last digit
    doubled = remainder * 2
    if doubled > value.denominator or (doubled == value.denominator and quotient % 2):
        quotient += 1
    text = f"{quotient:0{digits + 1}d}"
    return f"{text[:-digits]}.{text[-digits:]}"
