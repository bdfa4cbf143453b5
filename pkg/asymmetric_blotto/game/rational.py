"""Exact rational parsing and formatting in the "p/q" wire format."""

import re
from fractions import Fraction
from numbers import Rational

_RATIONAL_PATTERN = re.compile(r"^(-?\d+)(?:/(\d+))?$")

RationalLike = int | Fraction | str


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string into a Fraction.

    Decimal notation is rejected so that every parsed value is exact by construction.

    Raises:
        ValueError: If the text is not of the form "p" or "p/q" with q > 0.
    """
    match = _RATIONAL_PATTERN.match(text.strip())
    if match is None:
        raise ValueError(f"Expected a rational of the form 'p/q', got {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def to_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: they would silently carry binary rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot interpret {value!r} ({type(value).__name__}) as an exact rational")


def format_rational(value: Fraction | int) -> str:
    """Render a rational as canonical "p/q" (lowest terms, q > 0, "p" for integers)."""
    return str(Fraction(value))


def format_decimal(value: Fraction | float) -> str:
    """Render a value with 12 significant digits."""
    return f"{float(value):.12g}"
