"""
Exact rational scalars

Fraction already keeps numerator and denominator in lowest terms with a
positive denominator, so it is used directly as the scalar type.
"""

import re
from fractions import Fraction
from math import isqrt

Rational = Fraction

RATIONAL_PATTERN = re.compile(r"-?[0-9]+(/[0-9]+)?")

RationalLike = int | Fraction | str


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or "num/den" string to a Fraction.

    Args:
        value: Scalar to convert

    Returns:
        Exact rational value

    Raises:
        ValueError: If a string does not match the coefficient syntax or has a zero denominator
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse the document coefficient syntax -?[0-9]+(/[0-9]+)?."""
    if not RATIONAL_PATTERN.fullmatch(text):
        raise ValueError(f"malformed rational {text!r}")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction) -> str:
    """Format as "num/den", suppressing "/1"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Return the non-negative rational square root, or None when there is none."""
    if value < 0:
        return None
    num_root = isqrt(value.numerator)
    den_root = isqrt(value.denominator)
    if num_root * num_root != value.numerator or den_root * den_root != value.denominator:
        return None
    return Fraction(num_root, den_root)
