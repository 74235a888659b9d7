import re

from fractions import Fraction


RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    """
    Parse "p/q" or "p" into an exact Fraction. Denominators are written
    without sign and must be positive; decimals and exponents are refused so
    that every value in a document is exact by construction.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")

    if isinstance(text, int):
        return Fraction(text)

    if isinstance(text, Fraction):
        return text

    if not isinstance(text, str):
        raise ValueError(f"rationals must be given as strings, got {text!r}")

    match = RATIONAL_PATTERN.match(text)
    if match is None:
        raise ValueError(f"not a rational: {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1

    if denominator == 0:
        raise ValueError(f"zero denominator in {text!r}")

    return Fraction(numerator, denominator)


def format_rational(value):

    if value == float("inf"):
        return "inf"

    value = Fraction(value)

    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"
