"""
Exact integer and rational primitives.

Python integers are arbitrary precision, so nothing here can overflow. No floating
point is used anywhere in the package: the parity arguments the searches rely on do not
survive rounding.
"""
import math
from fractions import Fraction
from typing import Optional, Union

from src.exceptions import DomainError

Integer = int
Natural = int
ExactRational = Fraction


def isqrt(n: Integer) -> Natural:
    """
    Integer square root.

    Args:
        n (int): Non-negative integer.

    Returns:
        int: The unique r with r*r <= n < (r+1)*(r+1).

    Raises:
        DomainError: If n is negative.
    """
    if n < 0:
        raise DomainError(f"isqrt is undefined for negative input {n}")
    return math.isqrt(n)


def exact_sqrt(n: Integer) -> Optional[Natural]:
    """Return r with r*r == n when n is a perfect square, otherwise None."""
    root = isqrt(n)
    return root if root * root == n else None


def is_square(n: Integer) -> bool:
    """True when n is a non-negative perfect square."""
    return n >= 0 and exact_sqrt(n) is not None


def exact_rational(numerator: Integer, denominator: Integer) -> ExactRational:
    """
    Build a rational in lowest terms with a positive denominator.

    Args:
        numerator (int): Numerator.
        denominator (int): Non-zero denominator.

    Returns:
        Fraction: The normalized rational.
    """
    if denominator == 0:
        raise DomainError("rational with zero denominator")
    return Fraction(numerator, denominator)


def format_integer(value: Integer) -> str:
    """Render an integer as a decimal string (the file-format convention)."""
    return str(int(value))


def format_rational(value: ExactRational) -> str:
    """Render a rational as ``p/q`` (or ``p`` when integral)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_integer(value: Union[str, int]) -> Integer:
    """
    Parse a decimal-string (or int) coordinate.

    Floats and booleans are rejected: a float has already lost exactness.

    Args:
        value (str | int): Value read from a file.

    Returns:
        int: The parsed integer.

    Raises:
        DomainError: If the value is not an exact integer.
    """
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DomainError(f"expected a decimal string, got {value!r}")
    if isinstance(value, int):
        return value
    text = value.strip()
    try:
        return int(text, 10)
    except ValueError:
        raise DomainError(f"not a decimal integer: {value!r}") from None
