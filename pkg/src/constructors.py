"""
Constructive witnesses: for every k >= 3, a bidiophantine triangle and axis-aligned
rectangles with a side of length exactly k.
"""
import logging
from typing import List, Optional, Tuple

from sympy import divisors

from src.exceptions import DomainError
from src.geometry import LatticePoint

logger = logging.getLogger(__name__)


def _check_side(k: int) -> None:
    if k < 3:
        raise DomainError(f"no bidiophantine figure has a side of length {k}; k must be at least 3")


def companion_leg(k: int) -> int:
    """w with k^2 + w^2 a square: (k^2 - 1)/2 for odd k, k^2/4 - 1 for even k."""
    _check_side(k)
    if k % 2:
        return (k * k - 1) // 2
    return k * k // 4 - 1


def triangle_with_side(k: int) -> Tuple[LatticePoint, LatticePoint, LatticePoint]:
    """
    Right triangle with legs k and companion_leg(k).

    Args:
        k (int): Required side length, at least 3.

    Returns:
        tuple: (0, 0), (k, 0), (0, w).
    """
    w = companion_leg(k)
    return (LatticePoint(0, 0), LatticePoint(k, 0), LatticePoint(0, w))


def rectangle_widths(k: int) -> List[int]:
    """
    Every w > 0 with k^2 + w^2 a perfect square, ascending.

    Writes k^2 = (c - w)(c + w) and reads w off each same-parity divisor pair s < t.
    """
    _check_side(k)
    square = k * k
    widths = set()
    for s in divisors(square):
        t = square // s
        if s < t and (t - s) % 2 == 0:
            widths.add((t - s) // 2)
    return sorted(widths)


def rectangle_with_side(k: int, limit: Optional[int] = None) -> List[Tuple[LatticePoint, ...]]:
    """
    Axis-aligned k x w rectangles with integral diagonals.

    Args:
        k (int): Side length, at least 3.
        limit (int, optional): When given, every w <= limit; otherwise only the least w.

    Returns:
        list: Rectangles as (0, 0), (k, 0), (k, w), (0, w).
    """
    widths = rectangle_widths(k)
    if limit is None:
        widths = widths[:1]
    else:
        widths = [w for w in widths if w <= limit]
    logger.debug(f"Rectangle widths for k={k}: {widths}")
    return [
        (LatticePoint(0, 0), LatticePoint(k, 0), LatticePoint(k, w), LatticePoint(0, w))
        for w in widths
    ]
