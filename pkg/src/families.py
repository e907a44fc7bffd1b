"""
Parametric families of bidiophantine triangles over an axis-parallel segment of
length k in {3, 4}.

With the segment from P = (0, 0) to K = (k, 0), the third vertex sits at horizontal
offset b beyond K and height h:

    k = 3:  h^2 = 8(b+1)(b+2),  |KQ| = 3b+4,  |PQ| = 3b+5
    k = 4:  h^2 = 3(b+1)(b+3),  |KQ| = 2b+3,  |PQ| = 2b+5

b is admissible when h is an integer. Admissible values come from Pell streams:

    k = 3, b even:  b = 2(m^2 - 1)  from n^2 - 2m^2 = -1
    k = 3, b odd:   b = 2m^2 - 1    from n^2 - 2m^2 = 1
    k = 4:          b = t - 2       from t^2 - 3s^2 = 1  (h = 3s)
"""
import heapq
import logging
from dataclasses import dataclass
from itertools import takewhile
from typing import Iterator, List, Tuple

from src.exactmath import ExactRational, exact_rational, exact_sqrt
from src.exceptions import AdmissibilityError, DomainError, ParameterError, UnsupportedParametersError
from src.geometry import ORIGIN, LatticePoint
from src.pell import PellSolution, iter_solutions

logger = logging.getLogger(__name__)

SUPPORTED_K = (3, 4)


def check_family(k: int) -> None:
    """
    Reject segment lengths without a family.

    Args:
        k (int): Segment length.

    Raises:
        UnsupportedParametersError: If k is not 3 or 4.
    """
    if k not in SUPPORTED_K:
        raise UnsupportedParametersError(f"families exist for k in {SUPPORTED_K}, got k={k}")


def height_squared(k: int, b: int) -> int:
    """The family radicand h^2 for parameter b."""
    check_family(k)
    if b < 0:
        raise DomainError(f"family parameter b must be non-negative, got {b}")
    if k == 3:
        return 8 * (b + 1) * (b + 2)
    return 3 * (b + 1) * (b + 3)


def side_lengths(k: int, b: int) -> Tuple[int, int]:
    """(side_short, side_long) for parameter b."""
    check_family(k)
    if k == 3:
        return 3 * b + 4, 3 * b + 5
    return 2 * b + 3, 2 * b + 5


def is_admissible(k: int, b: int) -> bool:
    """
    Whether the family radicand is a perfect square at b.

    Args:
        k (int): 3 or 4.
        b (int): Family parameter.

    Returns:
        bool: True iff b >= 0 and h^2 is a perfect square.
    """
    return b >= 0 and exact_sqrt(height_squared(k, b)) is not None


@dataclass(frozen=True)
class FamilyMember:
    """One triangle of the family: base k, foot offset b, height h."""

    k: int
    b: int
    h: int
    side_short: int
    side_long: int

    @property
    def foot(self) -> int:
        """x-offset of the height foot beyond the segment end."""
        return self.b

    def sides(self) -> Tuple[int, int, int]:
        """(k, side_short, side_long)."""
        return (self.k, self.side_short, self.side_long)

    def as_row(self) -> dict:
        """CSV row with decimal-string values."""
        return {
            'b': str(self.b),
            'h': str(self.h),
            'side_short': str(self.side_short),
            'side_long': str(self.side_long),
        }


@dataclass(frozen=True)
class ApexCosines:
    """Exact cosines of the base angles: at P (far from the foot) and at K (near it)."""

    cos_at_far_vertex: ExactRational
    cos_at_near_vertex: ExactRational


def member(k: int, b: int) -> FamilyMember:
    """
    Family member for an admissible b.

    Raises:
        AdmissibilityError: If the radicand is not a perfect square.
    """
    radicand = height_squared(k, b)
    h = exact_sqrt(radicand)
    if h is None:
        raise AdmissibilityError(
            f"b={b} is not admissible for k={k}: h^2 = {radicand} is not a perfect square"
        )
    side_short, side_long = side_lengths(k, b)
    return FamilyMember(k=k, b=b, h=h, side_short=side_short, side_long=side_long)


def from_pell(k: int, s: PellSolution) -> int:
    """
    Map a Pell solution to the family parameter b.

    Args:
        k (int): 3 or 4.
        s (PellSolution): For k=3, a solution with D=2 and N=-1 (even b) or N=+1 (odd b);
            for k=4, D=3 with N=+1 (x = b+2) or N=-3 (x = h, y = b+2).

    Returns:
        int: The admissible parameter b.

    Raises:
        ParameterError: If the solution belongs to a different equation.
    """
    check_family(k)
    key = (s.d_param, s.n_param)
    if k == 3 and key == (2, -1):
        b = 2 * (s.y * s.y - 1)
    elif k == 3 and key == (2, 1):
        b = 2 * s.y * s.y - 1
    elif k == 4 and key == (3, 1):
        b = s.x - 2
    elif k == 4 and key == (3, -3):
        b = s.y - 2
    else:
        raise ParameterError(
            f"x^2 - {s.d_param}y^2 = {s.n_param} does not parametrize the k={k} family"
        )
    if not is_admissible(k, b):
        raise ParameterError(f"solution ({s.x}, {s.y}) maps to inadmissible b={b}")
    return b


def iter_admissible_b(k: int) -> Iterator[int]:
    """Unbounded increasing stream of admissible b, produced from Pell streams."""
    check_family(k)
    if k == 3:
        even = (from_pell(3, s) for s in iter_solutions(2, -1))
        odd = (from_pell(3, s) for s in iter_solutions(2, 1))
        yield from heapq.merge(even, odd)
    else:
        yield from (from_pell(4, s) for s in iter_solutions(3, 1))


def admissible_b_values(k: int, limit: int) -> List[int]:
    """All admissible b <= limit, via the Pell mapping."""
    check_family(k)
    if limit < 0:
        raise DomainError(f"limit must be non-negative, got {limit}")
    return list(takewhile(lambda b: b <= limit, iter_admissible_b(k)))


def brute_force_admissible_b(k: int, limit: int) -> List[int]:
    """All admissible b <= limit by a perfect-square scan of the radicand."""
    return [b for b in range(limit + 1) if is_admissible(k, b)]


def realize(m: FamilyMember, base_start: LatticePoint = ORIGIN, side: int = 1) -> Tuple[LatticePoint, ...]:
    """
    Lattice triangle for a member: base along +x from base_start, apex on ``side``.

    Returns:
        tuple: (base_start, base_start + (k, 0), base_start + (k + b, side * h)).
    """
    if side not in (1, -1):
        raise ParameterError(f"side must be +1 or -1, got {side}")
    return (
        base_start,
        base_start + LatticePoint(m.k, 0),
        base_start + LatticePoint(m.k + m.b, side * m.h),
    )


def apex_cosines(k: int, b: int) -> ApexCosines:
    """
    Cosines of the base angles, defined for every b >= 0.

    k=3: (b+3)/(3b+5) and -b/(3b+4); k=4: (b+4)/(2b+5) and -b/(2b+3).
    """
    check_family(k)
    if b < 0:
        raise DomainError(f"family parameter b must be non-negative, got {b}")
    side_short, side_long = side_lengths(k, b)
    return ApexCosines(
        cos_at_far_vertex=exact_rational(k + b, side_long),
        cos_at_near_vertex=exact_rational(-b, side_short),
    )
