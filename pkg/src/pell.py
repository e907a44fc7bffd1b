"""
Generalized Pell equations x^2 - D*y^2 = N for the parameter pairs the family
analysis needs, with the Brahmagupta composition law.

Only the supported (D, N) pairs below are solved; composition itself works for any D.
Every supported pair has a single solution class, so the stream is the fundamental
solution composed repeatedly with the fundamental unit of x^2 - D*y^2 = 1.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Iterator, List, Tuple

from src.exactmath import exact_sqrt, isqrt
from src.exceptions import DomainError, ParameterError, UnsupportedParametersError

logger = logging.getLogger(__name__)

SUPPORTED_PARAMETERS = frozenset({(2, -1), (2, 1), (3, 1), (3, -3)})

# Fundamental solutions of the supported pairs are tiny; the scan bound only guards
# against a programming error turning into an endless loop.
_FUNDAMENTAL_SCAN_BOUND = 10_000


@dataclass(frozen=True, order=True)
class PellSolution:
    """A positive solution (x, y) of x^2 - d_param*y^2 = n_param."""

    x: int
    y: int
    d_param: int
    n_param: int

    def __post_init__(self):
        if self.x <= 0 or self.y <= 0:
            raise ParameterError(f"Pell solutions are positive, got ({self.x}, {self.y})")
        if self.x * self.x - self.d_param * self.y * self.y != self.n_param:
            raise ParameterError(
                f"({self.x}, {self.y}) does not satisfy x^2 - {self.d_param}y^2 = {self.n_param}"
            )

    def as_row(self) -> dict:
        """CSV row with decimal-string values."""
        return {'x': str(self.x), 'y': str(self.y), 'd': str(self.d_param), 'n': str(self.n_param)}


class CompositionVariant(str, Enum):
    """Sum form (x1x2 + Dy1y2, x1y2 + y1x2) or difference form of the identity."""

    SUM = "sum"
    DIFFERENCE = "difference"


def check_supported(d_param: int, n_param: int) -> None:
    """
    Reject (D, N) pairs outside the supported equations.

    Args:
        d_param (int): D.
        n_param (int): N.

    Raises:
        UnsupportedParametersError: If (D, N) is not supported.
    """
    if (d_param, n_param) not in SUPPORTED_PARAMETERS:
        supported = ", ".join(f"({d}, {n})" for d, n in sorted(SUPPORTED_PARAMETERS))
        raise UnsupportedParametersError(
            f"(D, N) = ({d_param}, {n_param}) is not supported; supported pairs: {supported}"
        )


def fundamental_solution(d_param: int, n_param: int) -> PellSolution:
    """
    Least-x positive solution of x^2 - D*y^2 = N.

    Args:
        d_param (int): D, one of the supported values.
        n_param (int): N, one of the supported values for that D.

    Returns:
        PellSolution: The fundamental solution.

    Raises:
        UnsupportedParametersError: If (D, N) is not supported.
    """
    check_supported(d_param, n_param)
    # For fixed N and D > 0, x grows with y, so the least y gives the least x.
    for y in range(1, _FUNDAMENTAL_SCAN_BOUND):
        x = exact_sqrt(d_param * y * y + n_param)
        if x:
            return PellSolution(x, y, d_param, n_param)
    raise RuntimeError(f"no fundamental solution found for D={d_param}, N={n_param}")


def compose(s: PellSolution, u: PellSolution,
            variant: CompositionVariant = CompositionVariant.SUM) -> PellSolution:
    """
    Combine two solutions sharing D into a solution for N = N_s * N_u.

    The sum form is (x_s*x_u + D*y_s*y_u, x_s*y_u + y_s*x_u); the difference form is
    (x_s*x_u - D*y_s*y_u, x_s*y_u - y_s*x_u), returned with absolute values.

    Raises:
        ParameterError: If the D parameters differ, or the difference form degenerates
            to a zero component.
    """
    if s.d_param != u.d_param:
        raise ParameterError(f"cannot compose solutions with D={s.d_param} and D={u.d_param}")
    d_param = s.d_param
    if CompositionVariant(variant) is CompositionVariant.SUM:
        x = s.x * u.x + d_param * s.y * u.y
        y = s.x * u.y + s.y * u.x
    else:
        x = abs(s.x * u.x - d_param * s.y * u.y)
        y = abs(s.x * u.y - s.y * u.x)
        if x == 0 or y == 0:
            raise ParameterError(
                f"difference composition of ({s.x}, {s.y}) and ({u.x}, {u.y}) is degenerate"
            )
    return PellSolution(x, y, d_param, s.n_param * u.n_param)


def iter_solutions(d_param: int, n_param: int) -> Iterator[PellSolution]:
    """Lazy, unbounded stream of solutions in strictly increasing x."""
    current = fundamental_solution(d_param, n_param)
    unit = fundamental_solution(d_param, 1)
    while True:
        yield current
        current = compose(current, unit)


def generate(d_param: int, n_param: int, count: int) -> List[PellSolution]:
    """
    First ``count`` solutions of x^2 - D*y^2 = N in increasing x.

    Args:
        d_param (int): D.
        n_param (int): N.
        count (int): Number of solutions, at least 1.

    Returns:
        list: PellSolution objects.
    """
    check_supported(d_param, n_param)
    if count < 1:
        raise DomainError(f"count must be at least 1, got {count}")
    solutions = list(islice(iter_solutions(d_param, n_param), count))
    logger.debug(f"Generated {len(solutions)} solutions of x^2 - {d_param}y^2 = {n_param}")
    return solutions


def brute_force_solutions(d_param: int, n_param: int, x_limit: int) -> List[Tuple[int, int]]:
    """
    Every positive (x, y) with x <= x_limit, found by scanning y.

    Independent of the composition law; used to cross-check the streams.
    """
    if x_limit < 1:
        return []
    y_limit = isqrt(max(x_limit * x_limit - n_param, 0) // d_param)
    found = []
    for y in range(1, y_limit + 1):
        x = exact_sqrt(d_param * y * y + n_param)
        if x and x <= x_limit:
            found.append((x, y))
    return found
