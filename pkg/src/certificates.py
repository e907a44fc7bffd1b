"""
Impossibility certificates: parity and factorization contradictions from the case
analysis, each paired with a bounded exhaustive scan, plus the k = 1, 2 nonexistence
scans.

A certificate is a finite check with a recorded reason, never a proof.
"""
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.exactmath import exact_sqrt, format_integer
from src.exceptions import DomainError, UnknownCaseError
from src.families import admissible_b_values, brute_force_admissible_b
from src.search import brute_force_triangles

logger = logging.getLogger(__name__)


class ParityCase(str, Enum):
    """Identifiers of the parity-contradiction cases, one per impossibility argument."""

    L3 = "L3"
    K2 = "K2"
    K3_II = "K3_II"
    K3_III_contr = "K3_III_contr"
    K4_II = "K4_II"
    K4_IV = "K4_IV"
    EQ16 = "EQ16"
    EQ16i = "EQ16i"
    K3_13_odd = "K3_13_odd"


@dataclass(frozen=True)
class ParityCaseSpec:
    """Registry entry: what the case says, why it has no solution, and how to scan it."""

    case: ParityCase
    description: str
    system: str
    reason: str
    scan: Callable[[int], Iterator[Tuple[Tuple[int, ...], bool]]]


@dataclass(frozen=True)
class ImpossibilityCertificate:
    """Zero-witness record of a bounded scan."""

    subject: str
    verified_range: int
    witness_count: int
    scanned: int
    reason: str
    case: Optional[ParityCase] = None
    system: str = ""
    witnesses: Tuple[Tuple[int, ...], ...] = field(default=())

    @property
    def holds(self) -> bool:
        """True when the scan found no witness."""
        return self.witness_count == 0

    def to_dict(self) -> dict:
        """JSON rendering; counts and witnesses as decimal strings."""
        return {
            'subject': self.subject,
            'case': None if self.case is None else self.case.value,
            'verified_range': format_integer(self.verified_range),
            'scanned': format_integer(self.scanned),
            'witness_count': format_integer(self.witness_count),
            'witnesses': [[format_integer(v) for v in w] for w in self.witnesses],
            'reason': self.reason,
            'system': self.system,
        }


def _pythagorean_system_solution(a_numerator: int, a_denominator: int, b: int) -> bool:
    """True if a = a_numerator / a_denominator is a natural number with a^2 - b^2 a positive square."""
    if a_numerator % a_denominator:
        return False
    a = a_numerator // a_denominator
    if a <= b:
        return False
    return exact_sqrt(a * a - b * b) is not None


def _scan_unit_factorization(limit):
    # 4m^2 - q^2 = 1 has a natural q iff 4m^2 - 1 is a positive square.
    for m in range(1, limit + 1):
        q = exact_sqrt(4 * m * m - 1)
        yield (m,), q is not None and q > 0


def _scan_linear(numerator_of_b: Callable[[int], int], denominator: int):
    def scan(limit):
        for b in range(1, limit + 1):
            yield (b,), _pythagorean_system_solution(numerator_of_b(b), denominator, b)
    return scan


def _scan_case_two_family(limit):
    # Leg difference 1 forces a = 3b + 4; a witness is a solution the Pell streams do not produce.
    produced = set(admissible_b_values(3, limit))
    for b in range(0, limit + 1):
        a = 3 * b + 4
        solves = exact_sqrt(a * a - b * b) is not None
        yield (b,), solves and b not in produced


def _scan_family_pairs(lhs: Callable[[int, int], int]):
    def scan(limit):
        values = brute_force_admissible_b(4, limit)
        for i, b in enumerate(values):
            for d in values[i:]:
                # sqrt((b+1)(b+3)(d+1)(d+3)) = h_b * h_d / 3 for admissible b, d.
                radical_squared = (b + 1) * (b + 3) * (d + 1) * (d + 3)
                root = exact_sqrt(radical_squared)
                yield (b, d), root is not None and lhs(b, d) == 6 * root
    return scan


def _scan_boundary_linear(limit):
    for b in range(0, limit + 1):
        root = exact_sqrt(2 * b * b + 6 * b + 4)
        hit = root is not None and 16 * root in (18 * b + 37, 6 * b + 25)
        yield (b,), hit


PARITY_CASES: Dict[ParityCase, ParityCaseSpec] = {
    spec.case: spec for spec in (
        ParityCaseSpec(
            ParityCase.L3,
            "Two points on the perpendicular bisector of a unit segment: (2m - q)(2m + q) = 1",
            "4m^2 = 1 + q^2, m, q natural",
            "product of two naturals ≥ 2 cannot equal 1 unless 2m−q = 2m+q = 1, forcing q = 0",
            _scan_unit_factorization,
        ),
        ParityCaseSpec(
            ParityCase.K2,
            "k=2, leg difference 1: 2a + 1 = 4b + 4",
            "a^2 = b^2 + h^2, (a+1)^2 = (b+2)^2 + h^2",
            "LHS odd, RHS even",
            _scan_linear(lambda b: 4 * b + 3, 2),
        ),
        ParityCaseSpec(
            ParityCase.K3_II,
            "k=3, leg difference 1: 2a + 1 = 6b + 9 feeding h^2 = 8(b+1)(b+2)",
            "a^2 = b^2 + h^2, (a+1)^2 = (b+3)^2 + h^2",
            "2a + 1 = 6b + 9 forces a = 3b + 4; every remaining solution is produced by the "
            "Pell streams n^2 - 2m^2 = -1 (b even) and n^2 - 2m^2 = 1 (b odd)",
            _scan_case_two_family,
        ),
        ParityCaseSpec(
            ParityCase.K3_III_contr,
            "k=3, leg difference 2: 2(2a - 3b - 4) = 1",
            "a^2 = b^2 + h^2, (a+2)^2 = (b+3)^2 + h^2",
            "LHS even, RHS odd",
            _scan_linear(lambda b: 6 * b + 9, 4),
        ),
        ParityCaseSpec(
            ParityCase.K4_II,
            "k=4, leg difference 1: 2a + 1 = 8b + 16",
            "a^2 = b^2 + h^2, (a+1)^2 = (b+4)^2 + h^2",
            "LHS odd, RHS even",
            _scan_linear(lambda b: 8 * b + 15, 2),
        ),
        ParityCaseSpec(
            ParityCase.K4_IV,
            "k=4, leg difference 3: 6a + 9 = 8b + 16",
            "a^2 = b^2 + h^2, (a+3)^2 = (b+4)^2 + h^2",
            "LHS odd, RHS even",
            _scan_linear(lambda b: 8 * b + 7, 6),
        ),
        ParityCaseSpec(
            ParityCase.EQ16,
            "k=4 nested apexes: 2(3db + 4d + 8b + 8) + 1 = 6 sqrt((b+1)(b+3)(d+1)(d+3))",
            "(2(d-b)+1)^2 = (d-b)^2 + (h_d - h_b)^2",
            "2(3db+4d+8b+8)+1 is odd; 6·(integer) is even",
            _scan_family_pairs(lambda b, d: 2 * (3 * d * b + 4 * d + 8 * b + 8) + 1),
        ),
        ParityCaseSpec(
            ParityCase.EQ16i,
            "k=4 crossed apexes: 6bd + 8(b + d) + 15 = 6 sqrt((b+1)(b+3)(d+1)(d+3))",
            "(2b+2d+7)^2 = (b+d+4)^2 + (h_b + h_d)^2",
            "6bd+8(b+d)+15 is odd; 6·(integer) is even",
            _scan_family_pairs(lambda b, d: 6 * b * d + 8 * (b + d) + 15),
        ),
        ParityCaseSpec(
            ParityCase.K3_13_odd,
            "k=3, d=0 boundary: 16 sqrt(2b^2 + 6b + 4) = 18b + 37 or 6b + 25",
            "c^2 = (b+3)^2 + (h_b - 4)^2 with c = 3b+2 or c = 3b+4",
            "LHS even whenever natural, RHS odd",
            _scan_boundary_linear,
        ),
    )
}


def verify_parity_case(case_id, range_limit: int) -> ImpossibilityCertificate:
    """
    Scan a parity case's free variables up to ``range_limit``.

    Args:
        case_id (ParityCase | str): Case identifier, e.g. "K2".
        range_limit (int): Bound on each free variable, at least 1.

    Returns:
        ImpossibilityCertificate: Witness count (expected 0) and the recorded reason.

    Raises:
        UnknownCaseError: If no case has that identifier.
    """
    try:
        case = ParityCase(case_id)
    except ValueError:
        known = ", ".join(c.value for c in ParityCase)
        raise UnknownCaseError(f"unknown parity case {case_id!r}; known cases: {known}") from None
    if range_limit < 1:
        raise DomainError(f"range_limit must be at least 1, got {range_limit}")

    spec = PARITY_CASES[case]
    started = time.perf_counter()
    scanned = 0
    witnesses: List[Tuple[int, ...]] = []
    for values, is_witness in spec.scan(range_limit):
        scanned += 1
        if is_witness:
            witnesses.append(values)
    elapsed = time.perf_counter() - started

    if witnesses:
        logger.error(f"Parity case {case.value} has {len(witnesses)} witness(es): {witnesses[:5]}")
    else:
        logger.info(f"Parity case {case.value}: 0 witnesses over {scanned} values ({elapsed:.3f}s)")
    return ImpossibilityCertificate(
        subject=spec.description,
        verified_range=range_limit,
        witness_count=len(witnesses),
        scanned=scanned,
        reason=spec.reason,
        case=case,
        system=spec.system,
        witnesses=tuple(witnesses[:10]),
    )


def nonexistence_k12(k: int, radius: int) -> ImpossibilityCertificate:
    """
    Certify that no bidiophantine triangle in the box has a side of length k in {1, 2}.

    Args:
        k (int): 1 or 2.
        radius (int): Box half-width, at least k + 1.

    Returns:
        ImpossibilityCertificate: Zero witnesses expected.
    """
    if k not in (1, 2):
        raise DomainError(f"nonexistence is certified for k in (1, 2), got k={k}")
    if radius < k + 1:
        raise DomainError(f"radius must be at least {k + 1}, got {radius}")
    report = brute_force_triangles(k, radius)
    reasons = {
        1: "a triangle with a unit side is isosceles, so its apex lies on x = 1/2",
        2: "no Pythagorean triple has hypotenuse 2, so the segment is axis-parallel; "
           "leg difference 0 or 1 then has no lattice apex",
    }
    return ImpossibilityCertificate(
        subject=f"bidiophantine n-gon with a side or diagonal of length {k}",
        verified_range=radius,
        witness_count=len(report.witnesses),
        scanned=report.scanned['candidates'],
        reason=reasons[k],
        system=f"|PQ| = {k}, |PR|, |QR| natural, P, Q, R lattice points",
        witnesses=tuple(
            tuple(coordinate for p in triangle for coordinate in p.as_tuple())
            for triangle in report.witnesses[:10]
        ),
    )


def isosceles_violations(limit: int) -> List[Tuple[int, int]]:
    """
    Pairs (u, v), u, v <= limit, forming a triangle with a unit side but u != v.

    Strict triangle inequalities with w = 1 read |u - v| < 1 < u + v. Vectorised one
    row of u at a time.
    """
    if limit < 1:
        raise DomainError(f"limit must be at least 1, got {limit}")
    v = np.arange(1, limit + 1, dtype=np.int64)
    violations = []
    for u in range(1, limit + 1):
        triangle = (u < v + 1) & (v < u + 1) & (u + v > 1)
        offenders = v[triangle & (v != u)]
        violations.extend((u, int(x)) for x in offenders)
    return violations

