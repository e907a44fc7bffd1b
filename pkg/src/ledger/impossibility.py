"""
Impossibility checks: hypotenuse decompositions and the parity certificate suite.
"""
import logging
from collections import defaultdict
from typing import Dict, List, Tuple

from src.certificates import ParityCase, verify_parity_case
from src.exactmath import exact_sqrt
from src.geometry import hypotenuse_decompositions
from src.ledger.base import BaseCheck, LedgerEntry, verdict

logger = logging.getLogger(__name__)


def hypotenuse_table(limit: int) -> Dict[int, List[Tuple[int, int]]]:
    """Every (a, b), 0 < a <= b, with a^2 + b^2 = c^2 and c <= limit, grouped by c."""
    table = defaultdict(list)
    bound = limit * limit
    for a in range(1, limit + 1):
        for b in range(a, limit + 1):
            total = a * a + b * b
            if total > bound:
                break
            c = exact_sqrt(total)
            if c is not None:
                table[c].append((a, b))
    return table


class ImpossibilityCheck(BaseCheck):
    """Segments forced axis-parallel and the parity contradictions."""

    def run(self) -> List[LedgerEntry]:
        """
        Run the checks in this group.

        Returns:
            list: LedgerEntry rows for the hypotenuse decompositions and the parity certificates.
        """
        limit = self.settings.get('hypotenuse_limit', 1000)
        parity_limit = self.settings.get('parity_limit', 10000)

        self._record(8, f"Hypotenuse decompositions, k <= {limit}",
                     lambda: self._hypotenuses(limit), budget=5)
        self._record(9, f"Parity certificates to {parity_limit}",
                     lambda: self._parity(parity_limit))
        return self.entries

    def _hypotenuses(self, limit):
        for k in (1, 2, 3, 4):
            if hypotenuse_decompositions(k):
                return verdict(False, f"k={k} has a decomposition")
        if hypotenuse_decompositions(5) != [(3, 4)]:
            return verdict(False, f"k=5 gives {hypotenuse_decompositions(5)}")
        table = hypotenuse_table(limit)
        mismatched = [k for k in range(1, limit + 1) if hypotenuse_decompositions(k) != table.get(k, [])]
        return verdict(not mismatched, f"cross-checked k <= {limit}; mismatches {mismatched[:10]}")

    def _parity(self, parity_limit):
        failing = []
        for case in ParityCase:
            certificate = verify_parity_case(case, parity_limit)
            if not certificate.holds:
                failing.append(f"{case.value}: {certificate.witness_count}")
        return verdict(not failing, f"{len(ParityCase)} cases, failing {failing}")
