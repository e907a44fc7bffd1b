"""
Construction check: a triangle and a rectangle with a side of every length k >= 3.
"""
import logging
from typing import List

from src.constructors import rectangle_with_side, triangle_with_side
from src.geometry import certify
from src.ledger.base import BaseCheck, LedgerEntry, verdict

logger = logging.getLogger(__name__)


class ConstructionsCheck(BaseCheck):
    """Certify the constructed triangle and rectangles for every k up to max_k."""

    def run(self) -> List[LedgerEntry]:
        """
        Run the checks in this group.

        Returns:
            list: LedgerEntry rows for the triangle and rectangle constructions.
        """
        max_k = self.settings.get('max_k', 1000)
        self._record(10, f"Constructors for 3 <= k <= {max_k}", lambda: self._construct(max_k), budget=5)
        return self.entries

    def _construct(self, max_k):
        for k in range(3, max_k + 1):
            shapes = [triangle_with_side(k)] + rectangle_with_side(k)
            for shape in shapes:
                report = certify(shape, k)
                if not report.is_bidiophantine or not report.pairs_with_length:
                    return verdict(False, f"k={k}: {shape} does not certify")
        return verdict(True, f"{max_k - 2} triangles and rectangles certified")
