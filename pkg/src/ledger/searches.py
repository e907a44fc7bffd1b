"""
Search checks: apex-pair emptiness, mirror quadrilaterals, the raw-lattice triangle
oracle against the families, and the n-gon classification.
"""
import logging
from typing import List

from src.families import admissible_b_values, member, realize
from src.geometry import ConfigurationMode, canonical_form, certify
from src.ledger.base import BaseCheck, LedgerEntry, verdict
from src.search import Arrangement, brute_force_triangles, extend_to_ngon, scan_apex_pairs

logger = logging.getLogger(__name__)

MIRROR_EXAMPLES = {3: (7, 48), 4: (5, 24)}


class SearchesCheck(BaseCheck):
    """Exhaustive searches behind the classification for k = 3, 4."""

    def run(self) -> List[LedgerEntry]:
        """
        Run the checks in this group.

        Returns:
            list: LedgerEntry rows for the apex-pair scans, the oracle cross-check and the n-gon classification.
        """
        pair_limit = self.settings.get('pair_limit', 1000000)
        radius = self.settings.get('oracle_radius', 60)
        empty_radius = self.settings.get('nonexistence_radius', 30)
        ngon_limit = self.settings.get('ngon_limit', 1000000)
        quad_limit = self.settings.get('quadrilateral_limit', 100)

        reports = {}

        def pairs(k):
            if k not in reports:
                reports[k] = scan_apex_pairs(k, pair_limit)
            return reports[k]

        self._record(4, f"No integral apex pair b != d up to {pair_limit}",
                     lambda: self._pair_emptiness(pairs), budget=1)
        self._record(5, "Mirror quadrilaterals b = d", lambda: self._mirror(pairs), budget=1)
        self._record(6, f"Triangle oracle, radius {radius}",
                     lambda: self._oracle(radius, empty_radius), budget=60)
        self._record(7, "n-gon classification",
                     lambda: self._classification(ngon_limit, quad_limit), budget=1)
        return self.entries

    def _pair_emptiness(self, pairs):
        details = []
        for k in (3, 4):
            report = pairs(k)
            if report.hits or report.scanned['parity_violations']:
                return verdict(False, f"k={k}: hits {report.hits}, "
                                      f"parity violations {report.scanned['parity_violations']}")
            details.append(f"k={k}: {report.scanned['pairs']} pairs")
        return verdict(True, "; ".join(details))

    def _mirror(self, pairs):
        for k, (b, c) in MIRROR_EXAMPLES.items():
            report = pairs(k)
            opposite = [hit for hit in report.mirror_hits if hit['arrangement'] is Arrangement.OPPOSITE_SIDE]
            admissible = admissible_b_values(k, report.parameters['limit'])
            if sorted(hit['b'] for hit in opposite) != admissible:
                return verdict(False, f"k={k}: opposite-side hits {opposite} do not cover {admissible}")
            example = [hit for hit in opposite if hit['b'] == b]
            if not example or example[0]['c'] != c or example[0]['degenerate']:
                return verdict(False, f"k={k}, b={b}: expected c={c}, got {example}")
            for witness in report.witnesses:
                if not certify(witness, k, mode=ConfigurationMode.SET).is_bidiophantine:
                    return verdict(False, f"k={k}: witness {witness} does not certify")
        return verdict(True, "k=3 b=7 -> c=48, k=4 b=5 -> c=24; every admissible b has a mirror hit")

    def _oracle(self, radius, empty_radius):
        expected = {3: [0, 7], 4: [0, 5, 24]}
        for k, b_values in expected.items():
            family = sorted(canonical_form(realize(member(k, b))) for b in b_values)
            found = brute_force_triangles(k, radius, jobs=self.jobs).witnesses
            if found != family:
                return verdict(False, f"k={k}: oracle found {len(found)} triangles, family gives {len(family)}")
        for k in (1, 2):
            found = brute_force_triangles(k, empty_radius, jobs=self.jobs).witnesses
            if found:
                return verdict(False, f"k={k}: {len(found)} triangles within radius {empty_radius}")
        return verdict(True, f"k=3 -> b in {expected[3]}, k=4 -> b in {expected[4]}, k=1, 2 empty")

    def _classification(self, ngon_limit, quad_limit):
        for k in (3, 4):
            pentagons = extend_to_ngon(k, 5, ngon_limit).witnesses
            if pentagons:
                return verdict(False, f"k={k}: {len(pentagons)} pentagon(s) found")
            quadrilaterals = extend_to_ngon(k, 4, quad_limit).witnesses
            if not quadrilaterals:
                return verdict(False, f"k={k}: no quadrilateral up to b={quad_limit}")
        return verdict(True, "no 5-point configuration; quadrilaterals exist for k = 3, 4")
