"""
Property checks: unit sides force isosceles triangles, apex cosines decrease, family
realizations certify, Pell streams agree with brute force, and no quadrilateral has a
side of length 1 or 2.
"""
import logging
from itertools import islice, takewhile
from typing import List

from src.certificates import isosceles_violations
from src.families import apex_cosines, iter_admissible_b, member, realize
from src.geometry import certify
from src.ledger.base import BaseCheck, LedgerEntry, verdict
from src.pell import SUPPORTED_PARAMETERS, brute_force_solutions, iter_solutions
from src.search import brute_force_polygons

logger = logging.getLogger(__name__)


class PropertiesCheck(BaseCheck):
    """Randomness-free property suite over bounded ranges."""

    def run(self) -> List[LedgerEntry]:
        """
        Run the checks in this group.

        Returns:
            list: LedgerEntry rows for the criterion 11 properties.
        """
        isosceles_limit = self.settings.get('isosceles_limit', 10000)
        members = self.settings.get('cosine_members', 6)
        x_limit = self.settings.get('pell_x_limit', 1000000)
        radius = self.settings.get('quadrilateral_radius', 25)

        self._record(11, f"Unit side forces isosceles, u, v <= {isosceles_limit}",
                     lambda: self._isosceles(isosceles_limit))
        self._record(11, f"Apex cosines decrease over the first {members} members",
                     lambda: self._cosines(members))
        self._record(11, "Family realizations certify", lambda: self._realizations(members))
        self._record(11, f"Pell streams match brute force to x <= {x_limit}",
                     lambda: self._pell_streams(x_limit))
        self._record(11, f"No quadrilateral with a side of length 1 or 2, radius {radius}",
                     lambda: self._quadrilaterals(radius))
        return self.entries

    def _isosceles(self, limit):
        violations = isosceles_violations(limit)
        return verdict(not violations, f"violations {violations[:5]}")

    def _cosines(self, members):
        for k in (3, 4):
            values = list(islice(iter_admissible_b(k), members))
            cosines = [apex_cosines(k, b) for b in values]
            for earlier, later in zip(cosines, cosines[1:]):
                if not (later.cos_at_far_vertex < earlier.cos_at_far_vertex
                        and later.cos_at_near_vertex < earlier.cos_at_near_vertex):
                    return verdict(False, f"k={k}: cosines not decreasing over {values}")
        return verdict(True, "strictly decreasing for k = 3, 4")

    def _realizations(self, members):
        for k in (3, 4):
            for b in islice(iter_admissible_b(k), members):
                m = member(k, b)
                for side in (1, -1):
                    report = certify(realize(m, side=side), k)
                    if not report.is_bidiophantine or sorted(d for d in report.distances()) != sorted(m.sides()):
                        return verdict(False, f"k={k}, b={b}, side={side} does not certify")
        return verdict(True, f"first {members} members per family, both sides")

    def _pell_streams(self, x_limit):
        for d_param, n_param in sorted(SUPPORTED_PARAMETERS):
            streamed = [
                (s.x, s.y) for s in takewhile(lambda s: s.x <= x_limit, iter_solutions(d_param, n_param))
            ]
            scanned = brute_force_solutions(d_param, n_param, x_limit)
            if streamed != scanned:
                return verdict(False, f"x^2 - {d_param}y^2 = {n_param}: stream {streamed} != scan {scanned}")
        return verdict(True, f"{len(SUPPORTED_PARAMETERS)} equations agree")

    def _quadrilaterals(self, radius):
        for k in (1, 2):
            report = brute_force_polygons(k, 4, radius, jobs=self.jobs)
            if report.witnesses:
                return verdict(False, f"k={k}: {len(report.witnesses)} quadrilateral(s)")
        return verdict(True, "none for k = 1, 2")
