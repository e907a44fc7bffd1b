"""
Searches behind the n-gon classification for k = 3 and k = 4.

Coordinates are anchored with the length-k segment P K starting at the origin; "radius R"
means max(|x|, |y|) <= R for every vertex.

Apex placements of a family member b (segment P = (0, 0), K = (k, 0)):

    near K:  (k + b, +-h)      near P:  (-b, +-h)

Two apexes b, d relate in one of four arrangements:

    SAME_SIDE      opposite ends, same half-plane     c^2 = (b+d+k)^2 + (h_b - h_d)^2
    OPPOSITE_SIDE  same end, opposite half-planes     c^2 = (d-b)^2   + (h_b + h_d)^2
    NESTED         same end, same half-plane          c^2 = (d-b)^2   + (h_b - h_d)^2
    CROSSED        opposite ends, opposite half-planes c^2 = (b+d+k)^2 + (h_b + h_d)^2
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.exactmath import exact_sqrt, format_integer
from src.exceptions import AdmissibilityError, DomainError
from src.families import admissible_b_values, check_family, is_admissible, member
from src.geometry import (
    ORIGIN,
    ConfigurationMode,
    LatticePoint,
    canonical_form,
    certify,
    collinear,
    lattice_vectors_of_length,
    squared_distance,
)

logger = logging.getLogger(__name__)

Polygon = Tuple[LatticePoint, ...]


class Arrangement(str, Enum):
    """Relative placement of two family apexes over the same segment."""

    SAME_SIDE = "same_side"
    OPPOSITE_SIDE = "opposite_side"
    NESTED = "nested"
    CROSSED = "crossed"


@dataclass(frozen=True)
class ApexPairQuery:
    """Two admissible apexes b, d of the k-family in a given arrangement."""

    k: int
    arrangement: Arrangement
    b: int
    d: int

    def __post_init__(self):
        check_family(self.k)
        for name, value in (('b', self.b), ('d', self.d)):
            if not is_admissible(self.k, value):
                raise AdmissibilityError(f"{name}={value} is not admissible for k={self.k}")
        object.__setattr__(self, 'arrangement', Arrangement(self.arrangement))


@dataclass
class SearchReport:
    """Outcome of a search: witnesses in canonical form plus scan bookkeeping."""

    kind: str
    parameters: Dict[str, object]
    witnesses: List[Polygon] = field(default_factory=list)
    hits: List[Dict[str, object]] = field(default_factory=list)
    mirror_hits: List[Dict[str, object]] = field(default_factory=list)
    scanned: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        """
        Render the report for JSON output.

        Returns:
            dict: Parameters, witnesses, hits and scan counts with integers as decimal strings.
        """
        def render(value):
            if isinstance(value, bool) or value is None:
                return value
            if isinstance(value, int):
                return format_integer(value)
            if isinstance(value, Enum):
                return value.value
            return value

        return {
            'kind': self.kind,
            'parameters': {key: render(value) for key, value in self.parameters.items()},
            'witnesses': [
                [[format_integer(p.x), format_integer(p.y)] for p in polygon]
                for polygon in self.witnesses
            ],
            'hits': [{key: render(value) for key, value in hit.items()} for hit in self.hits],
            'mirror_hits': [{key: render(value) for key, value in hit.items()} for hit in self.mirror_hits],
            'scanned': {key: format_integer(value) for key, value in self.scanned.items()},
        }

    def witness_rows(self) -> List[Dict[str, str]]:
        """One flat row per witness (vertex columns x0, y0, x1, y1, ...)."""
        rows = []
        for index, polygon in enumerate(self.witnesses):
            row = {'witness': str(index)}
            for i, p in enumerate(polygon):
                row[f'x{i}'] = str(p.x)
                row[f'y{i}'] = str(p.y)
            rows.append(row)
        return rows


def apex_point(k: int, b: int, near_k: bool, side: int) -> LatticePoint:
    """Lattice position of the b-apex over the end K (near_k) or P, on ``side``."""
    h = member(k, b).h
    x = k + b if near_k else -b
    return LatticePoint(x, side * h)


def apex_placements(k: int, b: int) -> List[LatticePoint]:
    """The four mirror placements of the b-apex."""
    return [apex_point(k, b, near_k, side) for near_k in (True, False) for side in (1, -1)]


def apex_pair_squared_distance(query: ApexPairQuery) -> int:
    """Exact c^2 for the query's arrangement (both heights are integers)."""
    k, b, d = query.k, query.b, query.d
    h_b = member(k, b).h
    h_d = member(k, d).h
    if query.arrangement is Arrangement.SAME_SIDE:
        dx, dy = b + d + k, h_b - h_d
    elif query.arrangement is Arrangement.OPPOSITE_SIDE:
        dx, dy = d - b, h_b + h_d
    elif query.arrangement is Arrangement.NESTED:
        dx, dy = d - b, h_b - h_d
    else:
        dx, dy = b + d + k, h_b + h_d
    return dx * dx + dy * dy


def apex_pair_distance(query: ApexPairQuery) -> Optional[int]:
    """
    Distance between the two apexes when it is a natural number.

    Args:
        query (ApexPairQuery): The apex pair.

    Returns:
        int | None: c with c^2 equal to the governing right-hand side, or None.
    """
    return exact_sqrt(apex_pair_squared_distance(query))


def _nested_parity_holds(k: int, b: int, d: int, h_b: int, h_d: int) -> bool:
    """
    Parity facts behind the nested elimination: an odd left side against an even right side.

    k=3: 8(d-b)^2 + 6(d-b) + 1 versus (h_d - h_b)^2;
    k=4: 2(3db + 4d + 8b + 8) + 1 versus 6*sqrt((b+1)(b+3)(d+1)(d+3)) = 2*h_b*h_d.
    """
    if k == 3:
        lhs = 8 * (d - b) ** 2 + 6 * (d - b) + 1
        rhs = (h_d - h_b) ** 2
    else:
        lhs = 2 * (3 * d * b + 4 * d + 8 * b + 8) + 1
        rhs = 2 * h_b * h_d
    return lhs % 2 == 1 and rhs % 2 == 0


def scan_apex_pairs(k: int, b_limit: int) -> SearchReport:
    """
    Evaluate every admissible pair b <= d <= b_limit in every arrangement.

    Distinct pairs with a natural distance go to ``hits``; equal pairs go to
    ``mirror_hits``, and nondegenerate mirror configurations become witnesses.

    Args:
        k (int): 3 or 4.
        b_limit (int): Upper bound on b and d, at least 1.

    Returns:
        SearchReport: hits, mirror hits, witnesses and pair counts.
    """
    check_family(k)
    if b_limit < 1:
        raise DomainError(f"b_limit must be at least 1, got {b_limit}")
    started = time.perf_counter()
    values = admissible_b_values(k, b_limit)
    heights = {b: member(k, b).h for b in values}
    logger.info(f"Scanning apex pairs for k={k} over {len(values)} admissible b <= {b_limit}")

    report = SearchReport(kind='pairs', parameters={'k': k, 'limit': b_limit})
    pairs = parity_checks = parity_violations = 0
    witnesses = set()

    for i, b in enumerate(values):
        for d in values[i:]:
            pairs += 1
            if b != d:
                parity_checks += 1
                if not _nested_parity_holds(k, b, d, heights[b], heights[d]):
                    parity_violations += 1
                    logger.error(f"Parity re-derivation failed for k={k}, b={b}, d={d}")
            for arrangement in Arrangement:
                if b == d and arrangement is Arrangement.NESTED:
                    continue
                query = ApexPairQuery(k, arrangement, b, d)
                c = apex_pair_distance(query)
                if c is None:
                    continue
                hit = {'arrangement': arrangement, 'b': b, 'd': d, 'c': c}
                if b != d:
                    logger.warning(f"Integral apex distance for distinct pair: {hit}")
                    report.hits.append(hit)
                    continue
                configuration = _mirror_configuration(k, b, arrangement)
                degenerate = not certify(configuration, k, mode=ConfigurationMode.SET).is_bidiophantine
                hit['degenerate'] = degenerate
                report.mirror_hits.append(hit)
                if not degenerate:
                    witnesses.add(canonical_form(configuration))

    report.witnesses = sorted(witnesses)
    report.scanned = {
        'admissible_values': len(values),
        'pairs': pairs,
        'parity_checks': parity_checks,
        'parity_violations': parity_violations,
    }
    report.elapsed = time.perf_counter() - started
    logger.info(
        f"Apex pair scan k={k}: {len(report.hits)} distinct hits, "
        f"{len(report.mirror_hits)} mirror hits in {report.elapsed:.3f}s"
    )
    return report


def _mirror_configuration(k: int, b: int, arrangement: Arrangement) -> Polygon:
    """Segment endpoints plus the two b-apexes of an equal-parameter arrangement."""
    first = apex_point(k, b, near_k=True, side=1)
    if arrangement is Arrangement.SAME_SIDE:
        second = apex_point(k, b, near_k=False, side=1)
    elif arrangement is Arrangement.OPPOSITE_SIDE:
        second = apex_point(k, b, near_k=True, side=-1)
    else:
        second = apex_point(k, b, near_k=False, side=-1)
    return (ORIGIN, LatticePoint(k, 0), first, second)


def _integral_cliques(points: Sequence[LatticePoint], size: int) -> Iterator[Polygon]:
    """All ``size``-subsets of ``points`` whose pairwise distances are natural numbers."""
    n = len(points)
    adjacent = [set() for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if exact_sqrt(squared_distance(points[i], points[j])) is not None:
            adjacent[i].add(j)
            adjacent[j].add(i)

    def extend(clique, candidates):
        if len(clique) == size:
            yield tuple(points[i] for i in clique)
            return
        for index in sorted(candidates):
            narrowed = {c for c in candidates if c > index and c in adjacent[index]}
            yield from extend(clique + [index], narrowed)

    yield from extend([], set(range(n)))


def _has_collinear_triple(points: Sequence[LatticePoint]) -> bool:
    return any(collinear(p, q, r) for p, q, r in combinations(points, 3))


def _assemble(segment_end: LatticePoint, candidates: Sequence[LatticePoint], n: int,
              k: int) -> Tuple[set, int]:
    """Canonical n-point configurations from the segment plus n-2 candidates."""
    found = set()
    cliques = 0
    for clique in _integral_cliques(candidates, n - 2):
        cliques += 1
        configuration = (ORIGIN, segment_end) + clique
        if _has_collinear_triple(configuration):
            continue
        if not certify(configuration, k, mode=ConfigurationMode.SET).is_bidiophantine:
            raise RuntimeError(f"assembled configuration failed certification: {configuration}")
        found.add(canonical_form(configuration))
    return found, cliques


def extend_to_ngon(k: int, n: int, b_limit: int) -> SearchReport:
    """
    Bidiophantine n-point configurations containing the length-k segment.

    Every further vertex must be a family apex, so the candidates are the four placements
    of each admissible b <= b_limit; configurations are cliques of the integral-distance
    graph on them with no collinear triple.

    Args:
        k (int): 3 or 4.
        n (int): Number of vertices, at least 4.
        b_limit (int): Bound on the family parameter.

    Returns:
        SearchReport: Witnesses in canonical form.
    """
    check_family(k)
    if n < 4:
        raise DomainError(f"n must be at least 4, got {n}")
    if b_limit < 0:
        raise DomainError(f"b_limit must be non-negative, got {b_limit}")
    started = time.perf_counter()
    values = admissible_b_values(k, b_limit)
    candidates = sorted({p for b in values for p in apex_placements(k, b)})
    logger.info(f"Assembling {n}-gons for k={k} from {len(candidates)} apex placements")

    found, cliques = _assemble(LatticePoint(k, 0), candidates, n, k)

    report = SearchReport(kind='ngon', parameters={'k': k, 'n': n, 'limit': b_limit})
    report.witnesses = sorted(found)
    report.scanned = {
        'admissible_values': len(values),
        'candidates': len(candidates),
        'cliques': cliques,
    }
    report.elapsed = time.perf_counter() - started
    logger.info(f"Found {len(report.witnesses)} {n}-gon witness(es) for k={k} in {report.elapsed:.3f}s")
    return report


def _scan_stripe(k: int, radius: int, x_start: int, x_stop: int) -> Dict[LatticePoint, List[LatticePoint]]:
    """Third vertices Q with x in [x_start, x_stop) for every segment direction K."""
    vectors = lattice_vectors_of_length(k)
    found = {vector: [] for vector in vectors}
    for x in range(x_start, x_stop):
        for y in range(-radius, radius + 1):
            q = LatticePoint(x, y)
            if q == ORIGIN or exact_sqrt(x * x + y * y) is None:
                continue
            for vector in vectors:
                if q == vector or collinear(ORIGIN, vector, q):
                    continue
                if exact_sqrt(squared_distance(q, vector)) is not None:
                    found[vector].append(q)
    return found


def _collect_third_vertices(k: int, radius: int, jobs: int) -> Dict[LatticePoint, List[LatticePoint]]:
    """Run the stripe scan over [-radius, radius], in ``jobs`` processes when jobs > 1."""
    span = 2 * radius + 1
    jobs = max(1, min(jobs, span))
    bounds = [-radius + (span * i) // jobs for i in range(jobs + 1)]
    stripes = list(zip(bounds[:-1], bounds[1:]))
    if jobs == 1:
        parts = [_scan_stripe(k, radius, start, stop) for start, stop in stripes]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(_scan_stripe, k, radius, start, stop) for start, stop in stripes]
            parts = [future.result() for future in futures]
    merged: Dict[LatticePoint, List[LatticePoint]] = {}
    for part in parts:
        for vector, points in part.items():
            merged.setdefault(vector, []).extend(points)
    return merged


def _check_oracle_bounds(k: int, radius: int, jobs: int) -> None:
    if k < 1:
        raise DomainError(f"k must be a natural number, got {k}")
    if radius < k:
        raise DomainError(f"radius must be at least k={k}, got {radius}")
    if jobs < 1:
        raise DomainError(f"jobs must be at least 1, got {jobs}")


def brute_force_triangles(k: int, radius: int, jobs: int = 1) -> SearchReport:
    """
    Every bidiophantine lattice triangle with a side of length k inside the box.

    The segment starts at the origin and runs along every lattice vector of length k;
    the third vertex ranges over the whole box. Results are deduplicated by canonical
    form, so they do not depend on scan order or partitioning.

    Args:
        k (int): Side length.
        radius (int): Box half-width, at least k.
        jobs (int): Worker processes.

    Returns:
        SearchReport: Canonical triangles, sorted.
    """
    _check_oracle_bounds(k, radius, jobs)
    started = time.perf_counter()
    logger.info(f"Brute-force triangle scan: k={k}, radius={radius}, jobs={jobs}")
    third_vertices = _collect_third_vertices(k, radius, jobs)

    found = set()
    for vector, points in third_vertices.items():
        for q in points:
            found.add(canonical_form((ORIGIN, vector, q)))
    for triangle in found:
        if not certify(triangle, k, mode=ConfigurationMode.SET).is_bidiophantine:
            raise RuntimeError(f"oracle triangle failed certification: {triangle}")

    report = SearchReport(kind='triangles', parameters={'k': k, 'radius': radius})
    report.witnesses = sorted(found)
    box = (2 * radius + 1) ** 2
    report.scanned = {
        'segment_directions': len(third_vertices),
        'lattice_points': box,
        'candidates': box * len(third_vertices),
    }
    report.elapsed = time.perf_counter() - started
    logger.info(f"Found {len(report.witnesses)} triangle(s) for k={k} in {report.elapsed:.3f}s")
    return report


def brute_force_polygons(k: int, n: int, radius: int, jobs: int = 1) -> SearchReport:
    """
    Raw-lattice n-point oracle: assemble configurations from all third vertices in the box.

    Independent of the family analysis; used to validate extend_to_ngon at small radius.
    """
    _check_oracle_bounds(k, radius, jobs)
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    started = time.perf_counter()
    third_vertices = _collect_third_vertices(k, radius, jobs)

    found = set()
    cliques = 0
    for vector, points in third_vertices.items():
        part, count = _assemble(vector, sorted(points), n, k)
        found |= part
        cliques += count

    report = SearchReport(kind='polygons', parameters={'k': k, 'n': n, 'radius': radius})
    report.witnesses = sorted(found)
    report.scanned = {
        'segment_directions': len(third_vertices),
        'candidates': sum(len(points) for points in third_vertices.values()),
        'cliques': cliques,
    }
    report.elapsed = time.perf_counter() - started
    logger.info(f"Raw oracle found {len(report.witnesses)} {n}-point configuration(s) for k={k}")
    return report
