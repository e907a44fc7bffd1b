"""
Lattice geometry with exact integer predicates.

Points, configurations and their squared-distance matrices, the Diophantine certifier,
and the congruence canonical form used to deduplicate search witnesses.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from src.exactmath import exact_sqrt, format_integer
from src.exceptions import ArityError, DistinctPointsError, DomainError, NotSimplePolygonError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point with integer coordinates."""

    x: int
    y: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> Tuple[int, int]:
        """(x, y)."""
        return (self.x, self.y)


ORIGIN = LatticePoint(0, 0)

# The eight linear maps preserving the integer lattice and Euclidean distance,
# as (a, b, c, d) acting by (x, y) -> (a*x + b*y, c*x + d*y).
SYMMETRIES = (
    (1, 0, 0, 1),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (-1, 0, 0, -1),
    (0, 1, 1, 0),
    (0, -1, 1, 0),
    (0, 1, -1, 0),
    (0, -1, -1, 0),
)


class ConfigurationMode(str, Enum):
    """Whether the point order is a polygon boundary or irrelevant."""

    POLYGON = "polygon"
    SET = "set"


def as_lattice_point(value) -> LatticePoint:
    """Coerce a LatticePoint or an (x, y) pair of ints."""
    if isinstance(value, LatticePoint):
        return value
    x, y = value
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise DomainError(f"lattice coordinates must be integers, got {value!r}")
    return LatticePoint(x, y)


def apply_symmetry(point: LatticePoint, matrix: Tuple[int, int, int, int]) -> LatticePoint:
    """
    Map a point through one of the lattice symmetries.

    Args:
        point (LatticePoint): Point to move.
        matrix (tuple): (a, b, c, d) acting by (x, y) -> (a*x + b*y, c*x + d*y).

    Returns:
        LatticePoint: The image point.
    """
    a, b, c, d = matrix
    return LatticePoint(a * point.x + b * point.y, c * point.x + d * point.y)


def squared_distance(p: LatticePoint, q: LatticePoint) -> int:
    """Exact squared Euclidean distance between two lattice points."""
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    """Cross product (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def collinear(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> bool:
    """True iff the three points lie on one line."""
    return cross(p, q, r) == 0


@dataclass(frozen=True)
class PointConfiguration:
    """An ordered list of distinct lattice points with its squared-distance matrix."""

    points: Tuple[LatticePoint, ...]
    squared_distances: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_points(cls, points: Iterable) -> "PointConfiguration":
        """
        Build a configuration, validating arity and distinctness.

        Args:
            points (iterable): LatticePoints or (x, y) integer pairs.

        Returns:
            PointConfiguration: The immutable configuration.

        Raises:
            ArityError: Fewer than two points.
            DistinctPointsError: A point occurs twice.
        """
        pts = tuple(as_lattice_point(p) for p in points)
        if len(pts) < 2:
            raise ArityError(f"a configuration needs at least 2 points, got {len(pts)}")
        seen = set()
        for p in pts:
            if p in seen:
                raise DistinctPointsError(f"point ({p.x}, {p.y}) occurs more than once")
            seen.add(p)
        matrix = tuple(tuple(squared_distance(p, q) for q in pts) for p in pts)
        return cls(pts, matrix)

    def __len__(self) -> int:
        return len(self.points)

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """Index pairs (i, j) with i < j."""
        return combinations(range(len(self.points)), 2)


@dataclass(frozen=True)
class CertificationReport:
    """Full verdict on a configuration."""

    points: Tuple[LatticePoint, ...]
    mode: ConfigurationMode
    k: Optional[int]
    is_diophantine: bool
    integer_distances: Tuple[Tuple[Optional[int], ...], ...]
    pairs_with_length: Tuple[Tuple[int, int], ...]
    is_convex: Optional[bool]
    collinear_triples: Tuple[Tuple[int, int, int], ...] = field(default=())

    @property
    def is_bidiophantine(self) -> bool:
        """Diophantine with no collinear triple (every triangle nondegenerate)."""
        return self.is_diophantine and not self.collinear_triples

    def distances(self) -> List[Optional[int]]:
        """Pairwise distances in (i, j), i < j order; None where irrational."""
        n = len(self.points)
        return [self.integer_distances[i][j] for i, j in combinations(range(n), 2)]

    def to_dict(self) -> dict:
        """
        Render the report for JSON output.

        Returns:
            dict: Integers as decimal strings, irrational distances as None.
        """
        n = len(self.points)
        return {
            'mode': self.mode.value,
            'vertices': [[format_integer(p.x), format_integer(p.y)] for p in self.points],
            'k': None if self.k is None else format_integer(self.k),
            'is_diophantine': self.is_diophantine,
            'integer_distances': [
                [None if d is None else format_integer(d) for d in row]
                for row in self.integer_distances
            ],
            'pairs_with_length': [list(pair) for pair in self.pairs_with_length],
            'is_convex': self.is_convex,
            'collinear_triples': [list(t) for t in self.collinear_triples],
            'vertex_count': n,
        }


def certify(points: Sequence, k: Optional[int] = None,
            mode: ConfigurationMode = ConfigurationMode.POLYGON) -> CertificationReport:
    """
    Certify a polygon or point set.

    Args:
        points (sequence): At least three distinct lattice points.
        k (int, optional): Length whose realizing pairs should be listed.
        mode (ConfigurationMode): POLYGON also decides convexity in the given order;
            SET skips it.

    Returns:
        CertificationReport: The verdict.

    Raises:
        ArityError: Fewer than three points.
        DistinctPointsError: Duplicate points.
    """
    pts = [as_lattice_point(p) for p in points]
    if len(pts) < 3:
        raise ArityError(f"certify needs at least 3 points, got {len(pts)}")
    if k is not None and k < 1:
        raise DomainError(f"segment length must be a natural number, got {k}")
    config = PointConfiguration.from_points(pts)
    n = len(config)

    integer_distances = tuple(
        tuple(exact_sqrt(d2) for d2 in row) for row in config.squared_distances
    )
    is_diophantine = all(integer_distances[i][j] is not None for i, j in config.pairs())

    pairs_with_length: Tuple[Tuple[int, int], ...] = ()
    if k is not None:
        pairs_with_length = tuple(
            (i, j) for i, j in config.pairs() if integer_distances[i][j] == k
        )

    collinear_triples = tuple(
        (i, j, l) for i, j, l in combinations(range(n), 3)
        if collinear(config.points[i], config.points[j], config.points[l])
    )
    if collinear_triples:
        logger.debug(f"Configuration has {len(collinear_triples)} collinear triple(s)")

    convex = None
    if ConfigurationMode(mode) is ConfigurationMode.POLYGON:
        if is_simple_polygon(config.points):
            convex = is_convex(config.points)
        else:
            logger.warning("Vertices do not form a simple polygon; convexity left undefined")

    return CertificationReport(
        points=config.points,
        mode=ConfigurationMode(mode),
        k=k,
        is_diophantine=is_diophantine,
        integer_distances=integer_distances,
        pairs_with_length=pairs_with_length,
        is_convex=convex,
        collinear_triples=collinear_triples,
    )


def _on_segment(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> bool:
    """True if r, known to be collinear with p and q, lies on the closed segment pq."""
    return min(p.x, q.x) <= r.x <= max(p.x, q.x) and min(p.y, q.y) <= r.y <= max(p.y, q.y)


def segments_intersect(p1: LatticePoint, p2: LatticePoint,
                       p3: LatticePoint, p4: LatticePoint) -> bool:
    """Closed-segment intersection test."""
    d1 = cross(p3, p4, p1)
    d2 = cross(p3, p4, p2)
    d3 = cross(p1, p2, p3)
    d4 = cross(p1, p2, p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and _on_segment(p3, p4, p1):
        return True
    if d2 == 0 and _on_segment(p3, p4, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, p3):
        return True
    if d4 == 0 and _on_segment(p1, p2, p4):
        return True
    return False


def is_simple_polygon(points: Sequence) -> bool:
    """
    Decide whether the cyclic vertex order bounds a simple polygon.

    Adjacent edges may only share their common vertex (no backtracking onto each other);
    non-adjacent edges may not touch at all.
    """
    pts = [as_lattice_point(p) for p in points]
    n = len(pts)
    if n < 3 or len(set(pts)) != n:
        return False
    for i in range(n):
        prev_pt, here, next_pt = pts[i - 1], pts[i], pts[(i + 1) % n]
        if cross(here, prev_pt, next_pt) == 0:
            dot = (prev_pt.x - here.x) * (next_pt.x - here.x) + (prev_pt.y - here.y) * (next_pt.y - here.y)
            if dot > 0:
                return False
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]):
                return False
    return True


def is_convex(points: Sequence) -> bool:
    """
    Strict convexity of a simple polygon given in cyclic order.

    Args:
        points (sequence): Polygon vertices in order.

    Returns:
        bool: True iff every turn has the same nonzero orientation.

    Raises:
        NotSimplePolygonError: If the order does not describe a simple polygon.
    """
    pts = [as_lattice_point(p) for p in points]
    if not is_simple_polygon(pts):
        raise NotSimplePolygonError("vertices do not form a simple polygon in the given order")
    n = len(pts)
    turns = [cross(pts[i - 1], pts[i], pts[(i + 1) % n]) for i in range(n)]
    if any(t == 0 for t in turns):
        return False
    return all(t > 0 for t in turns) or all(t < 0 for t in turns)


def hypotenuse_decompositions(k: int) -> List[Tuple[int, int]]:
    """
    All (a, b) with 0 < a <= b and a^2 + b^2 = k^2, ascending.

    An empty list means every lattice segment of length k is axis-parallel.
    """
    if k < 1:
        raise DomainError(f"k must be a natural number, got {k}")
    target = k * k
    result = []
    a = 1
    while 2 * a * a <= target:
        b = exact_sqrt(target - a * a)
        if b is not None and b >= a:
            result.append((a, b))
        a += 1
    return result


def lattice_vectors_of_length(k: int) -> List[LatticePoint]:
    """Every lattice vector of Euclidean length k, sorted."""
    vectors = {LatticePoint(k, 0), LatticePoint(-k, 0), LatticePoint(0, k), LatticePoint(0, -k)}
    for a, b in hypotenuse_decompositions(k):
        for sx in (1, -1):
            for sy in (1, -1):
                vectors.add(LatticePoint(sx * a, sy * b))
                vectors.add(LatticePoint(sx * b, sy * a))
    return sorted(vectors)


def canonical_form(points: Iterable) -> Tuple[LatticePoint, ...]:
    """
    Congruence canonical form of a point set.

    Over the eight lattice symmetries, sort the images, translate the least one to the
    origin and keep the lexicographically least sequence.
    """
    pts = [as_lattice_point(p) for p in points]
    best = None
    for matrix in SYMMETRIES:
        moved = sorted(apply_symmetry(p, matrix) for p in pts)
        anchor = moved[0]
        candidate = tuple(p - anchor for p in moved)
        if best is None or candidate < best:
            best = candidate
    return best
