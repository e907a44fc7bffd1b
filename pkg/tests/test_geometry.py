import pytest
from sympy.solvers.diophantine.diophantine import sum_of_squares

from src.exceptions import ArityError, DistinctPointsError, DomainError, NotSimplePolygonError
from src.geometry import (
    ORIGIN,
    SYMMETRIES,
    ConfigurationMode,
    LatticePoint,
    PointConfiguration,
    apply_symmetry,
    canonical_form,
    certify,
    collinear,
    hypotenuse_decompositions,
    is_convex,
    is_simple_polygon,
    lattice_vectors_of_length,
    squared_distance,
)


def test_rectangle_certifies(rectangle_3x4):
    report = certify(rectangle_3x4, k=3)
    assert report.is_diophantine
    assert report.is_bidiophantine
    assert report.pairs_with_length == ((0, 1), (2, 3))
    assert report.distances() == [3, 5, 4, 4, 5, 3]
    assert report.is_convex is True


def test_unit_square_is_not_diophantine():
    report = certify([(0, 0), (1, 0), (1, 1), (0, 1)], k=1)
    assert not report.is_diophantine
    assert report.integer_distances[0][2] is None
    assert len(report.pairs_with_length) == 4


def test_collinear_points_are_not_bidiophantine():
    report = certify([(0, 0), (3, 0), (6, 0)], k=3)
    assert report.is_diophantine
    assert report.collinear_triples == ((0, 1, 2),)
    assert not report.is_bidiophantine
    assert report.is_convex is None


def test_set_mode_skips_convexity(rectangle_3x4):
    report = certify(rectangle_3x4, mode=ConfigurationMode.SET)
    assert report.is_convex is None
    assert report.mode is ConfigurationMode.SET


def test_certify_errors():
    with pytest.raises(ArityError):
        certify([(0, 0), (3, 0)])
    with pytest.raises(DistinctPointsError):
        certify([(0, 0), (3, 0), (0, 0)])
    with pytest.raises(DomainError):
        certify([(0, 0), (3, 0), (0, 4)], k=0)
    with pytest.raises(DomainError):
        certify([(0, 0), (3, 0), (0.5, 4)])


def test_configuration_needs_two_points():
    with pytest.raises(ArityError):
        PointConfiguration.from_points([(1, 1)])
    config = PointConfiguration.from_points([(0, 0), (3, 4)])
    assert config.squared_distances[0][1] == 25


def test_report_serializes_numbers_as_strings(rectangle_3x4):
    data = certify(rectangle_3x4, k=3).to_dict()
    assert data['vertices'][2] == ["3", "4"]
    assert data['k'] == "3"
    assert data['integer_distances'][0][2] == "5"
    assert data['mode'] == "polygon"


def test_predicates():
    assert squared_distance(LatticePoint(1, 2), LatticePoint(4, 6)) == 25
    assert collinear(LatticePoint(0, 0), LatticePoint(2, 1), LatticePoint(-4, -2))
    assert not collinear(LatticePoint(0, 0), LatticePoint(2, 1), LatticePoint(4, 3))


def test_simple_polygon_and_convexity(rectangle_3x4):
    bow_tie = [(0, 0), (2, 2), (2, 0), (0, 2)]
    assert is_simple_polygon(rectangle_3x4)
    assert not is_simple_polygon(bow_tie)
    assert not is_simple_polygon([(0, 0), (2, 0), (1, 0)])
    with pytest.raises(NotSimplePolygonError):
        is_convex(bow_tie)
    assert is_convex(rectangle_3x4)
    assert not is_convex([(0, 0), (4, 0), (1, 1), (0, 4)])
    # a straight angle is not strictly convex
    assert not is_convex([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])


def test_hypotenuse_decompositions():
    for k in (1, 2, 3, 4):
        assert hypotenuse_decompositions(k) == []
    assert hypotenuse_decompositions(5) == [(3, 4)]
    assert hypotenuse_decompositions(25) == [(7, 24), (15, 20)]
    with pytest.raises(DomainError):
        hypotenuse_decompositions(0)


@pytest.mark.parametrize("k", range(1, 80))
def test_hypotenuse_decompositions_match_sympy(k):
    assert hypotenuse_decompositions(k) == sorted(sum_of_squares(k * k, 2))


def test_lattice_vectors_of_length():
    assert lattice_vectors_of_length(3) == sorted(
        [LatticePoint(3, 0), LatticePoint(-3, 0), LatticePoint(0, 3), LatticePoint(0, -3)]
    )
    vectors = lattice_vectors_of_length(5)
    assert len(vectors) == 12
    assert all(squared_distance(ORIGIN, v) == 25 for v in vectors)


def test_canonical_form_is_congruence_invariant():
    triangle = [LatticePoint(0, 0), LatticePoint(3, 0), LatticePoint(10, 24)]
    expected = canonical_form(triangle)
    assert expected[0] == ORIGIN
    shift = LatticePoint(7, -2)
    for matrix in SYMMETRIES:
        moved = [apply_symmetry(p, matrix) + shift for p in reversed(triangle)]
        assert canonical_form(moved) == expected


def test_canonical_form_separates_non_congruent():
    assert canonical_form([(0, 0), (3, 0), (3, 4)]) != canonical_form([(0, 0), (3, 0), (0, 5)])


ARROWHEAD = [(0, 0), (10, 24), (3, 0), (10, -24)]


def test_arrowhead_is_not_convex():
    assert is_simple_polygon(ARROWHEAD)
    assert not is_convex(ARROWHEAD)
    report = certify(ARROWHEAD, k=3)
    assert report.is_bidiophantine
    assert report.is_convex is False
    assert report.distances() == [26, 3, 26, 25, 48, 25]


@pytest.mark.parametrize("polygon", [
    [(0, 0), (3, 0), (3, 4), (0, 4)],
    ARROWHEAD,
    [(0, 0), (3, 0), (6, 0)],
])
def test_certify_is_congruence_invariant(polygon):
    expected = certify(polygon, k=3)
    shift = LatticePoint(-11, 5)
    for matrix in SYMMETRIES:
        moved = [apply_symmetry(LatticePoint(*p), matrix) + shift for p in polygon]
        report = certify(moved, k=3)
        assert report.integer_distances == expected.integer_distances
        assert report.pairs_with_length == expected.pairs_with_length
        assert report.is_convex == expected.is_convex
        assert report.collinear_triples == expected.collinear_triples
        assert report.is_diophantine == expected.is_diophantine
