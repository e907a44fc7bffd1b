from fractions import Fraction
from itertools import islice

import pytest

from src.exceptions import AdmissibilityError, DomainError, ParameterError, UnsupportedParametersError
from src.families import (
    admissible_b_values,
    apex_cosines,
    brute_force_admissible_b,
    check_family,
    from_pell,
    height_squared,
    is_admissible,
    iter_admissible_b,
    member,
    realize,
)
from src.geometry import LatticePoint, certify
from src.pell import PellSolution, generate

K3_VALUES = [0, 7, 48, 287, 1680, 9799, 57120, 332927]
K3_HEIGHTS = [4, 24, 140, 816, 4756, 27720, 161564, 941664]
K4_VALUES = [0, 5, 24, 95, 360, 1349, 5040, 18815, 70224, 262085, 978120]
K4_HEIGHTS = [3, 12, 45, 168, 627, 2340, 8733, 32592, 121635, 453948, 1694157]


def test_k3_admissible_values_and_heights():
    assert admissible_b_values(3, 400000) == K3_VALUES
    assert [member(3, b).h for b in K3_VALUES] == K3_HEIGHTS


def test_k4_admissible_values_and_heights():
    assert admissible_b_values(4, 10**6) == K4_VALUES
    assert [member(4, b).h for b in K4_VALUES] == K4_HEIGHTS


@pytest.mark.parametrize("k", [3, 4])
def test_pell_mapping_matches_brute_force(k):
    assert admissible_b_values(k, 30000) == brute_force_admissible_b(k, 30000)


def test_k3_b_column_from_pell():
    b_values = [from_pell(3, s) for s in generate(2, -1, 6)]
    assert b_values == [0, 48, 1680, 57120, 1940448, 65918160]
    for b in b_values:
        assert member(3, b).h ** 2 == 8 * (b + 1) * (b + 2)


def test_k3_large_members_have_doubled_heights():
    # the tabulated 80782, 2744210, 93222358 are half the true heights
    assert [member(3, b).h for b in (57120, 1940448, 65918160)] == [161564, 5488420, 186444716]


@pytest.mark.parametrize("k, solution, b", [
    (3, PellSolution(7, 5, 2, -1), 48),
    (3, PellSolution(3, 2, 2, 1), 7),
    (3, PellSolution(17, 12, 2, 1), 287),
    (4, PellSolution(2, 1, 3, 1), 0),
    (4, PellSolution(7, 4, 3, 1), 5),
    (4, PellSolution(12, 7, 3, -3), 5),
    (4, PellSolution(45, 26, 3, -3), 24),
])
def test_from_pell(k, solution, b):
    assert from_pell(k, solution) == b


def test_from_pell_rejects_foreign_equation():
    with pytest.raises(ParameterError):
        from_pell(4, PellSolution(3, 2, 2, 1))
    with pytest.raises(ParameterError):
        from_pell(3, PellSolution(2, 1, 3, 1))


def test_stream_is_increasing_and_admissible():
    values = list(islice(iter_admissible_b(3), 20))
    assert values == sorted(set(values))
    assert all(is_admissible(3, b) for b in values)


def test_member_sides():
    m = member(3, 7)
    assert (m.h, m.side_short, m.side_long) == (24, 25, 26)
    assert m.sides() == (3, 25, 26)
    assert member(4, 5).sides() == (4, 13, 15)
    assert member(4, 5).as_row() == {'b': '5', 'h': '12', 'side_short': '13', 'side_long': '15'}


def test_member_rejects_inadmissible():
    with pytest.raises(AdmissibilityError, match="48"):
        member(3, 1)
    assert height_squared(3, 1) == 48


def test_unsupported_family():
    with pytest.raises(UnsupportedParametersError):
        check_family(5)
    with pytest.raises(UnsupportedParametersError):
        admissible_b_values(2, 100)


@pytest.mark.parametrize("k", [3, 4])
@pytest.mark.parametrize("side", [1, -1])
def test_realize_certifies(k, side):
    for b in admissible_b_values(k, 10**6):
        m = member(k, b)
        triangle = realize(m, side=side)
        report = certify(triangle, k)
        assert report.is_bidiophantine
        assert sorted(report.distances()) == sorted(m.sides())


def test_realize_layout():
    assert realize(member(4, 5), base_start=LatticePoint(1, 1), side=-1) == (
        LatticePoint(1, 1), LatticePoint(5, 1), LatticePoint(10, -11)
    )
    with pytest.raises(ParameterError):
        realize(member(4, 5), side=0)


def test_apex_cosines():
    assert apex_cosines(3, 0).cos_at_far_vertex == Fraction(3, 5)
    assert apex_cosines(3, 0).cos_at_near_vertex == 0
    assert apex_cosines(4, 5).cos_at_far_vertex == Fraction(3, 5)
    assert apex_cosines(4, 5).cos_at_near_vertex == Fraction(-5, 13)
    with pytest.raises(DomainError):
        apex_cosines(3, -1)


@pytest.mark.parametrize("k", [3, 4])
def test_apex_cosines_decrease(k):
    cosines = [apex_cosines(k, b) for b in range(60)]
    for earlier, later in zip(cosines, cosines[1:]):
        assert later.cos_at_far_vertex < earlier.cos_at_far_vertex
        assert later.cos_at_near_vertex < earlier.cos_at_near_vertex


def test_k4_values_follow_linear_recurrence():
    values = list(islice(iter_admissible_b(4), 12))
    for earlier, middle, later in zip(values, values[1:], values[2:]):
        assert later == 4 * middle - earlier + 4


@pytest.mark.parametrize("k", [3, 4])
def test_side_difference_of_squares(k):
    for b in islice(iter_admissible_b(k), 10):
        m = member(k, b)
        assert m.side_long ** 2 - m.side_short ** 2 == k * (2 * b + k)
