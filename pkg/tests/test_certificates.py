import pytest

from src.certificates import (
    PARITY_CASES,
    ParityCase,
    isosceles_violations,
    nonexistence_k12,
    verify_parity_case,
)
from src.exceptions import DomainError, UnknownCaseError


def test_registry_covers_every_case():
    assert set(PARITY_CASES) == set(ParityCase)
    assert len(ParityCase) == 9


@pytest.mark.parametrize("case", list(ParityCase))
def test_parity_case_has_no_witness(case):
    certificate = verify_parity_case(case, 2000)
    assert certificate.holds
    assert certificate.witness_count == 0
    assert certificate.scanned > 0
    assert certificate.reason


def test_case_accepts_string_identifier():
    certificate = verify_parity_case("K2", 100)
    assert certificate.case is ParityCase.K2
    assert certificate.scanned == 100


def test_case_errors():
    with pytest.raises(UnknownCaseError, match="K9"):
        verify_parity_case("K9", 10)
    with pytest.raises(DomainError):
        verify_parity_case(ParityCase.K2, 0)


def test_certificate_serializes_numbers_as_strings():
    data = verify_parity_case(ParityCase.K4_IV, 50).to_dict()
    assert data['case'] == "K4_IV"
    assert data['verified_range'] == "50"
    assert data['witness_count'] == "0"
    assert data['witnesses'] == []


@pytest.mark.parametrize("k", [1, 2])
def test_nonexistence_for_short_sides(k):
    certificate = nonexistence_k12(k, 12)
    assert certificate.holds
    assert certificate.scanned > 0
    assert certificate.case is None


def test_nonexistence_bounds():
    with pytest.raises(DomainError):
        nonexistence_k12(3, 20)
    with pytest.raises(DomainError):
        nonexistence_k12(2, 2)


def test_unit_side_forces_isosceles():
    assert isosceles_violations(300) == []
    with pytest.raises(DomainError):
        isosceles_violations(0)
