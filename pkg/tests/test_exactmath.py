from fractions import Fraction

import pytest

from src.exactmath import (
    exact_rational,
    exact_sqrt,
    format_integer,
    format_rational,
    is_square,
    isqrt,
    parse_integer,
)
from src.exceptions import BidiophantineError, DomainError


@pytest.mark.parametrize("n, root", [(0, 0), (1, 1), (15, 3), (16, 4), (10**40 + 1, 10**20)])
def test_isqrt(n, root):
    assert isqrt(n) == root


def test_isqrt_negative():
    with pytest.raises(DomainError):
        isqrt(-1)


def test_exact_sqrt():
    assert exact_sqrt(25) == 5
    assert exact_sqrt(26) is None
    assert exact_sqrt(8 * 57121 * 57122) == 161564
    assert exact_sqrt((2**80 + 1) ** 2) == 2**80 + 1


def test_is_square():
    assert is_square(0)
    assert is_square(941664**2)
    assert not is_square(2)
    assert not is_square(-4)


def test_exact_rational_normalizes():
    assert exact_rational(2, -4) == Fraction(-1, 2)
    assert exact_rational(6, 3).denominator == 1
    with pytest.raises(DomainError):
        exact_rational(1, 0)


def test_formatting():
    assert format_integer(10**25) == "10000000000000000000000000"
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-5, 13)) == "-5/13"


def test_parse_integer():
    assert parse_integer(" 12 ") == 12
    assert parse_integer("-7") == -7
    assert parse_integer(99) == 99
    assert parse_integer("123456789012345678901234567890") == 123456789012345678901234567890


@pytest.mark.parametrize("value", ["1.5", "", "0x10", 1.0, True, None])
def test_parse_integer_rejects(value):
    with pytest.raises(DomainError):
        parse_integer(value)


def test_errors_are_value_errors():
    assert issubclass(DomainError, BidiophantineError)
    assert issubclass(DomainError, ValueError)
