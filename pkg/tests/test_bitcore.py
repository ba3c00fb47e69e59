from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oddsum.bitcore import (
    DomainError,
    block_range,
    floor_lg,
    format_rational,
    hat,
    parse_rational,
    popcount,
    round_pow2_over_3,
    tilde,
    to_digits,
)


def test_floor_lg_examples():
    assert floor_lg(1) == 0
    assert floor_lg(7) == 2
    assert floor_lg(2**100) == 100


def test_floor_lg_rejects_zero():
    with pytest.raises(DomainError):
        floor_lg(0)


@given(st.integers(min_value=1, max_value=1 << 256))
def test_floor_lg_brackets(n):
    m = floor_lg(n)
    assert 1 << m <= n < 2 << m


def test_to_digits_examples():
    six = to_digits(6)
    assert six.digits == (0, 1, 1) and six.msb_index == 2
    assert to_digits(1).digits == (1,)
    assert to_digits(10).digits == (0, 1, 0, 1)
    with pytest.raises(DomainError):
        to_digits(0)


@given(st.integers(min_value=1, max_value=1 << 128))
def test_digits_roundtrip(n):
    digits = to_digits(n)
    assert digits.to_int() == n
    assert digits.digits[digits.msb_index] == 1


def test_popcount_examples():
    assert popcount(0) == 0
    assert popcount(7) == 3
    assert popcount(10) == 2


@given(st.integers(min_value=0, max_value=1 << 200))
def test_popcount_matches_digit_string(n):
    assert popcount(n) == bin(n).count("1")


def test_hat_examples():
    assert hat(6) == 5
    assert hat(7) == 4
    assert hat(4) == 7
    with pytest.raises(DomainError):
        hat(0)


@given(st.integers(min_value=1, max_value=1 << 200))
def test_hat_is_a_block_involution(n):
    assert hat(hat(n)) == n
    assert floor_lg(hat(n)) == floor_lg(n)


def test_tilde_examples():
    assert tilde(4) == 6
    assert tilde(5) == 5
    assert tilde(9) == 13
    with pytest.raises(DomainError):
        tilde(0)


@given(st.integers(min_value=2, max_value=1 << 200))
def test_tilde_involution_except_block_top(n):
    # 2^(m+1)-1 reflects one block down, onto 2^m - 1; every other n stays
    # in its block and comes back
    if n & (n + 1) == 0:
        assert tilde(n) == n >> 1
    else:
        assert floor_lg(tilde(n)) == floor_lg(n)
        assert tilde(tilde(n)) == n


def test_round_pow2_over_3_examples():
    assert round_pow2_over_3(0) == 0
    assert round_pow2_over_3(2) == 1
    assert round_pow2_over_3(4) == 5
    with pytest.raises(DomainError):
        round_pow2_over_3(-1)


@given(st.integers(min_value=0, max_value=4096))
def test_round_pow2_over_3_is_nearest(m):
    assert abs(Fraction(1 << m, 3) - round_pow2_over_3(m)) < Fraction(1, 2)


def test_block_range():
    assert list(block_range(0)) == [1]
    assert list(block_range(2)) == [4, 5, 6, 7]
    with pytest.raises(DomainError):
        block_range(-1)


def test_format_rational():
    assert format_rational(Fraction(11, 4)) == "11/4"
    assert format_rational(Fraction(21)) == "21"
    assert format_rational(0) == "0"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_parse_rational_accepts_unreduced():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational(" 7 ") == 7


def test_parse_rational_rejects_garbage():
    for bad in ("", "abc", "1/0", "1.5", "1/-2", "1/2/3"):
        with pytest.raises(ValueError):
            parse_rational(bad)
