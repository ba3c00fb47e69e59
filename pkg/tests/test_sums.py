from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oddsum.bitcore import DomainError, ResourceLimitError
from oddsum.sums import (
    CESARO_FUNCTIONS,
    alpha,
    cesaro_limit,
    cesaro_mean,
    g_brute,
    g_fast,
    scan_sums,
    u_brute,
    u_fast,
    v_brute,
    v_fast,
)

mid = st.integers(min_value=1, max_value=3000)


def test_alpha_examples():
    assert alpha(1) == 1
    assert alpha(12) == 3
    assert alpha(40) == 5
    with pytest.raises(DomainError):
        alpha(0)


@given(st.integers(min_value=1, max_value=1 << 64))
def test_alpha_recurrences(n):
    assert alpha(2 * n) == alpha(n)
    assert alpha(2 * n - 1) == 2 * n - 1


@given(st.integers(min_value=1, max_value=1 << 64))
def test_alpha_is_the_odd_part(k):
    a = alpha(k)
    assert a % 2 == 1 and k % a == 0
    cofactor = k // a
    assert cofactor & (cofactor - 1) == 0


def test_v_examples():
    assert v_brute(1) == 1
    assert v_brute(3) == Fraction(5, 2)
    assert v_brute(4) == Fraction(11, 4)
    assert v_fast(1024) == Fraction(699051, 1024)


def test_u_examples():
    assert u_brute(1) == 1
    assert u_brute(6) == 14
    assert u_brute(7) == 21
    assert u_fast(0) == 0
    assert u_fast(1024) == 349526


def test_g_examples():
    assert g_brute(1) == 1
    assert g_brute(2) == Fraction(5, 2)
    assert g_brute(4) == Fraction(31, 4)
    assert g_fast(5) == Fraction(23, 2)
    assert g_fast(7) == 21


@given(mid)
def test_fast_matches_brute(n):
    assert v_fast(n) == v_brute(n)
    assert u_fast(n) == u_brute(n)
    assert g_fast(n) == g_brute(n)


@given(mid)
def test_doubling_rules(n):
    assert v_fast(2 * n) == n + v_fast(n) / 2
    assert v_fast(2 * n + 1) == n + 1 + v_fast(n) / 2
    assert u_fast(2 * n) == n * n + u_fast(n)
    assert u_fast(2 * n + 1) == (n + 1) ** 2 + u_fast(n)
    assert g_fast(2 * n) == n * (n + 1) + g_fast(n) - v_fast(n) / 2
    assert g_fast(2 * n + 1) == (n + 1) ** 2 + g_fast(n)


@given(st.integers(min_value=1, max_value=1 << 256))
def test_weighted_sum_identity(n):
    assert g_fast(n) == (n + 1) * v_fast(n) - u_fast(n)


def test_scan_sums_agrees_pointwise():
    rows = list(scan_sums(512))
    assert len(rows) == 512
    assert rows[0] == (1, Fraction(1), 1, Fraction(1))
    for n, v, u, g in rows[37:80]:
        assert v == v_fast(n) and u == u_fast(n) and g == g_fast(n)
    n, v, u, g = rows[-1]
    assert (n, u) == (512, 87382)


def test_brute_caps():
    with pytest.raises(ResourceLimitError):
        v_brute(100, cap=99)
    with pytest.raises(ResourceLimitError):
        u_brute(100, cap=99)
    with pytest.raises(ResourceLimitError):
        g_brute(100, cap=99)
    with pytest.raises(ResourceLimitError):
        list(scan_sums(100, cap=99))


def test_domains():
    for fn in (v_brute, g_brute, v_fast, g_fast):
        with pytest.raises(DomainError):
            fn(0)
    with pytest.raises(DomainError):
        u_brute(-1)
    with pytest.raises(DomainError):
        u_fast(-3)


def test_cesaro_examples():
    assert cesaro_mean("const1", 4) == Fraction(11, 16)
    assert cesaro_mean("x", 4) == Fraction(3, 8)
    assert cesaro_limit("const1") == Fraction(2, 3)
    assert cesaro_limit("x") == Fraction(1, 3)
    assert cesaro_limit("x2") == Fraction(2, 9)
    assert cesaro_limit("inv1px") is None


def test_cesaro_rejects_unknown_weight():
    with pytest.raises(ValueError):
        cesaro_mean("cos", 4)
    with pytest.raises(ValueError):
        cesaro_limit("cos")
    with pytest.raises(DomainError):
        cesaro_mean("x", 0)
    with pytest.raises(ResourceLimitError):
        cesaro_mean("inv1px", 100, cap=99)


def test_cesaro_means_match_literal_sums():
    # every registered weight against a from-scratch sum
    for n in (1, 2, 3, 17, 100, 256):
        w = sum(k * alpha(k) for k in range(1, n + 1))
        assert cesaro_mean("const1", n) == v_brute(n) / n
        assert cesaro_mean("x", n) == Fraction(u_brute(n), n * n)
        assert cesaro_mean("x2", n) == Fraction(w, n**3)
        harmonic = sum(Fraction(alpha(k), k * (n + k)) for k in range(1, n + 1))
        assert cesaro_mean("inv1px", n) == harmonic
    assert set(CESARO_FUNCTIONS) == {"const1", "x", "x2", "inv1px"}


@given(st.integers(min_value=1, max_value=1 << 14))
def test_cesaro_means_stay_near_their_limits(n):
    # |mean - limit| <= C/n for the three rational weights
    assert abs(cesaro_mean("const1", n) - Fraction(2, 3)) <= Fraction(1, n)
    assert abs(cesaro_mean("x", n) - Fraction(1, 3)) <= Fraction(1, n)
    assert abs(cesaro_mean("x2", n) - Fraction(2, 9)) <= Fraction(2, n)
