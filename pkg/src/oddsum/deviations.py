"""Deviations of the three sums from their leading-order envelopes.

    v(n) = V(n) - 2n/3              in [0, 2/3), dyadic thirds
    u(n) = (n**2 + n)/3 - U(n)      3*u(n) is an integer
    g(n) = n(n+2)/3 - G(n)          in [0, floor_lg(n)/3]

The doubling rules they inherit are

    v(2n) = v(n)/2                  v(2n+1) = 1/3 + v(n)/2
    u(2n + e) = u(n) + n/3 - e*(2n + e)/3
    g(2n) = g(n) + v(n)/2           g(2n+1) = g(n)

and each deviation also has a direct digit formula, giving every value
two independent evaluators:

  * v: the binary digit string of n read in reverse, over 3 * 2**m
    (m = floor_lg(n));
  * u: -e0*n/3 + (2/3) * h(floor(n/2)), with e0 the parity of n and h
    the zero-digit functional below;
  * g: half the sum of v(floor(n / 2**(p+1))) over the zero digits p
    of n below the leading one.

h(n) = sum of floor(n / 2**(k+1)) over the zero digits k of n below the
leading one; it sits in [0, n-1], vanishing exactly on the all-ones
integers and hitting n-1 exactly on the powers of two.

The recurrence evaluators walk digits most significant first with scaled
integer state, so deep arguments cost no recursion depth and no
intermediate reductions.
"""

from __future__ import annotations

from fractions import Fraction

from .bitcore import DomainError

__all__ = [
    "dev_g",
    "dev_g_digit",
    "dev_u",
    "dev_u_closed",
    "dev_v",
    "dev_v_recur",
    "h_eval",
    "two_stage_g",
]


def dev_v(n: int) -> Fraction:
    """v(n) by the digit formula: reversed binary digits over 3 * 2**m."""
    if n < 0:
        raise DomainError("dev_v requires n >= 0")
    if n == 0:
        return Fraction(0)
    m = n.bit_length() - 1
    reversed_digits = int(bin(n)[:1:-1], 2)
    return Fraction(reversed_digits, 3 << m)


def dev_v_recur(n: int) -> Fraction:
    """v(n) by the doubling rules, one digit at a time from the top."""
    if n < 0:
        raise DomainError("dev_v_recur requires n >= 0")
    if n == 0:
        return Fraction(0)
    m = n.bit_length() - 1
    num = 1  # v(prefix) scaled by 3 * 2**level
    for k in range(m - 1, -1, -1):
        num += ((n >> k) & 1) << (m - k)
    return Fraction(num, 3 << m)


def dev_u(n: int) -> Fraction:
    """u(n) by the doubling rule, carrying the integer 3*u."""
    if n < 0:
        raise DomainError("dev_u requires n >= 0")
    if n == 0:
        return Fraction(0)
    m = n.bit_length() - 1
    prefix = 1
    triple = -1  # 3 * u(prefix)
    for k in range(m - 1, -1, -1):
        bit = (n >> k) & 1
        child = 2 * prefix + bit
        triple += prefix - bit * child
        prefix = child
    return Fraction(triple, 3)


def h_eval(n: int) -> int:
    """h(n): sum of the right shifts n >> (k+1) over the zero digits k < m."""
    if n <= 0:
        raise DomainError("h_eval requires n >= 1")
    m = n.bit_length() - 1
    return sum(n >> (k + 1) for k in range(m) if not (n >> k) & 1)


def dev_u_closed(n: int) -> Fraction:
    """u(n) by the closed form -e0*n/3 + (2/3) h(floor(n/2))."""
    if n < 0:
        raise DomainError("dev_u_closed requires n >= 0")
    if n == 0:
        return Fraction(0)
    half = n >> 1
    h = h_eval(half) if half else 0
    return Fraction(2 * h - (n & 1) * n, 3)


def dev_g(n: int) -> Fraction:
    """g(n) by the doubling rules, carrying v alongside as scaled integers."""
    if n < 0:
        raise DomainError("dev_g requires n >= 0")
    if n < 2:
        return Fraction(0)
    m = n.bit_length() - 1
    g_num = 0  # g(prefix) scaled by 3 * 2**level
    v_num = 1  # v(prefix) scaled the same way
    for k in range(m - 1, -1, -1):
        bit = (n >> k) & 1
        g_num = 2 * g_num + (0 if bit else v_num)
        v_num += bit << (m - k)
    return Fraction(g_num, 3 << m)


def dev_g_digit(n: int) -> Fraction:
    """g(n) by the digit formula: half the sum of v over zero-digit shifts.

    Each v(n >> (p+1)) is itself evaluated by digit reversal, so nothing
    here shares machinery with dev_g.
    """
    if n < 0:
        raise DomainError("dev_g_digit requires n >= 0")
    if n < 2:
        return Fraction(0)
    m = n.bit_length() - 1
    reversed_str = bin(n)[:1:-1]
    total = 0
    for p in range(m):
        if not (n >> p) & 1:
            # v(n >> (p+1)) has numerator int(reversed_str[p+1:], 2)
            total += int(reversed_str[p + 1 :], 2) << p
    return Fraction(total, 3 << m)


def two_stage_g(n: int, residue: int) -> Fraction:
    """g(4n + residue) from g(n) and v(n) by the two-step rules.

    The four residues refine the doubling rules into
        g(4n)   = g(n) + (3/4) v(n)
        g(4n+1) = g(n) + (1/2) v(n)
        g(4n+2) = g(n) + 1/6 + (1/4) v(n)
        g(4n+3) = g(n)
    """
    if n < 0:
        raise DomainError("two_stage_g requires n >= 0")
    if residue not in (0, 1, 2, 3):
        raise ValueError(f"residue must be 0..3, got {residue}")
    g = dev_g(n)
    v = dev_v(n)
    if residue == 0:
        return g + Fraction(3, 4) * v
    if residue == 1:
        return g + v / 2
    if residue == 2:
        return g + Fraction(1, 6) + v / 4
    return g
