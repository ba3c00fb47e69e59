"""Exact integer and rational groundwork for the odd-divisor sums.

Everything downstream runs on arbitrary-precision integers and reduced
fractions, so the heavy lifting is delegated to the stdlib: ``int`` is
already an unbounded natural number and ``fractions.Fraction`` keeps
every value reduced with a positive denominator.  This module adds the
binary-digit view of an integer, the two digit involutions (complement
and reflection) used throughout the package, the rounded thirds of
powers of two, and the canonical ``p/q`` text form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BinaryDigits",
    "DomainError",
    "ResourceLimitError",
    "block_range",
    "floor_lg",
    "format_rational",
    "hat",
    "parse_rational",
    "popcount",
    "round_pow2_over_3",
    "tilde",
    "to_digits",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A brute-force computation or scan would exceed its configured cap."""


@dataclass(frozen=True)
class BinaryDigits:
    """Binary digits of a positive integer, least significant first.

    ``digits[k]`` is the coefficient of 2**k and ``digits[msb_index]``
    is always 1, so right shifts of the source integer are suffix views
    of ``digits``.
    """

    digits: tuple[int, ...]
    msb_index: int

    def to_int(self) -> int:
        return sum(bit << k for k, bit in enumerate(self.digits))


def floor_lg(n: int) -> int:
    """Index of the leading binary digit: the m with 2**m <= n < 2**(m+1)."""
    if n <= 0:
        raise DomainError("floor_lg requires n >= 1")
    return n.bit_length() - 1


def to_digits(n: int) -> BinaryDigits:
    """Decompose n >= 1 into its binary digits, lowest first."""
    if n <= 0:
        raise DomainError("to_digits requires n >= 1")
    m = n.bit_length() - 1
    return BinaryDigits(tuple((n >> k) & 1 for k in range(m + 1)), m)


def popcount(n: int) -> int:
    """Number of set binary digits of n >= 0."""
    if n < 0:
        raise DomainError("popcount requires n >= 0")
    return n.bit_count()


def block_range(m: int) -> range:
    """The block I_m: integers n with floor_lg(n) == m, as a range."""
    if m < 0:
        raise DomainError("block_range requires m >= 0")
    return range(1 << m, 2 << m)


def hat(n: int) -> int:
    """Complement every binary digit of n below the leading one.

    An involution of each block I_m; powers of two and all-ones integers
    swap with each other.
    """
    if n <= 0:
        raise DomainError("hat requires n >= 1")
    return n ^ ((1 << (n.bit_length() - 1)) - 1)


def tilde(n: int) -> int:
    """Reflect n to 3*2**m - 2 - n, with m the leading-digit index.

    Maps the interior of I_m onto itself and is its own inverse there;
    the top element 2**(m+1)-1 is the one exception, landing a block
    down at 2**m - 1.
    """
    if n <= 0:
        raise DomainError("tilde requires n >= 1")
    return (3 << (n.bit_length() - 1)) - 2 - n


def round_pow2_over_3(m: int) -> int:
    """Nearest integer to 2**m / 3.

    No tie is possible: 2**m is congruent to 1 or 2 mod 3, never a
    half-odd multiple.  Computed by integer formula, never floats.
    """
    if m < 0:
        raise DomainError("round_pow2_over_3 requires m >= 0")
    if m % 2:
        return ((1 << m) + 1) // 3
    return ((1 << m) - 1) // 3


_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?")


def format_rational(value: Fraction | int) -> str:
    """Render a rational as ``p/q`` in lowest terms, bare ``p`` if q == 1."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (decimal integers, q > 0) into a Fraction."""
    match = _RATIONAL_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"not a rational: {text!r} (expected 'p' or 'p/q')")
    numerator = int(match.group(1))
    if match.group(2) is None:
        return Fraction(numerator)
    denominator = int(match.group(2))
    if denominator == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)
