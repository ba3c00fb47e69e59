"""The largest-odd-divisor function and its three partial sums.

alpha(k) is the largest odd divisor of k, so alpha(k)/k = 2**-t with t
the 2-adic valuation of k.  The package studies

    V(n) = sum_{k<=n} alpha(k)/k
    U(n) = sum_{k<=n} alpha(k)
    G(n) = sum_{k<=n} (n+1-k)/k * alpha(k) = (n+1)*V(n) - U(n)

Each sum has two evaluators: a brute one running the defining sum term
by term (the oracle, O(n), guarded by a cap) and a fast one walking the
binary digits of n once, O(log n), built on the doubling rules

    V(2n) = n + V(n)/2        V(2n+1) = n + 1 + V(n)/2
    U(2n) = n**2 + U(n)       U(2n+1) = (n+1)**2 + U(n)
    G(2n) = n(n+1) + G(n) - V(n)/2
    G(2n+1) = (n+1)**2 + G(n)

V(n) and G(n) are dyadic rationals (denominator dividing 2**floor_lg(n)),
U(n) an integer; all arithmetic here is exact.  The fast evaluators keep
a scaled integer numerator along the digit walk and build one Fraction
at the end.

Also here: the Cesaro means (1/n) sum f(k/n) alpha(k)/k for a few fixed
profiles f, which tend to (2/3) * integral of f over [0, 1].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .bitcore import DomainError, ResourceLimitError

__all__ = [
    "CESARO_FUNCTIONS",
    "DEFAULT_BRUTE_CAP",
    "alpha",
    "cesaro_limit",
    "cesaro_mean",
    "g_brute",
    "g_fast",
    "scan_sums",
    "u_brute",
    "u_fast",
    "v_brute",
    "v_fast",
]

DEFAULT_BRUTE_CAP = 1 << 22


def alpha(k: int) -> int:
    """Largest odd divisor of k >= 1: k with its trailing zero digits dropped."""
    if k <= 0:
        raise DomainError("alpha requires k >= 1")
    return k >> ((k & -k).bit_length() - 1)


def _check_cap(terms: int, cap: int) -> None:
    if terms > cap:
        raise ResourceLimitError(f"{terms} terms exceed the brute-force cap {cap}")


def v_brute(n: int, cap: int = DEFAULT_BRUTE_CAP) -> Fraction:
    """V(n) straight from the definition, one exact term per k."""
    if n <= 0:
        raise DomainError("v_brute requires n >= 1")
    _check_cap(n, cap)
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(alpha(k), k)
    return total


def u_brute(n: int, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """U(n) straight from the definition.  U(0) = 0 (empty sum)."""
    if n < 0:
        raise DomainError("u_brute requires n >= 0")
    _check_cap(n, cap)
    return sum(alpha(k) for k in range(1, n + 1))


def g_brute(n: int, cap: int = DEFAULT_BRUTE_CAP) -> Fraction:
    """G(n) straight from the definition, triangular weights included."""
    if n <= 0:
        raise DomainError("g_brute requires n >= 1")
    _check_cap(n, cap)
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction((n + 1 - k) * alpha(k), k)
    return total


def scan_sums(
    limit: int, cap: int = DEFAULT_BRUTE_CAP
) -> Iterator[tuple[int, Fraction, int, Fraction]]:
    """Yield (n, V(n), U(n), G(n)) for n = 1..limit by running the sums.

    The running V is held over one power-of-two denominator covering the
    whole range, so each step is pure integer work; G comes from the
    defining identity G = (n+1)V - U.
    """
    if limit <= 0:
        raise DomainError("scan_sums requires limit >= 1")
    _check_cap(limit, cap)
    scale_bits = limit.bit_length()
    v_num = 0
    u = 0
    for n in range(1, limit + 1):
        # alpha(n)/n == 2**-t, t the number of trailing zero digits of n
        t = (n & -n).bit_length() - 1
        v_num += 1 << (scale_bits - t)
        u += n >> t
        yield (
            n,
            Fraction(v_num, 1 << scale_bits),
            u,
            Fraction((n + 1) * v_num - (u << scale_bits), 1 << scale_bits),
        )


def v_fast(n: int) -> Fraction:
    """V(n) in one pass over the digits of n, most significant first."""
    if n <= 0:
        raise DomainError("v_fast requires n >= 1")
    m = n.bit_length() - 1
    prefix = 1
    num = 1  # V(prefix) scaled by 2**level
    for k in range(m - 1, -1, -1):
        bit = (n >> k) & 1
        num += (prefix + bit) << (m - k)
        prefix = 2 * prefix + bit
    return Fraction(num, 1 << m)


def u_fast(n: int) -> int:
    """U(n) in one pass over the digits of n, most significant first."""
    if n < 0:
        raise DomainError("u_fast requires n >= 0")
    if n == 0:
        return 0
    m = n.bit_length() - 1
    prefix = 1
    u = 1
    for k in range(m - 1, -1, -1):
        bit = (n >> k) & 1
        u += (prefix + bit) ** 2
        prefix = 2 * prefix + bit
    return u


def g_fast(n: int) -> Fraction:
    """G(n) in one pass over the digits of n, carrying V alongside."""
    if n <= 0:
        raise DomainError("g_fast requires n >= 1")
    m = n.bit_length() - 1
    prefix = 1
    g_num = 1  # G(prefix) scaled by 2**level
    v_num = 1  # V(prefix) scaled the same way
    for k in range(m - 1, -1, -1):
        bit = (n >> k) & 1
        if bit:
            g_num = ((prefix + 1) ** 2 << (m - k)) + 2 * g_num
        else:
            g_num = (prefix * (prefix + 1) << (m - k)) + 2 * g_num - v_num
        v_num += (prefix + bit) << (m - k)
        prefix = 2 * prefix + bit
    return Fraction(g_num, 1 << m)


CESARO_FUNCTIONS = ("const1", "x", "x2", "inv1px")

_CESARO_LIMITS = {
    "const1": Fraction(2, 3),
    "x": Fraction(1, 3),
    "x2": Fraction(2, 9),
    "inv1px": None,  # (2/3) ln 2, irrational
}


def cesaro_limit(function_id: str) -> Fraction | None:
    """Exact limit (2/3) * integral of f over [0,1]; None when irrational."""
    if function_id not in _CESARO_LIMITS:
        raise ValueError(f"unknown cesaro function {function_id!r}")
    return _CESARO_LIMITS[function_id]


def _sum_k_alpha(n: int) -> int:
    """sum_{k<=n} k * alpha(k), one digit pass.

    Doubling adds the odd squares below 2n: W(2n) = n(4n^2-1)/3 + 2W(n),
    W(2n+1) = W(2n) + (2n+1)^2.
    """
    if n == 0:
        return 0
    m = n.bit_length() - 1
    prefix = 1
    w = 1
    for k in range(m - 1, -1, -1):
        bit = (n >> k) & 1
        w = prefix * (4 * prefix * prefix - 1) // 3 + 2 * w
        prefix = 2 * prefix + bit
        if bit:
            w += prefix * prefix
    return w


def _tree_sum(pairs: list[tuple[int, int]]) -> Fraction:
    """Sum num/den pairs by pairwise merging, reducing only at the end."""
    while len(pairs) > 1:
        merged = []
        for i in range(0, len(pairs) - 1, 2):
            a, b = pairs[i]
            c, d = pairs[i + 1]
            merged.append((a * d + c * b, b * d))
        if len(pairs) % 2:
            merged.append(pairs[-1])
        pairs = merged
    return Fraction(*pairs[0])


def cesaro_mean(function_id: str, n: int, cap: int = DEFAULT_BRUTE_CAP) -> Fraction:
    """Exact mean (1/n) sum_{k<=n} f(k/n) alpha(k)/k for a built-in f.

    const1, x and x2 reduce to V(n)/n, U(n)/n**2 and W(n)/n**3 and cost
    O(log n); inv1px, meaning f(x) = 1/(1+x), is a genuine O(n) sum of
    terms 1/(2**t (n+k)) and respects the brute cap.
    """
    if n <= 0:
        raise DomainError("cesaro_mean requires n >= 1")
    if function_id == "const1":
        return v_fast(n) / n
    if function_id == "x":
        return Fraction(u_fast(n), n * n)
    if function_id == "x2":
        return Fraction(_sum_k_alpha(n), n**3)
    if function_id == "inv1px":
        # the 1/n prefactor cancels: (1/n) f(k/n) alpha(k)/k = 1/(2**t (n+k))
        _check_cap(n, cap)
        terms = [(1, (n + k) << ((k & -k).bit_length() - 1)) for k in range(1, n + 1)]
        return _tree_sum(terms)
    raise ValueError(f"unknown cesaro function {function_id!r}")
