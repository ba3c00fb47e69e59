"""Extrema of g on dyadic blocks, and the solved enumeration problems.

On each block I_m = [2**m, 2**(m+1)) the deviation g attains its
minimum 0 at the single point 2**(m+1)-1 and, for m >= 2, its maximum
at exactly two points.  The machinery for this:

  * skeleton offsets x_r = (2/3)(4**r - 1) (binary 1010...10) and
    y_r = 2*x_r, where block maxima of g occur;
  * the block maximum Lambda(n, m) = max g(2**m n + t) over
    0 <= t < 2**m, which collapses to two g-evaluations;
  * the envelope constants lambda_m = (3m + 1 - (-1)**m 2**-m)/27
    (the maximum of g on I_m) and theta_n = lambda_{floor_lg(n)};
  * the argmax report: max at 2**m + x_{m//2} and 2**m + y_{(m-1)//2},
    equivalently 2**m - 1 + round(2**m/3) and 2**m - 1 + round(2**(m+1)/3).

Also here: the enumerators for the sharp-bound equality sets, for the
perfect-mean equation 3U(n) = n(n+1) (solutions 2**m - 2, m >= 2), and
the threshold scan for g(n) < 1/4 and friends.  Equality sets are
generated from their closed forms and every element is re-validated by
direct evaluation, so bounds far beyond scan range stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bitcore import DomainError, ResourceLimitError, floor_lg, round_pow2_over_3
from .deviations import dev_g, dev_v
from .sums import DEFAULT_BRUTE_CAP, u_fast, v_fast

__all__ = [
    "EQUALITY_KINDS",
    "ExtremalReport",
    "SkeletonPair",
    "argmax_g",
    "block_g_values",
    "equality_set",
    "lambda_block",
    "lambda_block_brute",
    "lambda_m",
    "perfect_mean_solutions",
    "scan_g_below",
    "skeleton",
    "theta",
]


@dataclass(frozen=True)
class SkeletonPair:
    """The r-th skeleton offsets: x = (2/3)(4**r - 1) and y = 2x."""

    r: int
    x: int
    y: int


@dataclass(frozen=True)
class ExtremalReport:
    """Exact extrema of g on one block I_m with every attaining point.

    degenerate marks m in {0, 1}, where the maximum has a single
    attaining point instead of the usual two.
    """

    m: int
    min_value: Fraction
    min_points: tuple[int, ...]
    max_value: Fraction
    max_points: tuple[int, ...]
    degenerate: bool


def skeleton(r: int) -> SkeletonPair:
    """The pair (x_r, y_r) by closed form, cross-checked on the way out.

    The recurrence x_{r+1} = 4 x_r + 2, y_{r+1} = 4 y_r + 4 and the two
    stated values v(x_r) = 2/9 - 2/(9 * 4**r), v(y_r) = 1/9 - 1/(9 * 4**r)
    are re-verified on every call; they are cheap and guard the closed
    form against typos forever.
    """
    if r < 0:
        raise DomainError("skeleton requires r >= 0")
    x = 2 * ((1 << 2 * r) - 1) // 3
    y = 2 * x
    x_rec = 0
    for _ in range(r):
        x_rec = 4 * x_rec + 2
    if x != x_rec:
        raise RuntimeError(f"skeleton closed form disagrees with recurrence at r={r}")
    pow4 = 1 << 2 * r
    if dev_v(x) != Fraction(2 * (pow4 - 1), 9 * pow4):
        raise RuntimeError(f"v(x_{r}) does not match its closed value")
    if dev_v(y) != Fraction(pow4 - 1, 9 * pow4):
        raise RuntimeError(f"v(y_{r}) does not match its closed value")
    return SkeletonPair(r, x, y)


def lambda_block(n: int, m: int) -> Fraction:
    """Block maximum Lambda(n, m) = max g over {2**m n + t : 0 <= t < 2**m}.

    Closed form: only two offsets can win, both from the skeleton.  For
    m = 2j+1 they are y_j and x_j; for m = 2j+2 they are y_j and x_{j+1}.
    """
    if n <= 0:
        raise DomainError("lambda_block requires n >= 1")
    if m < 1:
        raise ValueError("lambda_block requires m >= 1")
    if m % 2:
        j = (m - 1) // 2
        pair = skeleton(j)
        offsets = (pair.y, pair.x)
    else:
        j = (m - 2) // 2
        offsets = (skeleton(j).y, skeleton(j + 1).x)
    base = n << m
    return max(dev_g(base + t) for t in offsets)


def block_g_values(n: int, m: int, cap: int = DEFAULT_BRUTE_CAP) -> list[Fraction]:
    """Exact g over the block {2**m n + t}, in offset order, by scan.

    Grown level by level from (g(n), v(n)) with the doubling rules as
    scaled integers, one Fraction per element at the end.  Independent
    of the closed form in lambda_block, so it can serve as its oracle.
    """
    if n <= 0:
        raise DomainError("block_g_values requires n >= 1")
    if m < 0:
        raise DomainError("block_g_values requires m >= 0")
    if (1 << m) > cap:
        raise ResourceLimitError(f"block of 2^{m} values exceeds the scan cap {cap}")
    m0 = n.bit_length() - 1
    scale = 3 << m0
    g_nums = [int(dev_g(n) * scale)]
    v_nums = [int(dev_v(n) * scale)]
    for level in range(1, m + 1):
        third = 1 << (m0 + level)  # the +1/3 step at this scale
        next_g = []
        next_v = []
        for g_num, v_num in zip(g_nums, v_nums):
            next_g.append(2 * g_num + v_num)  # even child: g + v/2
            next_v.append(v_num)
            next_g.append(2 * g_num)  # odd child: g unchanged
            next_v.append(v_num + third)
        g_nums = next_g
        v_nums = next_v
    return [Fraction(g_num, 3 << (m0 + m)) for g_num in g_nums]


def lambda_block_brute(n: int, m: int, cap: int = DEFAULT_BRUTE_CAP) -> Fraction:
    """Literal maximum of g over the 2**m block, by full scan."""
    return max(block_g_values(n, m, cap))


def lambda_m(m: int) -> Fraction:
    """Maximum of g on I_m: (3m + 1 - (-1)**m 2**-m)/27, exactly."""
    if m < 0:
        raise DomainError("lambda_m requires m >= 0")
    sign = -1 if m % 2 else 1
    return Fraction(((3 * m + 1) << m) - sign, 27 << m)


def theta(n: int) -> Fraction:
    """theta_n = lambda_{floor_lg(n)}, in the round(2**m/3) form."""
    if n <= 0:
        raise DomainError("theta requires n >= 1")
    m = n.bit_length() - 1
    return Fraction((m << m) + round_pow2_over_3(m), 9 << m)


def argmax_g(m: int) -> ExtremalReport:
    """Where g is extremal on I_m: min 0 at the all-ones point, max at
    the two skeleton points (one point only for m in {0, 1})."""
    if m < 0:
        raise DomainError("argmax_g requires m >= 0")
    if m == 0:
        zero = Fraction(0)
        return ExtremalReport(0, zero, (1,), zero, (1,), True)
    if m == 1:
        return ExtremalReport(1, Fraction(0), (3,), Fraction(1, 6), (2,), True)
    top = (1 << m) + skeleton(m // 2).x
    second = (1 << m) + skeleton((m - 1) // 2).y
    return ExtremalReport(
        m,
        Fraction(0),
        ((2 << m) - 1,),
        lambda_m(m),
        tuple(sorted((top, second))),
        False,
    )


EQUALITY_KINDS = (
    "V_LOWER",
    "V_UPPER",
    "U_EVEN_LOWER",
    "U_EVEN_UPPER",
    "U_ODD_LOWER",
    "U_ODD_UPPER",
    "G_UPPER",
    "G_THETA",
)


def _attains(kind: str, n: int) -> bool:
    """Does n attain the sharp bound named by kind?  Exact evaluation."""
    if kind == "V_LOWER":
        return 3 * n * v_fast(n) == 2 * n * n + 1
    if kind == "V_UPPER":
        return 3 * (n + 1) * v_fast(n) == 2 * n * (n + 2)
    if kind == "U_EVEN_LOWER":
        return 3 * u_fast(n) == n * n + 2
    if kind == "U_EVEN_UPPER":
        return 3 * u_fast(n) == n * n + n
    if kind == "U_ODD_LOWER":
        return 3 * u_fast(n) == n * n + n + 3
    if kind == "U_ODD_UPPER":
        return 3 * u_fast(n) == n * n + 2 * n
    if kind == "G_UPPER":
        return dev_g(n) == 0
    if kind == "G_THETA":
        return dev_g(n) == theta(n)
    raise ValueError(f"unknown equality kind {kind!r}")


def _generate_members(kind: str, bound: int) -> list[int]:
    if kind in ("V_LOWER", "U_EVEN_LOWER"):
        start = 1 if kind == "V_LOWER" else 2  # n = 2**m; even case needs m >= 1
        out = []
        n = start
        while n <= bound:
            out.append(n)
            n *= 2
        return out
    if kind in ("V_UPPER", "G_UPPER", "U_ODD_UPPER"):
        # 2**(m+1)-1 with m >= 0, resp. 2**m - 1 with m >= 1: the same set,
        # the all-ones integers from 1 up
        return _all_ones_up_to(bound)
    if kind == "U_EVEN_UPPER":
        out = []
        n = 2  # 2**m - 2 for m >= 2
        while n <= bound:
            out.append(n)
            n = 2 * n + 2
        return out
    if kind == "U_ODD_LOWER":
        out = []
        n = 3  # 2**m + 1 for m >= 1
        while n <= bound:
            out.append(n)
            n = 2 * n - 1
        return out
    if kind == "G_THETA":
        members = set()
        r = 1
        while (1 << r) - 1 + round_pow2_over_3(r) <= bound:
            members.add((1 << r) - 1 + round_pow2_over_3(r))
            r += 1
        r = 0
        while (1 << r) - 1 + round_pow2_over_3(r + 1) <= bound:
            members.add((1 << r) - 1 + round_pow2_over_3(r + 1))
            r += 1
        return sorted(members)
    raise ValueError(f"unknown equality kind {kind!r}")


def _all_ones_up_to(bound: int) -> list[int]:
    out = []
    n = 1
    while n <= bound:
        out.append(n)
        n = 2 * n + 1
    return out


def equality_set(kind: str, bound: int) -> list[int]:
    """All n <= bound attaining the sharp bound named by kind, ascending.

    Generated from the closed-form description of each set, then every
    member is re-validated against the defining equality; a failed
    validation would mean the closed form and the evaluators disagree
    and raises outright.

    Kinds, their closed forms, and the defining equalities:
        V_LOWER       {2**m}        3n V(n) = 2n**2 + 1
        V_UPPER       {2**m - 1}    3(n+1) V(n) = 2n(n+2)
        U_EVEN_LOWER  {2**m, m>=1}  3 U(n) = n**2 + 2
        U_EVEN_UPPER  {2**m - 2}    3 U(n) = n**2 + n
        U_ODD_LOWER   {2**m + 1}    3 U(n) = n**2 + n + 3
        U_ODD_UPPER   {2**m - 1}    3 U(n) = n**2 + 2n
        G_UPPER       {2**r - 1}    g(n) = 0
        G_THETA       the two round(2**r/3)-shifted families; g(n) = theta_n
    """
    if kind not in EQUALITY_KINDS:
        raise ValueError(f"unknown equality kind {kind!r}")
    if bound <= 0:
        raise DomainError("equality_set requires bound >= 1")
    members = _generate_members(kind, bound)
    for n in members:
        if not _attains(kind, n):
            raise RuntimeError(f"{kind} closed form emitted non-attaining n={n}")
    return members


def perfect_mean_solutions(bound: int) -> list[int]:
    """All n <= bound with 3 U(n) = n(n+1): exactly the 2**m - 2, m >= 2."""
    if bound <= 0:
        raise DomainError("perfect_mean_solutions requires bound >= 1")
    return equality_set("U_EVEN_UPPER", bound)


def scan_g_below(
    threshold: Fraction, bound: int, cap: int = DEFAULT_BRUTE_CAP
) -> list[int]:
    """All n <= bound with g(n) < threshold, strictly, by full scan."""
    if bound < 0:
        raise DomainError("scan_g_below requires bound >= 0")
    if bound > cap:
        raise ResourceLimitError(f"bound {bound} exceeds the scan cap {cap}")
    limit = Fraction(threshold)
    return [n for n in range(1, bound + 1) if dev_g(n) < limit]
