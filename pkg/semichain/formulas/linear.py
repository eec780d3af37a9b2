"""
The general linear semigroup GLS(n, q) of all n x n matrices over GF(q).
"""

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple, Tuple

from .combinatorics import gaussian_binomial, gl_order, gls_order


class SeriesApproximation(NamedTuple):
    value: Decimal
    error_bound: Fraction
    terms: int


def _pentagonal_exponent(k: int) -> int:
    return k * (3 * k - 1) // 2


def c_q(q: int, tolerance: float = 1e-12) -> SeriesApproximation:
    """
    c(q) = prod_{k>=1} (1 - q^-k), the limit of |GL(n,q)| / |GLS(n,q)|,
    evaluated through the pentagonal number series
    sum_{k in Z} (-1)^k q^(-k(3k-1)/2).

    Terms k = j and k = -j are added in pairs until twice the geometric
    tail beyond the next exponent drops below `tolerance`.

    Example:
        >>> round(float(c_q(2, 1e-9).value), 9)
        0.288788095
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")

    total = Fraction(1)
    terms = 1
    j = 0
    while True:
        next_exponent = _pentagonal_exponent(j + 1)
        # |tail| <= 2 * sum_{e >= next} q^-e = 2 q / (q - 1) * q^-next
        tail = Fraction(2 * q, (q - 1) * q**next_exponent)
        if tail < Fraction(tolerance):
            break
        j += 1
        sign = -1 if j % 2 else 1
        total += sign * Fraction(1, q ** _pentagonal_exponent(j))
        total += sign * Fraction(1, q ** _pentagonal_exponent(-j))
        terms += 2

    digits = max(20, int(-math.log10(tolerance)) + 5)
    with localcontext() as ctx:
        ctx.prec = digits
        value = Decimal(total.numerator) / Decimal(total.denominator)
    return SeriesApproximation(value=value, error_bound=tail, terms=terms)


def gls_lower_bound(n: int, q: int) -> Tuple[Fraction, int]:
    """
    The finite lower bound (1 - 1/q)^2 q^-n (|GLS(n,q)| - |GL(n,q)|) - 1.

    Returns:
        (raw, clamped) with clamped = max(floor(raw), 0).
    """
    if n < 1 or q < 2:
        raise ValueError(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    raw = (1 - Fraction(1, q)) ** 2 * Fraction(1, q**n) * (gls_order(n, q) - gl_order(n, q)) - 1
    return raw, max(math.floor(raw), 0)


def gls_rank_count(n: int, k: int, q: int) -> int:
    """The number of rank-k matrices: [n, k]_q^2 |GL(k, q)|."""
    return gaussian_binomial(n, k, q) ** 2 * gl_order(k, q)


def gls_league_content(n: int, k: int, q: int) -> int:
    """
    Content of the subspace league inside a hyperplane H at rank k: the
    k-subspaces of H times the (n-k)-subspaces of H, i.e.
    [n-1, k]_q [n-1, k-1]_q.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return gaussian_binomial(n - 1, k, q) * gaussian_binomial(n - 1, k - 1, q)


def gls_league_bound(n: int, q: int) -> int:
    """
    Length of the chain that climbs from the zero map through the null
    subsemigroups given by the hyperplane leagues, one rank at a time.
    """
    if n < 1 or q < 2:
        raise ValueError(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    return sum(gls_league_content(n, k, q) * gl_order(k, q) for k in range(1, n))
