"""
Exact combinatorial primitives: Stirling numbers, binomials, rank-class
sizes of T_n and O_n, Gaussian coefficients and general linear group orders.

All values are Python ints.
"""

import math
from functools import lru_cache

from sympy.functions.combinatorial.numbers import stirling


def _check_natural(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"`{name}` must be non-negative, got {value}")


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """
    Stirling number of the second kind S(n, k): the number of partitions of
    an n-set into k blocks. S(0, 0) = 1.
    """
    _check_natural(n=n, k=k)
    if k > n:
        return 0
    return int(stirling(n, k, kind=2))


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    _check_natural(n=n)
    return math.factorial(n)


def nmaps(n: int, k: int) -> int:
    """N(n, k) = S(n, k) C(n, k) k!, the number of rank-k maps in T_n."""
    _check_natural(n=n, k=k)
    return stirling2(n, k) * binomial(n, k) * factorial(k)


def nmaps_op(n: int, k: int) -> int:
    """N*(n, k) = C(n, k) C(n-1, k-1), the number of rank-k maps in O_n."""
    _check_natural(n=n, k=k)
    return binomial(n, k) * binomial(n - 1, k - 1)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """
    The Gaussian coefficient [n, k]_q: the number of k-dimensional subspaces
    of an n-dimensional space over a field with q elements.
    """
    _check_natural(n=n, k=k)
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if k > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def gl_order(n: int, q: int) -> int:
    """|GL(n, q)| = prod_{k=1..n} (q^n - q^(n-k)); 1 for n = 0."""
    _check_natural(n=n)
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    return math.prod(q**n - q ** (n - k) for k in range(1, n + 1))


def gls_order(n: int, q: int) -> int:
    """|GLS(n, q)| = q^(n^2), the number of n x n matrices over GF(q)."""
    _check_natural(n=n)
    return q ** (n * n)
