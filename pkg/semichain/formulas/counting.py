"""
Large null subsemigroups of T_n and the counting bounds they give.
"""

from typing import Tuple

from .combinatorics import nmaps


def tn_null_max_order(n: int) -> Tuple[int, int]:
    """
    The largest (n - k) N(n-1, k-1) over 1 <= k <= n and the smallest k
    attaining it.

    Maps of rank k with the point n as a singleton kernel block and an image
    avoiding n form a null subsemigroup of J_k* of that order (zero not
    counted). Its order is therefore a lower bound for log2 of the number of
    subsemigroups of T_n and for the number of generators d(n) some
    subsemigroup of T_n needs.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    best, argmax = -1, 1
    for k in range(1, n + 1):
        order = (n - k) * nmaps(n - 1, k - 1)
        if order > best:
            best, argmax = order, k
    return best, argmax


def null_subsemigroup_count_log2(m: int) -> int:
    """A null semigroup with m nonzero elements has 2^m subsemigroups."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return m
