"""
Completely regular semigroups and free bands.
"""

import math
from typing import Sequence

from .combinatorics import binomial


def completely_regular_length(m: int, n: int, r: int, group_lengths: Sequence[int]) -> int:
    """
    l(S) = m + n - r - 1 + sum l(G_i) for a completely regular S with m
    L-classes, n R-classes and r J-classes with maximal subgroups G_i.

    Example:
        >>> completely_regular_length(4, 4, 3, [0, 0, 0])
        4
    """
    if len(group_lengths) != r:
        raise ValueError(f"expected {r} group lengths, got {len(group_lengths)}")
    if r < 1 or m < r or n < r:
        raise ValueError(f"need m, n >= r >= 1, got m={m}, n={n}, r={r}")
    return m + n - r - 1 + sum(group_lengths)


def band_jclass_count(k: int) -> int:
    """
    a_k = k * prod_{i=1..k-2} (k - i)^(2^i), the number of L-classes (and of
    R-classes) in the J-class of the free band B_k holding words of full
    content.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return k * math.prod((k - i) ** (2**i) for i in range(1, k - 1))


def free_band_length(n: int) -> int:
    """l(B_n) = 2 sum_k C(n,k) a_k - 2^n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return 2 * sum(binomial(n, k) * band_jclass_count(k) for k in range(1, n + 1)) - 2**n
