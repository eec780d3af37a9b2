"""
Lower bounds and closed forms for the largest league content, the league
constructions that attain them, and the bounds on l(T_n) and l(O_n) they
imply.
"""

import math
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from ..formulas.combinatorics import binomial, factorial, nmaps, stirling2
from ..utils.errors import MissingExactValues
from .league import League
from .partitions import SetPartition, enumerate_partitions, k_subsets


def _check_rank(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def league_lb1(n: int, k: int) -> int:
    """
    C(n-1, k) S(n-1, k-1): partitions with {n} as a block against the
    k-subsets that avoid n.
    """
    _check_rank(n, k)
    return binomial(n - 1, k) * stirling2(n - 1, k - 1)


def league_lb2(n: int, k: int) -> int:
    """
    C(n-2, k-2) S(n-1, k): k-subsets containing 1 and 2 against the
    partitions that keep 1 and 2 together.
    """
    _check_rank(n, k)
    if k < 2:
        return 0
    return binomial(n - 2, k - 2) * stirling2(n - 1, k)


def league_lb_interval(n: int, k: int) -> int:
    """C(n-1, k) C(n-2, n-k), the interval version of `league_lb1`."""
    _check_rank(n, k)
    return binomial(n - 1, k) * binomial(n - 2, n - k)


def league_lb(n: int, k: int, interval: bool = False) -> int:
    if interval:
        return league_lb_interval(n, k)
    return max(league_lb1(n, k), league_lb2(n, k))


def _with_singleton_block(partition: SetPartition, point: int) -> SetPartition:
    return SetPartition(partition.blocks + ((point,),))


def singleton_block_witness(n: int, k: int, interval: bool = False) -> League:
    """The league behind `league_lb1` (or `league_lb_interval`)."""
    _check_rank(n, k)
    if k == 1 or k == n:
        return League.empty(n, k, interval)
    partitions = [
        _with_singleton_block(partition, n)
        for partition in enumerate_partitions(n - 1, k - 1, interval=interval)
    ]
    return League.build(n, k, partitions, k_subsets(n - 1, k), interval=interval)


def paired_points_witness(n: int, k: int) -> League:
    """The league behind `league_lb2`."""
    _check_rank(n, k)
    if k < 2 or k == n:
        return League.empty(n, k)

    # partitions of {1..n-1} lifted to {1..n}: point 1 stands for {1, 2}
    partitions = []
    for partition in enumerate_partitions(n - 1, k):
        blocks = []
        for block in partition.blocks:
            lifted = [p + 1 for p in block if p > 1]
            if 1 in block:
                lifted = [1, 2] + lifted
            blocks.append(tuple(lifted))
        partitions.append(SetPartition(tuple(blocks)))
    subsets = [(1, 2) + tuple(p + 2 for p in rest) for rest in k_subsets(n - 2, k - 2)]
    return League.build(n, k, partitions, subsets)


def league_lb_witness(n: int, k: int, interval: bool = False) -> League:
    """A league attaining `league_lb(n, k, interval)`."""
    if interval:
        return singleton_block_witness(n, k, interval=True)
    if league_lb2(n, k) > league_lb1(n, k):
        return paired_points_witness(n, k)
    return singleton_block_witness(n, k)


def _clique_size(n: int) -> int:
    """The m maximizing C(m, 2)(n - m), smallest on ties."""
    return max(range(2, n + 1), key=lambda m: (binomial(m, 2) * (n - m), -m))


def closed_form_F(n: int, k: int) -> Optional[int]:
    """
    F(n, k) where a closed form is known: k in {1, n}, k = 2 and k = n-1.

    Example:
        >>> closed_form_F(7, 6)
        20
    """
    _check_rank(n, k)
    if k == 1 or k == n:
        return 0
    if k == 2 and n > 3:
        return 3 * (2 ** (n - 3) - 1)
    if k == n - 1:
        s, r = divmod(n, 3)
        if r == 0:
            return s * s * (2 * s - 1)
        if r == 1:
            return s * s * (2 * s + 1)
        return s * (s + 1) * (2 * s + 1)
    return None


def _best_divider_count(n: int) -> int:
    """The r maximizing (n-r+1)(n-r)(r-1)/2, among the integers next to r*."""
    r_star = (2 * (n + 1) - math.sqrt((n + 1) ** 2 - 3 * n)) / 3
    candidates = {min(max(r, 1), n) for r in (math.floor(r_star), math.ceil(r_star))}
    return max(sorted(candidates), key=lambda r: (n - r + 1) * (n - r) * (r - 1))


def closed_form_Fstar(n: int, k: int) -> Optional[int]:
    """F*(n, k) for k in {1, 2, n-1, n}; None otherwise."""
    _check_rank(n, k)
    if k == 1 or k == n:
        return 0
    if k == 2:
        r = _best_divider_count(n)
        return (n - r + 1) * (n - r) * (r - 1) // 2
    if k == n - 1:
        return ((n - 1) // 2) * ((n - 1) - (n - 1) // 2)
    return None


def closed_form_F_witness(n: int, k: int) -> Optional[League]:
    """An optimal league for the ranks `closed_form_F` covers."""
    _check_rank(n, k)
    if k == 1 or k == n:
        return League.empty(n, k)

    if k == 2 and n > 3:
        # the triangle {1, 2, 3} inside one block, its three edges as subsets
        partitions = []
        for partition in enumerate_partitions(n - 2, 2):
            blocks = []
            for block in partition.blocks:
                lifted = [p + 2 for p in block if p > 1]
                if 1 in block:
                    lifted = [1, 2, 3] + lifted
                blocks.append(tuple(lifted))
            partitions.append(SetPartition(tuple(blocks)))
        return League.build(n, k, partitions, [(1, 2), (1, 3), (2, 3)])

    if k == n - 1:
        # one pair block inside {1..m}; subsets omit a point outside it
        m = _clique_size(n)
        partitions = [
            SetPartition(((a, b),) + tuple((p,) for p in range(1, n + 1) if p not in (a, b)))
            for a, b in k_subsets(m, 2)
        ]
        subsets = [
            tuple(p for p in range(1, n + 1) if p != omitted)
            for omitted in range(m + 1, n + 1)
        ]
        return League.build(n, k, partitions, subsets)

    return None


def closed_form_Fstar_witness(n: int, k: int) -> Optional[League]:
    """An optimal interval league for the ranks `closed_form_Fstar` covers."""
    _check_rank(n, k)
    if k == 1 or k == n:
        return League.empty(n, k, interval=True)

    if k == 2:
        # pairs inside {r..n} against the dividers before r
        r = _best_divider_count(n)
        partitions = [
            SetPartition((tuple(range(1, d + 1)), tuple(range(d + 1, n + 1))))
            for d in range(1, r)
        ]
        subsets = [(a + r - 1, b + r - 1) for a, b in k_subsets(n - r + 1, 2)]
        return League.build(n, k, partitions, subsets, interval=True)

    if k == n - 1:
        m = (n - 1) // 2
        partitions = [
            SetPartition(
                ((a, a + 1),) + tuple((p,) for p in range(1, n + 1) if p not in (a, a + 1))
            )
            for a in range(m + 1, n)
        ]
        subsets = [
            tuple(p for p in range(1, n + 1) if p != omitted) for omitted in range(1, m + 1)
        ]
        return League.build(n, k, partitions, subsets, interval=True)

    return None


def _exact_F(n: int, k: int, exact_values: Mapping[Tuple[int, int], int]) -> int:
    value = closed_form_F(n, k)
    if value is not None:
        return value
    if (n, k) in exact_values:
        return exact_values[(n, k)]
    raise MissingExactValues(
        f"no exact value of F({n}, {k}) is available; run the league search "
        "first or use the bounds"
    )


def tn_lower_bound(
    n: int,
    use_exact_f: bool = False,
    exact_values: Optional[Mapping[Tuple[int, int], int]] = None,
) -> int:
    """
    sum_k F(n, k) k! - 1, a lower bound for l(T_n).

    With `use_exact_f` the values come from the closed forms and then from
    `exact_values` (the printed optima by default); otherwise every F(n, k)
    is replaced by `league_lb`. The ranks 1 and n contribute zero terms.
    The result is clamped at 0 for n = 1.

    Raises:
        MissingExactValues: when an exact value is requested but unknown.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if exact_values is None:
        from ..helpers.published_values import KNOWN_F

        exact_values = KNOWN_F

    total = 0
    for k in range(1, n + 1):
        value = _exact_F(n, k, exact_values) if use_exact_f else league_lb(n, k)
        total += value * factorial(k)
    return max(total - 1, 0)


def on_lower_bound(n: int) -> Tuple[int, int]:
    """
    C(2n-3, n) - 1, a lower bound for l(O_n).

    Returns:
        (raw, clamped); the raw value is -1 at n = 2.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    raw = binomial(2 * n - 3, n) - 1
    return raw, max(raw, 0)


def on_lower_bound_ratio(n: int) -> Fraction:
    """The same bound written against |O_n| = C(2n-1, n-1)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    order = binomial(2 * n - 1, n - 1)
    return Fraction((n - 1) * (n - 2), (2 * n - 1) * (2 * n - 2)) * order - 1


def rank_expectation(n: int) -> Fraction:
    """E(n) = n [1 - (1 - 1/n)^n], the mean rank of a map in T_n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return n * (1 - (1 - Fraction(1, n)) ** n)


def rank_variance(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    a = (1 - Fraction(1, n)) ** n
    b = (1 - Fraction(2, n)) ** n
    return n * (a - b) + n * n * (b - a * a)


def rank_moments_direct(n: int) -> Dict[str, Fraction]:
    """Mean and variance of the rank summed over the rank classes of T_n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    total = n**n
    mean = Fraction(sum(k * nmaps(n, k) for k in range(1, n + 1)), total)
    second = Fraction(sum(k * k * nmaps(n, k) for k in range(1, n + 1)), total)
    return {"expectation": mean, "variance": second - mean * mean}
