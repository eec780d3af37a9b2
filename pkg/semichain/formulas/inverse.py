"""
Lengths of inverse semigroups from their J-class summaries.

A finite inverse semigroup is described, up to what its length depends on,
by one summary per J-class: the number n of L-classes (equal to the number
of R-classes), the length l(G) of its maximal subgroup and the order |G|.
"""

from enum import Enum
from fractions import Fraction
from typing import List, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..grouplen.length import length_symmetric, omega
from .combinatorics import binomial, factorial, stirling2


class JClassSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_lr: int = Field(ge=1)
    group_length: int = Field(ge=0)
    group_order: int = Field(ge=1)


class NamedInverseMonoid(str, Enum):
    SYMMETRIC_INVERSE = "I"
    DUAL_SYMMETRIC_INVERSE = "Istar"
    POI = "POI"
    POPI = "POPI"


def brandt_length(group_length: int, group_order: int, n: int) -> int:
    """
    l(B(G, n)) = n(l(G) + 1) + n(n-1)/2 |G| + n - 1.
    """
    if n < 1:
        raise ValueError(f"a Brandt semigroup needs n >= 1, got {n}")
    return n * (group_length + 1) + n * (n - 1) // 2 * group_order + n - 1


def inverse_length(classes: Sequence[JClassSummary]) -> int:
    """
    l(S) = -1 + sum over J-classes of the Brandt length of the principal factor.
    """
    if not classes:
        raise ValueError("an inverse semigroup has at least one J-class")
    return -1 + sum(
        brandt_length(c.group_length, c.group_order, c.n_lr) for c in classes
    )


def inverse_star_brandt(group_length: int, n: int) -> int:
    """l*(B(G, n)) = n(l(G) + 2) - 1."""
    if n < 1:
        raise ValueError(f"a Brandt semigroup needs n >= 1, got {n}")
    return n * (group_length + 2) - 1


def inverse_star_length(classes: Sequence[JClassSummary]) -> int:
    if not classes:
        raise ValueError("an inverse semigroup has at least one J-class")
    return -1 + sum(inverse_star_brandt(c.group_length, c.n_lr) for c in classes)


def _symmetric_group_summary(n_lr: int, degree: int) -> JClassSummary:
    return JClassSummary(
        n_lr=n_lr,
        group_length=length_symmetric(degree) if degree >= 1 else 0,
        group_order=factorial(degree),
    )


def named_inverse_monoid_summaries(
    family: NamedInverseMonoid, n: int
) -> List[JClassSummary]:
    """
    J-class summaries of I_n, I_n*, POI_n and POPI_n, one per rank.

    In POPI_n the rank-d maximal subgroup is cyclic of order d, and trivial
    at rank 0.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    family = NamedInverseMonoid(family)

    if family == NamedInverseMonoid.SYMMETRIC_INVERSE:
        return [_symmetric_group_summary(binomial(n, i), i) for i in range(n + 1)]
    if family == NamedInverseMonoid.DUAL_SYMMETRIC_INVERSE:
        return [_symmetric_group_summary(stirling2(n, i), i) for i in range(1, n + 1)]
    if family == NamedInverseMonoid.POI:
        return [
            JClassSummary(n_lr=binomial(n, i), group_length=0, group_order=1)
            for i in range(n + 1)
        ]
    return [
        JClassSummary(
            n_lr=binomial(n, d),
            group_length=omega(d) if d >= 1 else 0,
            group_order=max(d, 1),
        )
        for d in range(n + 1)
    ]


def named_inverse_monoid_length(
    family: NamedInverseMonoid, n: int, starred: bool = False
) -> int:
    """
    l or l* of one of the named inverse monoids.

    Example:
        >>> named_inverse_monoid_length(NamedInverseMonoid.SYMMETRIC_INVERSE, 4)
        116
    """
    classes = named_inverse_monoid_summaries(family, n)
    if starred:
        return inverse_star_length(classes)
    return inverse_length(classes)


def family_order(family: NamedInverseMonoid, n: int) -> int:
    """The order of a named inverse monoid: the sum of n_i^2 |G_i|."""
    return sum(c.n_lr**2 * c.group_order for c in named_inverse_monoid_summaries(family, n))


def inverse_length_half_form(n: int) -> Fraction:
    """
    l(I_n) rearranged around half the order:
    |I_n|/2 + (n-1)/2 + sum_{i=2..n} C(n,i) (l(S_i) + 2 - i!/2).
    """
    order = family_order(NamedInverseMonoid.SYMMETRIC_INVERSE, n)
    total = Fraction(order, 2) + Fraction(n - 1, 2)
    for i in range(2, n + 1):
        total += binomial(n, i) * (length_symmetric(i) + 2 - Fraction(factorial(i), 2))
    return total


def null_length(m: int) -> int:
    """A null semigroup of order m has length m - 1."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return m - 1


def monogenic_length(m: int, r: int) -> int:
    """The monogenic semigroup of index m and period r has length m + omega(r) - 1."""
    if m < 1 or r < 1:
        raise ValueError(f"index and period must be positive, got m={m}, r={r}")
    return m + omega(r) - 1
