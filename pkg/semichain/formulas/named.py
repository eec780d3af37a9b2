"""
Closed-form lengths of the named families, read off a FamilySpec without
building the table.
"""

from typing import Optional

from ..finsemi.families import FamilyKind, FamilySpec
from ..grouplen.length import group_length, length_symmetric, omega
from .bands import completely_regular_length, free_band_length
from .inverse import (
    NamedInverseMonoid,
    brandt_length,
    inverse_star_brandt,
    monogenic_length,
    named_inverse_monoid_length,
    null_length,
)

_NAMED_INVERSE = {
    FamilyKind.SYMMETRIC_INVERSE: NamedInverseMonoid.SYMMETRIC_INVERSE,
    FamilyKind.POI: NamedInverseMonoid.POI,
    FamilyKind.POPI: NamedInverseMonoid.POPI,
}


def family_length(
    spec: FamilySpec, starred: bool = False, group_search_cap: int = 200
) -> Optional[int]:
    """
    l (or l* with `starred`) of a family member when a closed form covers it.

    Groups have l* = l since their inverse subsemigroups are the subgroups.
    Families with no closed form (T_n, O_n) and starred lengths of families
    that are not inverse semigroups give None.

    Raises:
        SearchTooLarge: the group of a Brandt or Rees matrix family is
            insoluble and above `group_search_cap`.

    Example:
        >>> family_length(FamilySpec.symmetric_inverse(2))
        6
    """
    kind = spec.kind

    if kind in _NAMED_INVERSE:
        return named_inverse_monoid_length(_NAMED_INVERSE[kind], spec.n, starred=starred)
    if kind == FamilyKind.CYCLIC_GROUP:
        return omega(spec.n)
    if kind == FamilyKind.SYMMETRIC_GROUP:
        return length_symmetric(spec.n)
    if kind == FamilyKind.BRANDT:
        lG = group_length(spec.group, search_cap=group_search_cap).length
        if starred:
            # the zero class adds 1 and the outer -1 takes it back
            return inverse_star_brandt(lG, spec.n)
        return brandt_length(lG, spec.group.size, spec.n)

    if starred:
        # the rest are inverse only in degenerate cases
        if kind == FamilyKind.NULL and spec.m == 1:
            return 0
        if kind == FamilyKind.MONOGENIC and spec.m == 1:
            return omega(spec.r)
        return None

    if kind == FamilyKind.NULL:
        return null_length(spec.m)
    if kind == FamilyKind.MONOGENIC:
        return monogenic_length(spec.m, spec.r)
    if kind == FamilyKind.FREE_BAND_2:
        return free_band_length(2)
    if kind == FamilyKind.REES_MATRIX:
        lG = group_length(spec.group, search_cap=group_search_cap).length
        return completely_regular_length(spec.rows, spec.cols, 1, [lG])
    return None
