"""
Structural predicates of a finite semigroup.
"""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from .table import CayleyTable, monogenic_index_period


class Classification(BaseModel):
    """
    Which of the standard classes a table belongs to.

    `inverse_of` maps each element to its unique inverse when the table is
    an inverse semigroup, and is None otherwise.
    """

    model_config = ConfigDict(frozen=True)

    regular: bool
    inverse: bool
    completely_regular: bool
    band: bool
    null: bool
    group: bool
    inverse_of: Optional[List[int]] = None


def _regular_witnesses(product: np.ndarray, x: int) -> np.ndarray:
    """Boolean mask of the y with x*y*x = x."""
    return product[product[x, :], x] == x


def is_regular(S: CayleyTable) -> bool:
    product = S.product
    return all(bool(_regular_witnesses(product, x).any()) for x in range(S.size))


def inverse_map(S: CayleyTable) -> Optional[List[int]]:
    """
    The map x -> x^-1 when every element has exactly one inverse, else None.
    """
    product = S.product
    elements = np.arange(S.size)
    inverses = []
    for x in range(S.size):
        # y is an inverse of x when xyx = x and yxy = y
        candidates = _regular_witnesses(product, x) & (
            product[product[:, x], elements] == elements
        )
        found = np.flatnonzero(candidates)
        if len(found) != 1:
            return None
        inverses.append(int(found[0]))
    return inverses


def zero_element(S: CayleyTable) -> Optional[int]:
    """The zero of S (z*x = x*z = z for all x), if there is one."""
    for z in range(S.size):
        if (S.product[z, :] == z).all() and (S.product[:, z] == z).all():
            return z
    return None


def is_null(S: CayleyTable) -> bool:
    first = S.product[0, 0]
    return bool((S.product == first).all())


def is_band(S: CayleyTable) -> bool:
    return len(S.idempotents) == S.size


def is_group(S: CayleyTable) -> bool:
    """A finite semigroup is a group exactly when it is cancellative, i.e. a Latin square."""
    expected = np.arange(S.size)
    rows = np.sort(S.product, axis=1)
    cols = np.sort(S.product, axis=0)
    return bool((rows == expected).all() and (cols == expected[:, None]).all())


def is_completely_regular(S: CayleyTable) -> bool:
    # x lies in a subgroup exactly when its index is 1
    return all(monogenic_index_period(S, x)[0] == 1 for x in range(S.size))


def classify(S: CayleyTable) -> Classification:
    """
    Decide the regular, inverse, completely regular, band, null and group
    predicates of a table by their definitions.

    Args:
        S: a validated table.

    Returns:
        Classification: the predicate record.
    """
    group = is_group(S)
    inverse_of = inverse_map(S)
    return Classification(
        regular=group or inverse_of is not None or is_regular(S),
        inverse=inverse_of is not None,
        completely_regular=group or is_completely_regular(S),
        band=is_band(S),
        null=is_null(S),
        group=group,
        inverse_of=inverse_of,
    )
