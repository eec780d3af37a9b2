"""
Lengths of finite groups.
"""

import math
from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field
from sympy import primeomega

from ..finsemi.classify import is_group
from ..finsemi.table import CayleyTable
from ..utils.errors import NotAGroup
from ..utils.logging import get_logger
from .structure import is_soluble, subgroup_chain_exact

logger = get_logger(__name__)


class GroupLengthMethod(str, Enum):
    SYMMETRIC_FORMULA = "symmetricFormula"
    SOLUBLE_OMEGA = "solubleOmega"
    EXACT_SEARCH = "exactSearch"


class GroupLengthResult(BaseModel):
    """The length of a group and how it was obtained."""

    length: int = Field(ge=0)
    method: GroupLengthMethod
    chain: Optional[List[List[int]]] = None


def omega(n: int) -> int:
    """
    The number of prime factors of n counted with multiplicity.

    Example:
        >>> omega(360)
        6
    """
    if n < 1:
        raise ValueError(f"omega is defined for n >= 1, got {n}")
    return int(primeomega(n))


def length_symmetric(n: int) -> int:
    """
    l(S_n) = ceil(3n/2) - b(n) - 1, where b(n) counts the ones in binary n.
    """
    if n < 1:
        raise ValueError(f"the symmetric group needs n >= 1, got {n}")
    return (3 * n + 1) // 2 - bin(n).count("1") - 1


def permutation_degree(G: CayleyTable) -> Optional[int]:
    """
    The degree n when the labels of G are exactly the permutations of 1..n
    and its products are their composites, else None.

    Tables built by `build_family` for `sym:n` carry such labels.
    """
    if G.labels is None or not G.labels[0].startswith("["):
        return None
    try:
        images = [[int(x) - 1 for x in label.strip("[]").split(",")] for label in G.labels]
    except ValueError:
        return None
    n = len(images[0])
    if G.size != math.factorial(n) or any(len(row) != n for row in images):
        return None
    perms = np.array(images, dtype=np.int64)
    if perms.min() < 0 or perms.max() >= n:
        return None
    if len({tuple(row) for row in images}) != G.size or any(
        len(set(row)) != n for row in images
    ):
        return None
    for f in range(G.size):
        # f*g applies f first, so its images are g(f(i))
        if not np.array_equal(perms[G.product[f]], perms[:, perms[f]]):
            return None
    return n


def group_length(G: CayleyTable, search_cap: int = 200) -> GroupLengthResult:
    """
    The length of the longest subgroup chain of a group table.

    Soluble groups satisfy l(G) = omega(|G|). Insoluble symmetric groups
    recognised by `permutation_degree` use the closed form; everything else
    goes through the exact subgroup enumeration.

    Args:
        G: a group table.
        search_cap: largest order handed to the exact search.

    Raises:
        NotAGroup: G is not a group.
        SearchTooLarge: G is insoluble and larger than `search_cap`.
    """
    if not is_group(G):
        raise NotAGroup(f"{G!r} is not a group")

    if is_soluble(G):
        return GroupLengthResult(
            length=omega(G.size), method=GroupLengthMethod.SOLUBLE_OMEGA
        )

    degree = permutation_degree(G)
    if degree is not None:
        logger.debug(f"{G!r} is the symmetric group of degree {degree}")
        return GroupLengthResult(
            length=length_symmetric(degree), method=GroupLengthMethod.SYMMETRIC_FORMULA
        )

    logger.info(f"{G!r} is insoluble, searching its subgroup lattice")
    length, chain = subgroup_chain_exact(G, search_cap=search_cap)
    return GroupLengthResult(
        length=length,
        method=GroupLengthMethod.EXACT_SEARCH,
        chain=[subgroup.members() for subgroup in chain],
    )
