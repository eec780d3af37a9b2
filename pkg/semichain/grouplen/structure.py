"""
Subgroup structure of a group given by its Cayley table.
"""

from typing import List, Tuple

import numpy as np

from ..finsemi.lattice import enumerate_closed_subsets
from ..finsemi.table import CayleyTable, ElementSet, closure, is_closed, subsemigroup_table
from ..utils.errors import BudgetExceeded, NotAGroup, SearchTooLarge
from ..utils.logging import get_logger

logger = get_logger(__name__)


def identity_of(G: CayleyTable) -> int:
    idempotents = G.idempotents
    if len(idempotents) != 1:
        raise NotAGroup(f"{G!r} has {len(idempotents)} idempotents, a group has one")
    return idempotents[0]


def inverses_of(G: CayleyTable) -> List[int]:
    """x -> x^-1 for every element of a group table."""
    identity = identity_of(G)
    inverses = []
    for x in range(G.size):
        found = np.flatnonzero(G.product[x, :] == identity)
        if len(found) != 1:
            raise NotAGroup(f"element {x} of {G!r} has no unique inverse")
        inverses.append(int(found[0]))
    return inverses


def derived_subgroup(G: CayleyTable) -> ElementSet:
    """
    The commutator subgroup [G, G], generated by all x^-1 y^-1 x y.
    """
    inverse = np.array(inverses_of(G), dtype=np.int64)
    product = G.product
    # left[x, y] = x^-1 y^-1, which is then multiplied by product[x, y] = xy
    left = product[inverse[:, None], inverse[None, :]]
    commutators = np.unique(product[left, product])
    return closure(G, ElementSet.of(G.size, (int(c) for c in commutators)))


def is_soluble(G: CayleyTable) -> bool:
    """Whether the derived series of G reaches the trivial group."""
    current = G
    while current.size > 1:
        derived = derived_subgroup(current)
        if len(derived) == current.size:
            return False
        current, _ = subsemigroup_table(current, derived)
    return True


def is_normal(G: CayleyTable, N: ElementSet) -> bool:
    """Whether the subgroup N is closed under conjugation g^-1 N g."""
    members = N.members()
    if not members:
        return False
    inverse = inverses_of(G)
    allowed = np.zeros(G.size, dtype=bool)
    allowed[members] = True
    product = G.product
    for g in range(G.size):
        conjugates = product[product[inverse[g], members], g]
        if not allowed[conjugates].all():
            return False
    return True


def quotient_group(G: CayleyTable, N: ElementSet) -> CayleyTable:
    """
    The table of G/N on the cosets gN, ordered by their smallest member.

    Raises:
        ValueError: N is not a normal subgroup of G.
    """
    if not is_closed(G, N) or not is_normal(G, N):
        raise ValueError(f"{N.members()} is not a normal subgroup of {G!r}")

    members = N.members()
    coset_of = np.full(G.size, -1, dtype=np.int64)
    representatives = []
    for g in range(G.size):
        if coset_of[g] >= 0:
            continue
        coset_of[G.product[g, members]] = len(representatives)
        representatives.append(g)

    reps = np.array(representatives, dtype=np.int64)
    table = coset_of[G.product[np.ix_(reps, reps)]]
    return CayleyTable(table, name=f"{G.name or 'G'}/N")


def subgroup_chain_exact(
    G: CayleyTable, search_cap: int = 200, max_subsets: int = 250_000
) -> Tuple[int, List[ElementSet]]:
    """
    The longest chain of subgroups of G, by enumerating every subgroup.

    In a finite group the nonempty closed subsets are exactly the subgroups.

    Returns:
        (length, the chain from the trivial subgroup to G)

    Raises:
        SearchTooLarge: |G| exceeds `search_cap` or the enumeration budget.
    """
    if G.size > search_cap:
        raise SearchTooLarge(
            f"{G!r} has {G.size} elements; exact subgroup search is capped at {search_cap}"
        )
    try:
        lattice = enumerate_closed_subsets(G, max_subsets=max_subsets)
    except BudgetExceeded as e:
        raise SearchTooLarge(f"subgroup enumeration of {G!r} exceeded its budget") from e

    length, chain = lattice.longest_chain()
    logger.debug(f"{G!r}: {len(lattice)} subgroups, longest chain {length}")
    return length, [ElementSet(mask, G.size, closed=True) for mask in chain]
