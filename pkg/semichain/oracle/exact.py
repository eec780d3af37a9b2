"""
Exact longest chains of subsemigroups and inverse subsemigroups, and the
check that a chain certificate is sound.
"""

from typing import Optional, Tuple

from pydantic import BaseModel

from ..finsemi.classify import inverse_map, is_null, zero_element
from ..finsemi.lattice import enumerate_closed_subsets
from ..finsemi.table import CayleyTable, ElementSet, is_closed
from ..utils.errors import NotInverse
from ..utils.logging import get_logger
from .models import CertificateKind, ChainCertificate, SearchBudget

logger = get_logger(__name__)

# predicted subsemigroup count from which a null table skips the enumeration
NULL_SHORTCUT_LOG2 = 20


def _null_chain(S: CayleyTable) -> Tuple[int, ChainCertificate]:
    """Every subset holding the zero is closed: add the rest one at a time."""
    zero = zero_element(S)
    others = [x for x in range(S.size) if x != zero]
    subsets = [[zero]]
    for x in others:
        subsets.append(sorted(subsets[-1] + [x]))
    return S.size - 1, ChainCertificate(subsets=subsets)


def longest_chain_exact(
    S: CayleyTable, budget: Optional[SearchBudget] = None, verbose: bool = False
) -> Tuple[int, ChainCertificate]:
    """
    l(S): the longest chain of nonempty subsemigroups, minus one.

    All closed subsets are enumerated and the longest path through the
    containment order is read off. Null tables with at least 2^20 predicted
    subsemigroups short-circuit to |S| - 1.

    Args:
        S: a validated table.
        budget: search limits; defaults apply when None.
        verbose: progress bars.

    Returns:
        (length, witness chain)

    Raises:
        BudgetExceeded: the enumeration hit a limit.
    """
    budget = budget or SearchBudget()

    if is_null(S) and S.size - 1 >= NULL_SHORTCUT_LOG2:
        logger.info(f"{S!r} is null, using l = |S| - 1")
        return _null_chain(S)

    lattice = enumerate_closed_subsets(
        S,
        max_subsets=budget.max_subsemigroups,
        max_millis=budget.max_millis,
        threads=budget.threads,
        verbose=verbose,
    )
    length, masks = lattice.longest_chain()
    logger.info(f"{S!r}: {len(lattice)} subsemigroups, longest chain {length}")
    return length, ChainCertificate.from_masks(masks)


def longest_inverse_chain_exact(
    S: CayleyTable, budget: Optional[SearchBudget] = None, verbose: bool = False
) -> Tuple[int, ChainCertificate]:
    """
    l*(S): the same search over subsets closed under products and inverses.

    Raises:
        NotInverse: S is not an inverse semigroup.
        BudgetExceeded: the enumeration hit a limit.
    """
    budget = budget or SearchBudget()
    inverse_of = inverse_map(S)
    if inverse_of is None:
        raise NotInverse(f"{S!r} is not an inverse semigroup")

    lattice = enumerate_closed_subsets(
        S,
        inverse_of=inverse_of,
        max_subsets=budget.max_subsemigroups,
        max_millis=budget.max_millis,
        threads=budget.threads,
        verbose=verbose,
    )
    length, masks = lattice.longest_chain()
    logger.info(f"{S!r}: {len(lattice)} inverse subsemigroups, longest chain {length}")
    return length, ChainCertificate.from_masks(masks, CertificateKind.INVERSE_SUBSEMIGROUP)


class ChainVerification(BaseModel):
    valid: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.valid


def verify_chain(S: CayleyTable, certificate: ChainCertificate) -> ChainVerification:
    """
    Check a certificate against S: nonempty, closed (and inverse-closed for
    inverse chains) and strictly increasing subsets. Reports the first
    violation found.
    """

    def fail(message: str) -> ChainVerification:
        logger.debug(f"chain rejected: {message}")
        return ChainVerification(valid=False, violation=message)

    inverse_of = None
    if certificate.kind == CertificateKind.INVERSE_SUBSEMIGROUP:
        inverse_of = inverse_map(S)
        if inverse_of is None:
            return fail("inverse chain over a table that is not an inverse semigroup")

    previous: Optional[ElementSet] = None
    for position, members in enumerate(certificate.subsets):
        if not members:
            return fail(f"subset {position} is empty")
        if any(not 0 <= x < S.size for x in members):
            return fail(f"subset {position} has an element outside [0, {S.size})")
        subset = ElementSet.of(S.size, members)
        if len(subset) != len(members):
            return fail(f"subset {position} repeats an element")
        if not is_closed(S, subset):
            return fail(f"subset {position} is not closed under multiplication")
        if inverse_of is not None and any(inverse_of[x] not in subset for x in members):
            return fail(f"subset {position} is not closed under inverses")
        if previous is not None and (
            not previous.issubset(subset) or previous.mask == subset.mask
        ):
            return fail(f"subset {position} does not strictly contain subset {position - 1}")
        previous = subset

    return ChainVerification(valid=True)
