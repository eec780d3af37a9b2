"""
Enumeration of the closed subsets of a table and longest chains among them.

The closed subsets are generated level by level: every known closed set X is
extended by each non-member e to closure(X + e). Any closed Y strictly above
X contains some such closure, so the resulting relation contains every
covering pair of the containment order and the longest path in it is the
longest chain of closed subsets.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..utils.concurrency import run_concurrently
from ..utils.errors import BudgetExceeded
from ..utils.logging import get_logger
from .table import CayleyTable, extend_closed, mask_members, popcount

logger = get_logger(__name__)


@dataclass
class ClosedSubsetLattice:
    """
    All nonempty closed subsets of a table (as masks) with, for each, the
    closures of its one-element extensions.
    """

    size: int
    masks: List[int]
    successors: Dict[int, Set[int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.masks)

    def longest_chain(self) -> Tuple[int, List[int]]:
        """
        Length and witness of a longest chain.

        The witness is the lexicographically smallest chain of maximum
        length, comparing subsets by their sorted member lists, so it does
        not depend on the discovery order.

        Returns:
            (length, masks from the bottom of the chain to its top)
        """
        if not self.masks:
            return -1, []

        height: Dict[int, int] = {}
        for mask in sorted(self.masks, key=popcount, reverse=True):
            above = self.successors.get(mask, ())
            height[mask] = 1 + max((height[y] for y in above), default=-1)

        def key(mask: int) -> List[int]:
            return mask_members(mask)

        best = max(height.values())
        current = min((m for m in self.masks if height[m] == best), key=key)
        chain = [current]
        while height[current] > 0:
            current = min(
                (y for y in self.successors[current] if height[y] == height[current] - 1),
                key=key,
            )
            chain.append(current)
        return best, chain


def _extend_all(
    rows: List[List[int]],
    full_mask: int,
    chunk: Sequence[int],
    inverse_of: Optional[Sequence[int]],
    deadline: float,
    enumerated: int,
) -> List[Tuple[int, Set[int]]]:
    results = []
    for mask in chunk:
        if time.monotonic() > deadline:
            raise BudgetExceeded(enumerated, "time budget")
        members = mask_members(mask)
        above: Set[int] = set()
        outside = full_mask & ~mask
        while outside:
            low = outside & -outside
            outside ^= low
            _, extended = extend_closed(
                rows, members + [low.bit_length() - 1], mask | low, len(members), inverse_of
            )
            above.add(extended)
        results.append((mask, above))
    return results


def enumerate_closed_subsets(
    S: CayleyTable,
    inverse_of: Optional[Sequence[int]] = None,
    max_subsets: int = 250_000,
    max_millis: int = 120_000,
    threads: int = 1,
    verbose: bool = False,
) -> ClosedSubsetLattice:
    """
    Enumerate every nonempty closed subset of S.

    With `inverse_of`, "closed" also means closed under that inversion map,
    which enumerates the inverse subsemigroups of an inverse semigroup.

    Args:
        S: the table.
        inverse_of: optional inversion map.
        max_subsets: give up once more closed subsets than this are known.
        max_millis: give up after this much wall-clock time.
        threads: frontier chunks processed concurrently.
        verbose: progress bars.

    Returns:
        ClosedSubsetLattice: the closed subsets and extension relation.

    Raises:
        BudgetExceeded: a limit was hit.
    """
    rows = S.rows
    full_mask = S.full_mask
    deadline = time.monotonic() + max_millis / 1000

    seen: Set[int] = set()
    for x in range(S.size):
        _, mask = extend_closed(rows, [x], 1 << x, 0, inverse_of)
        seen.add(mask)

    lattice = ClosedSubsetLattice(size=S.size, masks=[])
    frontier = sorted(seen)
    level = 0
    while frontier:
        lattice.masks.extend(frontier)
        chunk_count = max(1, min(len(frontier), threads * 4))
        chunks = [frontier[i::chunk_count] for i in range(chunk_count)]
        enumerated = len(seen)
        tasks = [
            (
                lambda chunk=chunk: _extend_all(
                    rows, full_mask, chunk, inverse_of, deadline, enumerated
                )
            )
            for chunk in chunks
        ]
        try:
            results = run_concurrently(
                tasks, threads=threads, desc=f"closing level {level}", verbose=verbose
            )
        except BudgetExceeded:
            logger.warning(f"Time budget of {max_millis} ms exhausted on {S!r}")
            raise

        discovered: Set[int] = set()
        for chunk_result in results:
            for mask, above in chunk_result:
                lattice.successors[mask] = above
                for y in above:
                    if y not in seen:
                        seen.add(y)
                        discovered.add(y)

        if len(seen) > max_subsets:
            logger.warning(
                f"Closed subset budget of {max_subsets} exhausted on {S!r}"
            )
            raise BudgetExceeded(len(seen), "subsemigroup budget")

        logger.debug(
            f"level {level}: {len(frontier)} closed subsets extended, "
            f"{len(discovered)} new, {len(seen)} known"
        )
        frontier = sorted(discovered)
        level += 1

    return lattice
