"""
Set partitions of {1..n} and the transversal relation.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Sequence, Tuple


@dataclass(frozen=True)
class SetPartition:
    """
    A partition of {1..n} into blocks of 1-based points.

    Blocks are kept sorted internally and ordered by their smallest point,
    so equal partitions compare equal.
    """

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple(
            sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0)
        )
        if any(not block for block in normalized):
            raise ValueError("partition blocks must be nonempty")
        points = [p for block in normalized for p in block]
        if sorted(points) != list(range(1, len(points) + 1)):
            raise ValueError(f"blocks {self.blocks} do not partition 1..{len(points)}")
        object.__setattr__(self, "blocks", normalized)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Build from a block label per point (0-based points, any labels)."""
        grouped = {}
        for point, label in enumerate(labels):
            grouped.setdefault(label, []).append(point + 1)
        return cls(tuple(tuple(block) for block in grouped.values()))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        """Block index of each point, 0-based points."""
        labels = [0] * self.n
        for index, block in enumerate(self.blocks):
            for point in block:
                labels[point - 1] = index
        return tuple(labels)

    def is_interval(self) -> bool:
        return all(block[-1] - block[0] + 1 == len(block) for block in self.blocks)

    def to_lists(self) -> List[List[int]]:
        return [list(block) for block in self.blocks]


def _restricted_growth_strings(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Restricted growth strings of length n using exactly k values, in lex order."""
    word = [0] * n

    def extend(position: int, used: int) -> Iterator[Tuple[int, ...]]:
        if position == n:
            if used == k:
                yield tuple(word)
            return
        # the remaining points must still be able to open the missing blocks
        if k - used > n - position:
            return
        for value in range(min(used + 1, k)):
            word[position] = value
            yield from extend(position + 1, max(used, value + 1))

    if n == 0:
        if k == 0:
            yield ()
        return
    yield from extend(1, 1)


def enumerate_partitions(n: int, k: int, interval: bool = False) -> Iterator[SetPartition]:
    """
    Stream every k-partition of {1..n} exactly once.

    The general case walks restricted growth strings (S(n, k) partitions);
    the interval case picks k-1 dividers among the n-1 gaps
    (C(n-1, k-1) partitions).
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")

    if interval:
        for dividers in itertools.combinations(range(1, n), k - 1):
            bounds = (0,) + dividers + (n,)
            yield SetPartition(
                tuple(tuple(range(bounds[i] + 1, bounds[i + 1] + 1)) for i in range(k))
            )
        return

    for word in _restricted_growth_strings(n, k):
        yield SetPartition.from_labels(word)


def is_transversal(subset: Iterable[int], partition: SetPartition) -> bool:
    """
    True when `subset` (1-based points) meets every block exactly once.
    """
    points = list(subset)
    if len(points) != partition.block_count:
        raise ValueError(
            f"a transversal of a {partition.block_count}-partition has "
            f"{partition.block_count} points, got {len(points)}"
        )
    labels = partition.labels
    return len({labels[p - 1] for p in points}) == len(points)


def k_subsets(n: int, k: int) -> List[Tuple[int, ...]]:
    """All k-subsets of {1..n} in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), k))
