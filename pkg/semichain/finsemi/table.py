"""
Cayley tables, element subsets and the closure operator.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.errors import IndexOutOfRange, NonAssociative, NotClosed, TableValidationError


class CayleyTable:
    """
    A finite semigroup given by its multiplication table on 0-based indices.

    The table is stored as a read-only numpy array; per-element metadata
    (rows as Python lists, idempotents) is computed once on demand.

    Args:
        product: square table, `product[a][b]` is the index of a*b.
        labels: optional display strings, one per element.
        name: optional human readable name, e.g. "T_3".

    Example:
        >>> c2 = CayleyTable([[0, 1], [1, 0]], name="C_2")
        >>> c2.mul(1, 1)
        0
    """

    def __init__(
        self,
        product,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ):
        table = np.array(product, dtype=np.int64, copy=True)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise TableValidationError(
                f"multiplication table must be square, got shape {table.shape}"
            )
        if table.shape[0] < 1:
            raise TableValidationError("a semigroup table needs at least one element")
        table.setflags(write=False)
        self.product = table
        self.labels: Optional[Tuple[str, ...]] = (
            tuple(str(label) for label in labels) if labels is not None else None
        )
        if self.labels is not None and len(self.labels) != self.size:
            raise TableValidationError(
                f"expected {self.size} labels, got {len(self.labels)}"
            )
        self.name = name

    @property
    def size(self) -> int:
        return int(self.product.shape[0])

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return (
            self.size == other.size
            and bool(np.array_equal(self.product, other.product))
            and self.labels == other.labels
        )

    __hash__ = None

    def __repr__(self) -> str:
        name = self.name or "CayleyTable"
        return f"{name}(size={self.size})"

    def mul(self, a: int, b: int) -> int:
        return int(self.product[a, b])

    def label(self, x: int) -> str:
        if self.labels is None:
            return str(x)
        return self.labels[x]

    @cached_property
    def rows(self) -> List[List[int]]:
        """The table as nested Python lists, for tight scalar loops."""
        return self.product.tolist()

    @cached_property
    def idempotents(self) -> Tuple[int, ...]:
        diagonal = self.product[np.arange(self.size), np.arange(self.size)]
        return tuple(int(x) for x in np.flatnonzero(diagonal == np.arange(self.size)))

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.size) - 1


@dataclass(frozen=True)
class ElementSet:
    """
    A subset of the elements of one table, stored as a bit mask.

    `closed` records that the subset is known to be a subsemigroup; it does
    not take part in equality.
    """

    mask: int
    size: int
    closed: bool = field(default=False, compare=False)

    @classmethod
    def of(cls, size: int, members: Iterable[int], closed: bool = False) -> "ElementSet":
        mask = 0
        for x in members:
            if not 0 <= x < size:
                raise ValueError(f"element {x} is outside [0, {size})")
            mask |= 1 << x
        return cls(mask, size, closed)

    @classmethod
    def full(cls, size: int) -> "ElementSet":
        return cls((1 << size) - 1, size, True)

    def members(self) -> List[int]:
        return mask_members(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def issubset(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def union(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask | other.mask, self.size)

    def complement(self) -> "ElementSet":
        return ElementSet(((1 << self.size) - 1) & ~self.mask, self.size)


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_members(mask: int) -> List[int]:
    members = []
    index = 0
    while mask:
        if mask & 1:
            members.append(index)
        mask >>= 1
        index += 1
    return members


def validate_table(
    size: int, flat: Sequence[int], labels: Optional[Sequence[str]] = None
) -> CayleyTable:
    """
    Build a table from a flat row-major list and check that it is a semigroup.

    Args:
        size: the number of elements.
        flat: size*size entries.
        labels: optional per-element labels.

    Returns:
        CayleyTable: the validated table.

    Raises:
        TableValidationError: inconsistent dimensions.
        IndexOutOfRange: an entry outside [0, size).
        NonAssociative: with the first failing triple in (a, b, c) order.
    """
    if size < 1:
        raise TableValidationError(f"size must be at least 1, got {size}")
    if len(flat) != size * size:
        raise TableValidationError(
            f"expected {size * size} entries for size {size}, got {len(flat)}"
        )

    table = np.asarray(flat, dtype=np.int64).reshape(size, size)
    bad = np.argwhere((table < 0) | (table >= size))
    if len(bad):
        row, col = (int(v) for v in bad[0])
        raise IndexOutOfRange(row, col, int(table[row, col]), size)

    check_associative(table)
    return CayleyTable(table, labels=labels)


def check_associative(table: np.ndarray) -> None:
    """
    Raise NonAssociative unless (ab)c = a(bc) for all a, b, c.

    Runs one vectorised size x size comparison per left factor.
    """
    for a in range(table.shape[0]):
        # left[b, c] = (a*b)*c ; right[b, c] = a*(b*c)
        left = table[table[a], :]
        right = table[a][table]
        mismatch = np.argwhere(left != right)
        if len(mismatch):
            b, c = (int(v) for v in mismatch[0])
            raise NonAssociative(a, b, c, int(left[b, c]), int(right[b, c]))


def extend_closed(
    rows: List[List[int]],
    elements: List[int],
    mask: int,
    start: int,
    inverse_of: Optional[Sequence[int]] = None,
) -> Tuple[List[int], int]:
    """
    Close `elements` under multiplication, assuming elements[:start] is closed.

    Every element at position >= start is multiplied on both sides with every
    element up to its own position, and new products are appended, so on
    return all pairwise products lie in the list. With `inverse_of`, the
    inverse of each new element is added too.

    Returns:
        the completed element list and its mask.
    """
    if inverse_of is not None:
        for x in elements[start:]:
            y = inverse_of[x]
            if not mask >> y & 1:
                mask |= 1 << y
                elements.append(y)

    index = start
    while index < len(elements):
        x = elements[index]
        row_x = rows[x]
        for y in elements[: index + 1]:
            for p in (row_x[y], rows[y][x]):
                if not mask >> p & 1:
                    mask |= 1 << p
                    elements.append(p)
                    if inverse_of is not None:
                        q = inverse_of[p]
                        if not mask >> q & 1:
                            mask |= 1 << q
                            elements.append(q)
        index += 1
    return elements, mask


def closure(
    S: CayleyTable, seed: ElementSet, inverse_of: Optional[Sequence[int]] = None
) -> ElementSet:
    """
    The smallest subsemigroup of S containing `seed`.

    Args:
        S: the ambient table.
        seed: any subset of S.
        inverse_of: when given, close under this inversion map as well
            (the inverse subsemigroup generated by `seed`).

    Returns:
        ElementSet: flagged closed.
    """
    if seed.size != S.size:
        raise ValueError(f"seed lives in a table of size {seed.size}, not {S.size}")
    _, mask = extend_closed(S.rows, seed.members(), seed.mask, 0, inverse_of)
    return ElementSet(mask, S.size, closed=True)


def is_closed(S: CayleyTable, subset: ElementSet) -> bool:
    members = subset.members()
    if not members:
        return True
    products = S.product[np.ix_(members, members)]
    allowed = np.zeros(S.size, dtype=bool)
    allowed[members] = True
    return bool(allowed[products].all())


def subsemigroup_table(S: CayleyTable, subset: ElementSet) -> Tuple[CayleyTable, List[int]]:
    """
    Restrict S to a closed subset and re-index it in increasing order.

    Returns:
        the restricted table and the list mapping new indices to old ones.

    Raises:
        NotClosed: the subset is empty or not a subsemigroup.
    """
    members = subset.members()
    if not members:
        raise NotClosed("cannot restrict to the empty subset")
    if not is_closed(S, subset):
        raise NotClosed(f"subset {members} is not closed under multiplication")

    old_to_new = np.full(S.size, -1, dtype=np.int64)
    old_to_new[members] = np.arange(len(members))
    restricted = old_to_new[S.product[np.ix_(members, members)]]
    labels = [S.label(x) for x in members] if S.labels is not None else None
    return CayleyTable(restricted, labels=labels), members


def monogenic_index_period(S: CayleyTable, x: int) -> Tuple[int, int]:
    """
    The index m and period r of x: the least m, r >= 1 with x^(m+r) = x^m.
    """
    if not 0 <= x < S.size:
        raise ValueError(f"element {x} is outside [0, {S.size})")
    rows = S.rows
    seen = {}
    power, exponent = x, 1
    while power not in seen:
        seen[power] = exponent
        power = rows[power][x]
        exponent += 1
    m = seen[power]
    return m, exponent - m
