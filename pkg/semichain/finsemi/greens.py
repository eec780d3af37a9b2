"""
Green's relations of a finite semigroup.

Two elements are R-related when they generate the same principal right ideal
xS^1, that is when each is reachable from the other by right multiplication.
The same holds for L (left multiplication) and J (both sides), so every class
is a strongly connected component of a Cayley digraph. The identity of S^1 is
never materialised: each vertex reaches itself trivially.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..utils.errors import NotAnIdeal
from ..utils.logging import get_logger
from .table import CayleyTable, ElementSet, subsemigroup_table

logger = get_logger(__name__)


@dataclass(frozen=True)
class GreensStructure:
    """
    L, R, H and J classes of one table plus the order on J-classes.

    Class ids are assigned in increasing order of the smallest member.
    `j_below[j]` is the set of J-class ids strictly below j, i.e. the ids
    whose members lie in the principal ideal of j.
    """

    size: int
    l_class_of: Tuple[int, ...]
    r_class_of: Tuple[int, ...]
    h_class_of: Tuple[int, ...]
    j_class_of: Tuple[int, ...]
    j_below: Tuple[FrozenSet[int], ...]
    j_members: Tuple[ElementSet, ...]

    @property
    def j_count(self) -> int:
        return len(self.j_members)

    @property
    def l_count(self) -> int:
        return max(self.l_class_of) + 1

    @property
    def r_count(self) -> int:
        return max(self.r_class_of) + 1

    @property
    def h_count(self) -> int:
        return max(self.h_class_of) + 1

    def j_class(self, x: int) -> int:
        return self.j_class_of[x]

    def is_below(self, lower: int, upper: int) -> bool:
        """True when J-class `lower` lies strictly below J-class `upper`."""
        return lower in self.j_below[upper]

    def l_classes_in(self, j: int) -> FrozenSet[int]:
        return frozenset(self.l_class_of[x] for x in self.j_members[j])

    def r_classes_in(self, j: int) -> FrozenSet[int]:
        return frozenset(self.r_class_of[x] for x in self.j_members[j])

    def h_classes_in(self, j: int) -> FrozenSet[int]:
        return frozenset(self.h_class_of[x] for x in self.j_members[j])

    @cached_property
    def j_above(self) -> Tuple[FrozenSet[int], ...]:
        above: List[set] = [set() for _ in range(self.j_count)]
        for upper, lowers in enumerate(self.j_below):
            for lower in lowers:
                above[lower].add(upper)
        return tuple(frozenset(ids) for ids in above)

    def maximal_j_classes(self) -> List[int]:
        return [j for j in range(self.j_count) if not self.j_above[j]]

    def minimal_j_classes(self) -> List[int]:
        return [j for j in range(self.j_count) if not self.j_below[j]]

    def class_counts(self) -> Dict[str, int]:
        return {
            "L": self.l_count,
            "R": self.r_count,
            "H": self.h_count,
            "J": self.j_count,
        }


def _cayley_digraph(S: CayleyTable, side: str) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(S.size))
    product = S.product
    for x in range(S.size):
        if side in ("right", "both"):
            graph.add_edges_from((x, int(y)) for y in np.unique(product[x, :]))
        if side in ("left", "both"):
            graph.add_edges_from((x, int(y)) for y in np.unique(product[:, x]))
    return graph


def _class_ids(components: List[set], size: int) -> Tuple[int, ...]:
    ordered = sorted(components, key=min)
    class_of = [0] * size
    for index, component in enumerate(ordered):
        for x in component:
            class_of[x] = index
    return tuple(class_of)


def greens_structure(S: CayleyTable) -> GreensStructure:
    """
    Compute the Green's structure of a table.

    Args:
        S: a validated table.

    Returns:
        GreensStructure: the L/R/H/J partitions and the J-order.

    Example:
        >>> greens_structure(build_family(FamilySpec.full_transformation(2))).j_count
        2
    """
    right = _cayley_digraph(S, "right")
    left = _cayley_digraph(S, "left")
    both = _cayley_digraph(S, "both")

    r_class_of = _class_ids(list(nx.strongly_connected_components(right)), S.size)
    l_class_of = _class_ids(list(nx.strongly_connected_components(left)), S.size)

    j_components = sorted(nx.strongly_connected_components(both), key=min)
    j_class_of = _class_ids(j_components, S.size)

    h_keys: Dict[Tuple[int, int], int] = {}
    h_class_of = []
    for x in range(S.size):
        key = (l_class_of[x], r_class_of[x])
        h_class_of.append(h_keys.setdefault(key, len(h_keys)))

    condensed = nx.condensation(both, scc=j_components)
    # condensation node i is j_components[i], which is J-class id i
    j_below = tuple(
        frozenset(nx.descendants(condensed, j)) for j in range(len(j_components))
    )
    j_members = tuple(
        ElementSet.of(S.size, component) for component in j_components
    )

    logger.debug(
        f"Green's structure of {S!r}: {len(j_components)} J-classes, "
        f"{max(l_class_of) + 1} L-classes, {max(r_class_of) + 1} R-classes"
    )

    return GreensStructure(
        size=S.size,
        l_class_of=l_class_of,
        r_class_of=r_class_of,
        h_class_of=tuple(h_class_of),
        j_class_of=j_class_of,
        j_below=j_below,
        j_members=j_members,
    )


def principal_factor(
    S: CayleyTable, j_class: int, greens: Optional[GreensStructure] = None
) -> CayleyTable:
    """
    The principal factor J* of a J-class: J with a zero adjoined.

    Products leaving J are sent to the zero, which is the last element of
    the result. The zero is adjoined even when J is the minimal ideal.
    """
    greens = greens or greens_structure(S)
    if not 0 <= j_class < greens.j_count:
        raise ValueError(f"J-class id {j_class} is outside [0, {greens.j_count})")

    members = greens.j_members[j_class].members()
    zero = len(members)
    position = np.full(S.size, zero, dtype=np.int64)
    position[members] = np.arange(len(members))

    factor = np.full((zero + 1, zero + 1), zero, dtype=np.int64)
    factor[:zero, :zero] = position[S.product[np.ix_(members, members)]]

    labels = None
    if S.labels is not None:
        labels = [S.label(x) for x in members] + ["0"]
    return CayleyTable(factor, labels=labels, name=f"J{j_class}*")


def is_ideal(S: CayleyTable, subset: ElementSet) -> bool:
    """True when `subset` is nonempty with S*I and I*S inside I."""
    members = subset.members()
    if not members:
        return False
    allowed = np.zeros(S.size, dtype=bool)
    allowed[members] = True
    return bool(
        allowed[S.product[:, members]].all() and allowed[S.product[members, :]].all()
    )


def rees_quotient(S: CayleyTable, ideal: ElementSet) -> CayleyTable:
    """
    The Rees quotient S/I: I collapses to a zero placed after S minus I.

    Raises:
        NotAnIdeal: `ideal` is empty or not a two-sided ideal.
    """
    if not is_ideal(S, ideal):
        raise NotAnIdeal(f"subset {ideal.members()} is not an ideal of {S!r}")

    rest = ideal.complement().members()
    zero = len(rest)
    position = np.full(S.size, zero, dtype=np.int64)
    position[rest] = np.arange(len(rest))

    quotient = np.full((zero + 1, zero + 1), zero, dtype=np.int64)
    if rest:
        quotient[:zero, :zero] = position[S.product[np.ix_(rest, rest)]]

    labels = None
    if S.labels is not None:
        labels = [S.label(x) for x in rest] + ["0"]
    return CayleyTable(quotient, labels=labels)


def _down_sets(greens: GreensStructure) -> Iterator[int]:
    """Yield the masks of all nonempty down-closed unions of J-classes."""
    # a linear extension: classes with smaller down-sets first
    order = sorted(range(greens.j_count), key=lambda j: (len(greens.j_below[j]), j))
    class_masks = [greens.j_members[j].mask for j in range(greens.j_count)]

    def extend(position: int, chosen: FrozenSet[int], mask: int):
        if position == len(order):
            if mask:
                yield mask
            return
        j = order[position]
        yield from extend(position + 1, chosen, mask)
        if greens.j_below[j] <= chosen:
            yield from extend(position + 1, chosen | {j}, mask | class_masks[j])

    yield from extend(0, frozenset(), 0)


def ideals(S: CayleyTable, greens: Optional[GreensStructure] = None) -> List[ElementSet]:
    """
    Every nonempty two-sided ideal of S, ordered by size then members.
    """
    greens = greens or greens_structure(S)
    masks = set(_down_sets(greens))
    result = [ElementSet(mask, S.size, closed=True) for mask in masks]
    result.sort(key=lambda subset: (len(subset), subset.members()))
    return result


def h_class_group(
    S: CayleyTable, greens: GreensStructure, j_class: int
) -> Optional[CayleyTable]:
    """
    The maximal subgroup inside a J-class: the H-class of its smallest
    idempotent, or None when the J-class holds no idempotent.
    """
    members = greens.j_members[j_class]
    idempotents = [e for e in S.idempotents if e in members]
    if not idempotents:
        return None

    h_id = greens.h_class_of[idempotents[0]]
    h_mask = 0
    for x in members:
        if greens.h_class_of[x] == h_id:
            h_mask |= 1 << x
    group, _ = subsemigroup_table(S, ElementSet(h_mask, S.size))
    return group


