"""
Length by decomposition into principal factors.

For an ideal I of S, l(S) = l(I) + l(S/I). Walking a principal series this
gives l(S) = l(J_1*) + ... + l(J_m*) - 1 over the J-classes, and each
principal factor is resolved by a closed form when it has a recognisable
shape, by the exact search otherwise.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ..finsemi.classify import classify
from ..finsemi.greens import GreensStructure, greens_structure, h_class_group, principal_factor
from ..finsemi.table import CayleyTable, ElementSet, subsemigroup_table
from ..formulas.bands import completely_regular_length
from ..formulas.inverse import brandt_length
from ..grouplen.length import group_length
from ..utils.errors import BudgetExceeded, NotDecomposable, SearchTooLarge
from ..utils.logging import get_logger
from .exact import longest_chain_exact
from .models import SearchBudget

logger = get_logger(__name__)


class DecompositionRule(str, Enum):
    TRIVIAL = "trivial"
    NULL = "null"
    GROUP = "group"
    GROUP_WITH_ZERO = "groupWithZero"
    BRANDT = "brandt"
    COMPLETELY_SIMPLE = "completelySimple"
    ORACLE = "oracle"
    REGULAR_SUM = "regularSum"
    IDEAL_PEEL = "idealPeel"


class DecompositionStep(BaseModel):
    """One node of the decomposition trace."""

    description: str
    rule: DecompositionRule
    size: int = Field(ge=1)
    length: int = Field(ge=0)
    children: List["DecompositionStep"] = Field(default_factory=list)


class _Decomposer:
    def __init__(self, budget: SearchBudget, group_search_cap: int):
        self.budget = budget
        self.group_search_cap = group_search_cap

    def group_length(self, G: CayleyTable, description: str) -> int:
        try:
            return group_length(G, search_cap=self.group_search_cap).length
        except SearchTooLarge as e:
            raise NotDecomposable(f"{description}: maximal subgroup of order {G.size}") from e

    def oracle(self, T: CayleyTable, description: str) -> DecompositionStep:
        try:
            length, _ = longest_chain_exact(T, self.budget)
        except BudgetExceeded as e:
            raise NotDecomposable(f"{description} ({T.size} elements)") from e
        return DecompositionStep(
            description=description, rule=DecompositionRule.ORACLE, size=T.size, length=length
        )

    def factor(self, S: CayleyTable, greens: GreensStructure, j: int) -> DecompositionStep:
        """l(J*) for the J-class j of S."""
        members = greens.j_members[j].members()
        description = f"J{j}* of {S.name or 'S'} ({len(members)} + 1 elements)"
        size = len(members) + 1
        rows = S.rows
        member_set = set(members)
        products = [rows[x][y] for x in members for y in members]
        closed = all(p in member_set for p in products)

        if not any(p in member_set for p in products):
            # every product of J falls out of J
            return DecompositionStep(
                description=description, rule=DecompositionRule.NULL, size=size, length=size - 1
            )

        group = h_class_group(S, greens, j)
        if group is not None:
            n_l = len(greens.l_classes_in(j))
            n_r = len(greens.r_classes_in(j))
            idempotents = sum(1 for e in S.idempotents if e in member_set)
            if n_l == n_r == 1:
                length = self.group_length(group, description) + 1
                return DecompositionStep(
                    description=description,
                    rule=DecompositionRule.GROUP_WITH_ZERO,
                    size=size,
                    length=length,
                )
            if n_l == n_r == idempotents:
                # one idempotent per L- and R-class: a Brandt semigroup
                length = brandt_length(self.group_length(group, description), group.size, n_l)
                return DecompositionStep(
                    description=description, rule=DecompositionRule.BRANDT, size=size, length=length
                )
            if closed:
                # J is completely simple; the adjoined zero adds one
                length = (
                    completely_regular_length(n_l, n_r, 1, [self.group_length(group, description)])
                    + 1
                )
                return DecompositionStep(
                    description=description,
                    rule=DecompositionRule.COMPLETELY_SIMPLE,
                    size=size,
                    length=length,
                )

        return self.oracle(principal_factor(S, j, greens), description)

    def decompose(self, S: CayleyTable, description: str) -> DecompositionStep:
        if S.size == 1:
            return DecompositionStep(
                description=description, rule=DecompositionRule.TRIVIAL, size=1, length=0
            )

        kind = classify(S)
        if kind.null:
            return DecompositionStep(
                description=description, rule=DecompositionRule.NULL, size=S.size, length=S.size - 1
            )
        if kind.group:
            return DecompositionStep(
                description=description,
                rule=DecompositionRule.GROUP,
                size=S.size,
                length=self.group_length(S, description),
            )

        greens = greens_structure(S)
        if kind.regular:
            children = [self.factor(S, greens, j) for j in range(greens.j_count)]
            logger.debug(f"{description}: {len(children)} principal factors")
            return DecompositionStep(
                description=description,
                rule=DecompositionRule.REGULAR_SUM,
                size=S.size,
                length=sum(child.length for child in children) - 1,
                children=children,
            )

        # S minus a maximal J-class is an ideal I, and S/I is that class's factor
        top = min(greens.maximal_j_classes())
        ideal = greens.j_members[top].complement()
        ideal_table, _ = subsemigroup_table(S, ElementSet(ideal.mask, S.size))
        lower = self.decompose(ideal_table, f"{description} without J{top}")
        upper = self.factor(S, greens, top)
        return DecompositionStep(
            description=description,
            rule=DecompositionRule.IDEAL_PEEL,
            size=S.size,
            length=lower.length + upper.length,
            children=[lower, upper],
        )


def decompose_length(
    S: CayleyTable,
    budget: Optional[SearchBudget] = None,
    group_search_cap: int = 200,
) -> Tuple[int, DecompositionStep]:
    """
    l(S) through ideals and principal factors.

    Regular tables sum their principal factors; other tables peel a maximal
    J-class off and recurse on the ideal left behind. Principal factors that
    are null, groups with zero, Brandt or completely simple with a zero use
    closed forms; anything else goes to the exact search under `budget`.

    Returns:
        (length, trace)

    Raises:
        NotDecomposable: a factor has no closed form and the exact search
            ran out of budget.
    """
    trace = _Decomposer(budget or SearchBudget(), group_search_cap).decompose(
        S, S.name or "S"
    )
    return trace.length, trace
