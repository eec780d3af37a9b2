"""
Exception hierarchy of the semichain library.

Every error carries the process exit status the command line front end
returns for it.
"""

from typing import Tuple


class SemichainError(Exception):
    """
    Base class for all library errors.
    """

    exit_code = 1


class TableValidationError(SemichainError):
    """
    A multiplication table (or a subset of one) violates a structural requirement.
    """

    exit_code = 2


class NonAssociative(TableValidationError):
    """
    Raised with the first triple (a, b, c) for which (ab)c != a(bc).
    """

    def __init__(self, a: int, b: int, c: int, left: int, right: int):
        self.witness: Tuple[int, int, int] = (a, b, c)
        super().__init__(
            f"table is not associative: ({a}*{b})*{c} = {left} but "
            f"{a}*({b}*{c}) = {right}"
        )


class IndexOutOfRange(TableValidationError):
    def __init__(self, row: int, col: int, value: int, size: int):
        self.position = (row, col)
        super().__init__(
            f"entry [{row}][{col}] = {value} is outside [0, {size})"
        )


class NotClosed(TableValidationError):
    pass


class NotAnIdeal(TableValidationError):
    pass


class SizeCapExceeded(SemichainError):
    exit_code = 2

    def __init__(self, family: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(
            f"{family} has {size} elements, above the configured cap of {cap}; "
            "raise `size_cap` to build it"
        )


class UnsupportedFamily(SemichainError):
    exit_code = 2


class FamilyParseError(SemichainError):
    exit_code = 2


class NotInverse(SemichainError):
    exit_code = 2


class NotAGroup(SemichainError):
    exit_code = 2


class MissingExactValues(SemichainError):
    exit_code = 2


class TableTooLarge(SemichainError):
    exit_code = 2


class BudgetExceeded(SemichainError):
    """
    The exhaustive search hit its subsemigroup count or wall-clock limit.
    """

    exit_code = 3

    def __init__(self, enumerated: int, reason: str = "subsemigroup budget"):
        self.enumerated = enumerated
        super().__init__(
            f"{reason} exhausted after {enumerated} closed subsets; "
            "the instance is too large for the exact search"
        )


class SearchTooLarge(SemichainError):
    exit_code = 3


class NotDecomposable(SemichainError):
    """
    A principal factor matched no closed form and the exact search could not
    resolve it within budget.
    """

    exit_code = 4

    def __init__(self, description: str):
        self.description = description
        super().__init__(f"unresolved principal factor: {description}")
