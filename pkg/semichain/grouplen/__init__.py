"""
__init__.py file for grouplen folder
"""

from .length import (
    GroupLengthMethod,
    GroupLengthResult,
    group_length,
    length_symmetric,
    omega,
    permutation_degree,
)
from .structure import (
    derived_subgroup,
    identity_of,
    inverses_of,
    is_normal,
    is_soluble,
    quotient_group,
    subgroup_chain_exact,
)

__all__ = [
    "GroupLengthMethod",
    "GroupLengthResult",
    "derived_subgroup",
    "group_length",
    "identity_of",
    "inverses_of",
    "is_normal",
    "is_soluble",
    "length_symmetric",
    "omega",
    "permutation_degree",
    "quotient_group",
    "subgroup_chain_exact",
]
