"""
__init__.py file for finsemi folder
"""

from .classify import Classification, classify, inverse_map, is_group, zero_element
from .families import FamilyKind, FamilySpec, build_family, parse_family, parse_group
from .greens import (
    GreensStructure,
    greens_structure,
    h_class_group,
    ideals,
    is_ideal,
    principal_factor,
    rees_quotient,
)
from .io import CayleyTableModel, dumps_table, load_table, loads_table
from .lattice import ClosedSubsetLattice, enumerate_closed_subsets
from .table import (
    CayleyTable,
    ElementSet,
    closure,
    is_closed,
    monogenic_index_period,
    subsemigroup_table,
    validate_table,
)

__all__ = [
    "CayleyTable",
    "CayleyTableModel",
    "Classification",
    "ClosedSubsetLattice",
    "ElementSet",
    "FamilyKind",
    "FamilySpec",
    "GreensStructure",
    "build_family",
    "classify",
    "closure",
    "dumps_table",
    "enumerate_closed_subsets",
    "greens_structure",
    "h_class_group",
    "ideals",
    "inverse_map",
    "is_closed",
    "is_group",
    "is_ideal",
    "load_table",
    "loads_table",
    "monogenic_index_period",
    "parse_family",
    "parse_group",
    "principal_factor",
    "rees_quotient",
    "subsemigroup_table",
    "validate_table",
    "zero_element",
]
