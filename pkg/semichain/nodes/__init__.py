"""
__init__.py file for node folder module
"""

from .base_node import BaseNode
from .build_table_node import BuildTableNode
from .classify_node import ClassifyNode
from .conditional_node import ConditionalNode
from .decompose_node import DecomposeNode
from .formula_length_node import FormulaLengthNode
from .gls_node import GLSNode
from .league_certificate_node import LeagueCertificateNode
from .league_search_node import LeagueSearchNode
from .length_report_node import LengthReportNode
from .oracle_node import OracleNode
from .parse_family_node import ParseFamilyNode
from .reproduce_table_node import ReproduceTableNode
from .transformation_bounds_node import TransformationBoundsNode

__all__ = [
    "BaseNode",
    "BuildTableNode",
    "ClassifyNode",
    "ConditionalNode",
    "DecomposeNode",
    "FormulaLengthNode",
    "GLSNode",
    "LeagueCertificateNode",
    "LeagueSearchNode",
    "LengthReportNode",
    "OracleNode",
    "ParseFamilyNode",
    "ReproduceTableNode",
    "TransformationBoundsNode",
]
