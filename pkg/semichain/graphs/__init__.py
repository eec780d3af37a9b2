"""
__init__.py file for graphs folder
"""

from .abstract_graph import AbstractGraph
from .base_graph import BaseGraph
from .classify_graph import ClassifyGraph
from .gls_graph import GLSGraph
from .league_graph import LeagueGraph
from .length_graph import LengthGraph
from .table_graph import TableGraph
from .transformation_graph import CertificateGraph, TransformationGraph

__all__ = [
    "AbstractGraph",
    "BaseGraph",
    "CertificateGraph",
    "ClassifyGraph",
    "GLSGraph",
    "LeagueGraph",
    "LengthGraph",
    "TableGraph",
    "TransformationGraph",
]
