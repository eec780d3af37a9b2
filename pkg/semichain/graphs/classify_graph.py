"""
ClassifyGraph Module
"""

from typing import Any, Dict, Optional

from ..nodes import BuildTableNode, ClassifyNode, ParseFamilyNode
from .abstract_graph import AbstractGraph
from .base_graph import BaseGraph
from .length_graph import SOURCE_KEYS


class ClassifyGraph(AbstractGraph):
    """
    ClassifyGraph builds the table of a family (or loads a table file) and
    reports its structural classes and Green's class counts.
    """

    command = "classify"

    def __init__(
        self,
        source: str,
        config: Optional[Dict[str, Any]] = None,
        source_key: str = "family",
    ):
        if source_key not in SOURCE_KEYS:
            raise ValueError(f"source_key must be one of {SOURCE_KEYS}, got '{source_key}'")
        self.source = source
        self.source_key = source_key

        super().__init__(config)

    def _create_graph(self) -> BaseGraph:
        parse_family_node = ParseFamilyNode(input="family", output=["family_spec"])
        build_table_node = BuildTableNode(
            input="family_spec | table_path | table_text", output=["table"]
        )
        classify_node = ClassifyNode(input="table", output=["result"])

        nodes = [build_table_node, classify_node]
        if self.source_key == "family":
            nodes.insert(0, parse_family_node)

        return BaseGraph(
            nodes=nodes,
            edges=list(zip(nodes, nodes[1:])),
            entry_point=nodes[0],
            graph_name=self.__class__.__name__,
        )

    def _inputs(self) -> Dict[str, Any]:
        return {self.source_key: self.source}
