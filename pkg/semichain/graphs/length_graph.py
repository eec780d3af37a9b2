"""
LengthGraph Module
"""

from typing import Any, Dict, Optional

from ..nodes import (
    BuildTableNode,
    ConditionalNode,
    DecomposeNode,
    FormulaLengthNode,
    LengthReportNode,
    OracleNode,
    ParseFamilyNode,
)
from .abstract_graph import AbstractGraph
from .base_graph import BaseGraph

METHODS = ("auto", "formula", "decompose", "oracle")
SOURCE_KEYS = ("family", "table_path", "table_text")


class LengthGraph(AbstractGraph):
    """
    LengthGraph computes l(S), or l*(S) with `starred`, for a named family or
    a table file.

    With `method="auto"` the pipeline tries the closed form of a recognised
    family, then the principal factor decomposition, then the exhaustive
    search, moving on whenever a step leaves `length` unset. The other
    methods run one step and fail when it cannot answer.

    Attributes:
        source (str): family string, table path or table text.
        source_key (str): which of those `source` is.
        method (str): one of `auto`, `formula`, `decompose`, `oracle`.
        starred (bool): chains of inverse subsemigroups.

    Args:
        source (str): the semigroup.
        config (dict): configuration parameters for the graph.
        method (str): how to compute the length.
        starred (bool): compute l* instead of l.
        source_key (str): "family" (default), "table_path" or "table_text".

    Example:
        >>> envelope = LengthGraph("I:2", {"verbose": False}, method="formula").run()
        >>> envelope.result["length"]
        6
    """

    command = "length"

    def __init__(
        self,
        source: str,
        config: Optional[Dict[str, Any]] = None,
        method: str = "auto",
        starred: bool = False,
        source_key: str = "family",
    ):
        if method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got '{method}'")
        if source_key not in SOURCE_KEYS:
            raise ValueError(f"source_key must be one of {SOURCE_KEYS}, got '{source_key}'")
        if method == "formula" and source_key != "family":
            raise ValueError("the formula method needs a family, not a table")
        if method == "decompose" and starred:
            raise ValueError("the decomposition computes l, not l*")

        self.source = source
        self.source_key = source_key
        self.method = method
        self.starred = starred

        super().__init__(config)

    def _create_graph(self) -> BaseGraph:
        """
        Creates the graph of nodes for the selected method.

        Returns:
            BaseGraph: the length pipeline.
        """
        required = self.method != "auto"
        family = self.source_key == "family"

        parse_family_node = ParseFamilyNode(input="family", output=["family_spec"])
        formula_length_node = FormulaLengthNode(
            input="family_spec",
            output=["length", "method"],
            node_config={"starred": self.starred, "required": required},
        )
        build_table_node = BuildTableNode(
            input="family_spec | table_path | table_text", output=["table"]
        )
        decompose_node = DecomposeNode(
            input="table",
            output=["length", "method", "trace"],
            node_config={"required": required},
        )
        oracle_node = OracleNode(
            input="table",
            output=["length", "method", "certificate"],
            node_config={"starred": self.starred},
        )
        report_node = LengthReportNode(
            input="length",
            output=["result"],
            node_config={"starred": self.starred},
        )
        formula_found_node = ConditionalNode(
            input="length | family_spec",
            output=[],
            node_name="FormulaFound",
            node_config={"key_name": "length"},
        )
        decompose_found_node = ConditionalNode(
            input="length | table",
            output=[],
            node_name="DecomposeFound",
            node_config={"key_name": "length"},
        )

        if self.method == "formula":
            nodes = [parse_family_node, formula_length_node, report_node]
        elif self.method == "decompose":
            nodes = [build_table_node, decompose_node, report_node]
        elif self.method == "oracle":
            nodes = [build_table_node, oracle_node, report_node]
        else:
            nodes = None

        if nodes is not None:
            if family and nodes[0] is not parse_family_node:
                nodes.insert(0, parse_family_node)
            edges = list(zip(nodes, nodes[1:]))
            return BaseGraph(
                nodes=nodes,
                edges=edges,
                entry_point=nodes[0],
                graph_name=self.__class__.__name__,
            )

        # auto: formula, then decomposition (l only), then the exhaustive search
        nodes, edges = [], []
        if family:
            nodes += [parse_family_node, formula_length_node, formula_found_node]
            edges += [
                (parse_family_node, formula_length_node),
                (formula_length_node, formula_found_node),
                (formula_found_node, report_node),
                (formula_found_node, build_table_node),
            ]
        nodes.append(build_table_node)
        if self.starred:
            edges.append((build_table_node, oracle_node))
        else:
            nodes += [decompose_node, decompose_found_node]
            edges += [
                (build_table_node, decompose_node),
                (decompose_node, decompose_found_node),
                (decompose_found_node, report_node),
                (decompose_found_node, oracle_node),
            ]
        nodes += [oracle_node, report_node]
        edges.append((oracle_node, report_node))

        return BaseGraph(
            nodes=nodes,
            edges=edges,
            entry_point=nodes[0],
            graph_name=self.__class__.__name__,
        )

    def _inputs(self) -> Dict[str, Any]:
        return {self.source_key: self.source}

    def _echo(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        return {**inputs, "method": self.method, "starred": self.starred}
