"""
TransformationGraph Module
"""

from typing import Any, Dict, Optional

from ..nodes import LeagueCertificateNode, TransformationBoundsNode
from .abstract_graph import AbstractGraph
from .base_graph import BaseGraph


class TransformationGraph(AbstractGraph):
    """
    TransformationGraph reports the lower bounds for T_n that come from
    leagues and from its largest null subsemigroup.

    Example:
        >>> TransformationGraph(5).run().result["chain_lower_bound"]
        329
    """

    command = "tn"

    def __init__(self, n: int, config: Optional[Dict[str, Any]] = None, exact: bool = True):
        self.n = n
        self.exact = exact

        super().__init__(config)

    def _create_graph(self) -> BaseGraph:
        bounds_node = TransformationBoundsNode(
            input="n", output=["result"], node_config={"exact": self.exact}
        )

        return BaseGraph(
            nodes=[bounds_node],
            edges=[],
            entry_point=bounds_node,
            graph_name=self.__class__.__name__,
        )

    def _inputs(self) -> Dict[str, Any]:
        return {"n": self.n}

    def _echo(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        return {**inputs, "exact": self.exact}


class CertificateGraph(AbstractGraph):
    """
    CertificateGraph builds the chain of subsemigroups of T_n that the rank
    k bound league gives, and verifies it against the table of T_n.
    """

    command = "certificate"

    def __init__(self, n: int, k: int, config: Optional[Dict[str, Any]] = None):
        self.n = n
        self.k = k

        super().__init__(config)

    def _create_graph(self) -> BaseGraph:
        certificate_node = LeagueCertificateNode(input="n & k", output=["result"])

        return BaseGraph(
            nodes=[certificate_node],
            edges=[],
            entry_point=certificate_node,
            graph_name=self.__class__.__name__,
        )

    def _inputs(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k}

    def _diagnostics(self, state: dict):
        result = state["result"]
        if result["verified"]:
            return []
        return [{"check": "verify_chain", "violation": result["violation"]}]
