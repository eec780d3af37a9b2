"""
GLSGraph Module
"""

from typing import Any, Dict, Optional

from ..nodes import GLSNode
from .abstract_graph import AbstractGraph
from .base_graph import BaseGraph


class GLSGraph(AbstractGraph):
    """
    GLSGraph reports the chain length bounds of the semigroup of all n x n
    matrices over GF(q).

    Example:
        >>> GLSGraph(3, 2).run().result["lower_bound"]["clamped"]
        9
    """

    command = "gls"

    def __init__(self, n: int, q: int, config: Optional[Dict[str, Any]] = None):
        self.n = n
        self.q = q

        super().__init__(config)

    def _create_graph(self) -> BaseGraph:
        gls_node = GLSNode(input="n & q", output=["result"])

        return BaseGraph(
            nodes=[gls_node],
            edges=[],
            entry_point=gls_node,
            graph_name=self.__class__.__name__,
        )

    def _inputs(self) -> Dict[str, Any]:
        return {"n": self.n, "q": self.q}
