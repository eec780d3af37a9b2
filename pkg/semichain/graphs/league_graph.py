"""
LeagueGraph Module
"""

from typing import Any, Dict, Optional

from ..nodes import LeagueSearchNode
from .abstract_graph import AbstractGraph
from .base_graph import BaseGraph


class LeagueGraph(AbstractGraph):
    """
    LeagueGraph answers F(n, k) (or F*(n, k) with `interval`): the largest
    content of a league of rank k on {1..n}, with a witness league.

    With `exact=False` it reports the lower bound construction instead of
    searching. A search that runs out of budget is not an error; its
    result carries status `lowerBoundOnly`.

    Example:
        >>> LeagueGraph(5, 3, {"threads": 1}).run().result["optimum"]
        28
    """

    command = "league"

    def __init__(
        self,
        n: int,
        k: int,
        config: Optional[Dict[str, Any]] = None,
        exact: bool = True,
        interval: bool = False,
    ):
        self.n = n
        self.k = k
        self.exact = exact
        self.interval = interval

        super().__init__(config)

    def _create_graph(self) -> BaseGraph:
        league_search_node = LeagueSearchNode(
            input="n & k",
            output=["result"],
            node_config={
                "exact": self.exact,
                "interval": self.interval,
                "symmetry": self.config.get("symmetry"),
            },
        )

        return BaseGraph(
            nodes=[league_search_node],
            edges=[],
            entry_point=league_search_node,
            graph_name=self.__class__.__name__,
        )

    def _inputs(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k}

    def _echo(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        return {**inputs, "exact": self.exact, "interval": self.interval}
