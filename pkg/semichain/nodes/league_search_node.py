"""
LeagueSearchNode Module
"""

from typing import List, Optional

from ..leagues.bounds import (
    closed_form_F,
    closed_form_F_witness,
    closed_form_Fstar,
    closed_form_Fstar_witness,
    league_lb,
    league_lb_witness,
)
from ..leagues.search import LeagueSearchResult, SearchStatus, max_content_exact
from .base_node import BaseNode


class LeagueSearchNode(BaseNode):
    """
    Finds the largest content of a league of rank k on {1..n}.

    In `exact` mode the ranks with a closed form are answered by their
    explicit optimal league, the others by the branch and bound search
    under the configured wall-clock budget. Otherwise the node reports the
    lower bound construction and its content.

    Args:
        input (str): "n & k".
        output (List[str]): ["result"].
        node_config (dict): `exact`, `interval`, `symmetry`, `budget`,
            `threads`, `verbose`, and `closed_forms` (default True).
        node_name (str): defaults to "LeagueSearch".
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "LeagueSearch",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

        self.exact = self.node_config.get("exact", True)
        self.interval = self.node_config.get("interval", False)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        n, k = state[input_keys[0]], state[input_keys[1]]
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")

        if not self.exact:
            witness = league_lb_witness(n, k, self.interval)
            result = {
                "n": n,
                "k": k,
                "interval": self.interval,
                "bound": league_lb(n, k, self.interval),
                "witness": witness.model_dump(),
            }
            state.update({self.output[0]: result})
            return state

        search_result = self._closed_form(n, k)
        if search_result is None:
            budget = self.node_config.get("budget") or {}
            search_result = max_content_exact(
                n,
                k,
                interval=self.interval,
                max_millis=budget.get("max_millis"),
                threads=self.node_config.get("threads") or 1,
                symmetry=self.node_config.get("symmetry"),
                verbose=self.node_config.get("verbose", False),
            )
        if search_result.status == SearchStatus.LOWER_BOUND_ONLY:
            self.logger.warning(
                f"league search for n={n}, k={k} ran out of budget at {search_result.optimum}"
            )

        result = {
            "n": n,
            "k": k,
            "interval": self.interval,
            **search_result.model_dump(mode="json"),
        }
        state.update({self.output[0]: result})
        return state

    def _closed_form(self, n: int, k: int) -> Optional[LeagueSearchResult]:
        if not self.node_config.get("closed_forms", True):
            return None
        if self.interval:
            value, witness = closed_form_Fstar(n, k), closed_form_Fstar_witness(n, k)
        else:
            value, witness = closed_form_F(n, k), closed_form_F_witness(n, k)
        if value is None or witness is None or witness.content != value:
            return None
        self.logger.info(f"n={n}, k={k} has a closed form")
        return LeagueSearchResult(optimum=value, witness=witness, status=SearchStatus.EXACT)
