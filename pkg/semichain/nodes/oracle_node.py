"""
OracleNode Module
"""

from typing import List, Optional

from ..oracle.exact import longest_chain_exact, longest_inverse_chain_exact
from ..oracle.models import SearchBudget
from .base_node import BaseNode


class OracleNode(BaseNode):
    """
    Exhaustive search for the longest chain of (inverse, with `starred`)
    subsemigroups. Writes the length and the witness chain.

    Raises:
        BudgetExceeded: the table has too many subsemigroups for the budget.
        NotInverse: `starred` on a table that is not an inverse semigroup.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "Oracle",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

        self.starred = self.node_config.get("starred", False)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        table = state[input_keys[0]]
        budget = SearchBudget.from_config(self.node_config)

        search = longest_inverse_chain_exact if self.starred else longest_chain_exact
        length, certificate = search(
            table, budget, verbose=self.node_config.get("verbose", False)
        )

        state.update(
            {self.output[0]: length, self.output[1]: "oracle", self.output[2]: certificate}
        )
        return state
