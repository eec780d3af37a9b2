"""
DecomposeNode Module
"""

from typing import List, Optional

from ..oracle.decompose import decompose_length
from ..oracle.models import SearchBudget
from ..utils.errors import NotDecomposable
from .base_node import BaseNode


class DecomposeNode(BaseNode):
    """
    Computes l(S) from the principal factors of the table.

    A `NotDecomposable` factor ends the node with `length = None` unless
    `required` is set, in which case the error propagates.

    Args:
        input (str): normally "table".
        output (List[str]): ["length", "method", "trace"].
        node_config (dict): `budget`, `group_search_cap`, `required`.
        node_name (str): defaults to "Decompose".
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "Decompose",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

        self.required = self.node_config.get("required", False)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        table = state[input_keys[0]]

        try:
            length, trace = decompose_length(
                table,
                budget=SearchBudget.from_config(self.node_config),
                group_search_cap=self.node_config.get("group_search_cap", 200),
            )
        except NotDecomposable as e:
            if self.required:
                raise
            self.logger.info(f"Decomposition stopped at {e.description}")
            state.update({self.output[0]: None})
            return state

        state.update(
            {self.output[0]: length, self.output[1]: "decompose", self.output[2]: trace}
        )
        return state
