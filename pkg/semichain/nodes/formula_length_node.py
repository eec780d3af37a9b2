"""
FormulaLengthNode Module
"""

from typing import List, Optional

from ..formulas.named import family_length
from ..utils.errors import SearchTooLarge, UnsupportedFamily
from .base_node import BaseNode


class FormulaLengthNode(BaseNode):
    """
    Looks the length of a named family up in the closed forms, without
    building the table.

    When no closed form applies the node writes `length = None`, so a
    following conditional can hand the family to the next method. With
    `required` in the node config it raises instead.

    Args:
        input (str): normally "family_spec".
        output (List[str]): ["length", "method"].
        node_config (dict): `starred` for l*, `required` to fail on unknown
            families, `group_search_cap` for insoluble groups.
        node_name (str): defaults to "FormulaLength".
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "FormulaLength",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

        self.starred = self.node_config.get("starred", False)
        self.required = self.node_config.get("required", False)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        spec = state[input_keys[0]]

        try:
            length = family_length(
                spec,
                starred=self.starred,
                group_search_cap=self.node_config.get("group_search_cap", 200),
            )
        except SearchTooLarge:
            if self.required:
                raise
            length = None

        if length is None:
            if self.required:
                symbol = "l*" if self.starred else "l"
                raise UnsupportedFamily(f"no closed form for {symbol}({spec.name})")
            self.logger.info(f"No closed form for {spec.name}")
            state.update({self.output[0]: None})
            return state

        state.update({self.output[0]: length, self.output[1]: "formula"})
        return state
