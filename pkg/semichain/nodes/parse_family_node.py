"""
ParseFamilyNode Module
"""

from typing import List, Optional

from ..finsemi.families import parse_family
from ..helpers.defaults import DEFAULT_SIZE_CAP
from .base_node import BaseNode


class ParseFamilyNode(BaseNode):
    """
    Turns a family string such as `I:4` or `brandt:c2,3` into a FamilySpec,
    without building the table.

    Args:
        input (str): the family key, normally "family".
        output (List[str]): one key, normally ["family_spec"].
        node_config (dict): reads `size_cap` (for the group of a Brandt family).
        node_name (str): defaults to "ParseFamily".
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "ParseFamily",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        text = state[input_keys[0]]
        spec = parse_family(text, self.node_config.get("size_cap", DEFAULT_SIZE_CAP))

        state.update({self.output[0]: spec})
        return state
