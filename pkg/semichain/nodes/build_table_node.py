"""
BuildTableNode Module
"""

from typing import List, Optional

from ..finsemi.families import build_family
from ..finsemi.io import load_table, loads_table
from ..helpers.defaults import DEFAULT_SIZE_CAP
from .base_node import BaseNode


class BuildTableNode(BaseNode):
    """
    Produces the Cayley table the rest of a pipeline works on, from a parsed
    family, a table file or table text (JSON or the plain text format).

    Args:
        input (str): e.g. "family_spec | table_path | table_text".
        output (List[str]): one key, normally ["table"].
        node_config (dict): reads `size_cap`.
        node_name (str): defaults to "BuildTable".
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "BuildTable",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        source_key = input_keys[0]
        source = state[source_key]

        if source_key == "table_path":
            table = load_table(source)
        elif source_key == "table_text":
            table = loads_table(source)
        else:
            table = build_family(source, self.node_config.get("size_cap", DEFAULT_SIZE_CAP))

        self.logger.info(f"Working on {table!r}")
        state.update({self.output[0]: table})
        return state
