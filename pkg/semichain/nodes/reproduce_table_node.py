"""
ReproduceTableNode Module
"""

from typing import List, Optional

from ..formulas.tables import reproduce_table
from .base_node import BaseNode


class ReproduceTableNode(BaseNode):
    """
    Recomputes one of the published tables (1 to 5) and writes the
    `TableReport`, discrepancies included.

    League cells are searched to completion; `long_run` adds the cells the
    default run leaves out.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "ReproduceTable",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        report = reproduce_table(
            state[input_keys[0]],
            long_run=self.node_config.get("long_run", False),
            threads=self.node_config.get("threads") or 1,
        )
        if report.discrepancies:
            self.logger.info(
                f"table {report.table}: {len(report.discrepancies)} cells differ from print"
            )

        state.update({self.output[0]: report})
        return state
