"""
ClassifyNode Module
"""

from typing import List, Optional

from ..finsemi.classify import classify
from ..finsemi.greens import greens_structure
from .base_node import BaseNode


class ClassifyNode(BaseNode):
    """
    Writes the structural classification of a table together with the
    number of L-, R-, H- and J-classes.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "Classify",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        table = state[input_keys[0]]

        kind = classify(table)
        greens = greens_structure(table)
        result = {
            "semigroup": table.name or "S",
            "size": table.size,
            "idempotents": len(table.idempotents),
            "classification": kind.model_dump(exclude={"inverse_of"}),
            "greens": greens.class_counts(),
        }

        state.update({self.output[0]: result})
        return state
