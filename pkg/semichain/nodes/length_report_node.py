"""
LengthReportNode Module
"""

from typing import List, Optional

from .base_node import BaseNode


class LengthReportNode(BaseNode):
    """
    Collects what the length pipeline found into one `result` payload:
    the length, the method that produced it, the size of the semigroup and,
    when present, the decomposition trace and the witness chain.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "LengthReport",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        spec = state.get("family_spec")
        table = state.get("table")

        if table is not None:
            name, size = table.name or "S", table.size
        else:
            name, size = spec.name, spec.expected_size()

        result = {
            "semigroup": name,
            "size": size,
            "starred": self.node_config.get("starred", False),
            "length": state[input_keys[0]],
            "method": state.get("method"),
        }
        if state.get("trace") is not None:
            result["trace"] = state["trace"].model_dump(mode="json")
        if state.get("certificate") is not None:
            result["certificate"] = state["certificate"].model_dump(mode="json")

        state.update({self.output[0]: result})
        return state
