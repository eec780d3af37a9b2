"""
TransformationBoundsNode Module
"""

from typing import List, Optional

from ..formulas.counting import null_subsemigroup_count_log2, tn_null_max_order
from ..leagues.bounds import tn_lower_bound
from .base_node import BaseNode


class TransformationBoundsNode(BaseNode):
    """
    Bounds for the full transformation monoid T_n: the league chain bound
    for l(T_n) and what its largest null subsemigroup gives for the number
    of subsemigroups and of generators.

    Args:
        node_config (dict): `exact` takes F(n, k) from the known optima
            rather than the lower bound formulas.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "TransformationBounds",
    ):
        super().__init__(node_name, "node", input, output, 1, node_config)

        self.exact = self.node_config.get("exact", True)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        n = state[input_keys[0]]

        null_order, rank = tn_null_max_order(n)
        result = {
            "n": n,
            "mode": "exact" if self.exact else "bounds",
            "chain_lower_bound": tn_lower_bound(n, use_exact_f=self.exact),
            "null_max_order": null_order,
            "null_rank": rank,
            "log2_subsemigroups_lower_bound": null_subsemigroup_count_log2(null_order),
            "generators_lower_bound": null_order,
        }

        state.update({self.output[0]: result})
        return state
