"""
GLSNode Module
"""

from typing import List, Optional

from ..formulas.combinatorics import gl_order, gls_order
from ..formulas.linear import c_q, gls_league_bound, gls_lower_bound, gls_rank_count
from .base_node import BaseNode


class GLSNode(BaseNode):
    """
    Chain length bounds for the semigroup of all n x n matrices over GF(q).

    The payload carries the two orders, the rank summands (which add up to
    q^(n^2)), the approximation of c(q), the displayed lower bound (raw and
    clamped) and the length of the subspace league chain.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "GLS",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        n, q = state[input_keys[0]], state[input_keys[1]]

        raw, clamped = gls_lower_bound(n, q)
        series = c_q(q, self.node_config.get("tolerance", 1e-12))
        result = {
            "n": n,
            "q": q,
            "gl_order": gl_order(n, q),
            "gls_order": gls_order(n, q),
            "rank_counts": [gls_rank_count(n, k, q) for k in range(n + 1)],
            "c_q": {
                "value": str(series.value),
                "error_bound": str(series.error_bound),
                "terms": series.terms,
            },
            "lower_bound": {"raw": str(raw), "clamped": clamped},
            "league_chain_length": gls_league_bound(n, q),
        }

        state.update({self.output[0]: result})
        return state
