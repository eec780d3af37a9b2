"""
LeagueCertificateNode Module
"""

from typing import List, Optional

from ..helpers.defaults import DEFAULT_SIZE_CAP
from ..leagues.bounds import singleton_block_witness
from ..leagues.certificate import build_null_from_league
from ..oracle.exact import verify_chain
from .base_node import BaseNode


class LeagueCertificateNode(BaseNode):
    """
    Turns the rank-k bound league of T_n into a chain of subsemigroups
    above the ideal of maps of rank below k, and checks the chain against
    the table of T_n.
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "LeagueCertificate",
    ):
        super().__init__(node_name, "node", input, output, 2, node_config)

    def execute(self, state: dict) -> dict:
        self.logger.info(f"--- Executing {self.node_name} Node ---")

        input_keys = self.get_input_keys(state)
        n, k = state[input_keys[0]], state[input_keys[1]]

        league = singleton_block_witness(n, k)
        built = build_null_from_league(
            n, league, size_cap=self.node_config.get("size_cap", DEFAULT_SIZE_CAP)
        )
        verification = verify_chain(built.table, built.certificate)
        if not verification:
            self.logger.warning(f"certificate rejected: {verification.violation}")

        result = {
            "n": n,
            "k": k,
            "league": league.model_dump(),
            "ideal_size": len(built.certificate.subsets[0]),
            "maps_added": len(built.null_part),
            "chain_length": built.certificate.length,
            "verified": verification.valid,
            "violation": verification.violation,
            "certificate": built.certificate.model_dump(mode="json"),
        }

        state.update({self.output[0]: result})
        return state
