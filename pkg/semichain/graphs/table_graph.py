"""
TableGraph Module
"""

from typing import Any, Dict, List, Optional

from ..formulas.tables import TABLE_IDS
from ..nodes import ReproduceTableNode
from .abstract_graph import AbstractGraph
from .base_graph import BaseGraph


class TableGraph(AbstractGraph):
    """
    TableGraph recomputes one of the published tables. Cells that differ
    from print come back as diagnostics, one record per cell.
    """

    command = "table"

    def __init__(self, table_id: int, config: Optional[Dict[str, Any]] = None):
        if table_id not in TABLE_IDS:
            raise ValueError(f"table id must be one of {TABLE_IDS}, got {table_id}")
        self.table_id = table_id

        super().__init__(config)

    def _create_graph(self) -> BaseGraph:
        reproduce_table_node = ReproduceTableNode(
            input="table_id",
            output=["report"],
            node_config={"long_run": self.config.get("long_run", False)},
        )

        return BaseGraph(
            nodes=[reproduce_table_node],
            edges=[],
            entry_point=reproduce_table_node,
            graph_name=self.__class__.__name__,
        )

    def _inputs(self) -> Dict[str, Any]:
        return {"table_id": self.table_id}

    def _echo(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        return {**inputs, "long_run": self.config.get("long_run", False)}

    def _result(self, state: dict) -> Any:
        return state["report"].model_dump(exclude={"discrepancies"})

    def _diagnostics(self, state: dict) -> List[Dict[str, Any]]:
        return [d.model_dump() for d in state["report"].discrepancies]
