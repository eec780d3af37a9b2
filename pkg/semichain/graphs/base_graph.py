"""
base_graph module
"""

import time
import warnings
from typing import List, Optional, Tuple

from ..nodes.base_node import BaseNode
from ..utils.logging import get_logger

logger = get_logger(__name__)


class BaseGraph:
    """
    BaseGraph manages the execution flow of a graph composed of interconnected nodes.

    Attributes:
        nodes (list): the node instances of the graph.
        edges (dict): from-node name to to-node name, for the plain nodes.
        entry_point (str): the name of the node execution starts from.

    Args:
        nodes (iterable): An iterable of node instances that will be part of the graph.
        edges (iterable): An iterable of (from_node, to_node) tuples. A conditional
            node has exactly two outgoing edges, the branch taken on true first;
            a `None` target on the false branch ends the run there.
        entry_point (BaseNode): The node instance that represents the entry point of the graph.
        graph_name (str): name used in log lines.

    Raises:
        Warning: If the entry point node is not the first node in the list.

    Example:
        >>> BaseGraph(
        ...    nodes=[parse_family_node, formula_length_node, report_node],
        ...    edges=[
        ...        (parse_family_node, formula_length_node),
        ...        (formula_length_node, report_node),
        ...    ],
        ...    entry_point=parse_family_node,
        ... )
    """

    def __init__(
        self,
        nodes: List[BaseNode],
        edges: List[Tuple[BaseNode, Optional[BaseNode]]],
        entry_point: BaseNode,
        graph_name: str = "Custom",
    ):
        self.nodes = nodes
        self.raw_edges = edges
        self.edges = self._create_edges(edges)
        self.entry_point = entry_point.node_name
        self.graph_name = graph_name
        self.initial_state = {}

        if nodes[0].node_name != entry_point.node_name:
            warnings.warn(
                "Careful! The entry point node is different from the first node in the graph."
            )

        self._set_conditional_node_edges()

    def _create_edges(self, edges: list) -> dict:
        """
        Dictionary of the plain edges, from-node name to to-node name.
        """
        edge_dict = {}
        for from_node, to_node in edges:
            if from_node.node_type != "conditional_node":
                edge_dict[from_node.node_name] = to_node.node_name if to_node else None
        return edge_dict

    def _set_conditional_node_edges(self):
        """
        Sets the true_node_name and false_node_name for each ConditionalNode.
        """
        for node in self.nodes:
            if node.node_type != "conditional_node":
                continue
            outgoing_edges = [
                (from_node, to_node)
                for from_node, to_node in self.raw_edges
                if from_node.node_name == node.node_name
            ]
            if len(outgoing_edges) != 2:
                raise ValueError(
                    f"ConditionalNode '{node.node_name}' must have exactly two outgoing edges."
                )
            true_node, false_node = outgoing_edges[0][1], outgoing_edges[1][1]
            node.true_node_name = true_node.node_name if true_node else None
            node.false_node_name = false_node.node_name if false_node else None

    def _get_node_by_name(self, node_name: str) -> BaseNode:
        """Returns a node instance by its name."""
        return next(node for node in self.nodes if node.node_name == node_name)

    def _execute_node(self, current_node: BaseNode, state: dict):
        """Executes a single node and returns its result and execution time."""
        curr_time = time.time()
        result = current_node.execute(state)
        return result, time.time() - curr_time

    def _get_next_node(self, current_node: BaseNode, result) -> Optional[str]:
        """Determines the next node to execute based on current node type and result."""
        if current_node.node_type == "conditional_node":
            node_names = {node.node_name for node in self.nodes}
            if result in node_names:
                return result
            elif result is None:
                return None
            raise ValueError(
                f"Conditional Node returned a node name '{result}' that does not exist in the graph"
            )

        return self.edges.get(current_node.node_name)

    def execute(self, initial_state: dict) -> Tuple[dict, list]:
        """
        Executes the graph by traversing nodes starting from the entry point.

        Args:
            initial_state (dict): The initial state to pass to the entry point node.

        Returns:
            Tuple[dict, list]: the final state and one timing row per executed
            node, followed by a `TOTAL RESULT` row.
        """
        self.initial_state = initial_state
        current_node_name = self.entry_point
        state = initial_state

        total_exec_time = 0.0
        exec_info = []

        while current_node_name:
            current_node = self._get_node_by_name(current_node_name)
            try:
                result, node_exec_time = self._execute_node(current_node, state)
            except Exception:
                logger.debug(f"{self.graph_name} failed in {current_node.node_name}")
                raise
            total_exec_time += node_exec_time
            exec_info.append({"node_name": current_node.node_name, "exec_time": node_exec_time})

            if current_node.node_type != "conditional_node":
                state = result
            current_node_name = self._get_next_node(current_node, result)

        exec_info.append({"node_name": "TOTAL RESULT", "exec_time": total_exec_time})
        return state, exec_info
