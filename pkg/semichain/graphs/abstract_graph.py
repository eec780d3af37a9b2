"""
AbstractGraph Module
"""

import time
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..utils.logging import set_verbosity_debug, set_verbosity_info, set_verbosity_warning
from ..utils.output import OutputEnvelope
from ..utils.settings import resolve_config
from .base_graph import BaseGraph


class AbstractGraph(ABC):
    """
    Scaffolding class for creating a graph representation and executing it.

    Attributes:
        config (dict): the resolved configuration, defaults and overrides merged.
        verbose (bool): INFO logging and progress bars.
        size_cap (int): largest table a family may build.
        budget (dict): limits of the exhaustive searches.
        threads (int): worker threads for the searches.
        graph (BaseGraph): the pipeline built by `_create_graph`.

    Args:
        config (dict): Configuration parameters for the graph; see
            `semichain.helpers.defaults.DEFAULT_CONFIG` for the keys.

    Example:
        >>> class MyGraph(AbstractGraph):
        ...     command = "mine"
        ...     def _create_graph(self):
        ...         # Implementation of graph creation here
        ...         return graph
        ...     def _inputs(self):
        ...         return {"n": self.n}
        ...
        >>> envelope = MyGraph({"verbose": True}).run()
    """

    command: str = "custom"

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = resolve_config(config)
        self.verbose = self.config.get("verbose", False)
        self.size_cap = self.config["size_cap"]
        self.budget = self.config["budget"]
        self.threads = self.config["threads"]

        if self.config.get("debug"):
            set_verbosity_debug()
        elif self.verbose:
            set_verbosity_info()
        else:
            set_verbosity_warning()

        self.graph = self._create_graph()
        self.final_state = None
        self.execution_info = None

        common_params = {
            "verbose": self.verbose,
            "size_cap": self.size_cap,
            "budget": self.budget,
            "threads": self.threads,
            "group_search_cap": self.config.get("group_search_cap"),
        }

        self.set_common_params(common_params, overwrite=True)

    def set_common_params(self, params: dict, overwrite=False):
        """
        Pass parameters to every node in the graph unless otherwise defined in the graph.

        Args:
            params (dict): Common parameters and their values.
        """

        for node in self.graph.nodes:
            node.update_config(params, overwrite)

    def get_state(self, key=None) -> dict:
        """
        Get the final state of the graph.

        Args:
            key (str, optional): The key of the final state to retrieve.

        Returns:
            dict: The final state of the graph.
        """

        if key is not None:
            return self.final_state[key]
        return self.final_state

    def get_execution_info(self):
        """
        Returns the execution information of the graph.

        Returns:
            list: one timing row per executed node and a `TOTAL RESULT` row.
        """

        return self.execution_info

    @abstractmethod
    def _create_graph(self) -> BaseGraph:
        """
        Abstract method to create a graph representation.
        """

    @abstractmethod
    def _inputs(self) -> Dict[str, Any]:
        """
        The initial state of a run, echoed in the envelope.
        """

    def _echo(self, inputs: Dict[str, Any]) -> Dict[str, Any]:
        return inputs

    def _result(self, state: dict) -> Any:
        return state.get("result")

    def _diagnostics(self, state: dict) -> List[Dict[str, Any]]:
        return []

    def run(self) -> OutputEnvelope:
        """
        Executes the pipeline and wraps its outcome in an `OutputEnvelope`.
        """

        inputs = self._inputs()
        start = time.monotonic()
        self.final_state, self.execution_info = self.graph.execute(dict(inputs))
        elapsed = int((time.monotonic() - start) * 1000)

        return OutputEnvelope(
            command=self.command,
            inputs={
                key: value for key, value in self._echo(inputs).items() if value is not None
            },
            result=self._result(self.final_state),
            diagnostics=self._diagnostics(self.final_state),
            timing_millis=elapsed,
            exec_info=self.execution_info,
        )
