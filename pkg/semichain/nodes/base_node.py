"""
BaseNode Module
"""

import re
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..utils.logging import get_logger

_TOKEN = re.compile(r"\s*([()&|]|[^()&|\s]+)")


class BaseNode(ABC):
    """
    A step of a semichain pipeline. A node reads some keys of the shared
    state, computes, and writes its `output` keys back.

    Attributes:
        node_name (str): unique name of the node inside its graph.
        node_type (str): "node" or "conditional_node".
        input (str): which state keys the node reads, as an expression with
            `&`, `|` and parentheses; `table | family` takes whichever key is
            present, `n & k` needs both.
        output (List[str]): state keys the node writes.
        min_input_len (int): the least number of keys the expression must
            resolve to.
        node_config (dict): node settings; graphs push their common
            parameters (`verbose`, `size_cap`, `budget`, `threads`) into it.

    Raises:
        ValueError: on an unknown `node_type`.

    Example:
        >>> class EchoNode(BaseNode):
        ...     def execute(self, state):
        ...         keys = self.get_input_keys(state)
        ...         state[self.output[0]] = state[keys[0]]
        ...         return state
        >>> EchoNode("Echo", "node", "n", ["copy"]).execute({"n": 3})
        {'n': 3, 'copy': 3}
    """

    def __init__(
        self,
        node_name: str,
        node_type: str,
        input: str,
        output: List[str],
        min_input_len: int = 1,
        node_config: Optional[dict] = None,
    ):
        if node_type not in ("node", "conditional_node"):
            raise ValueError(
                f"node_type must be 'node' or 'conditional_node', got '{node_type}'"
            )
        self.node_name = node_name
        self.node_type = node_type
        self.input = input
        self.output = output
        self.min_input_len = min_input_len
        self.node_config = dict(node_config or {})
        self.logger = get_logger(f"semichain.nodes.{node_name}")

    @abstractmethod
    def execute(self, state: dict) -> Any:
        """
        Run the node on the state.

        Returns:
            the updated state, or for a conditional node the name of the next
            node.
        """

    def update_config(self, params: Dict[str, Any], overwrite: bool = False) -> None:
        """
        Merge graph-wide parameters into `node_config`.

        Args:
            params: the parameters.
            overwrite: replace values the node already has.
        """
        for key, value in params.items():
            if key in self.node_config and not overwrite:
                continue
            self.node_config[key] = value

    def get_input_keys(self, state: dict) -> List[str]:
        """
        Resolve the input expression against the state.

        Raises:
            ValueError: the expression is malformed or no alternative of it
                is satisfied by the state.
        """
        try:
            keys = self._parse_input_keys(state, self.input)
        except ValueError as e:
            raise ValueError(f"Error parsing input keys for {self.node_name}") from e
        if len(keys) < self.min_input_len:
            raise ValueError(
                f"{self.node_name} requires at least {self.min_input_len} input keys, "
                f"got {len(keys)}"
            )
        return keys

    def _parse_input_keys(self, state: dict, expression: str) -> List[str]:
        """
        Evaluate an `&` / `|` expression over state keys.

        `&` binds tighter than `|`; an `|` picks its first satisfied
        alternative. The result lists the keys of the chosen alternatives
        once each, in expression order.
        """
        if not expression or not expression.strip():
            raise ValueError("Empty expression.")

        tokens = _TOKEN.findall(expression)
        if "".join(tokens) != re.sub(r"\s+", "", expression):
            raise ValueError(f"Unparseable expression `{expression}`.")
        position = 0

        def peek() -> Optional[str]:
            return tokens[position] if position < len(tokens) else None

        def take() -> str:
            nonlocal position
            token = peek()
            if token is None:
                raise ValueError("Unexpected end of expression.")
            position += 1
            return token

        # each parser returns the matched keys, or None when unsatisfied
        def parse_or() -> Optional[List[str]]:
            chosen = parse_and()
            while peek() == "|":
                take()
                alternative = parse_and()
                if chosen is None:
                    chosen = alternative
            return chosen

        def parse_and() -> Optional[List[str]]:
            keys: Optional[List[str]] = parse_atom()
            while peek() == "&":
                take()
                right = parse_atom()
                keys = None if keys is None or right is None else keys + right
            return keys

        def parse_atom() -> Optional[List[str]]:
            token = take()
            if token == "(":
                inner = parse_or()
                if take() != ")":
                    raise ValueError("Missing or unbalanced parentheses in expression.")
                return inner
            if token in ("&", "|", ")"):
                raise ValueError(f"Invalid operator placement at `{token}`.")
            return [token] if token in state else None

        result = parse_or()
        if peek() is not None:
            raise ValueError(f"Unexpected `{peek()}` in expression `{expression}`.")
        if not result:
            raise ValueError(
                f"No state keys matched the expression `{expression}`; "
                f"state has {', '.join(state.keys())}"
            )

        unique: List[str] = []
        for key in result:
            if key not in unique:
                unique.append(key)
        return unique
