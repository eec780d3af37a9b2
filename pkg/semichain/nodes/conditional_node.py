"""
ConditionalNode Module
"""

from typing import List, Optional

from simpleeval import EvalWithCompoundTypes, simple_eval

from .base_node import BaseNode


def _defined(value) -> bool:
    return value is not None


class ConditionalNode(BaseNode):
    """
    Branches the pipeline. The graph wires exactly two outgoing edges: the
    first is taken when the condition holds, the second otherwise.

    The condition is a `simpleeval` expression over the state keys, with
    `len` and `defined` (not None) available. It defaults to
    `defined(<key_name>)`; `key_name` is bound to None when the state lacks it.

    Args:
        input (str): input key expression.
        output (List[str]): unused, kept for a uniform node signature.
        node_config (dict): must hold `key_name`; may hold `condition`.
        node_name (str): defaults to "Cond".

    Example:
        >>> node = ConditionalNode(
        ...     "length", [], {"key_name": "length", "condition": "defined(length) and length > 2"}
        ... )
    """

    def __init__(
        self,
        input: str,
        output: List[str],
        node_config: Optional[dict] = None,
        node_name: str = "Cond",
    ):
        super().__init__(node_name, "conditional_node", input, output, 1, node_config)

        if "key_name" not in self.node_config:
            raise ValueError(f"{node_name} needs `key_name` in its node_config")
        self.key_name = self.node_config["key_name"]
        self.condition = self.node_config.get("condition") or f"defined({self.key_name})"

        self.true_node_name: Optional[str] = None
        self.false_node_name: Optional[str] = None
        self.eval_instance = EvalWithCompoundTypes()
        self.eval_instance.functions = {"len": len, "defined": _defined}

    def execute(self, state: dict) -> Optional[str]:
        """
        Returns:
            the name of the next node.
        """
        if self.true_node_name is None:
            raise ValueError(f"{self.node_name}'s next nodes are not set")

        taken = self._evaluate_condition(state, self.condition)

        self.logger.debug(f"{self.node_name}: {self.condition} is {taken}")
        return self.true_node_name if taken else self.false_node_name

    def _evaluate_condition(self, state: dict, condition: str) -> bool:
        names = {**self.eval_instance.functions, self.key_name: state.get(self.key_name), **state}
        try:
            return bool(
                simple_eval(
                    condition,
                    names=names,
                    functions=self.eval_instance.functions,
                    operators=self.eval_instance.operators,
                )
            )
        except Exception as e:
            raise ValueError(
                f"Error evaluating condition '{condition}' in {self.node_name}: {e}"
            ) from e
