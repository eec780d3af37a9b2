import pytest

from semichain import nodes
from semichain.finsemi import FamilySpec
from semichain.graphs.base_graph import BaseGraph
from semichain.helpers import nodes_metadata
from semichain.nodes import (
    BaseNode,
    BuildTableNode,
    ConditionalNode,
    FormulaLengthNode,
    LengthReportNode,
    ParseFamilyNode,
)
from semichain.utils.errors import UnsupportedFamily


class EchoNode(BaseNode):
    def __init__(self, input, output, node_name="Echo"):
        super().__init__(node_name, "node", input, output, 1)

    def execute(self, state):
        keys = self.get_input_keys(state)
        state[self.output[0]] = [state[key] for key in keys]
        return state


@pytest.mark.parametrize(
    "expression, state, expected",
    [
        ("n", {"n": 1}, ["n"]),
        ("n & k", {"n": 1, "k": 2}, ["n", "k"]),
        ("table | family", {"family": "I:2"}, ["family"]),
        ("table | family", {"table": 1, "family": "I:2"}, ["table"]),
        ("(a | b) & c", {"b": 1, "c": 2}, ["b", "c"]),
        ("a & b | c", {"a": 1, "c": 3}, ["c"]),
        ("a & (a | b)", {"a": 1}, ["a"]),
    ],
)
def test_input_expressions(expression, state, expected):
    assert EchoNode(expression, ["out"]).get_input_keys(state) == expected


@pytest.mark.parametrize("expression", ["", "a &", "(a | b", "a ) b", "| a"])
def test_malformed_input_expressions(expression):
    with pytest.raises(ValueError):
        EchoNode(expression, ["out"]).get_input_keys({"a": 1, "b": 2})


def test_unsatisfied_expression():
    with pytest.raises(ValueError):
        EchoNode("n & k", ["out"]).get_input_keys({"n": 1})


def test_min_input_len():
    node = EchoNode("n | k", ["out"])
    node.min_input_len = 2
    with pytest.raises(ValueError):
        node.get_input_keys({"n": 1})


def test_node_type_is_checked():
    class EdgeNode(BaseNode):
        def execute(self, state):
            return state

    with pytest.raises(ValueError):
        EdgeNode("Bad", "edge", "n", ["o"])


def test_update_config_respects_overwrite():
    node = FormulaLengthNode("family_spec", ["length", "method"], {"size_cap": 5})
    node.update_config({"size_cap": 10, "threads": 2})
    assert node.node_config == {"size_cap": 5, "threads": 2}
    node.update_config({"size_cap": 10}, overwrite=True)
    assert node.node_config["size_cap"] == 10


def _branching_graph(condition=None):
    start = EchoNode("n", ["seen"], node_name="Start")
    cond = ConditionalNode(
        input="n",
        output=[],
        node_name="Check",
        node_config={"key_name": "flag", "condition": condition},
    )
    yes = EchoNode("n", ["yes"], node_name="Yes")
    no = EchoNode("n", ["no"], node_name="No")
    graph = BaseGraph(
        nodes=[start, cond, yes, no],
        edges=[(start, cond), (cond, yes), (cond, no)],
        entry_point=start,
    )
    return graph


def test_conditional_node_on_key_presence():
    graph = _branching_graph()
    state, _ = graph.execute({"n": 1, "flag": True})
    assert "yes" in state and "no" not in state

    state, _ = _branching_graph().execute({"n": 1})
    assert "no" in state and "yes" not in state


def test_conditional_node_with_expression():
    state, exec_info = _branching_graph("n > 2 and len(name) == 3").execute(
        {"n": 3, "name": "abc"}
    )
    assert "yes" in state
    assert [row["node_name"] for row in exec_info] == ["Start", "Check", "Yes", "TOTAL RESULT"]


def test_conditional_node_default_condition():
    node = ConditionalNode(input="n", output=[], node_config={"key_name": "flag"})
    assert node.condition == "defined(flag)"

    state, _ = _branching_graph("defined(flag) and flag > 1").execute({"n": 1, "flag": 2})
    assert "yes" in state
    state, _ = _branching_graph("defined(flag) and flag > 1").execute({"n": 1})
    assert "no" in state


def test_conditional_node_bad_expression():
    with pytest.raises(ValueError):
        _branching_graph("undefined_name > 1").execute({"n": 1})


def test_conditional_node_needs_key_name():
    with pytest.raises(ValueError):
        ConditionalNode(input="n", output=[], node_config={})


def test_conditional_node_needs_two_edges():
    start = EchoNode("n", ["seen"], node_name="Start")
    cond = ConditionalNode(input="n", output=[], node_config={"key_name": "n"})
    with pytest.raises(ValueError):
        BaseGraph(nodes=[start, cond], edges=[(start, cond)], entry_point=start)


def test_false_branch_can_end_the_run():
    start = EchoNode("n", ["seen"], node_name="Start")
    cond = ConditionalNode(input="n", output=[], node_config={"key_name": "go"})
    end = EchoNode("n", ["end"], node_name="End")
    graph = BaseGraph(
        nodes=[start, cond, end],
        edges=[(start, cond), (cond, end), (cond, None)],
        entry_point=start,
    )
    state, exec_info = graph.execute({"n": 1})
    assert "end" not in state
    assert exec_info[-1]["node_name"] == "TOTAL RESULT"


def test_formula_length_node():
    node = FormulaLengthNode("family_spec", ["length", "method"])
    state = node.execute({"family_spec": FamilySpec.symmetric_inverse(3)})
    assert state["length"] == 25
    assert state["method"] == "formula"

    state = node.execute({"family_spec": FamilySpec.full_transformation(3)})
    assert state["length"] is None


def test_formula_length_node_required():
    node = FormulaLengthNode("family_spec", ["length", "method"], {"required": True})
    with pytest.raises(UnsupportedFamily):
        node.execute({"family_spec": FamilySpec.full_transformation(3)})


def test_parse_build_and_report_nodes():
    state = ParseFamilyNode("family", ["family_spec"]).execute({"family": "null:4"})
    state = BuildTableNode("family_spec | table_path | table_text", ["table"]).execute(state)
    assert state["table"].size == 4

    state["length"] = 3
    state["method"] = "oracle"
    state = LengthReportNode("length", ["result"]).execute(state)
    result = state["result"]
    assert result["semigroup"] == state["family_spec"].name
    assert (result["size"], result["length"], result["method"]) == (4, 3, "oracle")
    assert "trace" not in result and "certificate" not in result


def test_build_table_node_from_text():
    state = BuildTableNode("family_spec | table_path | table_text", ["table"]).execute(
        {"table_text": "2\n0 0\n0 1\n"}
    )
    assert state["table"].rows == [[0, 0], [0, 1]]


def test_nodes_metadata_covers_every_node():
    exported = {name for name in nodes.__all__ if name != "BaseNode"}
    assert set(nodes_metadata) == exported
    assert all(entry["type"] in ("node", "conditional_node") for entry in nodes_metadata.values())
