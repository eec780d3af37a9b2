"""
End to end runs of the graphs, the settings layer and the output envelope.
"""

import json
from fractions import Fraction

import pytest

from semichain.graphs import (
    CertificateGraph,
    ClassifyGraph,
    GLSGraph,
    LeagueGraph,
    LengthGraph,
    TableGraph,
    TransformationGraph,
)
from semichain.utils import OutputEnvelope, export_envelope, prettify_exec_info, resolve_config
from semichain.utils.errors import FamilyParseError, NotDecomposable, UnsupportedFamily


def _node_names(envelope):
    return [row["node_name"] for row in envelope.exec_info]


def test_length_by_formula(isolated_config):
    envelope = LengthGraph("I:2", isolated_config, method="formula").run()
    assert envelope.command == "length"
    assert envelope.result["length"] == 6
    assert envelope.result["method"] == "formula"
    assert envelope.inputs == {"family": "I:2", "method": "formula", "starred": False}
    assert _node_names(envelope) == ["ParseFamily", "FormulaLength", "LengthReport", "TOTAL RESULT"]


def test_length_by_oracle(isolated_config):
    envelope = LengthGraph("null:7", isolated_config, method="oracle").run()
    assert envelope.result["length"] == 6
    assert envelope.result["certificate"]["length"] == 6


def test_length_by_decomposition(isolated_config):
    envelope = LengthGraph("brandt:c2,2", isolated_config, method="decompose").run()
    assert envelope.result["length"] == 7
    assert envelope.result["trace"]["rule"] == "regularSum"


def test_auto_stops_at_the_formula(isolated_config):
    envelope = LengthGraph("POPI:3", isolated_config).run()
    assert envelope.result["length"] == 24
    assert "BuildTable" not in _node_names(envelope)


def test_auto_branches_on_the_length_condition(isolated_config):
    graph = LengthGraph("brandt:c2,2", isolated_config)
    checks = {
        node.node_name: node.condition
        for node in graph.graph.nodes
        if node.node_type == "conditional_node"
    }
    assert checks == {"FormulaFound": "defined(length)", "DecomposeFound": "defined(length)"}

    envelope = graph.run()
    assert envelope.result["length"] == 7
    names = _node_names(envelope)
    assert names.index("FormulaFound") < names.index("LengthReport")
    assert "BuildTable" not in names


@pytest.mark.slow
def test_auto_falls_through_to_decomposition(isolated_config):
    envelope = LengthGraph("T:3", isolated_config).run()
    assert envelope.result["method"] in ("decompose", "oracle")
    assert "Decompose" in _node_names(envelope)


def test_auto_starred_skips_decomposition(isolated_config):
    envelope = LengthGraph("brandt:c2,2", isolated_config, starred=True).run()
    assert envelope.result["length"] == 5
    assert "Decompose" not in _node_names(envelope)


def test_starred_length(isolated_config):
    assert LengthGraph("I:2", isolated_config, starred=True).run().result["length"] == 5
    envelope = LengthGraph("I:2", isolated_config, method="oracle", starred=True).run()
    assert envelope.result["length"] == 5
    assert envelope.result["certificate"]["kind"] == "inverseSubsemigroup"


def test_length_from_table_text(isolated_config):
    envelope = LengthGraph(
        "3\n0 0 0\n0 0 0\n0 0 0\n", isolated_config, method="oracle", source_key="table_text"
    ).run()
    assert envelope.result["length"] == 2


def test_length_graph_validation(isolated_config):
    with pytest.raises(ValueError):
        LengthGraph("I:2", isolated_config, method="guess")
    with pytest.raises(ValueError):
        LengthGraph("t.json", isolated_config, method="formula", source_key="table_path")
    with pytest.raises(ValueError):
        LengthGraph("I:2", isolated_config, method="decompose", starred=True)


def test_length_errors_propagate(isolated_config):
    with pytest.raises(FamilyParseError):
        LengthGraph("Q:3", isolated_config).run()
    with pytest.raises(UnsupportedFamily):
        LengthGraph("T:3", isolated_config, method="formula").run()
    with pytest.raises(NotDecomposable):
        config = {**isolated_config, "budget": {"max_subsemigroups": 2}}
        LengthGraph("T:3", config, method="decompose").run()


def test_league_graph(isolated_config):
    envelope = LeagueGraph(5, 3, isolated_config).run()
    assert envelope.result["optimum"] == 28
    assert envelope.result["status"] == "exact"

    closed = LeagueGraph(7, 6, isolated_config).run()
    assert closed.result["optimum"] == 20

    bounds = LeagueGraph(7, 3, isolated_config, exact=False).run()
    assert bounds.result["bound"] == 620
    assert bounds.inputs["exact"] is False


def test_interval_league_graph(isolated_config):
    envelope = LeagueGraph(5, 3, isolated_config, interval=True).run()
    assert envelope.result["optimum"] == 12
    assert envelope.result["interval"] is True


def test_table_graph_diagnostics(isolated_config):
    envelope = TableGraph(4, isolated_config).run()
    assert envelope.result["table"] == 4
    assert "discrepancies" not in envelope.result
    assert any(d["row"] == "l*(I_n)" and d["column"] == "3" for d in envelope.diagnostics)

    clean = TableGraph(5, isolated_config).run()
    assert clean.diagnostics == []


def test_table_graph_rejects_unknown_id(isolated_config):
    with pytest.raises(ValueError):
        TableGraph(9, isolated_config)


def test_gls_graph(isolated_config):
    result = GLSGraph(3, 2, isolated_config).run().result
    assert result["gl_order"] == 168
    assert result["gls_order"] == 512
    assert sum(result["rank_counts"]) == 512
    assert result["lower_bound"] == {"raw": "39/4", "clamped": 9}
    assert round(float(Fraction(result["c_q"]["value"])), 9) == 0.288788095
    assert result["league_chain_length"] == 21


def test_transformation_graph(isolated_config):
    result = TransformationGraph(5, isolated_config).run().result
    assert result["chain_lower_bound"] == 329
    bounds = TransformationGraph(4, isolated_config, exact=False).run().result
    assert bounds["chain_lower_bound"] == 23
    assert bounds["null_max_order"] == 18
    assert bounds["mode"] == "bounds"


def test_certificate_graph(isolated_config):
    envelope = CertificateGraph(4, 3, isolated_config).run()
    assert envelope.result["verified"] is True
    assert envelope.result["chain_length"] == 18
    assert envelope.result["ideal_size"] == 88
    assert envelope.diagnostics == []


def test_classify_graph(isolated_config):
    result = ClassifyGraph("I:3", isolated_config).run().result
    assert result["size"] == 34
    assert result["classification"]["inverse"] is True
    assert "inverse_of" not in result["classification"]
    assert result["greens"]["J"] == 4

    text = "2\n0 1\n1 0\n"
    result = ClassifyGraph(text, isolated_config, source_key="table_text").run().result
    assert result["classification"]["group"] is True


def test_graph_config_reaches_nodes(isolated_config):
    graph = LengthGraph("null:4", {**isolated_config, "size_cap": 123}, method="oracle")
    assert all(node.node_config["size_cap"] == 123 for node in graph.graph.nodes)
    assert graph.get_state() is None
    graph.run()
    assert graph.get_state("length") == 3
    assert graph.get_execution_info()[-1]["node_name"] == "TOTAL RESULT"


def test_resolve_config_layers(tmp_path):
    settings = tmp_path / "semichain.conf"
    settings.write_text("[DEFAULT]\nsize_cap = 50\nmax_millis = 900\nthreads = bad\n")
    config = resolve_config(
        {"threads": 2, "budget": {"max_subsemigroups": 7}},
        config_location=str(settings),
        environ={"SEMICHAIN_SIZE_CAP": "60"},
    )
    assert config["size_cap"] == 60
    assert config["threads"] == 2
    assert config["budget"] == {"max_subsemigroups": 7, "max_millis": 900, "threads": 2}


def test_resolve_config_defaults(tmp_path):
    config = resolve_config(config_location=str(tmp_path / "missing.conf"), environ={})
    assert config["size_cap"] == 10_000
    assert config["threads"] >= 1
    assert config["group_search_cap"] == 200


def test_envelope_renderings(tmp_path):
    envelope = OutputEnvelope(
        command="tn",
        inputs={"n": 4},
        result={"n": 4, "modes": [1, 2]},
        diagnostics=[{"row": "3", "published": 15}],
    )
    assert json.loads(envelope.render("json"))["result"]["modes"] == [1, 2]
    assert envelope.render("tsv").splitlines() == [
        "n\t4",
        "modes\t[1,2]",
        "# row=3\tpublished=15",
    ]
    with pytest.raises(ValueError):
        envelope.render("xml")

    target = tmp_path / "out.tsv"
    export_envelope(envelope, target, "tsv")
    assert target.read_text(encoding="utf-8") == envelope.to_tsv()


def test_table_envelope_renders_rows(isolated_config):
    text = TableGraph(5, isolated_config).run().render("tsv")
    assert text.splitlines()[0] == "S\t1\t2\t3\t4\t5\t6"


def test_prettify_exec_info():
    rows = [
        {"node_name": "Oracle", "exec_time": 0.5},
        {"node_name": "TOTAL RESULT", "exec_time": 0.5},
    ]
    text = prettify_exec_info(rows)
    assert "Oracle" in text and "TOTAL RESULT" in text
    assert "100.0%" in text
    assert prettify_exec_info(rows, as_string=False) is rows
    assert prettify_exec_info([]) == "Empty result"
