import json

import pytest

from semichain.cli import STRICT_EXIT_CODE, build_parser, main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_length_json(isolated_config, capsys):
    code, out, _ = _run(capsys, "length", "--family", "I:2", "--threads", "1")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["command"] == "length"
    assert envelope["result"]["length"] == 6
    assert envelope["inputs"]["family"] == "I:2"


def test_length_from_table_file(isolated_config, capsys, tmp_path):
    path = tmp_path / "null3.txt"
    path.write_text("3\n0 0 0\n0 0 0\n0 0 0\n")
    code, out, _ = _run(
        capsys, "length", "--table", str(path), "--method", "oracle", "--threads", "1"
    )
    assert code == 0
    assert json.loads(out)["result"]["length"] == 2


def test_strict_table_exit_code(isolated_config, capsys):
    code, out, _ = _run(capsys, "table", "--id", "4", "--strict", "--threads", "1")
    assert code == STRICT_EXIT_CODE == 5
    assert json.loads(out)["diagnostics"]


def test_table_without_strict_succeeds(isolated_config, capsys):
    code, _, _ = _run(capsys, "table", "--id", "4", "--threads", "1")
    assert code == 0


def test_bad_family_exits_with_validation_code(isolated_config, capsys):
    code, out, err = _run(capsys, "length", "--family", "Q:3")
    assert code == 2
    assert out == ""
    assert err.startswith("semichain:")


def test_budget_exit_code(isolated_config, capsys):
    code, _, _ = _run(
        capsys, "length", "--family", "null:12", "--method", "oracle", "--max-subsemigroups", "50"
    )
    assert code == 3


def test_not_decomposable_exit_code(isolated_config, capsys):
    code, _, _ = _run(
        capsys, "length", "--family", "T:3", "--method", "decompose", "--max-subsemigroups", "2"
    )
    assert code == 4


def test_league_rank_out_of_range(isolated_config, capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["league", "--n", "3", "--k", "5"])
    assert excinfo.value.code == 2


def test_league_bounds(isolated_config, capsys):
    code, out, _ = _run(capsys, "league", "--n", "7", "--k", "3", "--bounds")
    assert code == 0
    assert json.loads(out)["result"]["bound"] == 620


def test_gls_tsv(isolated_config, capsys):
    code, out, _ = _run(capsys, "gls", "--n", "3", "--q", "2", "--format", "tsv")
    assert code == 0
    lines = dict(line.split("\t", 1) for line in out.splitlines())
    assert lines["gl_order"] == "168"
    assert lines["league_chain_length"] == "21"


def test_output_file(isolated_config, capsys, tmp_path):
    target = tmp_path / "tn.json"
    code, out, _ = _run(capsys, "tn", "--n", "4", "--bounds", "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["result"]["chain_lower_bound"] == 23


def test_parser_requires_a_source():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["length"])
    with pytest.raises(SystemExit):
        parser.parse_args(["classify", "--family", "I:2", "--table", "t.txt"])


def test_symmetry_flag():
    args = build_parser().parse_args(["league", "--n", "7", "--k", "4", "--no-symmetry"])
    assert args.symmetry is False
    assert build_parser().parse_args(["league", "--n", "7", "--k", "4"]).symmetry is None


def test_verbose_keeps_stdout_clean(isolated_config, capsys):
    code, out, _ = _run(capsys, "gls", "--n", "2", "--q", "2", "--verbose")
    assert code == 0
    assert json.loads(out)["result"]["gl_order"] == 6
