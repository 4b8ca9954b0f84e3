import json
import pathlib

import jsonschema
import pytest

from artincenter.cli import main
from artincenter.graph import parse_graph

DATA = pathlib.Path(__file__).parent / "data"
SCHEMA = json.loads((DATA / "envelope_schema.json").read_text())


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv) -> tuple[int, dict]:
    code, out, _ = run(capsys, *argv, "--json")
    envelope = json.loads(out)
    jsonschema.validate(envelope, SCHEMA)
    return code, envelope


def validate_report(payload: dict) -> None:
    resolver_schema = dict(SCHEMA["definitions"]["analysis_report"])
    resolver_schema["definitions"] = SCHEMA["definitions"]
    jsonschema.validate(payload, resolver_schema)


def test_analyze_established(capsys):
    code, env = run_json(capsys, "analyze", DATA / "single_vertex.graph")
    assert code == 0
    validate_report(env["result"])
    assert env["result"]["established"] is True
    assert env["result"]["center_rank"] == 1


def test_analyze_triangle_trivial(capsys):
    code, env = run_json(capsys, "analyze", DATA / "triangle333.graph")
    assert code == 0
    validate_report(env["result"])
    assert env["result"]["center_rank"] == 0


def test_analyze_unknown_exit_code(capsys):
    code, env = run_json(capsys, "analyze", DATA / "unknown_clique.graph")
    assert code == 2
    validate_report(env["result"])
    assert env["result"]["established"] is False


def test_analyze_input_error(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("vertices: a\nedge a a 3\n")
    code, out, err = run(capsys, "analyze", bad)
    assert code == 1
    assert "error" in err
    code, _, err = run(capsys, "analyze", tmp_path / "missing.graph")
    assert code == 1


def test_analyze_max_vertices_flag(capsys, tmp_path):
    big = tmp_path / "big.graph"
    big.write_text("vertices: a b c d e\n")
    code, _, err = run(capsys, "analyze", big, "--max-vertices", "4")
    assert code == 1 and "guard" in err


def test_analyze_text_and_json_agree(capsys):
    code_t, text, _ = run(capsys, "analyze", DATA / "handtrace.graph")
    code_j, env = run_json(capsys, "analyze", DATA / "handtrace.graph")
    assert code_t == code_j == 0
    assert "ESTABLISHED" in text
    assert env["result"]["established"] is True
    assert f"center rank {env['result']['center_rank']}" in text


def test_analyze_dir(capsys, tmp_path):
    for name in ("single_vertex", "triangle333", "unknown_clique"):
        (tmp_path / f"{name}.graph").write_text((DATA / f"{name}.graph").read_text())
    code, out, err = run(capsys, "analyze", "--dir", tmp_path)
    assert code == 2  # one unknown in the corpus
    for name in ("single_vertex", "triangle333", "unknown_clique"):
        report_path = tmp_path / f"{name}.report.json"
        assert report_path.exists()
        envelope = json.loads(report_path.read_text())
        jsonschema.validate(envelope, SCHEMA)
        validate_report(envelope["result"])
    assert "unknown_clique" in out


def test_analyze_dir_empty(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", "--dir", tmp_path)
    assert code == 1


def test_retract_command(capsys):
    code, env = run_json(capsys, "retract", DATA / "handtrace.graph", "s,t", "r s r^-1")
    assert code == 0
    assert env["result"]["output"] == "s"
    code, env = run_json(
        capsys, "retract", DATA / "handtrace.graph", "s,t", "r s r^-1", "--trace"
    )
    trace = env["result"]["trace"]
    assert [row["reflection"] for row in trace] == [["r"], ["s"], ["r"]]
    assert [row["emitted"] for row in trace] == [None, ["s", 1], None]
    code, out, _ = run(capsys, "retract", DATA / "handtrace.graph", "s,t", "r", "--trace")
    assert "output: 1" in out


def test_retract_bad_subset(capsys):
    code, _, err = run(capsys, "retract", DATA / "handtrace.graph", "s,zz", "r")
    assert code == 1


def test_reduce_command(capsys):
    code, env = run_json(capsys, "reduce", DATA / "edge3.graph", "s s")
    assert code == 0
    assert env["result"]["length"] == 0
    code, env = run_json(capsys, "reduce", DATA / "edge3.graph", "s t s")
    assert env["result"]["length"] == 3
    assert env["result"]["reduced_word"] == ["s", "t", "s"]
    code, env = run_json(capsys, "reduce", DATA / "edge3.graph", "")
    assert env["result"]["length"] == 0


def test_coset_command(capsys):
    code, env = run_json(capsys, "coset", DATA / "edge3.graph", "s", "s t")
    assert code == 0
    assert env["result"]["subgroup_part"] == ["s"]
    assert env["result"]["reduced_part"] == ["t"]


def test_split_command(capsys):
    code, env = run_json(capsys, "split", DATA / "path33.graph", "a", "c")
    assert code == 0
    assert env["result"]["left"] == ["b", "c"]
    assert env["result"]["base"] == ["b"]
    assert env["result"]["right"] == ["a", "b"]
    code, _, err = run(capsys, "split", DATA / "edge3.graph", "s", "t")
    assert code == 1  # finite label: no splitting


def test_word_command(capsys):
    code, env = run_json(capsys, "word", DATA / "handtrace.graph", "r s r^-1 s^-1")
    assert code == 0
    result = env["result"]
    assert result["pure"] is True
    assert result["positive"] is False
    assert result["support"] == ["r", "s"]
    assert result["abelianization"] == {"r": 0, "s": 0, "t": 0}


def test_dihedral_command(capsys):
    code, env = run_json(capsys, "dihedral", DATA / "edge3.graph", "s t s", "t s t")
    assert code == 0 and env["result"]["equal"] is True
    code, env = run_json(capsys, "dihedral", DATA / "edge3.graph", "s t s t s t")
    assert env["result"]["normal_form"] == {"delta_power": 2, "factors": []}
    code, env = run_json(capsys, "dihedral", DATA / "edgeinf.graph", "s t t^-1", "s")
    assert env["result"]["equal"] is True
    code, env = run_json(capsys, "dihedral", DATA / "edgeinf.graph", "s t t^-1 s")
    assert env["result"]["free_reduced"] == "s^2"
    code, _, err = run(capsys, "dihedral", DATA / "handtrace.graph", "s")
    assert code == 1  # needs exactly two vertices


def test_round_trip_normalization(capsys, tmp_path):
    # one normalization pass is idempotent, including explicit inf edges
    messy = tmp_path / "messy.graph"
    messy.write_text("vertices: b a\nedge b a 3\nedge a b 3\n# comment\n")
    g = parse_graph(messy.read_text())
    once = g.to_text()
    assert parse_graph(once).to_text() == once


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
