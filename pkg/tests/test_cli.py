import json
from pathlib import Path

import pytest

from graphmorse.cli import main, parse_graph_text, parse_tree_flag
from graphmorse.errors import InputError

DATA = Path(__file__).resolve().parent.parent / "data"


def build(capsys, *args):
    code = main(["build", *args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_lasso(capsys):
    code, out, _ = build(capsys, str(DATA / "lasso.json"))
    rep = json.loads(out)
    assert code == 0
    assert rep["homology"]["h1_free_rank"] == 2
    assert rep["agreement"] is True and rep["classification_match"] is True
    assert rep["critical"]["1"] == ["1x(3,4)", "3x(2,4)"]
    assert rep["repair"]["step3_fixes"][0]["raised"] == "3x(2,4)"
    assert rep["gauge"] == {"parameters": 2, "constraints": 0}
    assert rep["invariant_failures"] == []


def test_build_bowtie(capsys):
    code, out, _ = build(capsys, str(DATA / "bowtie.json"), "--policy", "min")
    rep = json.loads(out)
    assert code == 0
    assert rep["homology"]["h1_free_rank"] == 4
    assert rep["critical"] == {
        "0": ["(1,2)"],
        "1": ["1x(4,5)", "2x(1,3)", "3x(2,4)", "3x(2,5)", "4x(2,5)"],
        "2": ["(1,3)x(4,5)"],
    }
    d2 = rep["morse_boundary"]["d2"]
    col = [row[0] for row in d2["entries"]]
    assert col in ([0, 0, 1, -1, 0], [0, 0, -1, 1, 0])


def test_build_single_edge(capsys):
    code, out, _ = build(capsys, str(DATA / "edge.txt"))
    rep = json.loads(out)
    assert code == 0
    assert rep["complex"]["cells"] == [1, 0, 0]
    assert rep["homology"]["h1_free_rank"] == 0
    assert rep["oracle"]["h0_rank"] == 1


def test_tree_and_root_flags(capsys, tmp_path):
    src = tmp_path / "lasso.txt"
    src.write_text("1 2\n2 3\n2 4\n3 4\n")
    code, out, _ = build(capsys, str(src), "--tree", "1-2,2-3,2-4", "--root", "1")
    assert code == 0
    assert json.loads(out)["critical"]["1"] == ["1x(3,4)", "3x(2,4)"]


def test_deterministic(capsys):
    _, a, _ = build(capsys, str(DATA / "bowtie.json"))
    _, b, _ = build(capsys, str(DATA / "bowtie.json"))
    assert a == b


def test_out_and_dot(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, stdout, _ = build(capsys, str(DATA / "lasso.json"), "--out", str(out), "--emit-dot", str(tmp_path))
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["homology"]["h1_free_rank"] == 2
    d2 = (tmp_path / "d2.dot").read_text()
    assert 'label="3x(2,4)' in d2 and '"(1,2)"' in d2
    assert (tmp_path / "graph.dot").read_text().startswith("graph G {")


@pytest.mark.parametrize("text, line", [("1 2\n2 x\n", 2), ("1 2\n\n1 2 3\n", 3), ("# c\n0 1\n", 2)])
def test_parse_errors_have_lines(text, line):
    with pytest.raises(InputError) as exc:
        parse_graph_text(text)
    assert exc.value.line == line


def test_parse_json_error_line():
    with pytest.raises(InputError) as exc:
        parse_graph_text('{"edges": [[1, 2],\n  [2, ]]}')
    assert exc.value.line == 2


def test_input_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n3 4\n")
    code, _, err = build(capsys, str(bad))
    assert code == 2 and "graph_model" in err
    code, _, err = build(capsys, str(tmp_path / "missing.txt"))
    assert code == 2


def test_parse_tree_flag():
    assert parse_tree_flag("1-2,2-3") == [(1, 2), (2, 3)]
    with pytest.raises(InputError):
        parse_tree_flag("1-x")


@pytest.mark.parametrize("name, params, constraints", [("lasso", 2, 0), ("star", 1, 0), ("bowtie", 5, 1)])
def test_gauge_command(capsys, name, params, constraints):
    code = main(["gauge", str(DATA / f"{name}.json")])
    body = json.loads(capsys.readouterr().out)
    assert code == 0
    assert len(body["params"]) == params
    assert len(body["constraints"]) == constraints


def test_gauge_lasso_tail(capsys):
    main(["gauge", str(DATA / "lasso.json")])
    body = json.loads(capsys.readouterr().out)
    edges = {e["edge"]: e["expr"] for e in body["edges"]}
    assert edges["2x(3,4)"] == edges["1x(3,4)"] == {"params": {"phi1": 1}, "const": 0}
    assert body["parameters_independent"] is True


def test_verify_pass(capsys):
    assert main(["verify", "--max-vertices", "6", "--samples", "100", "--seed", "7"]) == 0
    assert capsys.readouterr().out.startswith("PASS 100 graphs")


def test_verify_degenerate(capsys):
    assert main(["verify", "--max-vertices", "2", "--samples", "1"]) == 0


def test_verify_named_parallel(capsys):
    assert main(["verify", "--max-vertices", "6", "--samples", "10", "--named", "--jobs", "2"]) == 0
    assert "PASS 14 graphs" in capsys.readouterr().out


@pytest.mark.parametrize("n", ["11", "1"])
def test_verify_bounds(capsys, n):
    assert main(["verify", "--max-vertices", n]) == 2
