import json

import pytest

from qcw.cli import main
from qcw.kernel.serialize import dump_set, load_set

CORPUS = [
    ["poset-chain", "--n", "2"], ["simplex", "--n", "2"], ["boundary", "--n", "2"], ["horn", "--n", "2", "--k", "1"],
    ["iso-groupoid", "--n", "3"], ["square"], ["divisor-lattice", "--n", "12"], ["homotopic-pair"],
    ["iota-trunc"], ["adjunction", "--name", "iota-trunc"],
    ["divisor-diagram", "--objects", "4,6"],
]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    doc = json.loads(out.out) if out.out.strip() else None
    return code, doc, out.err


@pytest.fixture
def delta2(tmp_path, capsys):
    path = tmp_path / "delta2.json"
    assert run(capsys, "corpus", "simplex", "--n", 2, "--out", path)[0] == 0
    return path


@pytest.mark.parametrize("argv", CORPUS, ids=lambda a: a[0])
def test_every_corpus_kind_builds(argv, capsys):
    code, doc, _ = run(capsys, "corpus", *argv)
    assert code == 0 and doc["status"] == "built"
    assert doc["sets"]


def test_comma_demo_from_stored_maps(tmp_path, capsys):
    path = tmp_path / "it.json"
    run(capsys, "corpus", "iota-trunc", "--out", path)
    code, doc, _ = run(capsys, "corpus", "comma-demo", "--in", path, "--f", "iota", "--g", "id")
    assert code == 0 and doc["status"] == "built"
    assert "comma" in doc["sets"]


def test_simplex_is_a_quasicategory(delta2, capsys):
    code, doc, _ = run(capsys, "check", "qcat", "--in", delta2, "--cap", 3)
    assert code == 0 and doc["status"] == "verified"


def test_horn_is_refuted_with_counterexample(tmp_path, capsys):
    path = tmp_path / "h.json"
    run(capsys, "corpus", "horn", "--n", 2, "--k", 1, "--out", path)
    code, doc, _ = run(capsys, "check", "qcat", "--in", path, "--set", "horn2_1", "--cap", 2)
    assert code == 1 and doc["status"] == "refuted"
    assert "(0,1)" in doc["result"]["counterexample"]["top"]


def test_tiny_budget_exits_two(tmp_path, capsys):
    path = tmp_path / "g.json"
    run(capsys, "corpus", "iso-groupoid", "--n", 4, "--out", path)
    code, doc, _ = run(capsys, "check", "qcat", "--in", path, "--cap", 4, "--budget", 5)
    assert code == 2 and doc["status"] == "inconclusive"


def test_budget_from_environment(tmp_path, capsys, monkeypatch):
    path = tmp_path / "g.json"
    run(capsys, "corpus", "iso-groupoid", "--n", 4, "--out", path)
    monkeypatch.setenv("QCW_BUDGET", "5")
    assert run(capsys, "check", "qcat", "--in", path, "--cap", 4)[0] == 2


def test_terminal_names_the_top_vertex(delta2, capsys):
    code, doc, _ = run(capsys, "terminal", "--in", delta2)
    assert code == 0 and doc["result"]["vertex"] == "(2)"
    assert doc["result"]["all"] == ["(2)"]


def test_initial_names_the_bottom_vertex(delta2, capsys):
    code, doc, _ = run(capsys, "terminal", "--in", delta2, "--initial")
    assert code == 0 and doc["result"]["vertex"] == "(0)"


def test_comparison_s_verifies(delta2, capsys):
    code, doc, _ = run(capsys, "compare-s", "--in", delta2, "--x", "chain2", "--y", "chain2")
    assert code == 0 and all(doc["result"]["checks"].values())


def test_adjunction_search_from_corpus(tmp_path, capsys):
    path = tmp_path / "it.json"
    run(capsys, "corpus", "iota-trunc", "--out", path)
    code, doc, _ = run(capsys, "adjoint", "search", "--in", path, "--f", "iota", "--u", "trunc")
    assert code == 0 and doc["status"] == "verified"


def test_certificate_replays(delta2, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    assert run(capsys, "check", "qcat", "--in", delta2, "--cap", 3, "--out", cert)[0] == 0
    code, doc, _ = run(capsys, "replay", "--in", cert)
    assert code == 0
    assert doc["result"]["status_reproduced"] and doc["result"]["result_identical"]


def test_certificate_embeds_its_inputs(delta2, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run(capsys, "check", "qcat", "--in", delta2, "--cap", 3, "--out", cert)
    doc = json.loads(cert.read_text())
    assert "chain2" in doc["inputs"]["sets"]
    assert "--in" not in doc["command"]


def test_output_is_deterministic(delta2, tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "terminal", "--in", delta2, "--out", a)
    run(capsys, "terminal", "--in", delta2, "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_load_save_load_is_byte_identical(delta2):
    doc = json.loads(delta2.read_text())
    text = json.dumps({"format": doc["format"], **doc["sets"]["chain2"]})
    X = load_set(text)
    once = dump_set(X)
    assert dump_set(load_set(once)) == once


def test_unknown_subcommand_is_a_usage_error(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 64 and "usage" in err


def test_missing_set_name_is_a_usage_error(tmp_path, capsys):
    path = tmp_path / "h.json"
    run(capsys, "corpus", "horn", "--n", 2, "--k", 1, "--out", path)
    code, _, err = run(capsys, "check", "qcat", "--in", path)
    assert code == 64 and "horn2_1" in err


def test_not_json_is_a_schema_error(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text("{nope")
    assert run(capsys, "check", "qcat", "--in", path)[0] == 65


def test_empty_document_is_a_schema_error(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text('{"garbage": 1}')
    assert run(capsys, "check", "qcat", "--in", path)[0] == 65


def test_bad_face_names_the_cell(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"cells": [["a", "b"], ["e"]], "faces": {"e": [["a", [0]], ["zz", [0]]]}}))
    code, _, err = run(capsys, "check", "qcat", "--in", path)
    assert code == 65 and "'e'" in err


def test_wrong_format_version_is_rejected(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"format": 99, "sets": {}}))
    code, _, err = run(capsys, "check", "qcat", "--in", path)
    assert code == 65 and "format" in err


def test_duplicate_names_across_inputs(delta2, capsys):
    code, _, err = run(capsys, "check", "qcat", "--in", delta2, "--in", delta2)
    assert code == 65 and "twice" in err


def test_limit_of_divisor_diagram(tmp_path, capsys):
    path = tmp_path / "d.json"
    run(capsys, "corpus", "divisor-diagram", "--objects", "4,6", "--out", path)
    doc = json.loads(path.read_text())
    diagram = next(iter(doc["maps"]))
    code, lim, _ = run(capsys, "limit", "--in", path, "--map", diagram, "--cap", 2)
    assert code == 0 and lim["result"]["vertex"] == "(2)"
    code, colim, _ = run(capsys, "colimit", "--in", path, "--map", diagram, "--cap", 2)
    assert code == 0 and colim["result"]["vertex"] == "(12)"
