import json

import pytest
from hypothesis import given, settings

from bicolor import catalog
from bicolor.cli import main
from bicolor.graph import complete_multigraph, k4_ghz
from bicolor.io import (
    ParseError,
    dumps_graph,
    from_dot,
    graph_from_document,
    graph_to_document,
    loads_graph,
    read_graph,
    target_from_document,
    target_to_document,
    to_dot,
)
from tests.helpers import graphs


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@settings(deadline=None)
@given(graphs(max_n=8))
def test_document_roundtrip(g):
    assert graph_from_document(graph_to_document(g)) == g
    assert loads_graph(dumps_graph(g)) == g


@settings(deadline=None)
@given(graphs(max_n=8))
def test_dot_roundtrip(g):
    assert from_dot(to_dot(g)) == g


def test_document_is_one_based():
    doc = graph_to_document(k4_ghz())
    assert doc["edges"][0] == [1, 2, "r", "r", 1.0, 0.0]


def test_short_edge_record_defaults_weight():
    g = graph_from_document({"n": 2, "palette": ["r", "g"], "edges": [[1, 2, "r", "g"]]})
    assert g.edges[0].weight == 1


@pytest.mark.parametrize("edge,fragment", [
    ([1, 2, "r", "x", 1, 0], "unknown color"),
    ([1, 2, "r"], "expected"),
    ([1, 9, "r", "r", 1, 0], "invalid graph"),
    ([1, 1, "r", "r", 1, 0], "invalid graph"),
    ([1, 2, "r", "r", "one", 0], "weight parts"),
])
def test_parse_error_names_record(edge, fragment):
    doc = {"n": 2, "palette": ["r", "g"], "edges": [[1, 2, "r", "r", 1, 0], edge]}
    with pytest.raises(ParseError) as info:
        graph_from_document(doc)
    assert fragment in str(info.value)
    if fragment != "invalid graph":
        assert "edges[1]" in str(info.value)


def test_malformed_json_reports_position():
    with pytest.raises(ParseError, match="line 2"):
        loads_graph('{\n  "n": 2,,\n}')


def test_target_document_roundtrip():
    t = catalog.wstate_target()
    doc = target_to_document(t, ["r", "g"])
    back = target_from_document(json.loads(json.dumps(doc)))
    assert back == t


def test_catalog_files_match_builders():
    for name, graph in catalog.builders().items():
        assert read_graph(catalog.path(name)) == graph
    doc = json.loads(catalog.path("wstate.target").read_text())
    assert target_from_document(doc) == catalog.wstate_target()


def test_cli_state_k4(capsys):
    code, out, _ = run(capsys, "state", "k4_ghz")
    assert code == 0
    assert "perfect matchings 3" in out
    assert "N 3" in out
    assert "r,r,r,r" in out


def test_cli_state_cancelled(capsys):
    code, out, err = run(capsys, "state", "cancel_pair")
    assert code == 0
    assert "perfect matchings 2" in out
    assert "yes" in out.splitlines()[-2]
    assert "N 0" in out
    assert "warning" in err


def test_cli_fidelity(capsys):
    code, out, _ = run(capsys, "fidelity", "k4_ghz", "--mono")
    assert code == 0 and "fidelity mono 1" in out
    code, out, _ = run(capsys, "fidelity", "kmono_n6_k4", "--kmono", "4", "r", "--json")
    report = json.loads(out)
    assert code == 0 and report["k"] == 4 and report["red"] == "r"
    assert report["value"] == pytest.approx(1)


def test_cli_fidelity_undefined(capsys):
    code, _, err = run(capsys, "fidelity", "cancel_pair")
    assert code == 2 and "undefined" in err


def test_cli_fidelity_general_literal(tmp_path, capsys):
    graph_path = tmp_path / "w.json"
    code, _, _ = run(capsys, "optimize", "--search", 4, 2, "--general", "wstate.target", "--first", "-o", graph_path)
    assert code == 0
    code, out, _ = run(capsys, "fidelity", graph_path, "--general", "wstate.target", "--json")
    assert json.loads(out)["value"] == pytest.approx(1, abs=1e-12)
    code, out, _ = run(capsys, "fidelity", graph_path, "--general", "wstate.target", "--mode", "literal", "--json")
    assert json.loads(out)["value"] == pytest.approx(25 / 49, abs=1e-9)


def test_cli_verify_pass_and_fail(tmp_path, capsys):
    assert run(capsys, "verify", "k4_ghz")[0] == 0
    g = k4_ghz()
    bad = tmp_path / "bad.json"
    bad.write_text(dumps_graph(g.with_weights([2] + g.weights[1:])))
    code, out, _ = run(capsys, "verify", bad)
    assert code == 1
    assert "r,r,r,r" in out and "fail" in out


def test_cli_verify_kmono(capsys):
    assert run(capsys, "verify", "kmono_n6_k4", "--kmono", "4", "r")[0] == 0
    assert run(capsys, "verify", "kmono_n6_k4", "--kmono", "6", "r")[0] == 1


def test_cli_input_errors(tmp_path, capsys):
    assert run(capsys, "state", tmp_path / "missing.json")[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text('{"n": 2, "palette": ["r", "g"], "edges": [[1, 2, "r", "q", 1, 0]]}')
    code, _, err = run(capsys, "verify", broken)
    assert code == 2 and "edges[0]" in err
    assert run(capsys, "verify", "k4_ghz", "--kmono", "9")[0] == 2
    assert run(capsys, "verify", "k4_ghz", "--kmono", "2", "purple")[0] == 2


def test_cli_matching_explosion(tmp_path, capsys):
    path = tmp_path / "k6.json"
    path.write_text(dumps_graph(complete_multigraph(6, 2)))
    code, _, err = run(capsys, "verify", path, "--max-matchings", 10)
    assert code == 3 and "resource" in err


def test_cli_search_mono(capsys):
    code, out, _ = run(capsys, "optimize", "--search", 4, 3, "--max-edges", 6, "--max-multiplicity", 1)
    assert code == 0
    assert "exact yes" in out.splitlines()[1]


def test_cli_search_odd(capsys):
    code, out, _ = run(capsys, "optimize", "--search", 5, 2)
    assert code == 0 and "no exact hit" in out


def test_cli_search_budget(capsys):
    assert run(capsys, "optimize", "--search", 10, 3, "--universe", "all", "--max-edges", 10)[0] == 3


def test_cli_optimize_topology(tmp_path, capsys):
    out_path = tmp_path / "best.json"
    trace = tmp_path / "trace.txt"
    code, out, _ = run(capsys, "optimize", "cycle6", "--restarts", 3, "-o", out_path, "--trace", trace)
    assert code == 0 and "exact yes" in out
    assert run(capsys, "verify", out_path)[0] == 0
    assert trace.read_text().strip()


def test_cli_export_and_catalog(capsys):
    code, out, _ = run(capsys, "export", "k4_ghz", "--dot")
    assert code == 0 and from_dot(out) == k4_ghz()
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "k4_ghz.json" in out.split()
    code, out, _ = run(capsys, "catalog", "cycle4")
    assert code == 0 and loads_graph(out) == catalog.builders()["cycle4.json"]
    assert run(capsys, "catalog", "nope")[0] == 2
