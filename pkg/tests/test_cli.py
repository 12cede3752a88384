import io
import json
import re
import subprocess
import sys

import networkx as nx
import pytest

from qbrauer import cli, towers
from qbrauer.qarith import RootOfUnityContext as C


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


def test_index_prints_both_values():
    code, text = run("index", "--N", "3", "--ell", "7")
    assert code == 0
    assert "ratio=3.80193774" in text and "closed_form=3.80193774" in text
    diff = float(re.search(r"difference=(\S+)", text).group(1))
    assert diff < 1e-8


def test_verify_five_nine_passes():
    code, text = run("verify", "--N", "5", "--ell", "9")
    assert code == 0, text
    assert text.count("PASS") == 7


def test_verify_names_the_failing_check():
    code, text = run("verify", "--N", "3", "--ell", "8")
    assert code == 1
    assert "FAIL positivity" in text


@pytest.mark.parametrize("argv", [["index", "--N", "9", "--ell", "7"], ["index", "--N", "3", "--ell", "7", "--tol", "0.1"], ["frobnicate"], ["branch", "--N", "3", "--ell", "8", "--lambda", "2"]])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_graph_json_schema():
    code, text = run("graph", "--N", "3", "--ell", "7", "--format", "json")
    data = json.loads(text)
    assert set(data) == {"even", "odd", "edges", "index", "n_stable"}
    assert set(data["even"][0]) == {"label", "dtilde"}
    assert set(data["odd"][0]) == {"label", "d", "local_index"}
    assert all(len(e) == 3 for e in data["edges"])


def test_dot_round_trips_to_the_principal_graph():
    code, text = run("graph", "--N", "2", "--ell", "8", "--format", "dot")
    g = nx.Graph()
    g.add_edges_from(re.findall(r"(\w+) -- (\w+)", text))
    assert nx.is_isomorphic(g, towers.principal_graph(C(2, 8)).to_networkx())


def test_branch_methods_agree():
    code, text = run("branch", "--N", "4", "--ell", "8", "--lambda", "4 2", "--method", "both")
    assert code == 0
    tables = json.loads(text)
    assert tables[0]["entries"] == tables[1]["entries"]


def test_labels_have_boundary_flags():
    code, text = run("labels", "--N", "2", "--ell", "8", "--n", "3", "--kind", "brauer")
    rows = json.loads(text)
    assert {"kind", "label", "size", "boundary"} <= set(rows[0])
    assert any(r["boundary"] for r in rows)


def test_weights_csv():
    code, text = run("weights", "--N", "3", "--ell", "7", "--n", "2", "--format", "csv")
    lines = text.strip().splitlines()
    assert lines[0] == "kind,label,weight" and len(lines) > 2


def test_bratteli_counts():
    code, text = run("bratteli", "--N", "3", "--ell", "7", "--n", "2", "--format", "json")
    rows = json.loads(text)
    assert {(tuple(r["label"]), r["paths"]) for r in rows if r["level"] == 2} == {((2,), 1), ((1, 1), 1), ((), 1)}


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "qbrauer", "graph", "--N", "4", "--ell", "8", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_nine_significant_digits():
    code, text = run("index", "--N", "2", "--ell", "8", "--format", "json")
    assert json.loads(text)["ratio"] == 3.41421356
