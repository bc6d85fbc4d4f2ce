"""End-to-end smoke tests for the python module and the CLI binary."""

import json
import os
import subprocess

import pytest

import gkgraph

CLI = os.environ.get(
    "GKGRAPH_CLI",
    os.path.join(os.path.dirname(__file__), "..", "..", "build", "gkgraph"))


def run_cli(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def graph_file(tmp_path, text, name="g.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_graph_roundtrip():
    g = gkgraph.parse_graph("2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13")
    assert g.vertices == [2, 3, 7, 13]
    assert g.has_edge(7, 13)
    assert gkgraph.parse_graph(g.to_terse()) == g
    assert gkgraph.parse_graph(g.to_json()) == g
    assert "graph" in g.to_dot()


def test_graph_errors_surface_as_gk_error():
    with pytest.raises(gkgraph.GkError):
        gkgraph.parse_graph("4 9 ;")


def test_classify():
    res = gkgraph.classify_psl213(
        gkgraph.parse_graph("2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13"))
    assert res["realizable"] is True
    assert res["condition"] == "2a"

    res2 = gkgraph.classify_psl213(gkgraph.parse_graph("2 3 7 13 ; 3-7 3-13 7-13"))
    assert res2["condition"] == "2bii"


def test_solvable_and_coloring():
    g = gkgraph.parse_graph("3 5 ; 3-5")
    assert gkgraph.is_solvable_realizable(g)
    colors = gkgraph.k_colorable(g, 2)
    assert colors is not None
    assert colors[3] != colors[5]
    assert gkgraph.k_colorable(gkgraph.parse_graph("2 3 5 ; 2-3 2-5 3-5"), 2) is None


def test_realize_round_trip():
    out = gkgraph.realize(gkgraph.parse_graph("3 5 ; 3-5"))
    assert out is not None
    assert out["order"] == 75
    assert out["pgc"] == gkgraph.parse_graph("3 5 ; 3-5")


def test_frobenius_module():
    m = gkgraph.build_frobenius_module(2, 3)
    assert m["degree"] == 1
    assert m["generator"] == [2]


def test_dataset_access():
    names = gkgraph.dataset_names()
    assert len(names) == 20
    assert "PSL(2,13)" in names
    pgc = gkgraph.dataset_pgc("A_11")
    assert pgc.vertices == [2, 3, 5, 7, 11]


def test_applicability():
    rep = gkgraph.applicability("HS")
    assert rep["pass"] is True
    assert tuple(rep["pair"]) == (7, 11)


def test_fixed_dim_and_decider():
    assert gkgraph.fixed_dim(3, [1, 1, 1]) == 1
    lam = gkgraph.parse_graph("2 3 7 13 ; 2-7 3-7")
    pgc = gkgraph.parse_graph("2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13")
    y = gkgraph.suzgen_decide(lam, pgc, [{2, 3, 7}], 13)
    assert set(y) == {0}
    assert gkgraph.suzgen_decide(pgc, pgc, [{2, 3, 7}], 13) is None


def test_triangles_and_primes():
    k4 = gkgraph.parse_graph("2 3 5 7 ; 2-3 2-5 2-7 3-5 3-7 5-7")
    assert len(gkgraph.triangles(k4)) == 4
    assert gkgraph.is_prime(13)
    assert not gkgraph.is_prime(1)


def test_monochromatic_coloring():
    g = gkgraph.parse_graph("2 5 ; 2-5")
    colors = gkgraph.monochromatic_neighbor_coloring(g, {2})
    assert colors[2] == 1
    assert colors[5] == 2


# ---------------------------------------------------------------------------
# CLI behavior
# ---------------------------------------------------------------------------

def test_cli_check_five_cycle_positive(tmp_path):
    r = run_cli("check", graph_file(tmp_path, "2 3 5 7 11 ; 2-3 3-5 5-7 7-11 2-11"))
    assert r.returncode == 0
    assert "realizable as a solvable pgc" in r.stdout


def test_cli_check_k4_negative(tmp_path):
    r = run_cli("check", graph_file(tmp_path, "2 3 5 7 ; 2-3 2-5 2-7 3-5 3-7 5-7"))
    assert r.returncode == 1


def test_cli_malformed_input(tmp_path):
    r = run_cli("check", graph_file(tmp_path, "not a graph"))
    assert r.returncode == 2
    assert "error" in r.stderr
    r2 = run_cli("check", str(tmp_path / "missing.txt"))
    assert r2.returncode == 2


def test_cli_check_json(tmp_path):
    r = run_cli("check", "--json", graph_file(tmp_path, "3 5 ; 3-5"))
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["realizable_solvable"] is True
    assert data["colorable"] is True
    assert data["triangles"] == []


def test_cli_classify_json(tmp_path):
    r = run_cli("classify-psl213", "--json",
                graph_file(tmp_path, "2 3 7 13 ; 2-7 2-13 3-7 3-13 7-13"))
    assert r.returncode == 0
    assert json.loads(r.stdout)["condition"] == "2a"


def test_cli_enumerate(tmp_path):
    r = run_cli("enumerate", "--vertices", "2,3", "--out", str(tmp_path), "--json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["total"] == 2
    assert report["counts"]["1"] == 2
    assert (tmp_path / "report.json").exists()


def test_cli_realize(tmp_path):
    r = run_cli("realize", graph_file(tmp_path, "3 5 ; 3-5"))
    assert r.returncode == 0
    assert "MATCH" in r.stdout


def test_cli_brauer_unavailable(tmp_path):
    r = run_cli("brauer", "--group", "HS", "--p", "7", "--target",
                graph_file(tmp_path, "2 3 5 7 11 ; 2-7 2-11 3-7 3-11 5-7 5-11 7-11"))
    assert r.returncode == 2


def test_cli_brauer_witness(tmp_path):
    r = run_cli("brauer", "--group", "PSL(2,13)", "--p", "13", "--target",
                graph_file(tmp_path, "2 3 7 13 ; 2-7 3-7"), "--json")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["accepted"] is True
    assert data["witness"] == [0]

    r2 = run_cli("brauer", "--group", "PSL(2,13)", "--p", "13", "--target",
                 graph_file(tmp_path, "2 3 7 13 ; 7-13", name="g2.txt"))
    assert r2.returncode == 1


def test_cli_applicability():
    r = run_cli("applicability", "--group", "A_11")
    assert r.returncode == 0
    assert "PASS overall" in r.stdout


def test_cli_data_override(tmp_path):
    # a dataset with a single record, selected via GKGRAPH_DATA
    small = {
        "version": "test",
        "records": [
            {
                "name": "A_11", "pi": [2, 3, 5, 7, 11], "schur": 2, "out": 2,
                "simple": True,
                "pgc": {"vertices": [2, 3, 5, 7, 11],
                        "edges": [[2, 11], [3, 11], [5, 7], [5, 11], [7, 11]]},
                "fixed_rows": [[2, 3, 5, 7], [2, 3, 5, 7, 11]],
                "brauer": {},
            }
        ],
    }
    path = tmp_path / "data.json"
    path.write_text(json.dumps(small))
    r = run_cli("applicability", "--group", "A_11", env={"GKGRAPH_DATA": str(path)})
    assert r.returncode == 0
    r2 = run_cli("applicability", "--group", "HS", env={"GKGRAPH_DATA": str(path)})
    assert r2.returncode == 2
