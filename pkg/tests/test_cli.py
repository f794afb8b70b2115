import json
import subprocess
import sys

import pytest

from cdgraph.cli import main
from cdgraph.families import WORKED_INTERVALS, complete, cycle, proper_interval_seven
from cdgraph.graph import to_edge_list
from cdgraph.intervalrep import IntervalRep, intersection_graph, to_interval_text
from cdgraph.oracles import separated_cluster_exact


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_solve_c6_exact(files, capsys):
    c6 = files("c6.txt", to_edge_list(cycle(6)))
    code, obj, _ = run(capsys, "solve", "--problem", "cd-color", "--graph", c6, "--method", "exact")
    assert code == 0 and obj["value"] == 4 and obj["verified"] and obj["schema"] == "cdgraph/1"
    assert set(obj["timings_ms"]) == {"parse", "solve", "verify"}


def test_solve_total_dom_k5(files, capsys):
    k5 = files("k5.txt", to_edge_list(complete(5)))
    code, obj, _ = run(capsys, "solve", "--problem", "total-dom", "--graph", k5)
    assert code == 0 and obj["value"] == 2


def test_solve_sep_cluster_intervals(files, capsys):
    rep = IntervalRep.of(WORKED_INTERVALS)
    g = intersection_graph(rep)
    gp = files("g.txt", to_edge_list(g))
    iv = files("g.iv", to_interval_text(rep))
    code, obj, _ = run(capsys, "solve", "--problem", "sep-cluster", "--graph", gp, "--intervals", iv)
    assert code == 0 and obj["method"] == "interval"
    assert obj["value"] == separated_cluster_exact(g)[0]


def test_auto_picks_aux_and_records_it(files, capsys):
    gp = files("p7.txt", to_edge_list(proper_interval_seven()))
    code, obj, _ = run(capsys, "solve", "--problem", "cd-color", "--graph", gp)
    assert code == 0 and obj["method"].startswith("aux-") and obj["value"] == 4


def test_aux_inapplicable_reports_evidence(files, capsys):
    c6 = files("c6.txt", to_edge_list(cycle(6)))
    code, obj, err = run(capsys, "solve", "--problem", "cd-color", "--graph", c6, "--method", "aux")
    assert code == 2 and "C6" in obj["message"] and "C6" in err


def test_interval_method_needs_intervals(files, capsys):
    c6 = files("c6.txt", to_edge_list(cycle(6)))
    code, _, _ = run(capsys, "solve", "--problem", "sep-cluster", "--graph", c6, "--method", "interval")
    assert code == 2


def test_limit_exit_code(files, capsys, monkeypatch):
    c6 = files("c6.txt", to_edge_list(cycle(6)))
    code, obj, _ = run(capsys, "solve", "--problem", "cd-color", "--graph", c6, "--method", "exact", "--limit", "4")
    assert code == 3 and obj["error"] == "limit"
    monkeypatch.setenv("CDGRAPH_LIMIT", "4")
    code, _, _ = run(capsys, "solve", "--problem", "total-dom", "--graph", c6, "--method", "exact")
    assert code == 3


def test_unreadable_and_malformed(files, capsys):
    code, _, _ = run(capsys, "solve", "--problem", "cd-color", "--graph", "/nonexistent/file.txt")
    assert code == 2
    bad = files("bad.txt", "0 x\n")
    code, _, _ = run(capsys, "solve", "--problem", "cd-color", "--graph", bad)
    assert code == 2
    code, _, _ = run(capsys, "solve", "--problem", "nope", "--graph", bad)
    assert code == 2


def test_isolated_vertex_is_usage_error(files, capsys):
    gp = files("iso.txt", "3 1\n0 1\n")
    code, obj, _ = run(capsys, "solve", "--problem", "cd-color", "--graph", gp)
    assert code == 2 and "isolated" in obj["message"]


def test_output_is_stable(files, capsys):
    gp = files("p7.txt", to_edge_list(proper_interval_seven()))
    args = ("solve", "--problem", "cd-color", "--graph", gp, "--method", "exact", "--no-timings")
    main(list(args))
    first = capsys.readouterr().out
    main(list(args))
    assert capsys.readouterr().out == first


def test_multiple_graphs_with_jobs(files, capsys):
    a = files("a.txt", to_edge_list(cycle(6)))
    b = files("b.txt", to_edge_list(complete(4)))
    code, obj, _ = run(capsys, "solve", "--problem", "total-dom", "--graph", a, b, "--jobs", "2", "--no-timings")
    assert code == 0 and [o["value"] for o in obj] == [4, 2]


def test_verify_roundtrip_and_failure(files, capsys, tmp_path):
    c6 = files("c6.txt", to_edge_list(cycle(6)))
    main(["solve", "--problem", "cd-color", "--graph", c6, "--no-timings"])
    cert = files("col.json", capsys.readouterr().out)
    code, obj, _ = run(capsys, "verify", "--graph", c6, "--cert", cert)
    assert code == 0 and obj["ok"]
    bad = files("bad.json", json.dumps({"type": "total-dominating-set", "vertices": [0]}))
    code, obj, _ = run(capsys, "verify", "--graph", c6, "--cert", bad)
    assert code == 1 and not obj["ok"] and obj["results"][0]["reason"]


def test_generate_gap_family(tmp_path, capsys):
    prefix = str(tmp_path / "gap")
    code, obj, _ = run(capsys, "generate", "gap-family", "--n", "10", "--d", "3", "--out", prefix)
    assert code == 0 and obj["certificate_sizes"] == {"cd-coloring": 30, "total-dominating-set": 20}
    code, obj, _ = run(capsys, "verify", "--graph", prefix + ".txt", "--cert", prefix + ".json")
    assert code == 0 and len(obj["results"]) == 2


def test_generate_regular_odd_and_rejects_c5(files, tmp_path, capsys):
    k33 = files("k33.txt", "".join(f"{i} {j}\n" for i in range(3) for j in range(3, 6)))
    code, obj, _ = run(capsys, "generate", "regular-odd", "--d", "5", "--input", k33, "--out", str(tmp_path / "o"))
    assert code == 0 and obj["n"] == 450 and obj["offset"] == 4 * 6 * (5 - 1) and obj["structure"]["regular_degree"] == 5
    c5 = files("c5.txt", to_edge_list(cycle(5)))
    code, _, _ = run(capsys, "generate", "regular-odd", "--d", "5", "--input", c5, "--out", str(tmp_path / "p"))
    assert code == 2


def test_generate_c6free_bipartite(files, tmp_path, capsys):
    two_k3 = files("2k3.txt", "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n")
    code, obj, _ = run(capsys, "generate", "c6free-bipartite", "--input", two_k3, "--out", str(tmp_path / "b"))
    assert code == 0 and len(obj["side_b"]) == 2 and obj["structure"]["bipartite"]


def test_analyze_c6(files, capsys):
    c6 = files("c6.txt", to_edge_list(cycle(6)))
    code, obj, _ = run(capsys, "analyze", "--graph", c6)
    assert code == 0
    assert obj["bipartite"] and not obj["chordal_bipartite"] and not obj["h_free"]
    assert obj["h_witness"]["member"] == "C6"


def test_analyze_intervals_cd_perfect(files, capsys):
    # a proper interval representation of the seven-vertex example
    rep = IntervalRep.of([(0, 2), (1, 5), (4, 9), (8, 12), (11, 13), (3, 6), (7, 10)])
    assert intersection_graph(rep) == proper_interval_seven()
    iv = files("p7.iv", to_interval_text(rep))
    code, obj, _ = run(capsys, "analyze", "--intervals", iv, "--cd-perfect")
    assert code == 0 and obj["intervals"]["valid"] and obj["intervals"]["proper"]
    assert obj["cd_perfect"]["is_cd_perfect"] is False
    assert obj["cd_perfect"]["counterexample"]["chi_cd"] > obj["cd_perfect"]["counterexample"]["omega_s"]


def test_module_entry_point(files):
    c6 = files("c6.txt", to_edge_list(cycle(6)))
    proc = subprocess.run([sys.executable, "-m", "cdgraph", "solve", "--problem", "sep-cluster", "--graph", c6],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 2
