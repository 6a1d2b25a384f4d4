import json
import subprocess
import sys


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "kegraph.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )


def test_report_fixture():
    r = run_cli("report", "--fixture", "fig11222")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["alpha"] == 5 and doc["mu"] == 4 and doc["rho_v"] == 5


def test_report_stdin_edgelist():
    r = run_cli("report", "--input", "-", stdin="5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["n"] == 5 and doc["kappa"] == 1 and doc["rho_v"] == 5


def test_report_graph6_multiline():
    # two copies of K3
    r = run_cli("report", "--input", "-", "--format", "graph6", stdin="Bw\nBw\n")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert len(lines) == 2
    assert all(json.loads(x)["alpha"] == 1 for x in lines)


def test_empty_input_is_an_input_error():
    r = run_cli("report", "--input", "-", stdin="")
    assert r.returncode == 2


def test_malformed_input_is_an_input_error():
    r = run_cli("report", "--input", "-", stdin="3 1\n0 zebra\n")
    assert r.returncode == 2


def test_unknown_theorem_id_is_an_input_error():
    r = run_cli("verify", "--fixture", "fig11222", "--theorems", "bogus")
    assert r.returncode == 2


def test_verify_jsonl():
    r = run_cli("verify", "--fixture", "fig34-G1", "--theorems", "lem13,th5")
    assert r.returncode == 0
    lines = [json.loads(x) for x in r.stdout.strip().splitlines()]
    assert {x["theorem_id"] for x in lines} == {"lem13", "th5"}
    assert all(x["status"] == "pass" for x in lines)
    lem13 = next(x for x in lines if x["theorem_id"] == "lem13")
    assert lem13["detail"]["lhs"] == 1 and lem13["detail"]["rhs"] == 2


def test_capacity_exit_code():
    r = run_cli("report", "--fixture", "fig11222", "--solver-n", "3")
    assert r.returncode == 3
    doc = json.loads(r.stdout)
    assert doc["partial"] is True


def test_fuzz_exhaustive_summary():
    r = run_cli("fuzz", "--exhaustive", "--n-max", "4")
    assert r.returncode == 0
    assert "total: fails=0" in r.stdout


def test_fuzz_determinism():
    args = ("fuzz", "--count", "40", "--seed", "11", "--n-max", "7")
    a, b = run_cli(*args), run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_gen_round_trips_through_report():
    r = run_cli("gen", "kind=cycle_plus_trees,n=10,count=2,seed=5")
    assert r.returncode == 0
    r2 = run_cli("gen", "kind=cycle_plus_trees,n=10,count=2,seed=5")
    assert r.stdout == r2.stdout
    assert r.stdout.strip()
