import json
import subprocess
import sys

import pytest

from outerplanar.cli import count_rows, main
from outerplanar.composition import build_tables, counts, edge_counts


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_general(capsys):
    code, out, _ = run(capsys, "count", "--family", "general", "--n", "7")
    assert code == 0
    assert out.splitlines()[1:] == [f"{n},{v}" for n, v in
                                    enumerate([1, 1, 2, 4, 10, 25, 80, 277])]
    assert "\r" not in out


def test_count_dissections_ends_with_262(capsys):
    _, out, _ = run(capsys, "count", "--family", "dissections", "--n", "9")
    assert out.splitlines()[-1] == "9,262"


def test_count_connected_zero_is_empty(capsys):
    code, out, _ = run(capsys, "count", "--family", "connected", "--n", "0")
    assert code == 0 and out.splitlines() == ["n,count"]


def test_json_roundtrip_is_exact(capsys):
    _, out, _ = run(capsys, "count", "--family", "general", "--n", "30", "--format", "json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["command"]["family"] == "general"
    got = [int(r["count"]) for r in doc["payload"]["rows"]]
    assert got == counts(build_tables(30).g)
    assert all(isinstance(r["count"], str) for r in doc["payload"]["rows"])


def test_edge_table_roundtrip(capsys):
    _, out, _ = run(capsys, "count", "--family", "connected", "--n", "8", "--edges",
                    "--format", "json")
    rows = json.loads(out)["payload"]["rows"]
    grid = edge_counts(build_tables(8, edge_marked=True).c_xy)
    assert {(int(r["n"]), int(r["m"])): int(r["count"]) for r in rows} == \
        {(n, m): v for n in range(1, 9) for m, v in enumerate(grid[n]) if v}


def test_count_and_oracle_agree(capsys):
    for n in range(6):
        _, out, _ = run(capsys, "oracle", "--n", str(n))
        total = sum(int(line.split(",")[-1]) for line in out.splitlines()[1:])
        assert total == int(count_rows("general", n)[-1][1])


def test_oracle_rows(capsys):
    _, out, _ = run(capsys, "oracle", "--n", "1")
    assert len(out.splitlines()) == 2
    _, out, _ = run(capsys, "oracle", "--n", "4")
    assert out.splitlines()[0] == "n,m,connected,two_connected,bipartite,count"
    assert sum(int(line.split(",")[-1]) for line in out.splitlines()[1:]) == 10


@pytest.mark.parametrize("argv", [
    ("oracle", "--n", "9"),
    ("asym", "--digits", "20"),
    ("count", "--family", "trees", "--n", "3"),
    ("count", "--family", "bipartite-general", "--n", "3", "--edges"),
    ("count", "--family", "general", "--n", "100000"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "usage error" in err


def test_asym_small_truncation(capsys):
    code, out, _ = run(capsys, "asym", "--m", "1", "--digits", "30", "--no-edge-law")
    assert code == 0
    doc = json.loads(out)
    rho = doc["payload"]["rho"]
    assert rho["value"].startswith("0.134618768861")
    assert rho["method"]["m"] == 1 and rho["method"]["digits"] == 30


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "outerplanar.cli", "count", "--family",
                           "bipartite-general", "--n", "5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "5,12"
