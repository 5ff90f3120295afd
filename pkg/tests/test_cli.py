"""CLI and bench-runner tests."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from hybridgraph.bench import run_manifest, write_csv
from hybridgraph.cli import main
from hybridgraph.instances import gen_random_gnm, write_edge_list


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def petersen_file(tmp_path):
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spec = gen_random_gnm(1, 0, seed=0)
    spec.name, spec.n, spec.edges = "petersen", 10, sorted(edges)
    path = tmp_path / "petersen.el"
    write_edge_list(spec, path)
    return str(path)


def test_solve_vc_human_output(runner, petersen_file):
    res = runner.invoke(main, ["solve", "vc", "--input", petersen_file])
    assert res.exit_code == 0
    assert "size 6" in res.stdout
    assert "nodes=" in res.stdout


def test_solve_ds_json(runner, petersen_file):
    res = runner.invoke(
        main, ["solve", "ds", "--input", petersen_file, "--json"])
    assert res.exit_code == 0
    record = json.loads(res.stdout)
    assert record["size"] == 3
    assert record["problem"] == "ds"
    assert record["repr"] == "hybrid"
    assert record["config_hash"]


def test_solve_decision_exit_codes(runner, petersen_file):
    yes = runner.invoke(
        main, ["solve", "vc-parm", "--input", petersen_file, "--k", "6"])
    no = runner.invoke(
        main, ["solve", "vc-parm", "--input", petersen_file, "--k", "5"])
    assert yes.exit_code == 0 and "yes" in yes.stdout
    assert no.exit_code == 1 and "no" in no.stdout


def test_solve_flag_validation(runner, petersen_file):
    missing_k = runner.invoke(main, ["solve", "ce", "--input", petersen_file])
    assert missing_k.exit_code == 2
    assert "requires --k" in missing_k.stderr
    stray_k = runner.invoke(
        main, ["solve", "vc", "--input", petersen_file, "--k", "3"])
    assert stray_k.exit_code == 2
    bad_fold = runner.invoke(
        main, ["solve", "ds", "--input", petersen_file, "--fold"])
    assert bad_fold.exit_code == 2
    assert "--fold" in bad_fold.stderr
    fold_alist = runner.invoke(
        main, ["solve", "vc-parm", "--input", petersen_file, "--k", "6",
               "--fold", "--repr", "alist"])
    assert fold_alist.exit_code == 2


def test_solve_missing_and_malformed_files(runner, tmp_path):
    gone = runner.invoke(main, ["solve", "vc", "--input", str(tmp_path / "x.el")])
    assert gone.exit_code == 2
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\n0 0\n")
    malformed = runner.invoke(main, ["solve", "vc", "--input", str(bad)])
    assert malformed.exit_code == 2
    assert "self-loop" in malformed.stderr


def test_solve_timeout_exit_code(runner, tmp_path):
    spec = gen_random_gnm(60, 700, seed=5)
    path = tmp_path / "dense.el"
    write_edge_list(spec, path)
    res = runner.invoke(
        main, ["solve", "vc", "--input", str(path), "--timeout-s", "0"])
    assert res.exit_code == 3
    assert "timeout" in res.stderr


def test_solve_timeout_env_var(runner, tmp_path):
    spec = gen_random_gnm(60, 700, seed=5)
    path = tmp_path / "dense.el"
    write_edge_list(spec, path)
    res = runner.invoke(main, ["solve", "vc", "--input", str(path)],
                        env={"HYBRIDGRAPH_TIMEOUT_S": "0"})
    assert res.exit_code == 3


def test_solve_counters_output(runner, petersen_file):
    res = runner.invoke(
        main, ["solve", "vc", "--input", petersen_file, "--counters"])
    assert res.exit_code == 0
    line = next(l for l in res.stdout.splitlines() if "delete_vertex:" in l)
    parts = dict(kv.split("=") for kv in line.split()[1:])
    assert int(parts["calls"]) > 0
    assert int(parts["reads"]) > int(parts["calls"])


def test_solve_dimacs_with_warning(runner, tmp_path):
    path = tmp_path / "dup.col"
    path.write_text("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n")
    res = runner.invoke(main, ["solve", "vc", "--input", str(path)])
    assert res.exit_code == 0
    assert "duplicate" in res.stderr
    assert "size 1" in res.stdout


def test_gen_gnm_is_byte_deterministic(runner, tmp_path):
    a = tmp_path / "a.el"
    b = tmp_path / "b.el"
    for out in (a, b):
        res = runner.invoke(
            main, ["gen", "gnm", "--n", "30", "--m", "60", "--seed", "9",
                   "--out", str(out)])
        assert res.exit_code == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_gnm_infeasible(runner, tmp_path):
    res = runner.invoke(
        main, ["gen", "gnm", "--n", "4", "--m", "7", "--out",
               str(tmp_path / "x.el")])
    assert res.exit_code == 2


def test_gen_ce_writes_sidecar(runner, tmp_path):
    out = tmp_path / "planted.el"
    res = runner.invoke(
        main, ["gen", "ce", "--n", "20", "--clusters", "4", "--k", "5",
               "--seed", "3", "--out", str(out)])
    assert res.exit_code == 0
    meta = json.loads((tmp_path / "planted.meta.json").read_text())
    assert meta["planted_k"] == 5
    assert meta["generator"]["clusters"] == 4


def _manifest(tmp_path, rows, defaults=None):
    data = {"defaults": defaults or {"reps": 2, "timeout_s": 60}, "runs": rows}
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps(data))
    return path


def test_bench_pairs_and_speedup(tmp_path):
    path = _manifest(tmp_path, [
        {"problem": "ds", "generator": {"kind": "gnm", "n": 30, "m": 70, "seed": 1}},
        {"problem": "ce", "k": "planted",
         "generator": {"kind": "ce", "n": 18, "clusters": 3, "flips": 4, "seed": 2}},
    ])
    records, all_ok = run_manifest(path)
    assert all_ok
    assert len(records) == 4
    assert [r["repr"] for r in records] == ["hybrid", "alist"] * 2
    for hy, al in zip(records[::2], records[1::2]):
        assert hy["nodes"] == al["nodes"]
        assert hy["answer"] == al["answer"]
        assert hy["speedup"] == al["speedup"] != ""


def test_bench_row_error_continues_and_exit_code(runner, tmp_path):
    path = _manifest(tmp_path, [
        {"problem": "vc", "path": "missing.el"},
        {"problem": "ds", "generator": {"kind": "gnm", "n": 12, "m": 20, "seed": 1}},
    ])
    res = runner.invoke(main, ["bench", str(path)])
    assert res.exit_code == 2
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert rows[0]["status"] == "error"
    assert [r["status"] for r in rows[1:]] == ["ok", "ok"]


def test_bench_optional_row_skips_cleanly(runner, tmp_path):
    path = _manifest(tmp_path, [
        {"problem": "vc", "path": "missing.clq", "optional": True},
    ])
    res = runner.invoke(main, ["bench", str(path)])
    assert res.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert [r["status"] for r in rows] == ["skipped"]


def test_bench_empty_manifest(runner, tmp_path):
    path = _manifest(tmp_path, [])
    res = runner.invoke(main, ["bench", str(path)])
    assert res.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert rows == []


def test_bench_counters_column(tmp_path):
    path = _manifest(tmp_path, [
        {"problem": "vc", "generator": {"kind": "gnm", "n": 16, "m": 30, "seed": 4},
         "reprs": ["hybrid"]},
    ])
    records, all_ok = run_manifest(path, counters=True)
    assert all_ok
    counters = json.loads(records[0]["counters"])
    assert counters["restore"]["calls"] > 0
    assert counters["delete_vertex"]["writes"] > 0


def test_bench_parallel_keeps_manifest_order(tmp_path):
    rows = [
        {"name": f"row{i}", "problem": "ds",
         "generator": {"kind": "gnm", "n": 14, "m": 25, "seed": i}}
        for i in range(4)
    ]
    path = _manifest(tmp_path, rows, defaults={"reps": 1, "timeout_s": 60})
    records, all_ok = run_manifest(path, jobs=3)
    assert all_ok
    assert [r["name"] for r in records] == [
        f"row{i}" for i in range(4) for _ in range(2)]


def test_bench_csv_round_trip(tmp_path):
    path = _manifest(tmp_path, [
        {"problem": "vc-parm", "k": 8,
         "generator": {"kind": "gnm", "n": 20, "m": 40, "seed": 6}},
    ])
    records, _ = run_manifest(path)
    buf = io.StringIO()
    write_csv(records, buf)
    rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
    assert len(rows) == len(records)
    assert rows[0]["problem"] == "vc-parm"
    assert int(rows[0]["nodes"]) == records[0]["nodes"]
