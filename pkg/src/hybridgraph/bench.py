"""Benchmark manifest runner.

A manifest is a JSON file:

    {
      "defaults": {"reps": 3, "timeout_s": 600, "jobs": 1,
                   "reprs": ["hybrid", "alist"]},
      "runs": [
        {"problem": "ds",
         "generator": {"kind": "gnm", "n": 100, "m": 300, "seed": 1}},
        {"problem": "ce", "k": "planted",
         "generator": {"kind": "ce", "n": 60, "clusters": 6,
                       "flips": 14, "seed": 3}},
        {"problem": "vc", "path": "data/big.clq", "optional": true,
         "timeout_s": 1800}
      ]
    }

Each run row is solved once per representation, `reps` times each,
reporting the median wall time.  When a row covers both
representations their answers and search-tree node counts must match
exactly; a mismatch is recorded as a row failure.  Rows run on a
process pool (`jobs` workers, default 1 so timings are not disturbed)
and results keep manifest order.  Wall times cover the search call
only, never parsing or generation.

Row keys: problem (vc | vc-parm | ds | ce), and one of generator/path;
optional name, k (int, or "planted" with a ce generator), fold, lb,
reprs, reps, timeout_s, complement, optional (skip silently when the
path is missing: used for large instance files that are fetched
separately).
"""

import csv
import hashlib
import json
import os
import statistics
from concurrent.futures import ProcessPoolExecutor

from .instances import gen_cluster_editing, gen_random_gnm, read_instance
from .solvers import (
    SolveTimeout,
    solve_ce_parm,
    solve_ds_opt,
    solve_vc_opt,
    solve_vc_parm,
)

PROBLEMS = ("vc", "vc-parm", "ds", "ce")

# BenchRecord CSV column order
FIELDS = (
    "name",
    "problem",
    "repr",
    "answer",
    "size",
    "k",
    "fold",
    "nodes",
    "counters",
    "wall_ms",
    "seed",
    "config_hash",
    "speedup",
    "status",
    "error",
)


def dispatch_solve(problem, n, edges, repr_name, k=None, fold=False,
                   lb="clique", timeout=None, instrumented=False):
    """Route one (problem, graph, config) to its solver."""
    if problem == "vc":
        return solve_vc_opt(n, edges, repr_name=repr_name, lb=lb,
                            timeout=timeout, instrumented=instrumented)
    if problem == "vc-parm":
        if k is None:
            raise ValueError("vc-parm requires k")
        return solve_vc_parm(n, edges, k, repr_name=repr_name, fold=fold,
                             timeout=timeout, instrumented=instrumented)
    if problem == "ds":
        return solve_ds_opt(n, edges, repr_name=repr_name,
                            timeout=timeout, instrumented=instrumented)
    if problem == "ce":
        if k is None:
            raise ValueError("ce requires k")
        return solve_ce_parm(n, edges, k, repr_name=repr_name,
                             timeout=timeout, instrumented=instrumented)
    raise ValueError(f"unknown problem {problem!r}")


def config_hash(payload):
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _load_row_instance(row, base_dir):
    """Materialize the row's graph.  Returns (spec, seed, planted_k)."""
    gen = row.get("generator")
    path = row.get("path")
    if (gen is None) == (path is None):
        raise ValueError("row needs exactly one of 'generator' or 'path'")
    if gen is not None:
        kind = gen.get("kind")
        if kind == "gnm":
            spec = gen_random_gnm(gen["n"], gen["m"], gen["seed"])
            return spec, gen["seed"], None
        if kind == "ce":
            spec, planted = gen_cluster_editing(
                gen["n"], gen["clusters"], gen["flips"], gen["seed"])
            return spec, gen["seed"], planted
        raise ValueError(f"unknown generator kind {kind!r}")
    full = path if os.path.isabs(path) else os.path.join(base_dir, path)
    spec, _warnings = read_instance(full, complement=row.get("complement", False))
    return spec, None, None


def _base_record(row, cfg):
    return {
        "name": row.get("name", ""),
        "problem": row["problem"],
        "repr": "",
        "answer": "",
        "size": "",
        "k": "" if cfg.get("k") is None else cfg["k"],
        "fold": cfg.get("fold", False),
        "nodes": "",
        "counters": "",
        "wall_ms": "",
        "seed": "" if cfg.get("seed") is None else cfg["seed"],
        "config_hash": "",
        "speedup": "",
        "status": "ok",
        "error": "",
    }


def run_row(row, defaults, base_dir):
    """Execute one manifest row.  Returns a list of record dicts, one
    per representation (or a single error/skipped record)."""
    cfg = dict(defaults)
    cfg.update(row)
    problem = row.get("problem")
    try:
        if problem not in PROBLEMS:
            raise ValueError(f"unknown problem {problem!r}")
        path = row.get("path")
        if (
            row.get("optional", False)
            and path is not None
            and not os.path.exists(
                path if os.path.isabs(path) else os.path.join(base_dir, path))
        ):
            rec = _base_record(row, cfg)
            rec["status"] = "skipped"
            rec["error"] = f"missing optional file {path}"
            return [rec]
        spec, seed, planted = _load_row_instance(row, base_dir)
        k = row.get("k")
        if k == "planted":
            if planted is None:
                raise ValueError("'planted' k needs a ce generator")
            k = planted
        cfg["k"] = k
        cfg["seed"] = seed
        reprs = cfg.get("reprs", ["hybrid", "alist"])
        reps = int(cfg.get("reps", 3))
        timeout = cfg.get("timeout_s")
        fold = bool(cfg.get("fold", False))
        lb = cfg.get("lb", "clique")
        name = row.get("name") or spec.name
    except (ValueError, OSError, KeyError) as exc:
        rec = _base_record(row, cfg)
        rec["status"] = "error"
        rec["error"] = str(exc)
        return [rec]

    records = []
    for repr_name in reprs:
        rec = _base_record(row, cfg)
        rec["name"] = name
        rec["repr"] = repr_name
        rec["config_hash"] = config_hash({
            "problem": problem, "repr": repr_name, "k": k, "fold": fold,
            "lb": lb, "reps": reps, "timeout_s": timeout,
            "instance": spec.name,
        })
        try:
            results = [
                dispatch_solve(problem, spec.n, spec.edges, repr_name,
                               k=k, fold=fold, lb=lb, timeout=timeout)
                for _ in range(reps)
            ]
        except SolveTimeout:
            rec["status"] = "timeout"
            rec["error"] = f"timeout after {timeout}s"
            records.append(rec)
            continue
        except ValueError as exc:
            rec["status"] = "error"
            rec["error"] = str(exc)
            records.append(rec)
            continue
        nodes = {r.nodes for r in results}
        if len(nodes) != 1:
            rec["status"] = "error"
            rec["error"] = f"nondeterministic node counts {sorted(nodes)}"
            records.append(rec)
            continue
        first = results[0]
        rec["answer"] = first.answer
        rec["size"] = "" if first.size is None else first.size
        rec["nodes"] = first.nodes
        rec["wall_ms"] = round(statistics.median(r.wall_ms for r in results), 3)
        if cfg.get("counters") and not fold:
            # one extra instrumented run, never timed
            inst = dispatch_solve(problem, spec.n, spec.edges, repr_name,
                                  k=k, fold=fold, lb=lb, timeout=timeout,
                                  instrumented=True)
            rec["counters"] = json.dumps(inst.counters, sort_keys=True,
                                         separators=(",", ":"))
        records.append(rec)

    ok = [r for r in records if r["status"] == "ok"]
    if len(ok) == 2:
        a, b = ok
        if (a["answer"], a["size"], a["nodes"]) != (b["answer"], b["size"], b["nodes"]):
            for r in ok:
                r["status"] = "error"
                r["error"] = (
                    "representation mismatch: "
                    f"{a['repr']}=({a['answer']},{a['size']},{a['nodes']}) "
                    f"{b['repr']}=({b['answer']},{b['size']},{b['nodes']})")
        else:
            by_repr = {r["repr"]: r for r in ok}
            if "hybrid" in by_repr and "alist" in by_repr:
                hy = by_repr["hybrid"]["wall_ms"]
                al = by_repr["alist"]["wall_ms"]
                if hy > 0:
                    ratio = round(al / hy, 3)
                    for r in ok:
                        r["speedup"] = ratio
    return records


def _row_worker(args):
    row, defaults, base_dir = args
    return run_row(row, defaults, base_dir)


def run_manifest(manifest, base_dir=None, jobs=None, reps=None,
                 counters=False):
    """Run every row.  `manifest` is a path or a parsed dict.  Returns
    (records, all_ok); skipped optional rows do not clear all_ok."""
    if isinstance(manifest, (str, os.PathLike)):
        with open(manifest, "r", encoding="ascii") as fh:
            data = json.load(fh)
        if base_dir is None:
            base_dir = os.path.dirname(os.path.abspath(manifest))
    else:
        data = manifest
    if base_dir is None:
        base_dir = os.getcwd()
    defaults = dict(data.get("defaults", {}))
    if reps is not None:
        defaults["reps"] = reps
    if counters:
        defaults["counters"] = True
    rows = data.get("runs", [])
    if jobs is None:
        jobs = int(defaults.get("jobs", 1))
    work = [(row, defaults, base_dir) for row in rows]
    if jobs <= 1 or len(rows) <= 1:
        batches = [_row_worker(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_row_worker, work))
    records = [rec for batch in batches for rec in batch]
    all_ok = all(r["status"] in ("ok", "skipped") for r in records)
    return records, all_ok


def write_csv(records, fh):
    writer = csv.DictWriter(fh, fieldnames=FIELDS)
    writer.writeheader()
    for rec in records:
        writer.writerow(rec)


def write_json(records, fh):
    json.dump(records, fh, indent=2, default=str)
    fh.write("\n")
