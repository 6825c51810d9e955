#!/usr/bin/env python3
"""End-to-end checks of the fortcli binary: formats, exit codes, caching,
and byte-for-byte determinism."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1] if len(sys.argv) > 1 else "fortcli"
FAILURES = []


def run(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    env.pop("FORTLIB_CACHE", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
    if proc.returncode != expect:
        raise AssertionError(
            f"{args}: exit {proc.returncode}, expected {expect}\n"
            f"stdout: {proc.stdout[:2000]}\nstderr: {proc.stderr[:2000]}"
        )
    return proc


def check(name, fn):
    try:
        fn()
        print(f"ok   {name}")
    except Exception as exc:  # noqa: BLE001 - report and keep going
        FAILURES.append(name)
        print(f"FAIL {name}: {exc}")


def main():
    tmp = tempfile.mkdtemp(prefix="fortcli-test-")
    q2 = os.path.join(tmp, "q2.json")
    q3 = os.path.join(tmp, "q3.json")
    q4 = os.path.join(tmp, "q4.json")
    q5 = os.path.join(tmp, "q5.json")
    for dim, path in [(2, q2), (3, q3), (4, q4), (5, q5)]:
        run("gen", "hypercube", str(dim), "-o", path)

    def gen_hypercube():
        doc = json.loads(run("gen", "hypercube", "3").stdout)
        assert doc["n"] == 8 and len(doc["edges"]) == 12, doc
        assert doc["labels"][5] == "101" and doc["hypercube_dim"] == 3

    def gen_usage_errors():
        run("gen", "hypercube", "0", expect=2)
        run("gen", "hypercube", "25", expect=2)
        run("gen", "hypercube", "17", expect=3)
        run("nonsense", expect=2)
        run("forts", os.path.join(tmp, "missing.json"), expect=2)

    def gen_product():
        q1 = os.path.join(tmp, "q1.json")
        run("gen", "hypercube", "1", "-o", q1)
        doc = json.loads(run("gen", "product", q1, q1).stdout)
        assert doc["n"] == 4 and len(doc["edges"]) == 4, doc
        assert doc["hypercube_dim"] == 2

    def gen_edgelist():
        path = os.path.join(tmp, "path.txt")
        with open(path, "w") as fh:
            fh.write("3 2\n0 1\n1 2\n")
        doc = json.loads(run("gen", "edgelist", path).stdout)
        assert doc["n"] == 3 and doc["edges"] == [[0, 1], [1, 2]]
        # the same text file is accepted directly by compute commands
        forts = json.loads(run("forts", path, "--minimal").stdout)
        assert forts["count"] == 1 and forts["minimal_forts"] == [[0, 2]], forts

    def forts_census():
        doc = json.loads(run("forts", q3, "--minimal").stdout)
        assert doc["count"] == 14 and doc["by_size"] == {"3": 8, "4": 6}, doc
        assert doc["complete"] is True
        doc4 = json.loads(run("forts", q4).stdout)
        assert doc4["count"] == 348

    def forts_census_cap():
        proc = run("forts", q5, "--minimal", expect=3)
        assert "--size" in proc.stderr, proc.stderr

    def forts_by_size():
        doc = json.loads(run("forts", q4, "--size", "4").stdout)
        assert doc["count"] == 28, doc
        doc5 = json.loads(run("forts", q5, "--size", "4").stdout)
        assert doc5["count"] == 0, doc5

    def forts_csv():
        proc = run("forts", q3, "--minimal", "--csv")
        assert proc.stdout == "size,count\n3,8\n4,6\n", repr(proc.stdout)

    def zf_commands():
        number = json.loads(run("zf", "number", q3).stdout)
        assert number["Z"] == 4, number
        enum = json.loads(run("zf", "enumerate", q2).stdout)
        assert enum["count"] == 4 and sorted(enum["sets"]) == [
            [0, 1], [0, 2], [1, 3], [2, 3]]
        pt = json.loads(run("zf", "pt", q3).stdout)
        assert pt["spectrum"] == [1, 2] and pt["pt_min"] == 1 and pt["pt_max"] == 2
        assert pt["witnesses"]["1"] == [0, 1, 2, 3]

    def params_all():
        doc = json.loads(run("params", q4, "--all").stdout)
        assert doc["Z"] == 8 and doc["zstar"] == "4" and doc["ft"] == 4, doc
        assert doc["gamma"] == 4 and doc["gamma_t"] == 4 and doc["rho_open"] == 4
        assert doc["failed_zf"] == 12 and doc["pt_spectrum"] == [1, 2, 3, 4]

    def params_selected():
        doc = json.loads(run("params", q3, "--zstar").stdout)
        assert doc["zstar"] == "8/3" and "Z" not in doc, doc
        pt = json.loads(run("params", q2, "--pt").stdout)
        assert pt["pt_min"] == 1 and pt["pt_max"] == 1
        run("params", q2, expect=2)  # no parameter selected

    def construct_product():
        doc = json.loads(
            run("construct", "product", q3, "[1,2,4]", os.path.join(tmp, "q1.json"),
                "[0,1]").stdout)
        assert doc["result"] == [2, 3, 4, 5, 8, 9], doc
        assert doc["guarantee"] == "minimal-fort"

    def construct_parity_failure():
        seven = os.path.join(tmp, "seven.txt")
        with open(seven, "w") as fh:
            fh.write("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n")
        proc = run("construct", "parity", seven, "[3,6]", os.path.join(tmp, "q1.json"),
                   "[0,1]", expect=2)
        doc = json.loads(proc.stdout)
        failed = {p["name"]: p["ok"] for p in doc["preconditions_checked"]}
        assert failed["every member of F has a neighbor in F"] is False, failed

    def construct_lift():
        doc = json.loads(
            run("construct", "lift", q3, "[0,1,2,5]").stdout)
        assert doc["propagation_time"] == 2
        assert doc["lifted"] == [0, 1, 2, 3, 4, 5, 10, 11]

    def sym_commands():
        canon = json.loads(run("sym", "canon", "3", "[2,3,4,5]").stdout)
        assert canon["orbit_size"] == 6, canon
        classes = json.loads(run("sym", "classify", "2", "[[1,2],[0,3]]").stdout)
        assert len(classes) == 1 and classes[0]["orbit_size"] == 2

    def determinism():
        a = run("params", q3, "--all").stdout
        b = run("params", q3, "--all").stdout
        assert a == b, "params output changed between identical runs"
        assert run("forts", q3).stdout == run("forts", q3).stdout

    def caching():
        cache = os.path.join(tmp, "cache")
        first = run("forts", q3, "--cache-dir", cache).stdout
        cached_files = os.listdir(cache)
        assert len(cached_files) == 1, cached_files
        assert run("forts", q3, "--cache-dir", cache).stdout == first
        # corrupt the cache: the run warns, recomputes, and still succeeds
        with open(os.path.join(cache, cached_files[0]), "w") as fh:
            fh.write("{ not json")
        proc = run("forts", q3, "--cache-dir", cache)
        assert proc.stdout == first
        assert "ignoring" in proc.stderr, proc.stderr

    def cache_env_override():
        flag_dir = os.path.join(tmp, "flag-cache")
        env_dir = os.path.join(tmp, "env-cache")
        run("forts", q2, "--cache-dir", flag_dir, env_extra={"FORTLIB_CACHE": env_dir})
        assert os.path.isdir(env_dir) and os.listdir(env_dir)
        assert not os.path.isdir(flag_dir)

    def manifest():
        manifest_path = os.path.join(tmp, "run.json")
        run("forts", q3, "--manifest", manifest_path)
        doc = json.load(open(manifest_path))
        assert doc["library_version"] and doc["result_digest"]
        assert any(path.endswith("q3.json") for path in doc["input_hashes"])
        digest = doc["result_digest"]
        run("forts", q3, "--manifest", manifest_path)
        assert json.load(open(manifest_path))["result_digest"] == digest

    def verify_paper():
        proc = run("verify-paper")
        doc = json.loads(proc.stdout)
        assert doc["all_pass"] is True and len(doc["claims"]) == 12, doc
        assert proc.stderr.count("[PASS]") == 12, proc.stderr
        # identical invocations give byte-identical reports
        assert run("verify-paper").stdout == proc.stdout

    def verify_paper_corrupted_cache():
        cache = os.path.join(tmp, "verify-cache")
        run("verify-paper", "--cache-dir", cache)
        for name in os.listdir(cache):
            with open(os.path.join(cache, name), "w") as fh:
                fh.write("{ not json")
        proc = run("verify-paper", "--cache-dir", cache)
        assert "ignoring" in proc.stderr and json.loads(proc.stdout)["all_pass"] is True

    checks = [
        gen_hypercube, gen_usage_errors, gen_product, gen_edgelist,
        forts_census, forts_census_cap, forts_by_size, forts_csv, zf_commands,
        params_all, params_selected, construct_product, construct_parity_failure,
        construct_lift, sym_commands, determinism, caching, cache_env_override,
        manifest, verify_paper, verify_paper_corrupted_cache,
    ]
    for fn in checks:
        check(fn.__name__, fn)

    if FAILURES:
        print(f"{len(FAILURES)} CLI check(s) failed: {', '.join(FAILURES)}")
        return 1
    print(f"all {len(checks)} CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
