"""End-to-end checks of the ellweyl command-line tool.

Usage: python3 test_cli.py PATH_TO_ELLWEYL
"""

import hashlib
import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("ELLWEYL_THREADS", None)
    full_env.update(env or {})
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env)


def check(cond, message):
    print(("ok   " if cond else "FAIL ") + message)
    if not cond:
        failures.append(message)


def digest(path):
    with open(path, "rb") as f:
        return hashlib.sha256(f.read()).hexdigest()


with tempfile.TemporaryDirectory() as tmp:
    p = run("roots", "--type", "all")
    check(p.returncode == 0, "roots exits 0")
    check([r["finite_roots"] for r in json.loads(p.stdout)] == [24, 72, 126, 240], "roots lists all four kinds")

    check(run("roots", "--type", "A5").returncode == 2, "unknown type is a usage error")
    check(run("frobnicate").returncode == 2, "unknown subcommand is a usage error")
    check(run("hurwitz", "--type", "all").returncode == 2, "hurwitz rejects --type all")
    check(run("poset", "--format", "svg").returncode == 2, "unsupported format is a usage error")
    check(run("hurwitz", "--threads", "1", env={"ELLWEYL_THREADS": "zero"}).returncode == 0,
          "explicit --threads overrides the environment")
    check(run("hurwitz", "--max-states", "10", env={"ELLWEYL_THREADS": "zero"}).returncode == 2,
          "malformed ELLWEYL_THREADS is a usage error")

    p = run("hurwitz", "--type", "D4", "--bound", "1", "--max-states", "1000")
    check(p.returncode == 3, "state cap exits 3")
    check(json.loads(p.stdout)["overflow"] is True, "summary reports the cap")

    outs = []
    for threads in ("1", "2"):
        path = os.path.join(tmp, f"census{threads}.jsonl")
        p = run("hurwitz", "--type", "D4", "--bound", "1", "--max-states", "30000", "--out", path,
                env={"ELLWEYL_THREADS": threads})
        outs.append((p.stdout, digest(path)))
    check(outs[0] == outs[1], "census output does not depend on the thread count")

    with open(os.path.join(tmp, "census1.jsonl")) as f:
        lines = f.readlines()
    src, dst = os.path.join(tmp, "from.json"), os.path.join(tmp, "to.json")
    for path, line in ((src, lines[0]), (dst, lines[2000])):
        with open(path, "w") as f:
            json.dump({"kind": "D4", "entries": json.loads(line)["entries"]}, f)
    p = run("hurwitz", "--type", "D4", "--bound", "1", "--connect", src, dst)
    check(p.returncode == 0 and json.loads(p.stdout)["result"] == "found", "connect finds a braid word")

    posets = []
    for _ in range(2):
        path = os.path.join(tmp, f"poset{len(posets)}.json")
        p = run("poset", "--type", "D4", "--bound", "0", "--format", "json", "--out", path)
        check(p.returncode == 0, "poset exits 0")
        posets.append(digest(path))
    check(posets[0] == posets[1], "poset export is byte-identical across runs")
    with open(os.path.join(tmp, "poset0.json")) as f:
        doc = json.load(f)
    check(len(doc["nodes"]) == 3448 and len(doc["covers"]) == 16324, "poset has the expected size")
    p = run("poset", "--type", "D4", "--format", "dot")
    check(p.returncode == 0 and p.stdout.startswith("digraph"), "dot export goes to standard output")

    quick = ["--pairs", "200", "--braid-words", "200", "--central-samples", "50", "--census-states", "20000",
             "--connect-samples", "3"]
    p = run("verify", "--paper", "--type", "E6", *quick)
    check(p.returncode == 0 and json.loads(p.stdout)["passed"], "verify passes")
    p = run("verify", "--paper", "--type", "D4", "--sabotage-gram", *quick)
    failed = [r["id"] for r in json.loads(p.stdout)["results"] if not r["passed"]]
    check(p.returncode == 1, "sabotaged verify exits 1")
    check("S.signature" in failed and "C1.reflection_length" in failed, "sabotage names failing items")
    check(run("verify", "--type", "D4").returncode == 2, "verify requires --paper")

sys.exit(1 if failures else 0)
