#!/usr/bin/env python3
"""CLI snapshot tests: exact outputs, exit codes, determinism.

Usage: cli_snapshot.py <path-to-fourmove-binary>
"""
import json
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
failures = 0


def run(args, stdin=None):
    return subprocess.run([BIN] + args, capture_output=True, text=True, input=stdin)


def check(name, cond, extra=""):
    global failures
    if cond:
        print(f"ok   {name}")
    else:
        failures += 1
        print(f"FAIL {name} {extra}")


# --- determinism: byte-identical output on repeated runs ---
for args in (
    ["check", "--catalog", "figure4_welded", "--q", "5", "--format", "json"],
    ["check", "--catalog", "milnor_chain(3)", "--q", "5"],
    ["expand", "--word", "a1^-1 a2^-1 a1 a2", "--m", "2", "--D", "4"],
):
    a, b = run(args), run(args)
    check(f"determinism {' '.join(args[:2])}", a.stdout == b.stdout and a.returncode == b.returncode)

# --- check: figure4 JSON content ---
r = run(["check", "--catalog", "figure4_welded", "--q", "5", "--format", "json"])
check("figure4 exit 0", r.returncode == 0)
doc = json.loads(r.stdout)
check("figure4 verdict", doc["verdict"] == "OBSTRUCTED")
check("figure4 lk", doc["linking_matrix"] == [[0, 0], [0, 0]])
cond2 = doc["components"][1]["conditions"]["II"]
check("figure4 II violated", cond2["status"] == "violated")
check(
    "figure4 II witness",
    cond2["witnesses"][0] == {"monomials": ["X1X2X2", "X2X1X1"], "values": [1, 0]},
)
check("figure4 key order", r.stdout.startswith('{"verdict":"OBSTRUCTED","q":5,"degree_bound":4,'))

# --- check: trivial / hopf text and exit codes ---
r = run(["check", "--catalog", "trivial(2)"])
check("trivial exit 0", r.returncode == 0)
check("trivial verdict", "verdict: NO_OBSTRUCTION_FOUND" in r.stdout)

r = run(["check", "--catalog", "hopf", "--fail-on-obstructed"])
check("hopf --fail-on-obstructed exit 10", r.returncode == 10)
check("hopf V witness", "V violated: c(X1X2) = 1" in r.stdout)

# --- expand snapshot ---
r = run(["expand", "--word", "a2^-1 a1 a2^-1 a1^-1 a2 a1 a2 a1^-1", "--m", "2", "--D", "3"])
check("expand snapshot", r.stdout == "1 + X1X2X2 + X2X2X1\n", repr(r.stdout))
check("expand omits X2X1X1", "X2X1X1" not in r.stdout)

# --- lk / longitudes / mu snapshots ---
r = run(["lk", "--catalog", "figure4_welded"])
check("lk snapshot", r.stdout == "[[0,0],[0,0]]\n", repr(r.stdout))

r = run(["longitudes", "--catalog", "figure4_welded"])
check("longitudes snapshot", r.stdout == "lambda1 = 1\nlambda2 = x1_1 x1_2^-1\n", repr(r.stdout))

r = run(["mu", "--catalog", "milnor_chain(3)", "--seq", "1,2", "--target", "3", "--q", "5"])
check("mu snapshot", r.stdout == "mu(1,2; 3) mod 2 = 1\n", repr(r.stdout))

# --- catalog list/show; shown JSON parses back ---
r = run(["catalog", "list"])
names = r.stdout.split()
check("catalog list", "figure4_welded" in names and "milnor_chain(6)" in names)

r = run(["catalog", "show", "trivial(2)"])
doc = json.loads(r.stdout)
check("catalog show", list(doc.keys()) == ["name", "components"] and doc["components"] == [[], []])

# --- file and stdin input ---
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "link.json")
    with open(path, "w") as f:
        f.write(run(["catalog", "show", "hopf"]).stdout)
    r = run(["lk", path])
    check("file input", r.stdout == "[[0,1],[1,0]]\n", repr(r.stdout))

r = run(["lk", "-"], stdin='{"name":"h","components":[[{"over":[2,1],"sign":1}],[{"over":[1,1],"sign":1}]]}')
check("stdin input", r.stdout == "[[0,1],[1,0]]\n", repr(r.stdout))

r = run(["lk", "-", "--gauss"], stdin="O1+ U2+ O3+ U1+ O2+ U3+\n")
check("gauss input", r.stdout == "[[3]]\n", repr(r.stdout))

# --- error exit codes ---
r = run(["check", "-"], stdin="this is not json")
check("parse error exit 2", r.returncode == 2, str(r.returncode))

r = run(["check", "-"], stdin='{"components":[[{"over":[1,3],"sign":1}]]}')
check("validation error exit 3", r.returncode == 3, str(r.returncode))

r = run(["check", "--catalog", "hopf", "--q", "4"])
check("precondition error exit 4", r.returncode == 4, str(r.returncode))

r = run(["check", "--catalog", "unknown_link"])
check("unknown catalog exit 3", r.returncode == 3, str(r.returncode))

r = run(["check"])
check("missing input exit 3", r.returncode == 3, str(r.returncode))

r = run(["bogus-subcommand"])
check("usage error exit 2", r.returncode == 2, str(r.returncode))

# --- selftest with explicit seed is reproducible ---
a = run(["selftest", "--trials", "20", "--seed", "9"])
b = run(["selftest", "--trials", "20", "--seed", "9"])
check("selftest reproducible", a.stdout == b.stdout and a.returncode == 0)

print(f"{failures} failures")
sys.exit(1 if failures else 0)
