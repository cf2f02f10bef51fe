"""End-to-end checks of the command-line tool: golden outputs, determinism,
JSON round-trips, exit codes. The binary path comes from $FANO10_CLI."""

import json
import os
import subprocess
import sys
import tempfile

CLI = os.environ["FANO10_CLI"]

failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, cond, detail=""):
    if cond:
        print(f"ok: {name}")
    else:
        failures.append(name)
        print(f"FAIL: {name} {detail}")


GOLDEN_CLASSIFY_10 = """d = 10
orbits: 2
orbit 1: Dprime_10
  [2 0 0]
  [0 2 1]
  [0 1 3]
orbit 2: Dsecond_10
  [2 0 0]
  [0 2 1]
  [0 1 3]
"""

GOLDEN_ASSOC_10 = """d = 10
k3: yes (criterion: yes, oracle: yes)
cubic: no (criterion: no, oracle: no)
"""

GOLDEN_SWEEP_30 = """d  orbits  labels  k3  cubic
2  2  Dprime,Dsecond  yes  yes
4  1  D  yes  no
8  1  D  no  no
10  2  Dprime,Dsecond  yes  no
12  1  D  no  yes
16  1  D  no  no
18  2  Dprime,Dsecond  no  no
20  1  D  yes  no
24  1  D  no  no
26  2  Dprime,Dsecond  yes  yes
28  1  D  no  no
"""

GOLDEN_TH81_0 = """e = 0: d = 10, Dsecond_10
  [2 0 0]
  [0 2 1]
  [0 1 3]
e = 0: d = 10, Dprime_10
  [2 0 1]
  [0 2 0]
  [1 0 3]
e = 0: d = 20, D_20
  [2 0 1]
  [0 2 1]
  [1 1 6]
"""

GOLDEN_INFO = """rank: 2
signature: (2,0)
parity: even
determinant: 4
invariant_factors: 2 2
b(g1,g1) = 1/2
b(g1,g2) = 0/1
b(g2,g2) = 1/2
q(g1) = 1/2
q(g2) = 1/2
"""


def main():
    r = run("classify", "10")
    check("classify 10 golden", r.returncode == 0 and r.stdout == GOLDEN_CLASSIFY_10, repr(r.stdout))

    r = run("assoc", "10")
    check("assoc 10 golden", r.returncode == 0 and r.stdout == GOLDEN_ASSOC_10, repr(r.stdout))

    r = run("assoc", "2", "--format", "json")
    doc = json.loads(r.stdout)
    check("assoc 2 json", r.returncode == 0 and doc["k3"]["associated"] and doc["cubic"]["associated"])
    check("json newline-terminated", r.stdout.endswith("\n"))

    r = run("sweep", "30")
    check("sweep 30 golden", r.returncode == 0 and r.stdout == GOLDEN_SWEEP_30, repr(r.stdout))

    r = run("th81", "0")
    check("th81 0 golden", r.returncode == 0 and r.stdout == GOLDEN_TH81_0, repr(r.stdout))

    r = run("lattice-info", "[[2,2],[2,4]]")
    check("lattice-info golden", r.returncode == 0 and r.stdout == GOLDEN_INFO, repr(r.stdout))

    r = run("lattice-info", "[[0,1],[1,0]]")
    check("hyperbolic plane info",
          "parity: even" in r.stdout and "signature: (1,1)" in r.stdout and "determinant: -1" in r.stdout)

    r = run("lattice-info", "Lambda")
    check("builtin Lambda info",
          r.returncode == 0 and "signature: (20,2)" in r.stdout and "parity: even" in r.stdout
          and "invariant_factors: 2 2" in r.stdout)

    # Determinism: identical invocations are byte-identical.
    for args in (["classify", "18"], ["examples"], ["th81", "2"], ["sweep", "50"],
                 ["lattice-info", "Lambda", "--format", "json"]):
        a, b = run(*args), run(*args)
        check(f"deterministic {' '.join(args)}", a.stdout == b.stdout and a.returncode == b.returncode)

    # JSON round-trip: the emitted Gram parses back to the same matrix.
    doc = json.loads(run("classify", "12", "--format", "json").stdout)
    gram = doc["representatives"][0]["gram"]
    check("classify json round-trip", gram == [[2, 0, 1], [0, 2, 1], [1, 1, 4]])
    doc = json.loads(run("lattice-info", "[[2,2],[2,4]]", "--format", "json").stdout)
    check("lattice-info json round-trip", doc["gram"] == [[2, 2], [2, 4]]
          and doc["b"] == [["1/2", "0/1"], ["0/1", "1/2"]])

    # Matrix input from a file.
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write("[[2,2],[2,4]]")
        path = f.name
    r = run("lattice-info", path)
    check("matrix from file", r.returncode == 0 and r.stdout == GOLDEN_INFO)
    os.unlink(path)

    # --out writes the same bytes as stdout.
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "x.txt")
        r = run("classify", "10", "--out", out)
        with open(out) as f:
            check("--out file", r.returncode == 0 and f.read() == GOLDEN_CLASSIFY_10)

    # Exit codes: 2 parse, 3 domain.
    check("exit 2 on bad matrix", run("lattice-info", "[[1,2],[3").returncode == 2)
    check("exit 2 on asymmetric", run("lattice-info", "[[1,2],[3,4]]").returncode == 2)
    check("exit 2 on bad flag", run("classify", "10", "--format", "xml").returncode == 2)
    check("exit 3 on inadmissible classify", run("classify", "14").returncode == 3)
    check("exit 3 on inadmissible assoc", run("assoc", "6").returncode == 3)
    check("exit 3 on degenerate", run("lattice-info", "[[1,1],[1,1]]").returncode == 3)
    check("exit 0 on sweep", run("sweep", "10").returncode == 0)

    if failures:
        print(f"{len(failures)} cli checks failed")
        return 1
    print("all cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
