"""Scratch checks for report.py and cli.py."""
from __future__ import annotations

import json
import os
import subprocess
import sys
import tempfile

from qhpp.parsing import parse_system
from qhpp.report import analyze, to_json

ENV = {**os.environ, "PYTHONPATH": "src"}


def run(*argv, env=None):
    return subprocess.run(
        [sys.executable, "-m", "qhpp", *argv],
        capture_output=True, text=True, env=env or ENV,
    )


def write(text):
    f = tempfile.NamedTemporaryFile("w", suffix=".sys", delete=False, dir=".")
    f.write(text)
    f.close()
    return f.name


X011 = "dx/dt = y^5 + 2*x^2*y\ndy/dt = y^4 + x^2\n"  # weights (2,1,4), quadratic image
X111 = "dx/dt = 2*x*y^4 + x^2*y^2 + x^3\ndy/dt = y^5 + 3*x*y^3 + 2*x^2*y\n"
X1 = "dx/dt = y^5 + x\ndy/dt = y\n"
CUBE = "dx/dt = x^3\ndy/dt = y^3\n"
CENTER = "dx/dt = -y^3\ndy/dt = x^3\n"

# in-process analyze on the quadratic-image example
rep = analyze(parse_system(X011))
assert rep.weights.minimal.triple() == (2, 1, 4), rep.weights.minimal
assert rep.structure is not None and rep.structure.family_name() == "X_011"
assert rep.homog.degree == 2 and rep.homog.target_class == "H2"
assert rep.h2 is not None and rep.h2.case in ("(i)", "(ii)", "(iii)")
assert rep.x111 is None
text1 = to_json(rep)
text2 = to_json(analyze(parse_system(X011)))
assert text1 == text2
payload = json.loads(text1)
assert payload["schema"] == "qhpp-analysis/1"
assert payload["weights"]["minimal"] == {"s1": 2, "s2": 1, "d": 4, "minimal": True}
assert payload["h2"]["case"] == rep.h2.case
assert payload["oracle"] is None
print("analyze X_011 OK:", rep.h2.case, payload["portrait"]["origin_kind"])

# X_111 block with a table label
rep = analyze(parse_system(X111))
assert rep.structure.family_name() == "X_111"
assert rep.homog.degree == 3 and rep.homog.target_class == "H3"
assert rep.x111 is not None
assert rep.x111.label is not None
assert rep.portrait.figure_label == rep.x111.label
print("analyze X_111 OK:", rep.x111.label, rep.x111.signature.a14_regime)

# homogeneous input: trivial record, no structure block
rep = analyze(parse_system(CUBE))
assert rep.structure is None
assert rep.weights.minimal.triple() == (1, 1, 3)
assert rep.portrait.origin_kind == "sectored"
assert len(rep.portrait.rays) == 8
rep = analyze(parse_system(CENTER))
assert rep.portrait.origin_kind == "center"
assert rep.center is not None and rep.center.verdict == "global-center"
print("homogeneous analyze OK")

# d=1 family routes through a linear image
rep = analyze(parse_system(X1))
assert rep.weights.minimal.triple() == (5, 1, 1)
assert rep.structure.degree_one and rep.structure.family_name() == "X_1"
assert rep.homog.degree == 1
print("d=1 analyze OK:", rep.homog.target_class)

# oracle summary on the homogeneous cube
rep = analyze(parse_system(CUBE), with_oracle=True, tol=1e-10)
assert rep.oracle is not None
assert rep.oracle.disagreements == 0, [c for c in rep.oracle.checks if c.agrees is False]
assert rep.oracle.agreements == len(rep.oracle.checks) == 4
print("oracle summary OK: 4/4 agree")

# --- CLI level ---
f_x011 = write(X011)
f_bad = write("dx/dt = x*\ndy/dt = y\n")
f_notqh = write("dx/dt = x^2 + y^5\ndy/dt = y\n")
f_factor = write("dx/dt = x*y^2\ndy/dt = x*y*2\n")
f_center = write(CENTER)

r = run("analyze", f_x011)
assert r.returncode == 0, r.stderr
out1 = r.stdout
r = run("analyze", f_x011)
assert r.stdout == out1  # byte-identical rerun
doc = json.loads(out1)
assert doc["image"]["target_class"] == "H2"
print("cli analyze OK")

r = run("analyze", f_bad)
assert r.returncode == 2 and "error:" in r.stderr, (r.returncode, r.stderr)
r = run("analyze", f_notqh)
assert r.returncode == 3, (r.returncode, r.stderr)
r = run("analyze", f_factor)
assert r.returncode == 4, (r.returncode, r.stderr)
r = run("analyze", "/no/such/file.sys")
assert r.returncode == 2
print("cli exit codes 2/3/4 OK")

r = run("catalog")
assert r.returncode == 0
doc = json.loads(r.stdout)
assert len(doc["families"]) == 15
names = [f["name"] for f in doc["families"]]
assert "X_132" in names
x132 = next(f for f in doc["families"] if f["name"] == "X_132")
assert (x132["weight"]["s1"], x132["weight"]["s2"], x132["weight"]["d"]) == (5, 2, 9)
r = run("catalog", "--degree", "4")
assert r.returncode == 5
print("cli catalog OK")

r = run("census")
doc = json.loads(r.stdout)
assert doc == {"a14>1": 24, "a14<1": 14, "a14=1": 14, "total": 52}, doc
print("cli census OK")

r = run("plot", f_center, "--window=-2:2,-2:2", "--streamlines", "4")
assert r.returncode == 0, r.stderr
assert r.stdout.startswith("t,x,y\n")
r = run("plot", f_center, "--window=-2:2,-2:2", "--streamlines", "0")
assert r.stdout == "t,x,y\n"
r = run("plot", f_center, "--window=-2:2,-2:2", "--streamlines", "2", "--format", "svg")
assert "<svg" in r.stdout and "</svg>" in r.stdout
r = run("plot", f_center, "--window=2:1,0:1")
assert r.returncode == 6, (r.returncode, r.stderr)
r = run("plot", f_center, "--window=nonsense")
assert r.returncode == 6
print("cli plot OK")

r = run("oracle-check", f_x011)
assert r.returncode == 0, r.stderr
doc = json.loads(r.stdout)
assert doc["oracle"]["disagreements"] == 0, doc["oracle"]
print("cli oracle-check OK:", doc["oracle"]["agreements"], "agree,",
      doc["oracle"]["inconclusive"], "inconclusive")

# QHPP_TOL routes into the report; bad values exit 2
r = run("analyze", f_x011, env={**ENV, "QHPP_TOL": "1e-9"})
assert r.returncode == 0
r = run("oracle-check", f_x011, env={**ENV, "QHPP_TOL": "banana"})
assert r.returncode == 2, (r.returncode, r.stderr)
r = run("analyze", f_x011, "--out", "out_report.json")
assert r.returncode == 0 and r.stdout == ""
assert json.load(open("out_report.json"))["schema"] == "qhpp-analysis/1"
os.unlink("out_report.json")
print("cli tol/out OK")

for f in (f_x011, f_bad, f_notqh, f_factor, f_center):
    os.unlink(f)
print("ALL CLI SMOKE OK")
