"""Scratch checks for the numerical oracle module."""
from __future__ import annotations

import math

from qhpp.blowup import SADDLE, NODE, SADDLE_NODE, char_polys, direction_reports
from qhpp.errors import BadWindowError
from qhpp.oracle import (
    APPROACHED_ORIGIN,
    ESCAPED_WINDOW,
    MAX_TIME,
    Trajectory,
    Window,
    hausdorff_distance,
    integrate,
    probe_agrees,
    sector_probe,
    streamlines,
    streamlines_csv,
    streamlines_svg,
)
from qhpp.parsing import parse_system as _parse


def parse_system(p, q):
    return _parse(f"dx/dt = {p}\ndy/dt = {q}\n")


CENTER_SYS = parse_system("-y^3", "x^3")
DIAG_SYS = parse_system("x^3", "y^3")
# characteristic polynomial 40*u^2: the large coefficient keeps the
# saddle-side angular escape within probe range (it scales like e^(-1/|40*u|))
SN_SYS = parse_system("x^2", "x*y + 40*y^2")
WIN = Window(-3.0, 3.0, -3.0, 3.0)

# window parsing
w = Window.parse("-2:2,-1:1.5")
assert (w.xmin, w.xmax, w.ymin, w.ymax) == (-2.0, 2.0, -1.0, 1.5)
for bad in ("1:2", "2:1,0:1", "a:b,c:d", "1:2,3:4,5:6"):
    try:
        Window.parse(bad)
    except BadWindowError:
        pass
    else:
        raise AssertionError(bad)
print("window parsing OK")

# conserved quantity along a raw-field trajectory
traj = integrate(CENTER_SYS, (1.0, 0.0), WIN, tol=1e-10, tmax=30.0)
assert traj.termination == MAX_TIME
drift = max(abs(x**4 + y**4 - 1.0) for _t, x, y in traj.samples)
assert drift < 1e-6, drift
assert len(traj.samples) > 50
ts = [t for t, _x, _y in traj.samples]
assert all(a < b for a, b in zip(ts, ts[1:]))
print(f"conserved-quantity drift {drift:.2e} OK")

# escape with monotone coordinates
traj = integrate(DIAG_SYS, (0.1, 0.2), Window(-2, 2, -2, 2), tol=1e-10, tmax=1e4)
assert traj.termination == ESCAPED_WINDOW
xs = [x for _t, x, _y in traj.samples]
ys = [y for _t, _x, y in traj.samples]
assert all(a <= b for a, b in zip(xs, xs[1:]))
assert all(a <= b for a, b in zip(ys, ys[1:]))
assert ys[-1] > 1.99
print("window escape OK")

# equilibrium start and backward integration
traj = integrate(DIAG_SYS, (0.0, 0.0), WIN)
assert len(traj.samples) == 1 and traj.termination == MAX_TIME
traj = integrate(DIAG_SYS, (0.1, 0.2), WIN, tol=1e-10, tmax=1e4, direction=-1)
ts = [t for t, _x, _y in traj.samples]
assert all(a > b for a, b in zip(ts, ts[1:]))
_t, xf, yf = traj.last
assert math.hypot(xf, yf) < 0.05
print("equilibrium and backward runs OK")

# probes on x' = x^3, y' = y^3: saddle at theta=0, node on the diagonal
reports = {r.direction.approx() if r.direction is not None else None: r
           for r in direction_reports(char_polys(DIAG_SYS))}
probe0 = sector_probe(DIAG_SYS, 0.0, radius=0.05, tol=1e-10)
assert probe0.verdict == "pass-by", probe0
assert probe0.ray_flow == "outward"
assert reports[0.0].local_type_blowup == SADDLE
assert probe_agrees(probe0, reports[0.0]) is True

probe1 = sector_probe(DIAG_SYS, math.atan(1.0), radius=0.05, tol=1e-10)
assert probe1.verdict == "leave", probe1
assert reports[1.0].local_type_blowup == NODE
assert probe_agrees(probe1, reports[1.0]) is True
print("saddle and node probes OK")

# saddle-node split on x' = x^2, y' = xy + 40y^2 at theta=0
rep_sn = {r.direction.approx() if r.direction is not None else None: r
          for r in direction_reports(char_polys(SN_SYS))}
probe_sn = sector_probe(SN_SYS, 0.0, radius=0.05, tol=1e-10)
assert rep_sn[0.0].local_type_blowup == SADDLE_NODE
assert probe_sn.side_plus == "leave", probe_sn
assert probe_sn.side_minus == "pass-by", probe_sn
assert probe_sn.verdict == "mixed", probe_sn
assert probe_agrees(probe_sn, rep_sn[0.0]) is True
print("saddle-node probe OK")

# center: every probe passes by
for angle in (0.3, 2.0):
    p = sector_probe(CENTER_SYS, angle, radius=0.05, tol=1e-10)
    assert p.verdict == "pass-by", p
print("center probes OK")

# streamlines: empty, closed, symmetric
assert streamlines(CENTER_SYS, WIN, 0) == []
assert streamlines_csv([]) == "t,x,y\n"

win2 = Window(-2.0, 2.0, -2.0, 2.0)
closed = streamlines(CENTER_SYS, win2, 4, tol=1e-10)
assert len(closed) == 4
for traj in closed:
    assert traj.termination == MAX_TIME
    first = traj.samples[0]
    last = traj.samples[-1]
    gap = math.hypot(first[1] - last[1], first[2] - last[2])
    assert gap < 1e-4, gap
print("closed streamlines OK (max gap %.2e)" % gap)

mirrored = streamlines(DIAG_SYS, win2, 4, tol=1e-8)
sets = [t.points() for t in mirrored]
for pts in sets:
    target = pts * (1, -1)
    best = min(hausdorff_distance(target, other) for other in sets)
    assert best < 1e-6, best
print("mirror symmetry of streamline set OK")

csv = streamlines_csv(closed)
assert csv.startswith("t,x,y\n")
assert csv.count("\n\n") == 3
svg = streamlines_svg(closed, win2)
assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")
assert 'viewBox="-2 -2 4 4"' in svg
assert svg.count("<polyline") == 4
print("CSV/SVG export OK")

# hausdorff sanity
a = Trajectory(tuple((0.0, math.cos(t), math.sin(t)) for t in
                     [k * 2 * math.pi / 200 for k in range(200)]), MAX_TIME)
b = Trajectory(tuple((t, x + 0.3, y) for t, x, y in a.samples), MAX_TIME)
d = hausdorff_distance(a, b)
assert 0.29 < d < 0.31, d
assert hausdorff_distance(a, a) == 0.0
print("hausdorff OK")

# tolerance contract
try:
    integrate(DIAG_SYS, (0.1, 0.1), WIN, tol=1e-2)
except ValueError:
    pass
else:
    raise AssertionError("tol above range accepted")

print("ALL ORACLE SMOKE OK")
