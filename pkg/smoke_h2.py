"""Scratch checks for the quadratic-image case analysis."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from qhpp.catalog import family_by_name
from qhpp.errors import CommonFactorError
from qhpp.h2 import CASE_CODE_COUNTS, h2_case
from qhpp.poly import coprime_check
from qhpp.weights import swap_system

F = Fraction

x011 = family_by_name("X_011")
x113 = family_by_name("X_113")
x131 = family_by_name("X_131")


def x011_from_cubic(c2, c1, c0, a13=F(0), a21=F(0)):
    """X_011 instance whose image satisfies G2(1,u) = -u^3 + c2 u^2 + c1 u + c0."""
    values = {
        "a05": F(1),
        "a13": a13,
        "a21": a21,
        "b04": (c2 + a13) / 2,
        "b12": (c1 + a21) / 2,
        "b20": c0 / 2,
    }
    return x011.instantiate({k: v for k, v in values.items() if v != 0})


def reversal_key(code):
    return min(code.canonical(), code.time_reversal().canonical())


# --- published form of the X_113 image -------------------------------------

from qhpp.h2 import _image_of

sys113 = x113.instantiate({"a14": 1, "a40": 1, "b05": 1, "b31": 2})
h, record = _image_of(sys113)
assert h.sys.p.coeff(1, 1) == 3 and h.sys.p.coeff(2, 0) == 3
assert h.sys.q.coeff(0, 2) == 4 and h.sys.q.coeff(1, 1) == 8
print("X_113 image form OK")

# --- cases and surrogate verdicts on hand-built instances ------------------

# three simple image directions: G2(1,u) = -(u-1)(u+1)(u-2)
r = h2_case(x011_from_cubic(F(2), F(1), F(-2)))
assert r.case == "(i)" and r.direction_count == 3
assert r.published_code_count == 3 == CASE_CODE_COUNTS["(i)"]
assert r.u0.rational == 2
assert r.alpha22 == 1
assert r.i1_test_sign is None and r.i1_type is None and r.surrogate_marker is None
assert r.portrait.index is not None

# double direction: G2(1,u) = -(u-1)^2(u+1)
r = h2_case(x011_from_cubic(F(1), F(1), F(-1)))
assert r.case == "(ii)" and r.direction_count == 2 and r.published_code_count == 2

# single direction: G2(1,u) = -(u^3 + u + 1), one irrational root
r = h2_case(x011_from_cubic(F(0), F(-1), F(-1)))
assert r.case == "(iii)" and r.direction_count == 1 and r.published_code_count == 2
assert r.u0.rational is None

# X_113: saddle branch of the surrogate test, (2*3*a14 - 4*b05)*4*b05 > 0
r = h2_case(x113.instantiate({"a14": 2, "a40": 1, "b05": 1, "b31": 1}))
assert r.case == "(i)"  # directions 0, 1/2, vertical
assert r.alpha22 == 0 and r.surrogate_marker == "infinity fulfils singularities"
assert r.i1_test_sign == 1 and r.i1_type == "saddle"
# the original quintic keeps its own plain equator when a14 != b05
assert r.portrait.infinity_marker is None and r.portrait.infinity_ring

# X_113: node branch, and an all-singular original equator when a14 = b05
r = h2_case(x113.instantiate({"a14": 1, "a40": 1, "b05": 2, "b31": 1}))
assert r.i1_type == "node" and r.i1_test_sign == -1
r = h2_case(x113.instantiate({"a14": 2, "a40": 3, "b05": 2, "b31": 1}))
assert r.portrait.infinity_marker == "infinity fulfils singularities"

# X_113 collapsed direction: 4*b05 = 3*a14 leaves directions {0, vertical}
r = h2_case(x113.instantiate({"a14": 4, "a40": 1, "b05": 3, "b31": 1}))
assert r.case == "(ii)" and r.direction_count == 2

# X_131: zero test value, no surviving equator point on the surrogate
r = h2_case(x131.instantiate({"a14": 2, "a20": 1, "b05": 1, "b11": 1}))
assert r.case == "(i)"
assert r.alpha22 == 0 and r.i1_test_sign == 0 and r.i1_type is None

# X_131 node branch (earlier pullback smoke instance)
r = h2_case(x131.instantiate({"a14": 1, "a20": 2, "b05": 1, "b11": 1}))
assert r.i1_type == "node"
print("case and surrogate verdicts OK")

# --- common factor rejected ------------------------------------------------

try:
    h2_case(x113.instantiate({"a14": 4, "a40": 4, "b05": 3, "b31": 3}))
except CommonFactorError:
    pass
else:
    raise AssertionError("expected CommonFactorError")
print("common factor rejection OK")

# --- mirrored instance goes through the swap path --------------------------

base = x011_from_cubic(F(2), F(1), F(-2))
mirrored = swap_system(base)
rm = h2_case(mirrored)
rb = h2_case(base)
assert rm.case == rb.case == "(i)"
assert rm.i1_type == rb.i1_type
assert rm.portrait.equivalent(rb.portrait) or rm.portrait.equivalent(rb.portrait.time_reversal())
print("swap path OK")

# --- code counts per case over an X_011 grid -------------------------------

root_pool = [F(-2), F(-1), F(-1, 2), F(1, 2), F(1), F(2)]
splits = [
    (F(0), F(0)), (F(2), F(0)), (F(0), F(2)), (F(-2), F(0)),
    (F(0), F(-2)), (F(2), F(2)), (F(-2), F(-2)), (F(3), F(-3)),
]


def elementary(roots):
    e1 = sum(roots)
    e2 = sum(a * b for a, b in combinations(roots, 2))
    e3 = roots[0] * roots[1] * roots[2]
    return e1, -e2, e3


buckets: dict[str, dict[str, list]] = {"(i)": {}, "(ii)": {}, "(iii)": {}}


def feed(system, expect_case):
    ok, _ = coprime_check(system)
    if not ok:
        return
    rep = h2_case(system)
    assert rep.case == expect_case, (expect_case, rep.case)
    key = reversal_key(rep.portrait)
    buckets[expect_case].setdefault(key, []).append(rep)


for triple in combinations(root_pool, 3):
    c2, c1, c0 = elementary(list(triple))
    for a13, a21 in splits:
        feed(x011_from_cubic(c2, c1, c0, a13, a21), "(i)")

for rr in root_pool:
    for ss in root_pool:
        if rr == ss:
            continue
        # -(u-rr)^2 (u-ss)
        c2, c1, c0 = elementary([rr, rr, ss])
        for a13, a21 in splits:
            feed(x011_from_cubic(c2, c1, c0, a13, a21), "(ii)")

for p in (F(1), F(2)):
    for q in (F(-2), F(-1), F(1), F(2)):
        for a13, a21 in splits:
            feed(x011_from_cubic(F(0), -p, -q, a13, a21), "(iii)")
for rr in (F(1), F(-1), F(2)):
    c2, c1, c0 = elementary([rr, rr, rr])
    for a13, a21 in splits:
        feed(x011_from_cubic(c2, c1, c0, a13, a21), "(iii)")

# The published classification draws 3/2/2 figures for the three cases, but
# the exact codes split finer: the grid realises origin sector words
# {eeeh, hehh, ee, hh, hhhhhh} in case (i) and {eeeh, hehh, ee, hh} in case
# (ii), pairwise inequivalent (distinct index or h/e word).  Each class
# representative was cross-checked by trajectory fate profiles and by the
# winding number of the field on circles of radius 1, 1/2, 1/10.
for case, observed, published in (("(i)", 5, 3), ("(ii)", 4, 2), ("(iii)", 2, 2)):
    got = len(buckets[case])
    n = sum(len(v) for v in buckets[case].values())
    print(f"  case {case}: {got} distinct codes from {n} instances "
          f"(published {published})")
    assert got == observed, (case, got)
    assert got >= published, (case, got)

words = {case: sorted({
    "".join(s.kind[0] for s in reps[0].portrait.sectors if s.kind != "parabolic")
    for reps in buckets[case].values()}) for case in buckets}
assert words["(i)"] == ["ee", "eeeh", "hehh", "hh", "hhhhhh"], words["(i)"]
assert words["(ii)"] == ["ee", "eeeh", "hehh", "hh"], words["(ii)"]
print("X_011 case code counts OK (exact codes refine the published figures)")

print("ALL H2 SMOKE OK")
