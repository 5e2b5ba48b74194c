"""Scratch checks for the X_111 figure classification."""

from __future__ import annotations

import random
from fractions import Fraction

from qhpp.errors import CommonFactorError, NoRowMatchedError
from qhpp.poly import BiPoly, PolySystem, UniPoly
from qhpp.portrait import infinity_ring
from qhpp.x111 import (
    H3Signature,
    REGIMES,
    TABLE1,
    TABLE2,
    ONE_ROOT,
    THREE_ROOTS,
    TWO_ROOTS,
    vertical_infinity,
    x111_census,
    x111_label,
    x111_signature,
    x111_witness,
)

F = Fraction


def quintic(a14, a22, a30, b05, b13, b21) -> PolySystem:
    p = BiPoly({(1, 4): a14, (2, 2): a22, (3, 0): a30})
    q = BiPoly({(0, 5): b05, (1, 3): b13, (2, 1): b21})
    return PolySystem(p, q)


def image_cubic(sig: H3Signature) -> PolySystem:
    p = BiPoly({(1, 2): sig.c12, (2, 1): sig.c21, (3, 0): sig.c30})
    q = BiPoly({(0, 3): F(1), (1, 2): sig.d12, (2, 1): sig.d21})
    return PolySystem(p, q)


# --- census straight off the tables ---------------------------------------

census = x111_census()
assert census == {">1": 24, "<1": 14, "=1": 14, "total": 52}, census

t2_three = {r.figure for r in TABLE2 if r.root_case == THREE_ROOTS}
t2_two = {r.figure for r in TABLE2 if r.root_case == TWO_ROOTS}
t2_one = {r.figure for r in TABLE2 if r.root_case == ONE_ROOT}
assert len(t2_three) == 6 and len(t2_two) == 6 and len(t2_one) == 2
t1_three = {r.figure for r in TABLE1 if r.root_case == THREE_ROOTS}
assert len(t1_three) == 10
print("census OK")

# --- frozen examples -------------------------------------------------------

# c=(0,0,1), d=(1,0,-1), realized with b05 = 1/2
sig = x111_signature(quintic(F(0), F(0), F(1), F(1, 2), F(0), F(-1, 2)))
assert (sig.c12, sig.c21, sig.c30, sig.d12, sig.d21) == (0, 0, 1, 0, -1)
assert sig.delta == 8
assert sig.root_case == THREE_ROOTS
two = UniPoly((-2, 0, 1))  # u^2 - 2
assert sig.u_minus.sign_of(two) == 0 and sig.u_plus.sign_of(two) == 0
assert sig.a14_regime == "<1" and not sig.time_reversed
assert dict(sig.signs) == {"P(u+)": 1, "P(u-)": 1, "G'(u+)": 1, "G'(u-)": 1, "P(0)": 1}
assert x111_label(sig) == "Table 2 / Figure (I)"
assert vertical_infinity(sig) == "stable-node"

# c12=1, d12=c21, d21<c30: condition C32, vertical point of the image a saddle
sig = x111_signature(quintic(F(2), F(4), F(3), F(1), F(2), F(1)))
assert (sig.c12, sig.c21, sig.c30, sig.d12, sig.d21) == (1, 2, F(3, 2), 2, 1)
assert sig.root_case == ONE_ROOT and sig.subcase == "C32"
assert sig.sign("G'(0)") == -1
assert vertical_infinity(sig) == "saddle"
assert sig.a14_regime == ">1"
assert x111_label(sig) == "Table 1 / Figure (I)"

# delta=0 with c21 != d12: double nonzero root u13
sig = x111_signature(x111_witness(">1", "(VI.3)"))
assert sig.root_case == TWO_ROOTS and sig.subcase == "u13"
assert sig.delta == 0 and sig.u1 == 1

# synthetic Figure (II) tuple in the a14>1 table: matcher honours the row
synthetic = H3Signature(
    c12=F(1), c21=F(0), c30=F(1), d12=F(0), d21=F(0), delta=F(1),
    root_case=THREE_ROOTS, subcase=None, a14_regime=">1", time_reversed=False,
    signs=(("P(u+)", -1), ("P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", 1)),
)
assert x111_label(synthetic) == "Table 1 / Figure (II)"

# a14>1, C33 with G''(0) != 0 and P(0) < 0: Figure (XI)
sig = x111_signature(x111_witness(">1", "(XI)"))
assert sig.subcase == "C33" and sig.sign("G''(0)") != 0 and sig.sign("P(0)") == -1
assert x111_label(sig) == "Table 1 / Figure (XI)"
print("frozen examples OK")

# --- witness round-trips ---------------------------------------------------

reachable = 0
for regime in REGIMES:
    table = TABLE1 if regime == ">1" else TABLE2
    for figure in sorted({row.figure for row in table}):
        system = x111_witness(regime, figure)
        if system is None:
            assert figure == "(II)" and regime in (">1", "=1")
            continue
        sig = x111_signature(system)
        assert sig.a14_regime == regime, (regime, figure, sig.a14_regime)
        label = x111_label(sig)
        table_number = 1 if regime == ">1" else 2
        assert label == f"Table {table_number} / Figure {figure}", (regime, figure, label)
        assert not sig.warnings, (regime, figure, sig.warnings)
        reachable += 1
assert reachable == 50
print("witness round-trips OK (50 reachable rows)")

# --- time reversal: negating every coefficient keeps the label -------------

for regime, figure in [(">1", "(VIII.2)"), ("<1", "(IV.2)"), ("=1", "(VII.2)")]:
    base = x111_witness(regime, figure)
    flipped = PolySystem(base.p.scale(-1), base.q.scale(-1))
    sig = x111_signature(flipped)
    assert sig.time_reversed
    assert sig.a14_regime == regime
    assert x111_label(sig).endswith(figure)
print("time reversal OK")

# --- regime >= 1/2 never realizes the Figure (II) tuple --------------------

rng = random.Random(7)
hits = 0
for _ in range(4000):
    c12 = F(rng.randint(1, 8), rng.randint(1, 4))  # >= 1/4; keep only >= 1/2
    if c12 < F(1, 2):
        continue
    c21 = F(rng.randint(-6, 6), rng.randint(1, 3))
    c30 = F(rng.choice([v for v in range(-6, 7) if v]), rng.randint(1, 3))
    d12 = F(rng.randint(-6, 6), rng.randint(1, 3))
    d21 = F(rng.randint(-6, 6), rng.randint(1, 3))
    system = quintic(2 * c12, 2 * c21, 2 * c30, F(1), d12, d21)
    try:
        sig = x111_signature(system)
    except CommonFactorError:
        continue
    if sig.root_case != THREE_ROOTS:
        continue
    hits += 1
    tup = dict(sig.signs)
    assert not (
        tup["P(u+)"] == -1 and tup["P(u-)"] == -1
        and tup["G'(u+)"] == 1 and tup["G'(u-)"] == 1 and tup["P(0)"] == 1
    ), (c12, c21, c30, d12, d21)
assert hits > 300, hits
print(f"Figure (II) vacuity spot check OK ({hits} three-root samples)")

# --- gaps surface as NoRowMatchedError -------------------------------------

# both nonzero roots on one side of 0 (G = u(u-1)(u-2))
system = quintic(F(0), F(0), F(2), F(1), F(-3), F(3))
sig = x111_signature(system)
assert sig.root_case == THREE_ROOTS and sig.warnings
try:
    x111_label(sig)
except NoRowMatchedError as e:
    assert "table 2" in str(e)
else:
    raise AssertionError("expected NoRowMatchedError")

# negative double root in the a14<1 regime (no published row)
system = quintic(F(0), F(-4), F(2), F(1), F(0), F(2))
sig = x111_signature(system)
assert sig.subcase == "u13" and sig.u1 == -1
try:
    x111_label(sig)
except NoRowMatchedError:
    pass
else:
    raise AssertionError("expected NoRowMatchedError")
print("gap handling OK")

# --- common factors rejected ----------------------------------------------

# proportional quartics
try:
    x111_signature(quintic(F(2), F(2), F(2), F(1), F(1), F(1)))
except CommonFactorError as e:
    assert "y^4" in str(e), e
else:
    raise AssertionError("expected CommonFactorError")

# shared line y^2 = x (P and G share the direction u = 1)
try:
    x111_signature(quintic(F(2), F(0), F(-2), F(1), F(1), F(-2)))
except CommonFactorError as e:
    assert "y^2" in str(e) and "x" in str(e), e
else:
    raise AssertionError("expected CommonFactorError")
print("common factor rejection OK")

# --- vertical_infinity agrees with the generic equator machinery -----------

from qhpp import x111 as x111_module

checked = 0
for (regime, figure), params in sorted(x111_module._WITNESSES.items(), key=lambda kv: kv[0]):
    if params is None:
        continue
    sig = x111_signature(x111_witness(regime, figure))
    entries, marker = infinity_ring(image_cubic(sig))
    assert marker is None
    vertical = [e for e in entries if e.label == "I(vertical)"]
    assert len(vertical) == 1, (regime, figure)
    expect = vertical_infinity(sig)
    entry = vertical[0]
    if expect == "saddle":
        assert entry.kind == "saddle", (regime, figure, entry)
    elif expect == "saddle-node":
        assert entry.kind == "saddle-node", (regime, figure, entry)
    else:
        assert entry.kind == "node" and entry.stability == "stable", (regime, figure, entry)
    checked += 1
assert checked == 50
print("vertical infinity cross-check OK (50 witnesses)")

print("ALL X111 SMOKE OK")
