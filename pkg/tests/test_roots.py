"""Real root isolation against sympy's real_roots."""
from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from qhpp.poly import UniPoly
from qhpp.roots import (
    AlgebraicRoot,
    cauchy_bound,
    count_roots_between,
    gap_points,
    mth_derivative_sign,
    rational_roots,
    real_roots,
    sturm_chain,
)

F = Fraction
U = sympy.Symbol("u")


def uni_to_sympy(f: UniPoly):
    return sum(sympy.Rational(f[k]) * U**k for k in range(f.degree() + 1))


def test_real_roots_frozen_quadratic():
    roots = real_roots(UniPoly([-2, 0, 1]))  # u^2 - 2
    assert len(roots) == 2
    lo, hi = roots
    assert lo.approx() < 0 < hi.approx()
    assert abs(hi.approx() - 2 ** 0.5) < 1e-9
    assert hi.rational is None and not hi.is_rational
    assert hi.multiplicity == 1
    assert hi.sign_of(UniPoly([-2, 0, 1])) == 0
    assert hi.sign_of(UniPoly([-1, 1])) == 1      # u - 1 > 0 at sqrt(2)
    assert hi.sign_of(UniPoly([-3, 1])) == -1     # u - 3 < 0
    assert lo.interval[0] <= lo.interval[1] < 0


def test_real_roots_rational_and_multiplicity():
    # (u - 1)^2 (u + 2) (2u - 1)
    f = UniPoly([1, -1]) * UniPoly([1, -1]) * UniPoly([2, 1]) * UniPoly([-1, 2])
    roots = real_roots(f)
    assert [r.rational for r in roots] == [F(-2), F(1, 2), F(1)]
    assert [r.multiplicity for r in roots] == [1, 1, 2]
    for r in roots:
        assert r.is_rational
        assert f.eval(r.rational) == 0


def test_real_roots_none():
    assert real_roots(UniPoly([1, 0, 1])) == []          # u^2 + 1
    assert real_roots(UniPoly([5])) == []                # constant
    roots = real_roots(UniPoly([0, 0, 1]))               # u^2
    assert len(roots) == 1 and roots[0].rational == 0 and roots[0].multiplicity == 2


def test_rational_roots_splits_off_remainder():
    # (u + 3)(u - 1/2)(u^2 - 3)
    f = UniPoly([3, 1]) * UniPoly([-1, 2]) * UniPoly([-3, 0, 1])
    found, rest = rational_roots(f)
    assert sorted(found) == [F(-3), F(1, 2)]
    assert rest.degree() == 2
    assert rest.eval(0) / rest.lc() == -3


int_polys = st.lists(st.integers(-8, 8), min_size=1, max_size=7).map(UniPoly)


@given(int_polys)
def test_real_roots_match_sympy(f):
    roots = real_roots(f)
    if f.is_zero:
        assert roots == []
        return
    expected = sympy.real_roots(uni_to_sympy(f), U, multiple=False)
    assert len(roots) == len(expected)
    for mine, (their_root, their_mult) in zip(roots, expected):
        assert mine.multiplicity == their_mult
        value = float(their_root.evalf(30))
        lo, hi = float(mine.interval[0]), float(mine.interval[1])
        assert lo - 1e-12 <= value <= hi + 1e-12
    # isolation: intervals are pairwise disjoint and ordered
    for a, b in zip(roots, roots[1:]):
        assert a.interval[1] < b.interval[0] or (
            a.is_rational and b.is_rational and a.rational < b.rational
        )


@given(int_polys)
def test_sturm_counts_match_root_lists(f):
    if f.is_zero or f.degree() < 1:
        return
    bound = cauchy_bound(f)
    chain = sturm_chain(f)
    distinct = len(real_roots(f))
    assert count_roots_between(chain, -bound - 1, bound + 1) == distinct


def test_refinement_narrows():
    root = real_roots(UniPoly([-2, 0, 0, 1]))[0]  # cbrt(2)
    root.refine_below(F(1, 10**12))
    assert root.width() <= F(1, 10**12)
    assert abs(root.approx() - 2 ** (1 / 3)) < 1e-11


def test_gap_points_interleave():
    f = UniPoly([0, -1, 0, 1])  # u(u-1)(u+1)
    roots = real_roots(f)
    gaps = gap_points(roots)
    assert len(gaps) == len(roots) + 1
    values = [float(g) for g in gaps]
    approxes = [r.approx() for r in roots]
    for left, root, right in zip(values, approxes, values[1:]):
        assert left < root < right


def test_mth_derivative_sign():
    # f = (u - 1)^2 (u + 2): at the double root the second derivative rules
    f = UniPoly([1, -1]) * UniPoly([1, -1]) * UniPoly([2, 1])
    root = next(r for r in real_roots(f) if r.rational == 1)
    assert mth_derivative_sign(f, root, 1) == 0
    assert mth_derivative_sign(f, root, 2) == 1
    root_simple = next(r for r in real_roots(f) if r.rational == -2)
    assert mth_derivative_sign(f, root_simple, 1) == 1


def test_sign_of_refines_until_decided():
    # sqrt(2) against a polynomial whose root 1.414... is very close: u - 17/12
    root = real_roots(UniPoly([-2, 0, 1]))[1]
    g = UniPoly([F(-17, 12), 1])
    assert root.sign_of(g) == (1 if 2 ** 0.5 > 17 / 12 else -1)
    g2 = UniPoly([F(-577, 408), 1])  # next convergent, even closer
    assert root.sign_of(g2) == (1 if 2 ** 0.5 > 577 / 408 else -1)


def test_from_rational_constructor():
    f = UniPoly([-1, 2])
    r = AlgebraicRoot.from_rational(F(1, 2), f)
    assert r.is_rational and r.rational == F(1, 2)
    assert r.sign_of(UniPoly([0, 1])) == 1
    assert r.sign_of(f) == 0
