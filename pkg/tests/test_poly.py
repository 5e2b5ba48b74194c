"""Exact polynomial arithmetic, cross-checked against sympy."""
from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from qhpp.poly import (
    BiPoly,
    PolySystem,
    UniPoly,
    bipoly_divides,
    bipoly_divmod,
    bipoly_gcd,
    coprime_check,
    squarefree_decomposition,
    squarefree_part,
    uni_gcd,
)

F = Fraction
X, Y, U = sympy.symbols("x y u")


def to_sympy(f: BiPoly):
    return sympy.expand(sum(sympy.Rational(c) * X**i * Y**j for (i, j), c in f.terms()))


def uni_to_sympy(f: UniPoly):
    return sympy.expand(sum(sympy.Rational(f[k]) * U**k for k in range(f.degree() + 1)))


rationals = st.fractions(
    min_value=-6, max_value=6, max_denominator=4
)


@st.composite
def bipolys(draw, max_degree=4, max_terms=6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        i = draw(st.integers(0, max_degree))
        j = draw(st.integers(0, max_degree - i))
        terms[(i, j)] = draw(rationals)
    return BiPoly(terms)


@st.composite
def unipolys(draw, max_degree=6):
    coeffs = draw(st.lists(rationals, min_size=0, max_size=max_degree + 1))
    return UniPoly(coeffs)


def test_bipoly_basics():
    f = BiPoly({(2, 1): F(3), (0, 0): F(-1, 2), (1, 1): F(0)})
    assert f.coeff(2, 1) == 3
    assert f.coeff(1, 1) == 0
    assert (1, 1) not in f.support()
    assert f.degree() == 3
    assert not f.is_zero
    assert BiPoly.zero().is_zero
    assert BiPoly.zero().degree() == -1
    assert f.deg_x() == 2 and f.deg_y() == 1
    assert f.eval(2, 3) == 3 * 4 * 3 - F(1, 2)


def test_bipoly_homogeneous_part():
    f = BiPoly({(2, 1): 1, (1, 1): 2, (0, 3): 5})
    assert f.homogeneous_part(3) == BiPoly({(2, 1): 1, (0, 3): 5})
    assert f.homogeneous_part(2) == BiPoly({(1, 1): 2})
    assert not f.is_homogeneous()
    assert f.homogeneous_part(3).is_homogeneous()


@given(bipolys(), bipolys())
def test_bipoly_ring_ops_match_sympy(a, b):
    assert to_sympy(a + b) == to_sympy(a) + to_sympy(b)
    assert to_sympy(a - b) == to_sympy(a) - to_sympy(b)
    assert sympy.expand(to_sympy(a * b)) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(-a) == -to_sympy(a)


@given(bipolys(), rationals, rationals)
def test_bipoly_eval_matches_sympy(f, x0, y0):
    want = to_sympy(f).subs({X: sympy.Rational(x0), Y: sympy.Rational(y0)})
    assert sympy.Rational(f.eval(x0, y0)) == want


@given(bipolys())
def test_bipoly_derivatives_match_sympy(f):
    assert to_sympy(f.diff_x()) == sympy.diff(to_sympy(f), X)
    assert to_sympy(f.diff_y()) == sympy.diff(to_sympy(f), Y)


def test_bipoly_restrictions():
    f = BiPoly({(2, 1): 3, (0, 2): -1, (1, 0): F(1, 2)})
    # f(1, u) and f(v, 1) as univariate polynomials
    assert f.eval_x1() == UniPoly([F(1, 2), 3, -1])
    assert f.eval_y1() == UniPoly([-1, F(1, 2), 3])
    assert f.eval_y1().eval(2) == f.eval(2, 1)


@given(bipolys(), st.integers(1, 3), st.integers(1, 3))
def test_compose_powers_matches_substitution(f, a, b):
    g = f.compose_powers(a, b)
    assert to_sympy(g) == sympy.expand(to_sympy(f).subs({X: X**a, Y: Y**b}))


def test_unipoly_basics():
    f = UniPoly([1, 0, -2, 0, 0])  # trailing zeros trimmed
    assert f.degree() == 2
    assert f.lc() == -2
    assert f[5] == 0
    assert f.eval(F(1, 2)) == 1 - F(1, 2)
    assert UniPoly([]).is_zero
    assert UniPoly([0]).is_zero
    assert f.monic() == UniPoly([F(-1, 2), 0, 1])


@given(unipolys(), unipolys())
def test_unipoly_divmod_identity(a, b):
    if b.is_zero:
        with pytest.raises(ZeroDivisionError):
            a.divmod(b)
        return
    q, r = a.divmod(b)
    assert a == q * b + r
    assert r.is_zero or r.degree() < b.degree()


@given(unipolys(), unipolys())
def test_uni_gcd_matches_sympy(a, b):
    g = uni_gcd(a, b)
    want = sympy.gcd(uni_to_sympy(a), uni_to_sympy(b), U)
    if a.is_zero and b.is_zero:
        assert g.is_zero
        return
    # unique up to a rational scale: compare monic forms
    got = uni_to_sympy(g.monic())
    assert sympy.expand(got - sympy.monic(want, U)) == 0


@given(unipolys(max_degree=5))
def test_squarefree_decomposition_reassembles(f):
    decomp = squarefree_decomposition(f)
    if f.is_zero:
        assert decomp == []
        return
    product = UniPoly([f.lc()])
    for factor, mult in decomp:
        assert factor.lc() == 1
        for _ in range(mult):
            product = product * factor
        # squarefree: no repeated roots in the factor itself
        assert uni_gcd(factor, factor.derivative()).degree() == 0
    assert product == f
    sf = squarefree_part(f)
    expect = sympy.prod(
        [uni_to_sympy(factor) for factor, _ in decomp], start=sympy.Integer(1)
    )
    assert sympy.expand(uni_to_sympy(sf.monic()) - expect) == 0


def test_bipoly_gcd_frozen():
    g = BiPoly({(1, 0): 1, (0, 2): -1})  # x - y^2
    a = g * BiPoly({(1, 0): 1, (0, 1): 1})
    b = g * BiPoly({(2, 0): 1, (0, 0): 3})
    got = bipoly_gcd(a, b)
    assert bipoly_divides(got, a) and bipoly_divides(got, b)
    assert got.degree() == g.degree()
    q, r = bipoly_divmod(a, got)
    assert r.is_zero and q * got == a


@given(bipolys(max_degree=2, max_terms=3), bipolys(max_degree=2, max_terms=3),
       bipolys(max_degree=2, max_terms=3))
def test_bipoly_gcd_matches_sympy(g, a, b):
    f1, f2 = g * a, g * b
    got = bipoly_gcd(f1, f2)
    want = sympy.gcd(to_sympy(f1), to_sympy(f2), X, Y)
    if f1.is_zero and f2.is_zero:
        assert got.is_zero
        return
    assert bipoly_divides(got, f1) and bipoly_divides(got, f2)
    assert got.degree() == sympy.total_degree(want)


def test_coprime_check():
    ok, factor = coprime_check(PolySystem(
        BiPoly({(0, 3): 1}), BiPoly({(3, 0): 1})))
    assert ok and factor is None
    shared = BiPoly({(1, 0): 1, (0, 1): 2})
    ok, factor = coprime_check(PolySystem(
        shared * BiPoly({(1, 0): 1}), shared * BiPoly({(0, 1): 1})))
    assert not ok
    assert factor is not None and factor.degree() >= 1
    assert bipoly_divides(factor, shared * BiPoly({(1, 0): 1}))
