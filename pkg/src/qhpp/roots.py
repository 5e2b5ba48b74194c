"""Exact real-root isolation for univariate rational polynomials.

Roots are represented by AlgebraicRoot objects: either an exact rational
value or an open isolating interval with rational endpoints on which the
(square-free) defining polynomial changes sign.  All intervals produced by
real_roots for one input are pairwise disjoint, the endpoints are never
roots, and the list is sorted by position, so "the sign of g just to the
right of this root" is a well-defined exact query.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from qhpp.errors import InternalInvariantError
from qhpp.poly import Rat, UniPoly, squarefree_decomposition, squarefree_part, uni_gcd

_BISECTION_CAP = 256
_DIVISOR_SCAN_CAP = 20000


class AlgebraicRoot:
    """One real root of a polynomial, exact or isolated.

    For a rational root, lo == hi == rational.  Otherwise lo < root < hi,
    the defining polynomial is square-free, has exactly one root in
    (lo, hi), and is nonzero at both endpoints.  Refinement narrows the
    interval in place; the identity of the root never changes.
    """

    __slots__ = ("poly", "lo", "hi", "multiplicity", "rational")

    def __init__(
        self,
        poly: UniPoly,
        lo: Rat,
        hi: Rat,
        multiplicity: int = 1,
        rational: Rat | None = None,
    ):
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self.multiplicity = multiplicity
        self.rational = rational

    @staticmethod
    def from_rational(value: Rat, poly: UniPoly, multiplicity: int = 1) -> AlgebraicRoot:
        return AlgebraicRoot(poly, value, value, multiplicity, value)

    @property
    def is_rational(self) -> bool:
        return self.rational is not None

    def width(self) -> Rat:
        return self.hi - self.lo

    def midpoint(self) -> Rat:
        return (self.lo + self.hi) / 2

    def approx(self) -> float:
        """Float estimate, refined to roughly double precision first."""
        self.refine_below(Fraction(1, 10**15) * (1 + abs(self.lo) + abs(self.hi)))
        return float(self.midpoint())

    def refine_once(self) -> None:
        if self.rational is not None:
            return
        m = self.midpoint()
        fm = self.poly.eval(m)
        if fm == 0:
            # the bisection landed exactly on the root
            self.rational = m
            self.lo = m
            self.hi = m
            return
        if same_sign(self.poly.eval(self.lo), fm):
            self.lo = m
        else:
            self.hi = m

    def refine_below(self, width: Rat) -> None:
        steps = 0
        while self.rational is None and self.width() > width:
            self.refine_once()
            steps += 1
            if steps > 4096:
                raise InternalInvariantError("root refinement failed to converge")

    def sign_of(self, g: UniPoly) -> int:
        """Exact sign of g evaluated at this root (-1, 0, +1)."""
        if self.rational is not None:
            return _sign(g.eval(self.rational))
        if g.is_zero:
            return 0
        h = uni_gcd(self.poly, g)
        if h.degree() >= 1 and not same_sign(h.eval(self.lo), h.eval(self.hi)):
            # the root is shared with g
            return 0
        for _ in range(_BISECTION_CAP):
            slo, shi = _sign(g.eval(self.lo)), _sign(g.eval(self.hi))
            if slo == shi and slo != 0:
                return slo
            self.refine_once()
            if self.rational is not None:
                return _sign(g.eval(self.rational))
        raise InternalInvariantError("sign query did not stabilize within the bisection cap")

    def __repr__(self) -> str:
        if self.rational is not None:
            return f"AlgebraicRoot({self.rational}, mult={self.multiplicity})"
        return f"AlgebraicRoot(({self.lo}, {self.hi}), mult={self.multiplicity})"


def _sign(v: Rat) -> int:
    return (v > 0) - (v < 0)


def same_sign(a: Rat, b: Rat) -> bool:
    return (a > 0 and b > 0) or (a < 0 and b < 0)


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_chain(f: UniPoly) -> list[UniPoly]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero and chain[-1].degree() >= 1:
        chain.append(-chain[-2].rem(chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain

def _variations(chain: Sequence[UniPoly], t: Rat) -> int:
    signs = [s for s in (_sign(p.eval(t)) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_between(chain: Sequence[UniPoly], a: Rat, b: Rat) -> int:
    """Distinct real roots of chain[0] in (a, b]; requires a < b."""
    return _variations(chain, a) - _variations(chain, b)


def cauchy_bound(f: UniPoly) -> Rat:
    """B with every real root strictly inside (-B, B)."""
    if f.degree() < 1:
        return Fraction(1)
    lead = abs(f.lc())
    return 1 + max(abs(c) for c in f.coeffs) / lead


# ---------------------------------------------------------------------------
# rational-root extraction


def _divisors(n: int, cap: int) -> list[int] | None:
    """All positive divisors of n > 0, or None when there would be too many."""
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
            if len(out) > cap:
                return None
        d += 1
    return out


def rational_roots(f: UniPoly) -> tuple[list[Rat], UniPoly]:
    """Best-effort exact rational roots of f, plus f deflated by them.

    Rational candidates come from the usual divisor test on the integer
    form of f.  The scan is skipped for pathological divisor counts; any
    missed rational root is then still isolated (as an interval) by the
    caller and discovered exactly only if a bisection midpoint hits it.
    """
    roots: list[Rat] = []
    k, f = f.shift_down()
    if k > 0:
        roots.append(Fraction(0))

    if f.degree() < 1:
        return roots, f

    den = 1
    for c in f.coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    ints = [v // g for v in ints]

    p_div = _divisors(abs(ints[0]), _DIVISOR_SCAN_CAP)
    q_div = _divisors(abs(ints[-1]), _DIVISOR_SCAN_CAP)
    if p_div is None or q_div is None or len(p_div) * len(q_div) > _DIVISOR_SCAN_CAP:
        return roots, f

    candidates = set()
    for p in p_div:
        for q in q_div:
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for cand in sorted(candidates):
        while f.degree() >= 1 and f.eval(cand) == 0:
            roots.append(cand)
            f = f.exact_div(UniPoly([-cand, 1]))
    return roots, f


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# isolation


def _isolate_on(chain: list[UniPoly], f: UniPoly, a: Rat, b: Rat, n: int, out: list[AlgebraicRoot]) -> None:
    """Isolate the n roots of f in (a, b); f(a), f(b) nonzero."""
    if n == 0:
        return
    if n == 1:
        out.append(AlgebraicRoot(f, a, b))
        return
    m = (a + b) / 2
    if f.eval(m) == 0:
        # the midpoint is itself a root; bracket it away before recursing,
        # never evaluating the Sturm chain at a root of f
        out.append(AlgebraicRoot.from_rational(m, f))
        dl, dr = (m - a) / 2, (b - m) / 2
        while f.eval(m - dl) == 0:
            dl /= 2
        while f.eval(m + dr) == 0:
            dr /= 2
        while count_roots_between(chain, m - dl, m + dr) > 1:
            dl /= 2
            dr /= 2
            while f.eval(m - dl) == 0:
                dl /= 2
            while f.eval(m + dr) == 0:
                dr /= 2
        nl = count_roots_between(chain, a, m - dl)
        _isolate_on(chain, f, a, m - dl, nl, out)
        _isolate_on(chain, f, m + dr, b, n - 1 - nl, out)
        return
    nl = count_roots_between(chain, a, m)
    _isolate_on(chain, f, a, m, nl, out)
    _isolate_on(chain, f, m, b, n - nl, out)


def real_roots(f: UniPoly) -> list[AlgebraicRoot]:
    """All real roots of f with multiplicities, sorted ascending.

    The returned isolating intervals are pairwise disjoint and never
    contain a root other than their own, across the whole list.
    """
    if f.is_zero:
        raise InternalInvariantError("root isolation of the zero polynomial")
    if f.degree() < 1:
        return []

    decomp = squarefree_decomposition(f)
    sf = squarefree_part(f)

    ratl, deflated = rational_roots(sf)
    found: list[AlgebraicRoot] = [AlgebraicRoot.from_rational(r, sf) for r in ratl]

    if deflated.degree() >= 1:
        chain = sturm_chain(deflated)
        bound = cauchy_bound(deflated)
        total = count_roots_between(chain, -bound, bound)
        isolated: list[AlgebraicRoot] = []
        _isolate_on(chain, deflated, -bound, bound, total, isolated)
        # shrink intervals until every known rational root is strictly
        # outside the closed interval; endpoints must stay off roots of sf
        for root in isolated:
            for r in ratl:
                while root.rational is None and root.lo <= r <= root.hi:
                    root.refine_once()
            root.poly = sf
        found.extend(isolated)

    found.sort(key=lambda rt: (rt.lo, rt.hi))
    _separate_neighbours(found)

    if len(decomp) == 1:
        mult = decomp[0][1]
        for rt in found:
            rt.multiplicity = mult
    else:
        for rt in found:
            rt.multiplicity = _multiplicity_of(rt, decomp)
    return found


def _separate_neighbours(roots: list[AlgebraicRoot]) -> None:
    """Defensive pass: construction already yields disjoint brackets, but a
    shared endpoint must never coincide with a rational root value."""
    for left, right in zip(roots, roots[1:]):
        guard = 0
        while left.hi > right.lo or (left.hi == right.lo and (left.is_rational or right.is_rational)):
            if left.is_rational and right.is_rational:
                raise InternalInvariantError("coincident rational roots in one isolation run")
            if left.rational is None:
                left.refine_once()
            if right.rational is None:
                right.refine_once()
            guard += 1
            if guard > 4096:
                raise InternalInvariantError("failed to separate neighbouring roots")


def _multiplicity_of(root: AlgebraicRoot, decomp: list[tuple[UniPoly, int]]) -> int:
    hits = []
    for g, k in decomp:
        if root.rational is not None:
            if g.eval(root.rational) == 0:
                hits.append(k)
        elif not same_sign(g.eval(root.lo), g.eval(root.hi)):
            hits.append(k)
    if len(hits) != 1:
        raise InternalInvariantError("root matched by none or several square-free factors")
    return hits[0]


# ---------------------------------------------------------------------------
# sign queries relative to a root list


def mth_derivative_sign(f: UniPoly, root: AlgebraicRoot, m: int) -> int:
    """Sign of the m-th derivative of f at a root of multiplicity m.

    Equivalently the sign of f just right of the root, computed without
    numerics: deflate (u - r)^m exactly for rational roots, or evaluate at
    the right endpoint of the isolating interval (root-free by isolation).
    """
    if root.rational is not None:
        w = f
        lin = UniPoly([-root.rational, 1])
        for _ in range(m):
            w = w.exact_div(lin)
        s = _sign(w.eval(root.rational))
    else:
        s = _sign(f.eval(root.hi))
    if s == 0:
        raise InternalInvariantError("declared multiplicity does not match the polynomial")
    return s


def gap_points(roots: Sequence[AlgebraicRoot]) -> list[Rat]:
    """Rational sample points interleaving the roots: one before the first
    root, one strictly between each consecutive pair, one after the last.

    With no roots at all the single sample is 0.
    """
    if not roots:
        return [Fraction(0)]
    pts = [roots[0].lo - 1]
    for left, right in zip(roots, roots[1:]):
        # a shared bracket endpoint is only usable when it is not itself
        # one of the two root values
        while left.hi == right.lo and (left.is_rational or right.is_rational):
            if left.rational is None:
                left.refine_once()
            else:
                right.refine_once()
        if left.hi == right.lo:
            pts.append(left.hi)
        else:
            pts.append((left.hi + right.lo) / 2)
    pts.append(roots[-1].hi + 1)
    return pts
