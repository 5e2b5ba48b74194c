"""Local analysis of a homogeneous system at the origin and at infinity.

For a homogeneous system (P, Q) of degree n everything is governed by two
auxiliary polynomials,

    G = x*Q - y*P      (degree n+1),
    H = x*P + y*Q      (degree n+1),

restricted to the directions u = y/x.  Real roots of G(1, u) are the
characteristic directions: a blow-up y = u*x turns each root u0 into an
equilibrium on the exceptional line whose type is decided by the sign of
P(1, u0) times the first nonvanishing derivative of G(1, u) at u0 (odd
multiplicity), or is a saddle-node outright (even multiplicity).  The same
data classifies the equator equilibria of the Poincare compactification with
the sign convention reversed.  The direction x = 0 is handled separately
through G(v, 1) and Q(0, 1).

When G(1, u) has no real roots (odd n only) the origin is monodromic and the
centre question reduces to the vanishing of the principal-value integral

    I = PV \int_{-inf}^{inf} P(1, u) / G(1, u) du,

which this module decides exactly whenever G(1, u) factors over the rationals
into quadratics, and numerically otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CommonFactorError, InternalInvariantError
from .poly import BiPoly, PolySystem, Rat, UniPoly, coprime_check, squarefree_decomposition
from .roots import AlgebraicRoot, mth_derivative_sign, rational_roots, real_roots

SADDLE = "saddle"
NODE = "node"
SADDLE_NODE = "saddle-node"


@dataclass(frozen=True)
class CharPolys:
    """G, H and their one-variable restrictions for a homogeneous system."""

    g: BiPoly
    h: BiPoly
    g_u: UniPoly  # G(1, u)
    g_v: UniPoly  # G(v, 1)
    p_u: UniPoly  # P(1, u)
    q_v: UniPoly  # Q(v, 1)
    degree: int


def char_polys(system: PolySystem) -> CharPolys:
    """Build the characteristic polynomials of a coprime homogeneous system.

    Raises CommonFactorError when the components share a nonconstant factor
    and ValueError when the system is not homogeneous.
    """
    if not system.is_homogeneous():
        raise ValueError("characteristic polynomials need a homogeneous system")
    ok, factor = coprime_check(system)
    if not ok:
        raise CommonFactorError(str(factor))
    n = system.degree()
    x = BiPoly.monomial(1, 0)
    y = BiPoly.monomial(0, 1)
    g = x * system.q - y * system.p
    h = x * system.p + y * system.q
    if g.is_zero:
        raise InternalInvariantError("x*q - y*p vanished for a coprime system")
    if not g.is_homogeneous() or g.degree() != n + 1:
        raise InternalInvariantError("x*q - y*p is not homogeneous of degree n+1")
    cp = CharPolys(
        g=g,
        h=h,
        g_u=g.eval_x1(),
        g_v=g.eval_y1(),
        p_u=system.p.eval_x1(),
        q_v=system.q.eval_y1(),
        degree=n,
    )
    m_vert, _ = cp.g_v.shift_down()
    if m_vert + cp.g_u.degree() != n + 1:
        raise InternalInvariantError("vertical multiplicity and deg G(1,u) do not add up")
    return cp


@dataclass(frozen=True)
class DirectionReport:
    """Classification of one characteristic direction.

    direction is None for the vertical direction x = 0.  radial_sign is the
    sign of P(1, u0) (of Q(0, 1) at the vertical): positive means the flow
    moves away from the origin along the positive half of the ray.
    deriv_sign is the sign of the first nonvanishing derivative of G(1, u)
    at u0 (of the lowest coefficient of G(v, 1) at the vertical).
    """

    direction: AlgebraicRoot | None
    multiplicity: int
    local_type_blowup: str
    orbit_count_origin: str
    flow_sign: str
    infinity_type: str
    infinity_stability: str | None
    radial_sign: int
    deriv_sign: int

    @property
    def vertical(self) -> bool:
        return self.direction is None


def classify_direction(cp: CharPolys, u0: AlgebraicRoot) -> DirectionReport:
    """Classify the direction y = u0*x at the origin and at infinity."""
    ps = u0.sign_of(cp.p_u)
    if ps == 0:
        raise InternalInvariantError(
            "characteristic direction annihilates p; components cannot be coprime"
        )
    m = u0.multiplicity
    ds = mth_derivative_sign(cp.g_u, u0, m)
    if m % 2 == 1:
        if ps * ds > 0:
            local, inf_type = NODE, SADDLE
        else:
            local, inf_type = SADDLE, NODE
        stability = None
        if inf_type == NODE:
            stability = "stable" if ps > 0 else "unstable"
    else:
        local = inf_type = SADDLE_NODE
        stability = None
    return DirectionReport(
        direction=u0,
        multiplicity=m,
        local_type_blowup=local,
        orbit_count_origin="one" if local == SADDLE else "infinitely-many",
        flow_sign="outgoing" if ps > 0 else "incoming",
        infinity_type=inf_type,
        infinity_stability=stability,
        radial_sign=ps,
        deriv_sign=ds,
    )


def classify_vertical(cp: CharPolys) -> DirectionReport | None:
    """Classify the direction x = 0, or return None when it is not characteristic.

    The vertical is characteristic exactly when v = 0 is a root of G(v, 1),
    that is when x divides P.  Coprimality then forces Q(0, 1) != 0, and the
    sign table mirrors the interior one with the roles of the chart variables
    exchanged.
    """
    m, reduced = cp.g_v.shift_down()
    if m == 0:
        return None
    q01 = cp.q_v.eval(Fraction(0))
    if q01 == 0:
        raise InternalInvariantError("vertical direction annihilates q; components cannot be coprime")
    qs = 1 if q01 > 0 else -1
    gm = reduced.eval(Fraction(0))
    ds = 1 if gm > 0 else -1
    if m % 2 == 1:
        if qs * ds > 0:
            local, inf_type = SADDLE, NODE
        else:
            local, inf_type = NODE, SADDLE
        stability = None
        if inf_type == NODE:
            stability = "stable" if qs > 0 else "unstable"
    else:
        local = inf_type = SADDLE_NODE
        stability = None
    return DirectionReport(
        direction=None,
        multiplicity=m,
        local_type_blowup=local,
        orbit_count_origin="one" if local == SADDLE else "infinitely-many",
        flow_sign="outgoing" if qs > 0 else "incoming",
        infinity_type=inf_type,
        infinity_stability=stability,
        radial_sign=qs,
        deriv_sign=ds,
    )


def direction_reports(cp: CharPolys) -> list[DirectionReport]:
    """All characteristic directions, interior ones sorted by u0, vertical last."""
    reports = [classify_direction(cp, u0) for u0 in real_roots(cp.g_u)]
    vert = classify_vertical(cp)
    if vert is not None:
        reports.append(vert)
    return reports


# --- centre test -----------------------------------------------------------

CENTER = "global-center"
NOT_CENTER = "not-center"
CENTER_UNVERIFIED = "numerically-center-unverified"

_QUAD_TOL = 1e-10


@dataclass(frozen=True)
class CenterReport:
    """Outcome of the monodromy/centre decision.

    integral_sign is the sign of I when it was determined (0 for a certified
    centre, None when the question never arose); exact_terms lists rational
    coefficients c with their radicands D, meaning I = pi * sum c / sqrt(D).
    """

    verdict: str
    method: str
    integral_sign: int | None
    integral_value: float | None
    exact_terms: tuple[tuple[Fraction, Fraction], ...] | None


def _is_odd_poly(f: UniPoly) -> bool:
    return all(f[i] == 0 for i in range(0, f.degree() + 1, 2))


def _is_even_poly(f: UniPoly) -> bool:
    return all(f[i] == 0 for i in range(1, f.degree() + 1, 2))


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a small square rational linear system by elimination."""
    k = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            raise InternalInvariantError("singular partial-fraction system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]


def _monic_quadratic_split(f: UniPoly) -> list[tuple[Fraction, Fraction]] | None:
    """Split a monic square-free polynomial with no real roots into monic
    rational quadratics u^2 + p*u + q, or return None when no rational
    splitting exists (or the degree exceeds what we attempt)."""
    deg = f.degree()
    if deg == 0:
        return []
    if deg == 2:
        return [(f[1], f[0])]
    if deg != 4:
        return None
    a, b, c, d = f[3], f[2], f[1], f[0]
    resolvent = UniPoly((
        -(a * a * d - 4 * b * d + c * c),
        a * c - 4 * d,
        -b,
        Fraction(1),
    ))
    candidates, _ = rational_roots(resolvent)
    for z in candidates:
        disc = a * a - 4 * (b - z)
        root = _rational_sqrt(disc)
        if root is None:
            continue
        p = (a + root) / 2
        r = (a - root) / 2
        if p != r:
            q = (c - p * z) / (r - p)
            s = z - q
        else:
            if p * z != c:
                continue
            disc2 = z * z - 4 * d
            root2 = _rational_sqrt(disc2)
            if root2 is None:
                continue
            q = (z + root2) / 2
            s = (z - root2) / 2
        if q * s == d:
            for pp, qq in ((p, q), (r, s)):
                if qq - pp * pp / 4 <= 0:
                    raise InternalInvariantError("rootless quartic split into an indefinite quadratic")
            return [(p, q), (r, s)]
    return None


def _rational_sqrt(v: Fraction) -> Fraction | None:
    if v < 0:
        return None
    num = math.isqrt(v.numerator)
    den = math.isqrt(v.denominator)
    if num * num == v.numerator and den * den == v.denominator:
        return Fraction(num, den)
    return None


def _double_factorial_ratio(j: int) -> Fraction:
    """(2j-3)!! / (2j-2)!! so that PV int dt/(t^2+D)^j = pi*ratio/D^(j-1/2)."""
    num = 1
    den = 1
    for k in range(2, j + 1):
        num *= 2 * k - 3
        den *= 2 * k - 2
    return Fraction(num, den)


def _partial_fraction_integral(
    p_u: UniPoly, g_u: UniPoly
) -> tuple[list[tuple[Fraction, Fraction]], bool] | None:
    """Exact full-turn integral, twice PV int p_u/g_u du, as pi * sum c/sqrt(D).

    Returns (terms, is_zero) with terms the nonzero grouped coefficients, or
    None when g_u does not factor rationally into quadratics.  Requires g_u
    without real roots and deg p_u < deg g_u.
    """
    lead = g_u.lc()
    monic = g_u.scale(Fraction(1) / lead)
    quadratics: list[tuple[Fraction, Fraction, int]] = []
    for factor, mult in squarefree_decomposition(monic):
        split = _monic_quadratic_split(factor)
        if split is None:
            return None
        quadratics.extend((p, q, mult) for p, q in split)

    # Partial fractions: p_u/lead = sum_{k,j} (A_kj u + B_kj) * monic/(Q_k^j).
    slots = [(k, j) for k, (_, _, mk) in enumerate(quadratics) for j in range(1, mk + 1)]
    deg = monic.degree()
    cols: list[UniPoly] = []
    for k, j in slots:
        co = UniPoly.const(Fraction(1))
        for k2, (p2, q2, m2) in enumerate(quadratics):
            quad = UniPoly((q2, p2, Fraction(1)))
            power = m2 - j if k2 == k else m2
            for _ in range(power):
                co = co * quad
        cols.append(co)
    rows = []
    rhs = []
    target = p_u.scale(Fraction(1) / lead)
    for power in range(deg):
        row: list[Fraction] = []
        for co in cols:
            row.append(co[power - 1] if power >= 1 else Fraction(0))  # A-slot: u*co
            row.append(co[power])  # B-slot
        rows.append(row)
        rhs.append(target[power])
    solution = _solve_linear(rows, rhs)

    # PV int (A u + B)/(u^2 + p u + q)^j du = pi*(B - A p/2)*c_j / D^(j-1/2).
    raw: list[tuple[Fraction, Fraction]] = []
    for idx, (k, j) in enumerate(slots):
        a_kj = solution[2 * idx]
        b_kj = solution[2 * idx + 1]
        p_k, q_k, _ = quadratics[k]
        d_k = q_k - p_k * p_k / 4
        if d_k <= 0:
            raise InternalInvariantError("indefinite quadratic reached the integral formula")
        coeff = 2 * (b_kj - a_kj * p_k / 2) * _double_factorial_ratio(j) / d_k ** (j - 1)
        if coeff != 0:
            raw.append((d_k, coeff))

    # Group radicals 1/sqrt(D) by rational-square proportionality and cancel.
    groups: list[tuple[Fraction, Fraction]] = []
    for d_k, coeff in raw:
        for i, (d_rep, total) in enumerate(groups):
            ratio = _rational_sqrt(d_k / d_rep)
            if ratio is not None:
                groups[i] = (d_rep, total + coeff / ratio)
                break
        else:
            groups.append((d_k, coeff))
    groups = [(d, c) for d, c in groups if c != 0]
    return groups, not groups


def _radical_sum_sign(terms: list[tuple[Fraction, Fraction]]) -> int:
    """Sign of sum c/sqrt(D) for exact nonzero grouped terms."""
    from decimal import Decimal, getcontext

    getcontext().prec = 60
    total = Decimal(0)
    for d, c in terms:
        root = (Decimal(d.numerator) / Decimal(d.denominator)).sqrt()
        total += Decimal(c.numerator) / Decimal(c.denominator) / root
    if total == 0:
        raise InternalInvariantError("radical sum lost precision")
    return 1 if total > 0 else -1


def _quadrature_integral(system: PolySystem, cp: CharPolys) -> float:
    """I as the angular integral of H/G over a full turn (ratio is smooth)."""
    from scipy.integrate import quad

    def integrand(theta: float) -> float:
        c = math.cos(theta)
        s = math.sin(theta)
        return cp.h.eval_float(c, s) / cp.g.eval_float(c, s)

    value, _err = quad(integrand, 0.0, 2.0 * math.pi, epsabs=_QUAD_TOL / 10, limit=200)
    return value


def center_test(system: PolySystem, cp: CharPolys | None = None) -> CenterReport:
    """Decide whether the origin of a homogeneous system is a global centre.

    Even degree and any real characteristic direction both rule a centre out
    immediately.  Otherwise the sign/vanishing of the period integral is
    settled symbolically when possible and by quadrature as a last resort.
    """
    if cp is None:
        cp = char_polys(system)
    if system.degree() % 2 == 0:
        return CenterReport(NOT_CENTER, "even-degree", None, None, None)
    m_vert, _ = cp.g_v.shift_down()
    if m_vert > 0 or real_roots(cp.g_u):
        return CenterReport(NOT_CENTER, "characteristic-direction", None, None, None)

    if _is_odd_poly(cp.p_u) and _is_even_poly(cp.g_u):
        return CenterReport(CENTER, "odd-symmetry", 0, 0.0, ())

    exact = _partial_fraction_integral(cp.p_u, cp.g_u)
    if exact is not None:
        terms, is_zero = exact
        if is_zero:
            return CenterReport(CENTER, "partial-fractions", 0, 0.0, ())
        sign = _radical_sum_sign(terms)
        return CenterReport(NOT_CENTER, "partial-fractions", sign, None, tuple(terms))

    value = _quadrature_integral(system, cp)
    if abs(value) < _QUAD_TOL:
        return CenterReport(CENTER_UNVERIFIED, "quadrature", None, value, None)
    return CenterReport(NOT_CENTER, "quadrature", 1 if value > 0 else -1, value, None)
