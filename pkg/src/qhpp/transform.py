"""Power substitutions turning quasi-homogeneous systems homogeneous.

Both classical routes are implemented.  Writing w = (s1, s2, d):

* the lcm route substitutes x_new = x^(1/s1), y_new = y^(1/s2) scaled so
  both exponents sit over beta = lcm(s1, s2), and multiplies time by a
  monomial to clear negative exponents; the image is homogeneous of
  degree d, d+s1-1, d+s2-1 or d+s1+s2-2;
* the minimal route substitutes x_new = x^s2, y_new = y^s1 and divides
  time by a fractional monomial; the image has the smallest possible
  degree and is what the global classification works on.

Either way the record stores exponents x_new = x^expo_x, y_new = y^expo_y
and the time relation dt = x_new^time_x * y_new^time_y * dt_new, all as
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from qhpp.errors import InternalInvariantError
from qhpp.poly import BiPoly, PolySystem, Rat
from qhpp.weights import WeightVector, weight_satisfies

__all__ = [
    "SymmetryInfo",
    "TransformRecord",
    "HomogSystem",
    "TargetClassReport",
    "homogenize_lcm",
    "homogenize_min",
    "target_class",
    "symmetry_type",
    "verify_symmetry",
    "RadicalCoord",
    "PullbackResult",
    "pullback_point",
    "verify_conjugacy",
]


@dataclass(frozen=True)
class SymmetryInfo:
    kind: str  # "x-axis" | "y-axis" | "origin"
    time_direction: str  # "preserved" | "reversed"


@dataclass(frozen=True)
class TransformRecord:
    beta: int
    expo_x: Rat
    expo_y: Rat
    time_x: Rat
    time_y: Rat
    chart: str  # "x>0" | "y>0" | "full-plane"
    swap_xy: bool
    symmetry: SymmetryInfo

    def time_monomial_original(self) -> tuple[Rat, Rat]:
        """Exponents (m, k) with dt_new = x^m * y^k * dt in the source
        variables.  Integer on the minimal route; used for quadrant-wise
        time-sign bookkeeping."""
        return (-self.time_x * self.expo_x, -self.time_y * self.expo_y)


@dataclass(frozen=True)
class HomogSystem:
    sys: PolySystem
    degree: int
    target_class: str


@dataclass(frozen=True)
class TargetClassReport:
    label: str
    ok: bool
    failing: str | None


# ---------------------------------------------------------------------------
# symmetry


def symmetry_type(w: WeightVector) -> SymmetryInfo:
    """Mirror/point symmetry forced by the weight parities.

    Time direction: the symmetry preserves time when d is odd and
    reverses it when d is even.
    """
    odd1, odd2 = w.s1 % 2 == 1, w.s2 % 2 == 1
    if not odd1 and not odd2:
        raise InternalInvariantError("both weights even contradicts minimality")
    if odd1 and odd2:
        kind = "origin"
    elif odd2:
        kind = "x-axis"
    else:
        kind = "y-axis"
    direction = "preserved" if w.d % 2 == 1 else "reversed"
    return SymmetryInfo(kind, direction)


def _flip(f: BiPoly, flip_x: bool, flip_y: bool) -> BiPoly:
    return BiPoly(
        {
            (i, j): c * (-1 if flip_x and i % 2 else 1) * (-1 if flip_y and j % 2 else 1)
            for (i, j), c in f.terms()
        }
    )


def verify_symmetry(system: PolySystem, info: SymmetryInfo) -> bool:
    """Exact check that the claimed symmetry maps orbits to orbits with
    the claimed time behaviour."""
    if info.kind == "x-axis":
        image = PolySystem(_flip(system.p, False, True), -_flip(system.q, False, True))
    elif info.kind == "y-axis":
        image = PolySystem(-_flip(system.p, True, False), _flip(system.q, True, False))
    else:
        image = PolySystem(-_flip(system.p, True, True), -_flip(system.q, True, True))
    if info.time_direction == "preserved":
        return image == system
    return image == PolySystem(-system.p, -system.q)


# ---------------------------------------------------------------------------
# homogenization


def _require_minimal(system: PolySystem, w: WeightVector) -> None:
    if not weight_satisfies(w, system):
        raise ValueError(f"{w} is not a weight vector of the system")
    if gcd(w.s1, w.s2) != 1 or not w.minimal:
        raise ValueError(f"{w} is not minimal; chart bookkeeping would be ambiguous")


def _finish(terms_p, terms_q, degree_hint: str) -> tuple[PolySystem, int]:
    p, q = BiPoly(terms_p), BiPoly(terms_q)
    sys_ = PolySystem(p, q)
    degrees = {i + j for f in (p, q) for (i, j), _ in f.terms()}
    if len(degrees) != 1:
        raise InternalInvariantError(f"{degree_hint} image is not homogeneous")
    return sys_, degrees.pop()


def homogenize_lcm(
    system: PolySystem, w: WeightVector, swap_xy: bool = False
) -> tuple[HomogSystem, TransformRecord]:
    """Route with beta = lcm(s1, s2): x_new = x^(1/s1), y_new = y^(1/s2),
    time multiplied by x_new^(s1-1) and/or y_new^(s2-1) exactly when the
    raw substitution would produce a negative exponent."""
    _require_minimal(system, w)
    s1, s2, d = w.s1, w.s2, w.d
    beta = s1 * s2 // gcd(s1, s2)

    fx = s1 - 1 if any(i == 0 for (i, _), _ in system.p.terms()) else 0
    fy = s2 - 1 if any(j == 0 for (_, j), _ in system.q.terms()) else 0

    terms_p: dict[tuple[int, int], Rat] = {}
    for (i, j), a in system.p.terms():
        terms_p[(s1 * (i - 1) + 1 + fx, s2 * j + fy)] = a / s1
    terms_q: dict[tuple[int, int], Rat] = {}
    for (i, j), b in system.q.terms():
        terms_q[(s1 * i + fx, s2 * (j - 1) + 1 + fy)] = b / s2

    image, degree = _finish(terms_p, terms_q, "lcm-route")
    if degree != d + fx + fy:
        raise InternalInvariantError("lcm-route degree law violated")

    if s1 % 2 == 0:
        chart = "x>0"
    elif s2 % 2 == 0:
        chart = "y>0"
    else:
        chart = "full-plane"

    record = TransformRecord(
        beta=beta,
        expo_x=Fraction(s2, beta),
        expo_y=Fraction(s1, beta),
        time_x=Fraction(fx),
        time_y=Fraction(fy),
        chart=chart,
        swap_xy=swap_xy,
        symmetry=symmetry_type(w),
    )
    report = target_class_of(image, degree)
    return HomogSystem(image, degree, report.label), record


def homogenize_min(
    system: PolySystem, w: WeightVector, swap_xy: bool = False
) -> tuple[HomogSystem, TransformRecord]:
    """Route of the smallest image degree: x_new = x^s2, y_new = y^s1,
    time divided by the fractional monomial that clears the exponents."""
    _require_minimal(system, w)
    s1, s2, d = w.s1, w.s2, w.d

    (ip, jp) = next(iter(system.p.terms()))[0]
    fx_num = (ip - 1) % s2
    fy_num = jp % s1
    fx = Fraction(fx_num, s2)
    fy = Fraction(fy_num, s1)

    terms_p: dict[tuple[int, int], Rat] = {}
    for (i, j), a in system.p.terms():
        ex = Fraction(i - 1, s2) + 1 - fx
        ey = Fraction(j, s1) - fy
        if ex.denominator != 1 or ey.denominator != 1 or ex < 0 or ey < 0:
            raise InternalInvariantError("minimal-route exponents failed to clear in p")
        terms_p[(int(ex), int(ey))] = s2 * a
    terms_q: dict[tuple[int, int], Rat] = {}
    for (i, j), b in system.q.terms():
        ex = Fraction(i, s2) - fx
        ey = Fraction(j - 1, s1) + 1 - fy
        if ex.denominator != 1 or ey.denominator != 1 or ex < 0 or ey < 0:
            raise InternalInvariantError("minimal-route exponents failed to clear in q")
        terms_q[(int(ex), int(ey))] = s1 * b

    image, degree = _finish(terms_p, terms_q, "minimal-route")

    if s1 % 2 == 0:
        chart = "y>0"
    elif s2 % 2 == 0:
        chart = "x>0"
    else:
        chart = "full-plane"

    record = TransformRecord(
        beta=1,
        expo_x=Fraction(s2),
        expo_y=Fraction(s1),
        time_x=-fx,
        time_y=-fy,
        chart=chart,
        swap_xy=swap_xy,
        symmetry=symmetry_type(w),
    )
    report = target_class_of(image, degree)
    return HomogSystem(image, degree, report.label), record


# ---------------------------------------------------------------------------
# target classes


def target_class_of(image: PolySystem, degree: int) -> TargetClassReport:
    """Class label H<degree> plus the nonvanishing conditions that keep
    the image inside the intended class."""
    label = f"H{degree}"
    p, q = image.p, image.q
    if degree == 3:
        c30, d03 = p.coeff(3, 0), q.coeff(0, 3)
        if c30 == 0:
            return TargetClassReport(label, False, "c30")
        if d03 == 0:
            return TargetClassReport(label, False, "d03")
        return TargetClassReport(label, True, None)
    if degree == 2:
        c02, d20 = p.coeff(0, 2), q.coeff(2, 0)
        if c02 != 0 and d20 != 0:
            return TargetClassReport(label, True, None)
        if c02 == 0 and d20 == 0:
            c20, d02 = p.coeff(2, 0), q.coeff(0, 2)
            if c20 == 0:
                return TargetClassReport(label, False, "c20")
            if d02 == 0:
                return TargetClassReport(label, False, "d02")
            return TargetClassReport(label, True, None)
        return TargetClassReport(label, False, "c02" if c02 == 0 else "d20")
    # degree 1, 0 and anything larger: both components must survive
    if p.is_zero:
        return TargetClassReport(label, False, "p-component")
    if q.is_zero:
        return TargetClassReport(label, False, "q-component")
    return TargetClassReport(label, True, None)


def target_class(h: HomogSystem) -> TargetClassReport:
    return target_class_of(h.sys, h.degree)


# ---------------------------------------------------------------------------
# pullback


@dataclass(frozen=True)
class RadicalCoord:
    """sign * radicand^(1/power), with the exact rational value filled in
    whenever the root collapses."""

    sign: int
    power: int
    radicand: Rat
    exact: Rat | None

    def approx(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return self.sign * float(self.radicand) ** (1.0 / self.power)


@dataclass(frozen=True)
class PullbackResult:
    points: tuple[tuple[RadicalCoord, RadicalCoord], ...]
    boundary: bool


def _iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None."""
    if n < 0:
        return None
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def _nth_root_exact(r: Rat, k: int) -> Rat | None:
    if r < 0:
        return None
    num = _iroot(r.numerator, k)
    den = _iroot(r.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _invert_coord(value: Rat, expo: Rat) -> RadicalCoord:
    """Solve source^expo = value for the source coordinate.

    With expo = q/p in lowest terms the solution is value^(p/q); for a
    negative value a real solution exists only when both p and q are odd.
    """
    q, p = expo.numerator, expo.denominator
    if value > 0:
        rad = value**p
        exact = _nth_root_exact(rad, q)
        return RadicalCoord(1, q, rad, exact)
    if q % 2 == 0 or p % 2 == 0:
        raise ValueError("point lies outside the chart (no real preimage of a negative value)")
    rad = (-value) ** p
    exact = _nth_root_exact(rad, q)
    return RadicalCoord(-1, q, rad, -exact if exact is not None else None)


def _negate(c: RadicalCoord) -> RadicalCoord:
    return RadicalCoord(-c.sign, c.power, c.radicand, None if c.exact is None else -c.exact)


def pullback_point(record: TransformRecord, xt: Rat, yt: Rat) -> PullbackResult:
    """Source-plane preimages of one target-chart point.

    Axis points are flagged as boundary (the substitution is not smooth
    there) and produce no preimages.  When a substitution exponent is an
    even integer the mirrored preimage is included.
    """
    xt, yt = Fraction(xt), Fraction(yt)
    if xt == 0 or yt == 0:
        return PullbackResult((), True)

    cx = _invert_coord(xt, record.expo_x)
    cy = _invert_coord(yt, record.expo_y)
    points = [(cx, cy)]
    if record.expo_x.denominator == 1 and record.expo_x.numerator % 2 == 0:
        points.append((_negate(cx), cy))
    if record.expo_y.denominator == 1 and record.expo_y.numerator % 2 == 0:
        points.append((cx, _negate(cy)))

    if record.swap_xy:
        points = [(b, a) for a, b in points]
    return PullbackResult(tuple(points), False)


# ---------------------------------------------------------------------------
# conjugacy checking


def _rat_power(base: Rat, e: Rat) -> Rat:
    """base**e when it is exactly rational; raises otherwise."""
    if e.denominator == 1:
        return base ** e.numerator
    if base == 0:
        if e > 0:
            return Fraction(0)
        raise ValueError("zero to a nonpositive fractional power")
    if base < 0 and e.denominator % 2 == 0:
        raise ValueError("even fractional power of a negative value")
    b = -base if base < 0 else base
    root = _nth_root_exact(b, e.denominator)
    if root is None:
        raise ValueError(f"{base}^{e} is irrational")
    value = root ** e.numerator
    if base < 0 and e.numerator % 2 == 1:
        value = -value
    return value


def verify_conjugacy(
    source: PolySystem,
    target: HomogSystem,
    record: TransformRecord,
    x0: Rat,
    y0: Rat,
) -> bool:
    """Exact push-forward identity at one rational point of the chart.

    d/dt_new of the substituted coordinates must equal the target field at
    the image point.  Only usable when every power involved is rational
    at (x0, y0); integer-exponent records always qualify.
    """
    x0, y0 = Fraction(x0), Fraction(y0)
    if x0 == 0 or y0 == 0:
        raise ValueError("conjugacy check needs an off-axis point")
    ix = _rat_power(x0, record.expo_x)
    iy = _rat_power(y0, record.expo_y)
    time_scale = _rat_power(ix, record.time_x) * _rat_power(iy, record.time_y)

    p_val, q_val = source.eval(x0, y0)
    lhs_x = time_scale * record.expo_x * _rat_power(x0, record.expo_x - 1) * p_val
    lhs_y = time_scale * record.expo_y * _rat_power(y0, record.expo_y - 1) * q_val
    rhs_x, rhs_y = target.sys.eval(ix, iy)
    return lhs_x == rhs_x and lhs_y == rhs_y
