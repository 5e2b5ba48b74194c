"""Figure classification for the quintic family X_111.

X_111 (x' = a14*x*y^4 + a22*x^2*y^2 + a30*x^3, y' = b05*y^5 + b13*x*y^3
+ b21*x^2*y, with a30*b05 != 0) is the one catalog family whose
homogenized image is cubic.  Dividing the image by the coefficient 2*b05
of y^3 in its second component leaves the five-parameter shape

    x' = x*(c12*y^2 + c21*x*y + c30*x^2),
    y' = y*(y^2 + d12*x*y + d21*x^2),

whose global portrait is pinned down by the root layout of
G(1,u) = u*((1-c12)*u^2 + (d12-c21)*u + (d21-c30)) plus a short tuple of
signs of P(1,u) and of derivatives of G(1,u) at those roots.
x111_signature computes that data exactly, x111_label matches it against
the row tables below, and x111_census tallies the distinct figure labels
(24 + 14 + 14 = 52).

Which table applies is decided by the original quintic at the upper end
of the y-axis: the eigenvalues there are (a14 - b05, -b05), so the split
is sign((a14 - b05)*b05), conventionally written "a14 vs 1" with b05
scaled to 1.  On the boundary a14 = b05 the whole equator consists of
singularities and the second table's rows are reused under that marker.
Dividing by 2*b05 reverses time when b05 < 0; negating every coefficient
leaves the c/d tuple unchanged, so the row match still applies and the
signature records a time_reversed flag instead.

The row tables are shipped verbatim as reference data; gaps are surfaced
rather than repaired.  Two consequences are worth knowing.  First, the
Figure (II) tuple (P negative at both nonzero roots, positive at 0) needs
a concave P(1,u), i.e. c12 < 0, so it is reachable only in the a14 < 1
regime; the first table's Figure (II) row and the a14 = 1 copy of the
second table's row match no instance at all.  Second, sign tuples the
tables never list (both nonzero roots on one side of 0, or a negative
double root in the a14 <= 1 regimes) raise NoRowMatchedError instead of
being mapped to a nearest neighbour.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from qhpp.errors import CommonFactorError, NoRowMatchedError
from qhpp.poly import BiPoly, PolySystem, UniPoly, bipoly_gcd
from qhpp.roots import AlgebraicRoot, real_roots

__all__ = [
    "H3Signature",
    "TableRow",
    "TABLE1",
    "TABLE2",
    "REGIMES",
    "x111_signature",
    "x111_label",
    "x111_census",
    "x111_witness",
    "vertical_infinity",
]

THREE_ROOTS = "three-roots"
TWO_ROOTS = "two-roots"
ONE_ROOT = "one-root"

REGIMES = (">1", "<1", "=1")

_P_SUPPORT = frozenset({(1, 4), (2, 2), (3, 0)})
_Q_SUPPORT = frozenset({(0, 5), (1, 3), (2, 1)})


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class H3Signature:
    """Exact classification data for one X_111 instance.

    signs holds the sign tuple as ordered (name, value) pairs with value
    in {-1, 0, 1}; the names ("P(0)", "P(u+)", "G'(u1)", ...) are the
    quantities the row tables condition on.  u1 is the rational nonzero
    root in the two-root cases; u_minus/u_plus are the isolated nonzero
    roots in the three-root case, sorted ascending.
    """

    c12: Fraction
    c21: Fraction
    c30: Fraction
    d12: Fraction
    d21: Fraction
    delta: Fraction
    root_case: str
    subcase: str | None
    a14_regime: str
    time_reversed: bool
    signs: tuple[tuple[str, int], ...]
    u1: Fraction | None = None
    u_minus: AlgebraicRoot | None = None
    u_plus: AlgebraicRoot | None = None
    warnings: tuple[str, ...] = ()

    def sign(self, name: str) -> int:
        for key, value in self.signs:
            if key == name:
                return value
        raise KeyError(name)


def _coefficients(system: PolySystem) -> tuple[Fraction, ...]:
    extra_p = system.p.support() - _P_SUPPORT
    extra_q = system.q.support() - _Q_SUPPORT
    if extra_p or extra_q:
        bad = sorted(extra_p | extra_q)
        raise ValueError(f"not an X_111 instance: unexpected monomial exponents {bad}")
    a14 = system.p.coeff(1, 4)
    a22 = system.p.coeff(2, 2)
    a30 = system.p.coeff(3, 0)
    b05 = system.q.coeff(0, 5)
    b13 = system.q.coeff(1, 3)
    b21 = system.q.coeff(2, 1)
    if a30 == 0 or b05 == 0:
        raise ValueError("not an X_111 instance: the family requires a30*b05 != 0")
    return a14, a22, a30, b05, b13, b21


def _quartic_factor_text(a14, a22, a30, b05, b13, b21) -> str:
    p4 = BiPoly({(0, 4): a14, (1, 2): a22, (2, 0): a30})
    q4 = BiPoly({(0, 4): b05, (1, 2): b13, (2, 0): b21})
    return str(bipoly_gcd(p4, q4))


def x111_signature(system: PolySystem) -> H3Signature:
    """Exact root case and sign tuple of an X_111 instance.

    Rejects instances whose components share a factor (the proportional
    quartic case and the shared-line case both surface here even when the
    caller skipped the pipeline's own coprimality guard).
    """
    a14, a22, a30, b05, b13, b21 = _coefficients(system)
    c12 = a14 / (2 * b05)
    c21 = a22 / (2 * b05)
    c30 = a30 / (2 * b05)
    d12 = b13 / b05
    d21 = b21 / b05

    qa = 1 - c12
    qb = d12 - c21
    qc = d21 - c30
    delta = qb * qb - 4 * qa * qc

    regime_key = (a14 - b05) * b05
    a14_regime = ">1" if regime_key > 0 else ("<1" if regime_key < 0 else "=1")
    time_reversed = b05 < 0

    if qa == 0 and qb == 0 and qc == 0:
        raise CommonFactorError(_quartic_factor_text(a14, a22, a30, b05, b13, b21))

    p_hat = UniPoly((c30, c21, c12))
    p0 = _sgn(c30)
    warnings: list[str] = []
    u1: Fraction | None = None
    u_minus: AlgebraicRoot | None = None
    u_plus: AlgebraicRoot | None = None

    def _p_sign_rational(u: Fraction) -> int:
        value = p_hat.eval(u)
        if value == 0:
            raise CommonFactorError(_quartic_factor_text(a14, a22, a30, b05, b13, b21))
        return _sgn(value)

    if qc == 0:
        if qa != 0 and qb != 0:
            # 0 is a double root; the simple one is rational
            root_case, subcase = TWO_ROOTS, "u11"
            u1 = -qb / qa
            signs = [("P(u1)", _p_sign_rational(u1)), ("G'(u1)", _sgn(qa)), ("P(0)", p0)]
        elif qa == 0:
            # G(1,u) = qb*u^2: 0 is a double root and the only one
            root_case, subcase = ONE_ROOT, "C33"
            signs = [("G'(0)", 0), ("G''(0)", _sgn(qb)), ("G'''(0)", 0), ("P(0)", p0)]
        else:
            # G(1,u) = qa*u^3
            root_case, subcase = ONE_ROOT, "C33"
            signs = [("G'(0)", 0), ("G''(0)", 0), ("G'''(0)", _sgn(qa)), ("P(0)", p0)]
    elif qa == 0 and qb == 0:
        # G(1,u) = qc*u
        root_case, subcase = ONE_ROOT, "C32"
        signs = [("G'(0)", _sgn(qc)), ("G''(0)", 0), ("G'''(0)", 0), ("P(0)", p0)]
    elif qa == 0:
        root_case, subcase = TWO_ROOTS, "u12"
        u1 = -qc / qb
        signs = [("P(u1)", _p_sign_rational(u1)), ("G'(u1)", _sgn(qb * u1)), ("P(0)", p0)]
    elif delta > 0:
        root_case, subcase = THREE_ROOTS, None
        roots = real_roots(UniPoly((qc, qb, qa)))
        u_minus, u_plus = roots[0], roots[1]
        g_prime = UniPoly((qc, 2 * qb, 3 * qa))
        sp_minus = u_minus.sign_of(p_hat)
        sp_plus = u_plus.sign_of(p_hat)
        if sp_minus == 0 or sp_plus == 0:
            raise CommonFactorError(_quartic_factor_text(a14, a22, a30, b05, b13, b21))
        signs = [
            ("P(u+)", sp_plus),
            ("P(u-)", sp_minus),
            ("G'(u+)", u_plus.sign_of(g_prime)),
            ("G'(u-)", u_minus.sign_of(g_prime)),
            ("P(0)", p0),
        ]
        u_axis = UniPoly((0, 1))
        if not (u_minus.sign_of(u_axis) < 0 < u_plus.sign_of(u_axis)):
            warnings.append(
                "both nonzero characteristic roots lie on one side of 0; "
                "the row tables assume one on each side"
            )
    elif delta == 0:
        root_case, subcase = TWO_ROOTS, "u13"
        if qb == 0:
            raise AssertionError("delta = 0 with qb = 0 forces qc = 0")
        u1 = -qb / (2 * qa)
        signs = [("P(u1)", _p_sign_rational(u1)), ("G''(u1)", _sgn(qa * u1)), ("P(0)", p0)]
    else:
        root_case, subcase = ONE_ROOT, "C31"
        signs = [("G'(0)", _sgn(qc)), ("G''(0)", _sgn(qb)), ("G'''(0)", _sgn(qa)), ("P(0)", p0)]

    return H3Signature(
        c12=c12,
        c21=c21,
        c30=c30,
        d12=d12,
        d21=d21,
        delta=delta,
        root_case=root_case,
        subcase=subcase,
        a14_regime=a14_regime,
        time_reversed=time_reversed,
        signs=tuple(signs),
        u1=u1,
        u_minus=u_minus,
        u_plus=u_plus,
        warnings=tuple(warnings),
    )


def vertical_infinity(sig: H3Signature) -> str:
    """Type of the image's singularity at the upper end of the y-axis.

    Stated for the normalized time direction; saddle/node swap stability
    (but not type) when sig.time_reversed.
    """
    if sig.c12 > 1:
        return "saddle"
    if sig.c12 < 1:
        return "stable-node"
    if sig.d12 != sig.c21:
        return "saddle-node"
    if sig.d21 < sig.c30:
        return "saddle"
    if sig.d21 > sig.c30:
        return "stable-node"
    raise ValueError("degenerate signature: components share a factor")


# ---------------------------------------------------------------------------
# row tables


@dataclass(frozen=True)
class TableRow:
    """One alternative of one figure row.

    conditions pair a quantity name with a required sign (+1/-1), the
    string "nonzero", or a product of two stored signs when the name
    contains "*".
    """

    figure: str
    root_case: str
    subcases: tuple[str, ...]
    conditions: tuple[tuple[str, object], ...]


def _row(figure: str, root_case: str, subcases: tuple[str, ...], *conditions) -> TableRow:
    return TableRow(figure, root_case, subcases, tuple(conditions))


_NZ = "nonzero"

TABLE1: tuple[TableRow, ...] = (
    _row("(I)", THREE_ROOTS, (), ("P(u+)", 1), ("P(u-)", 1), ("G'(u+)*G'(u-)", 1), ("P(0)", 1)),
    _row("(I)", TWO_ROOTS, ("u11",), ("P(u1)", 1), ("G'(u1)", _NZ), ("P(0)", 1)),
    _row("(I)", TWO_ROOTS, ("u12",), ("P(u1)", 1), ("G'(u1)", _NZ), ("P(0)", 1)),
    _row("(I)", TWO_ROOTS, ("u13",), ("P(u1)", 1), ("G''(u1)", _NZ), ("P(0)", 1)),
    _row("(I)", ONE_ROOT, ("C31", "C32"), ("G'(0)", _NZ), ("P(0)", 1)),
    _row("(I)", ONE_ROOT, ("C33",), ("G'''(0)", _NZ), ("P(0)", 1)),
    _row("(I)", ONE_ROOT, ("C33",), ("G''(0)", _NZ), ("P(0)", 1)),
    _row("(II)", THREE_ROOTS, (), ("P(u+)", -1), ("P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", 1)),
    _row("(III.1)", THREE_ROOTS, (), ("P(u+)", 1), ("P(u-)", 1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", -1)),
    _row("(III.2)", THREE_ROOTS, (), ("P(u+)*P(u-)", -1), ("G'(u+)", -1), ("G'(u-)", -1), ("P(0)", 1)),
    _row("(III.2)", TWO_ROOTS, ("u11", "u12"), ("P(u1)", -1), ("G'(u1)", -1), ("P(0)", 1)),
    _row("(III.3)", THREE_ROOTS, (), ("P(u+)", -1), ("P(u-)", -1), ("G'(u+)", -1), ("G'(u-)", -1), ("P(0)", -1)),
    _row("(IV.1)", THREE_ROOTS, (), ("P(u+)", 1), ("P(u-)", 1), ("G'(u+)", -1), ("G'(u-)", -1), ("P(0)", -1)),
    _row("(IV.2)", THREE_ROOTS, (), ("P(u+)*P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", 1)),
    _row("(IV.2)", TWO_ROOTS, ("u11",), ("P(u1)", -1), ("G'(u1)", 1), ("P(0)", 1)),
    _row("(IV.3)", THREE_ROOTS, (), ("P(u+)", -1), ("P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", -1)),
    _row("(V.1)", THREE_ROOTS, (), ("P(u+)*P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", -1)),
    _row("(V.2)", THREE_ROOTS, (), ("P(u+)*P(u-)", -1), ("G'(u+)", -1), ("G'(u-)", -1), ("P(0)", -1)),
    _row("(VI.1)", TWO_ROOTS, ("u11",), ("P(u1)", 1), ("G'(u1)", 1), ("P(0)", -1)),
    _row("(VI.2)", TWO_ROOTS, ("u12",), ("P(u1)", -1), ("G'(u1)", -1), ("P(0)", -1)),
    _row("(VI.3)", TWO_ROOTS, ("u13",), ("P(u1)", -1), ("G''(u1)", 1), ("P(0)", 1)),
    _row("(VI.4)", TWO_ROOTS, ("u13",), ("P(u1)", -1), ("G''(u1)", -1), ("P(0)", 1)),
    _row("(VI.5)", TWO_ROOTS, ("u11",), ("P(u1)", 1), ("G'(u1)", -1), ("P(0)", -1)),
    _row("(VI.6)", TWO_ROOTS, ("u12",), ("P(u1)", -1), ("G'(u1)", 1), ("P(0)", -1)),
    _row("(VII.1)", TWO_ROOTS, ("u12",), ("P(u1)", 1), ("G'(u1)", -1), ("P(0)", -1)),
    _row("(VII.1)", TWO_ROOTS, ("u13",), ("P(u1)", 1), ("G''(u1)", 1), ("P(0)", -1)),
    _row("(VII.2)", TWO_ROOTS, ("u12",), ("P(u1)", -1), ("G'(u1)", 1), ("P(0)", 1)),
    _row("(VII.3)", TWO_ROOTS, ("u11",), ("P(u1)", -1), ("G'(u1)", 1), ("P(0)", -1)),
    _row("(VII.3)", TWO_ROOTS, ("u13",), ("P(u1)", -1), ("G''(u1)", 1), ("P(0)", -1)),
    _row("(VIII.1)", TWO_ROOTS, ("u12",), ("P(u1)", 1), ("G'(u1)", 1), ("P(0)", -1)),
    _row("(VIII.1)", TWO_ROOTS, ("u13",), ("P(u1)", 1), ("G''(u1)", -1), ("P(0)", -1)),
    _row("(VIII.2)", TWO_ROOTS, ("u11",), ("P(u1)", -1), ("G'(u1)", -1), ("P(0)", -1)),
    _row("(VIII.2)", TWO_ROOTS, ("u13",), ("P(u1)", -1), ("G''(u1)", -1), ("P(0)", -1)),
    _row("(IX)", ONE_ROOT, ("C31", "C32"), ("G'(0)", 1), ("P(0)", -1)),
    _row("(IX)", ONE_ROOT, ("C33",), ("G'''(0)", 1), ("P(0)", -1)),
    _row("(X)", ONE_ROOT, ("C31", "C32"), ("G'(0)", -1), ("P(0)", -1)),
    _row("(X)", ONE_ROOT, ("C33",), ("G'''(0)", -1), ("P(0)", -1)),
    _row("(XI)", ONE_ROOT, ("C33",), ("G''(0)", _NZ), ("P(0)", -1)),
)

TABLE2: tuple[TableRow, ...] = (
    _row("(I)", THREE_ROOTS, (), ("P(u+)", 1), ("P(u-)", 1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", 1)),
    _row("(II)", THREE_ROOTS, (), ("P(u+)", -1), ("P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", 1)),
    _row("(III)", THREE_ROOTS, (), ("P(u+)", 1), ("P(u-)", 1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", -1)),
    _row("(IV.1)", THREE_ROOTS, (), ("P(u+)", -1), ("P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", -1)),
    _row("(IV.2)", THREE_ROOTS, (), ("P(u+)*P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", 1)),
    _row("(V)", THREE_ROOTS, (), ("P(u+)*P(u-)", -1), ("G'(u+)", 1), ("G'(u-)", 1), ("P(0)", -1)),
    _row("(VI)", TWO_ROOTS, ("u11",), ("P(u1)", 1), ("G'(u1)", 1), ("P(0)", 1)),
    _row("(VI)", TWO_ROOTS, ("u13",), ("P(u1)", 1), ("G''(u1)", 1), ("P(0)", 1)),
    _row("(VII.1)", TWO_ROOTS, ("u11",), ("P(u1)", 1), ("G'(u1)", 1), ("P(0)", -1)),
    _row("(VII.2)", TWO_ROOTS, ("u13",), ("P(u1)", -1), ("G''(u1)", 1), ("P(0)", 1)),
    _row("(VIII.1)", TWO_ROOTS, ("u11",), ("P(u1)", -1), ("G'(u1)", 1), ("P(0)", 1)),
    _row("(VIII.2)", TWO_ROOTS, ("u11",), ("P(u1)", -1), ("G'(u1)", 1), ("P(0)", -1)),
    _row("(VIII.2)", TWO_ROOTS, ("u13",), ("P(u1)", -1), ("G''(u1)", 1), ("P(0)", -1)),
    _row("(VIII.3)", TWO_ROOTS, ("u13",), ("P(u1)", 1), ("G''(u1)", 1), ("P(0)", -1)),
    _row("(IX)", ONE_ROOT, ("C33",), ("G'''(0)", 1), ("P(0)", -1)),
    _row("(IX)", ONE_ROOT, ("C31",), ("G'(0)", 1), ("P(0)", -1)),
    _row("(X)", ONE_ROOT, ("C31",), ("G'(0)", 1), ("P(0)", 1)),
    _row("(X)", ONE_ROOT, ("C33",), ("G'''(0)", 1), ("P(0)", 1)),
)


def _condition_value(sig: H3Signature, name: str) -> int:
    if "*" in name:
        left, right = name.split("*")
        return sig.sign(left) * sig.sign(right)
    return sig.sign(name)


def _row_matches(sig: H3Signature, row: TableRow) -> bool:
    if row.root_case != sig.root_case:
        return False
    if row.subcases and sig.subcase not in row.subcases:
        return False
    for name, want in row.conditions:
        value = _condition_value(sig, name)
        if want == _NZ:
            if value == 0:
                return False
        elif value != want:
            return False
    return True


def x111_label(sig: H3Signature) -> str:
    """Figure label for a signature, e.g. "Table 1 / Figure (VIII.2)".

    The a14 = 1 regime reuses the second table's rows; the portrait code
    distinguishes it by its equator marker, not by the label.
    """
    table_number = 1 if sig.a14_regime == ">1" else 2
    table = TABLE1 if table_number == 1 else TABLE2
    for row in table:
        if _row_matches(sig, row):
            return f"Table {table_number} / Figure {row.figure}"
    raise NoRowMatchedError(
        f"no row in table {table_number} for {sig.root_case}"
        + (f"/{sig.subcase}" if sig.subcase else "")
        + f" with signs {dict(sig.signs)}"
        + (f" ({'; '.join(sig.warnings)})" if sig.warnings else "")
    )


def x111_census() -> dict[str, int]:
    """Distinct figure labels per regime, straight from the row tables."""
    table1 = len({row.figure for row in TABLE1})
    table2 = len({row.figure for row in TABLE2})
    return {">1": table1, "<1": table2, "=1": table2, "total": table1 + 2 * table2}


# ---------------------------------------------------------------------------
# witness instances
#
# One hand-picked (c12, c21, c30, d12, d21) tuple per (regime, figure),
# realized as a quintic with b05 = 1 (so a14 = 2*c12 and the regime is
# decided by c12 vs 1/2).  The two None entries are the unreachable
# Figure (II) rows discussed in the module docstring.

_F = Fraction

_WITNESSES: dict[tuple[str, str], tuple[Fraction, ...] | None] = {
    (">1", "(I)"): (_F(3, 4), _F(0), _F(1), _F(0), _F(3, 4)),
    (">1", "(II)"): None,
    (">1", "(III.1)"): (_F(3, 4), _F(0), _F(-1), _F(0), _F(-5)),
    (">1", "(III.2)"): (_F(3, 2), _F(-3), _F(1), _F(-3), _F(3, 2)),
    (">1", "(III.3)"): (_F(3, 2), _F(0), _F(-1), _F(0), _F(-7, 8)),
    (">1", "(IV.1)"): (_F(3, 2), _F(0), _F(-1), _F(0), _F(7)),
    (">1", "(IV.2)"): (_F(3, 4), _F(-3), _F(1), _F(-3), _F(3, 4)),
    (">1", "(IV.3)"): (_F(3, 4), _F(0), _F(-1), _F(0), _F(-17, 16)),
    (">1", "(V.1)"): (_F(3, 4), _F(-3), _F(-1), _F(-3), _F(-5, 4)),
    (">1", "(V.2)"): (_F(3, 2), _F(-4), _F(-1), _F(-4), _F(-1, 2)),
    (">1", "(VI.1)"): (_F(3, 4), _F(0), _F(-1), _F(-1), _F(-1)),
    (">1", "(VI.2)"): (_F(1), _F(-1), _F(-2), _F(-2), _F(-1)),
    (">1", "(VI.3)"): (_F(3, 4), _F(-3), _F(1), _F(-7, 2), _F(5, 4)),
    (">1", "(VI.4)"): (_F(3, 4), _F(3), _F(1), _F(7, 2), _F(5, 4)),
    (">1", "(VI.5)"): (_F(3, 2), _F(0), _F(-1), _F(2), _F(-1)),
    (">1", "(VI.6)"): (_F(1), _F(-1), _F(-2), _F(0), _F(-3)),
    (">1", "(VII.1)"): (_F(1), _F(1), _F(-1), _F(0), _F(0)),
    (">1", "(VII.2)"): (_F(1), _F(-3), _F(1), _F(-2), _F(0)),
    (">1", "(VII.3)"): (_F(3, 4), _F(-3), _F(-1), _F(-13, 4), _F(-1)),
    (">1", "(VIII.1)"): (_F(1), _F(1), _F(-1), _F(2), _F(-2)),
    (">1", "(VIII.2)"): (_F(3, 2), _F(-4), _F(-1), _F(-7, 2), _F(-1)),
    (">1", "(IX)"): (_F(3, 4), _F(0), _F(-1), _F(0), _F(0)),
    (">1", "(X)"): (_F(3, 2), _F(0), _F(-1), _F(0), _F(-2)),
    (">1", "(XI)"): (_F(1), _F(0), _F(-1), _F(1), _F(-1)),
    ("<1", "(I)"): (_F(1, 4), _F(0), _F(1), _F(0), _F(1, 4)),
    ("<1", "(II)"): (_F(-1), _F(0), _F(1), _F(0), _F(-7)),
    ("<1", "(III)"): (_F(1, 4), _F(0), _F(-1), _F(0), _F(-13)),
    ("<1", "(IV.1)"): (_F(1, 4), _F(0), _F(-1), _F(0), _F(-19, 16)),
    ("<1", "(IV.2)"): (_F(1, 4), _F(2), _F(1), _F(2), _F(1, 4)),
    ("<1", "(V)"): (_F(1, 4), _F(2), _F(-1), _F(2), _F(-7, 4)),
    ("<1", "(VI)"): (_F(1, 4), _F(0), _F(1), _F(-3, 4), _F(1)),
    ("<1", "(VII.1)"): (_F(1, 4), _F(0), _F(-1), _F(-3), _F(-1)),
    ("<1", "(VII.2)"): (_F(0), _F(-2), _F(1), _F(-4), _F(2)),
    ("<1", "(VIII.1)"): (_F(1, 4), _F(-2), _F(1), _F(-11, 4), _F(1)),
    ("<1", "(VIII.2)"): (_F(1, 4), _F(0), _F(-1), _F(-3, 4), _F(-1)),
    ("<1", "(VIII.3)"): (_F(0), _F(2), _F(-1), _F(0), _F(0)),
    ("<1", "(IX)"): (_F(1, 4), _F(0), _F(-1), _F(0), _F(-1)),
    ("<1", "(X)"): (_F(1, 4), _F(0), _F(1), _F(0), _F(2)),
    ("=1", "(I)"): (_F(1, 2), _F(0), _F(1), _F(0), _F(1, 2)),
    ("=1", "(II)"): None,
    ("=1", "(III)"): (_F(1, 2), _F(0), _F(-1), _F(0), _F(-9)),
    ("=1", "(IV.1)"): (_F(1, 2), _F(0), _F(-1), _F(0), _F(-9, 8)),
    ("=1", "(IV.2)"): (_F(1, 2), _F(2), _F(1), _F(2), _F(1, 2)),
    ("=1", "(V)"): (_F(1, 2), _F(2), _F(-1), _F(2), _F(-3, 2)),
    ("=1", "(VI)"): (_F(1, 2), _F(0), _F(1), _F(-1, 2), _F(1)),
    ("=1", "(VII.1)"): (_F(1, 2), _F(0), _F(-1), _F(-2), _F(-1)),
    ("=1", "(VII.2)"): (_F(1, 2), _F(-2), _F(1), _F(-3), _F(3, 2)),
    ("=1", "(VIII.1)"): (_F(1, 2), _F(-2), _F(1), _F(-5, 2), _F(1)),
    ("=1", "(VIII.2)"): (_F(1, 2), _F(0), _F(-1), _F(-1, 2), _F(-1)),
    ("=1", "(VIII.3)"): (_F(1, 2), _F(2), _F(-1), _F(1), _F(-1, 2)),
    ("=1", "(IX)"): (_F(1, 2), _F(0), _F(-1), _F(0), _F(-1)),
    ("=1", "(X)"): (_F(1, 2), _F(0), _F(1), _F(0), _F(2)),
}


def x111_witness(regime: str, figure: str) -> PolySystem | None:
    """A rational X_111 instance classified with the given figure label.

    Returns None for the unreachable rows.  Raises KeyError when the
    (regime, figure) pair names no row at all.
    """
    params = _WITNESSES[(regime, figure)]
    if params is None:
        return None
    c12, c21, c30, d12, d21 = params
    p = BiPoly({(1, 4): 2 * c12, (2, 2): 2 * c21, (3, 0): 2 * c30})
    q = BiPoly({(0, 5): Fraction(1), (1, 3): d12, (2, 1): d21})
    return PolySystem(p, q)
