"""Case analysis for the quintic families with quadratic homogeneous image.

Three catalog families reduce to a quadratic image: X_011
(x' = a05*y^5 + a13*x*y^3 + a21*x^2*y, y' = b04*y^4 + b12*x*y^2 + b20*x^2,
a05*b20 != 0) and the two smaller families X_113
(x' = a14*x*y^4 + a40*x^4, y' = b05*y^5 + b31*x^3*y) and X_131
(x' = a14*x*y^4 + a20*x^2, y' = b05*y^5 + b11*x*y), whose images are the
a05 = b20 = 0 shapes of the same quadratic.  Their global portraits
group by the number of distinct real characteristic directions of the
image, i.e. distinct real linear factors of G2 = x*Q2 - y*P2: three
directions give case (i) with 3 global portraits, two give case (ii)
with 2, and one gives case (iii) with 2.

The published infinity analysis runs on a surrogate, not on the original
quintic: shear the largest characteristic direction u0 onto the x-axis,
so the image reads

    x1' = alpha11*x1^2 + alpha12*x1*y1 + alpha22*y1^2,
    y1' = beta12*x1*y1 + beta22*y1^2,

then pull that back through the weight-(2, 1) substitution to the
quartic x' = alpha11*x^2 + alpha12*x*y^2 + alpha22*y^4,
y' = (beta12*x*y + beta22*y^3)/2 and compactify THAT system.  The shear
leaves alpha22 equal to the image's y^2 coefficient, so alpha22 != 0
exactly for X_011 members; their surrogate has a single infinite
singularity at the end of the x-axis.  For X_113 and X_131 (alpha22 = 0)
the surrogate's equator consists of singularities, and after removing
the common factor z the point at the end of the y-axis is a saddle when
(2*alpha12 - beta22)*beta22 > 0, a node when it is negative, and absent
(no equator singularity survives) when 2*alpha12 = beta22.

The surrogate has different weights than the original quintic, so its
equator is a genuinely different compactification: an X_113 instance
with a14 != b05 has a plain invariant equator on its own sphere even
though its surrogate equator is all singular.  H2Report therefore keeps
the surrogate verdicts separate from the portrait of the original,
which is computed by the generic pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from qhpp.blowup import char_polys, direction_reports
from qhpp.errors import CommonFactorError, InternalInvariantError
from qhpp.poly import BiPoly, PolySystem, UniPoly, bipoly_gcd
from qhpp.portrait import PortraitCode, assemble_portrait
from qhpp.roots import AlgebraicRoot, real_roots
from qhpp.transform import homogenize_min
from qhpp.weights import WeightVector, swap_system, weight_vectors

__all__ = ["H2Report", "h2_case", "CASE_CODE_COUNTS"]

CASE_CODE_COUNTS = {"(i)": 3, "(ii)": 2, "(iii)": 2}


@dataclass(frozen=True)
class H2Report:
    """Case label, surrogate equator verdicts, and the instance's portrait.

    direction_count counts distinct real characteristic directions of
    the image (the vertical one included); u0 is the direction sheared
    onto the x-axis (the largest real root of G2(1, u)).  i1_type is the
    published surrogate verdict for the point at the end of the y-axis
    and only applies when alpha22 = 0; surrogate_marker carries the
    all-singular-equator flag of the surrogate in that branch.  portrait
    is the original system's global code from the generic pipeline and
    keeps its own infinity ring.
    """

    case: str
    direction_count: int
    published_code_count: int
    u0: AlgebraicRoot
    alpha22: Fraction
    i1_test_sign: int | None
    i1_type: str | None
    surrogate_marker: str | None
    portrait: PortraitCode


def _image_of(system: PolySystem):
    fam = weight_vectors(system)
    w = fam.minimal
    if w.s1 < w.s2:
        worked = swap_system(system)
        w = WeightVector(w.s2, w.s1, w.d, w.minimal)
        h, record = homogenize_min(worked, w, swap_xy=True)
    else:
        h, record = homogenize_min(system, w)
    return h, record


def h2_case(system: PolySystem) -> H2Report:
    """Classify a quadratic-image quintic into case (i), (ii) or (iii)."""
    h, record = _image_of(system)
    image = h.sys
    if image.degree() != 2:
        raise ValueError(
            f"image degree {image.degree()} != 2: not a quadratic-image instance"
        )

    shared = bipoly_gcd(image.p, image.q)
    if shared.degree() > 0:
        raise CommonFactorError(str(shared))

    x = BiPoly.monomial(1, 0)
    y = BiPoly.monomial(0, 1)
    g2 = x * image.q - y * image.p
    ghat = g2.eval_x1()
    roots = real_roots(ghat)
    m_vert, _ = g2.eval_y1().shift_down()
    direction_count = len(roots) + (1 if m_vert >= 1 else 0)
    if direction_count == 3:
        case = "(i)"
    elif direction_count == 2:
        case = "(ii)"
    elif direction_count == 1:
        case = "(iii)"
    else:
        raise InternalInvariantError(f"{direction_count} directions from a cubic form")

    if not roots:
        # would need a rotation instead of a shear; no catalog instance
        # reaches this (their images always keep a finite direction)
        raise InternalInvariantError("all characteristic directions are vertical")
    u0 = roots[-1]

    p02 = image.p.coeff(0, 2)
    p11 = image.p.coeff(1, 1)
    q02 = image.q.coeff(0, 2)
    alpha22 = p02

    i1_test_sign: int | None = None
    i1_type: str | None = None
    surrogate_marker: str | None = None
    if alpha22 == 0:
        surrogate_marker = "infinity fulfils singularities"
        # with p02 = 0 both factors of the test are shear-invariant rationals
        beta22 = q02
        lead = 2 * p11 - q02
        product = lead * beta22
        i1_test_sign = (product > 0) - (product < 0)
        if i1_test_sign > 0:
            i1_type = "saddle"
        elif i1_test_sign < 0:
            i1_type = "node"

    reports = direction_reports(char_polys(image))
    portrait = assemble_portrait(h, reports, record, original=system)

    return H2Report(
        case=case,
        direction_count=direction_count,
        published_code_count=CASE_CODE_COUNTS[case],
        u0=u0,
        alpha22=alpha22,
        i1_test_sign=i1_test_sign,
        i1_type=i1_type,
        surrogate_marker=surrogate_marker,
        portrait=portrait,
    )
