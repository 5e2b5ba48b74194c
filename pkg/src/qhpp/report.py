"""Full-pipeline analysis with a stable JSON rendering.

``analyze`` strings the exact modules together: coprimality gate, weight
vectors, block structure, power-substitution image, per-direction blow-up
reports, global portrait code, and the family-specific extras (row-table
label for the 3-root quintic family, case split for the quadratic-image
families).  ``to_json`` renders the result with sorted keys and exact
rationals as strings, so re-running on the same input is byte-identical.

Algebraic numbers are serialized as their defining polynomial plus an
isolating rational interval; a float approximation rides along but never
replaces the exact data.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .blowup import (
    CenterReport,
    CharPolys,
    DirectionReport,
    center_test,
    char_polys,
    direction_reports,
)
from .errors import CommonFactorError, NoRowMatchedError
from .h2 import H2Report, h2_case
from .oracle import SectorProbe, probe_agrees, sector_probe
from .poly import BiPoly, PolySystem, Rat, coprime_check, format_poly
from .portrait import (
    InfinityEntry,
    PortraitCode,
    RayCode,
    SectorCode,
    assemble_portrait,
)
from .roots import AlgebraicRoot
from .transform import (
    HomogSystem,
    SymmetryInfo,
    TransformRecord,
    homogenize_lcm,
    homogenize_min,
    verify_symmetry,
)
from .weights import (
    QhStructure,
    WeightFamily,
    WeightVector,
    decompose,
    swap_system,
    weight_vectors,
)
from .x111 import H3Signature, vertical_infinity, x111_label, x111_signature

__all__ = [
    "AnalysisReport",
    "OracleCheck",
    "OracleSummary",
    "X111Block",
    "analyze",
    "oracle_summary",
    "to_json",
    "report_dict",
]

SCHEMA = "qhpp-analysis/1"


@dataclass(frozen=True)
class X111Block:
    signature: H3Signature
    label: str | None
    vertical: str


@dataclass(frozen=True)
class OracleCheck:
    direction_label: str
    angle: float
    local_type: str
    probe: SectorProbe
    agrees: bool | None
    retried: bool


@dataclass(frozen=True)
class OracleSummary:
    tol: float
    radius: float
    checks: tuple[OracleCheck, ...]

    @property
    def agreements(self) -> int:
        return sum(1 for c in self.checks if c.agrees is True)

    @property
    def disagreements(self) -> int:
        return sum(1 for c in self.checks if c.agrees is False)

    @property
    def inconclusive(self) -> int:
        return sum(1 for c in self.checks if c.agrees is None)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything ``analyze`` established about one system."""

    system: PolySystem
    weights: WeightFamily
    structure: QhStructure | None
    homog: HomogSystem
    record: TransformRecord
    homog_lcm: HomogSystem
    record_lcm: TransformRecord
    symmetry_verified: bool
    directions: tuple[DirectionReport, ...]
    center: CenterReport | None
    portrait: PortraitCode
    x111: X111Block | None
    h2: H2Report | None
    oracle: OracleSummary | None
    warnings: tuple[str, ...]


def _image_pair(system: PolySystem, w: WeightVector):
    if w.s1 < w.s2:
        worked = swap_system(system)
        wm = WeightVector(w.s2, w.s1, w.d, w.minimal)
        return homogenize_min(worked, wm, swap_xy=True), homogenize_lcm(
            worked, wm, swap_xy=True
        )
    return homogenize_min(system, w), homogenize_lcm(system, w)


def _direction_angle(report: DirectionReport) -> float:
    if report.direction is None:
        return math.pi / 2
    return math.atan(report.direction.approx())


def oracle_summary(
    image: PolySystem,
    reports: list[DirectionReport] | tuple[DirectionReport, ...],
    tol: float = 1e-10,
    radius: float = 0.05,
) -> OracleSummary:
    """Probe every characteristic direction of a homogeneous system and
    compare with the exact per-direction classification.

    The fan cone shrinks with the angular gap to the neighbouring
    directions; inconclusive probes are retried once at radius/5.
    """
    angles = sorted(_direction_angle(r) for r in reports)
    checks = []
    for rep in reports:
        angle = _direction_angle(rep)
        cone = 0.1
        for other in angles:
            gap = abs(other - angle)
            gap = min(gap, math.pi - gap)  # directions are pi-periodic
            if gap > 1e-12:
                cone = min(cone, 0.4 * gap)
        cone = max(cone, 1e-3)
        probe = sector_probe(image, angle, radius=radius, tol=tol, cone=cone)
        agrees = probe_agrees(probe, rep)
        retried = False
        if agrees is None:
            probe = sector_probe(image, angle, radius=radius / 5, tol=tol, cone=cone)
            agrees = probe_agrees(probe, rep)
            retried = True
        label = "vertical" if rep.direction is None else _root_text(rep.direction)
        checks.append(OracleCheck(label, angle, rep.local_type_blowup, probe, agrees, retried))
    return OracleSummary(tol, radius, tuple(checks))


def analyze(
    system: PolySystem,
    with_oracle: bool = False,
    tol: float = 1e-10,
) -> AnalysisReport:
    """Run the whole exact pipeline on one parsed system.

    Raises CommonFactorError / NotQuasiHomogeneousError for inputs outside
    the supported class; everything downstream of those gates is total, and
    discrepancies (an unmatched row-table tuple, a missing case analysis)
    land in warnings instead of raising.
    """
    ok, factor = coprime_check(system)
    if not ok:
        raise CommonFactorError(str(factor))
    fam = weight_vectors(system)
    w = fam.minimal
    warnings: list[str] = []

    structure = None
    if w.s1 != w.s2:
        structure = decompose(system, w)

    (h, record), (h_lcm, record_lcm) = _image_pair(system, w)
    sym_ok = verify_symmetry(system, record.symmetry)
    if not sym_ok:
        warnings.append("weight-parity symmetry failed to verify on the input")

    x = BiPoly.monomial(1, 0)
    y = BiPoly.monomial(0, 1)
    g_zero = (x * h.sys.q - y * h.sys.p).is_zero
    cp: CharPolys | None = None
    reports: list[DirectionReport] = []
    if not g_zero:
        cp = char_polys(h.sys)
        reports = direction_reports(cp)

    center = None
    if cp is not None and not reports:
        center = center_test(h.sys, cp)

    portrait = assemble_portrait(h, reports, record, original=system)

    x111_block = None
    if structure is not None and structure.family_name() == "X_111":
        source = swap_system(system) if structure.swapped else system
        try:
            sig = x111_signature(source)
        except ValueError as exc:
            warnings.append(f"three-root-family tables not applicable: {exc}")
        else:
            warnings.extend(sig.warnings)
            label = None
            try:
                label = x111_label(sig)
            except NoRowMatchedError as exc:
                warnings.append(f"no row matched: {exc}")
            x111_block = X111Block(sig, label, vertical_infinity(sig))
            if label is not None:
                portrait = replace(portrait, figure_label=label)

    h2_block = None
    if structure is not None and h.degree == 2:
        try:
            h2_block = h2_case(system)
        except Exception as exc:  # noqa: BLE001 - case split is best-effort extra
            warnings.append(f"quadratic-image case analysis unavailable: {exc}")

    oracle = None
    if with_oracle:
        oracle = oracle_summary(h.sys, reports, tol=tol)
        if oracle.disagreements:
            warnings.append(
                f"oracle disagreed on {oracle.disagreements} direction(s); "
                "the exact classification stands, review advised"
            )

    warnings.extend(portrait.warnings)

    return AnalysisReport(
        system=system,
        weights=fam,
        structure=structure,
        homog=h,
        record=record,
        homog_lcm=h_lcm,
        record_lcm=record_lcm,
        symmetry_verified=sym_ok,
        directions=tuple(reports),
        center=center,
        portrait=portrait,
        x111=x111_block,
        h2=h2_block,
        oracle=oracle,
        warnings=tuple(dict.fromkeys(warnings)),
    )


# ---------------------------------------------------------------------------
# JSON rendering


def _rat(v: Rat) -> str:
    return str(Fraction(v))


def _root_text(root: AlgebraicRoot) -> str:
    if root.rational is not None:
        return _rat(root.rational)
    return f"root of {root.poly} in ({_rat(root.lo)}, {_rat(root.hi)})"


def _root_dict(root: AlgebraicRoot | None):
    if root is None:
        return None
    return {
        "polynomial": str(root.poly),
        "interval": [_rat(root.lo), _rat(root.hi)],
        "rational": _rat(root.rational) if root.rational is not None else None,
        "multiplicity": root.multiplicity,
        "approx": root.approx(),
    }


def _system_dict(system: PolySystem):
    return {"dx/dt": format_poly(system.p), "dy/dt": format_poly(system.q)}


def _weight_dict(w: WeightVector):
    return {"s1": w.s1, "s2": w.s2, "d": w.d, "minimal": w.minimal}


def _symmetry_dict(info: SymmetryInfo | None):
    if info is None:
        return None
    return {"kind": info.kind, "time_direction": info.time_direction}


def _record_dict(record: TransformRecord):
    return {
        "beta": record.beta,
        "exponent_x": _rat(record.expo_x),
        "exponent_y": _rat(record.expo_y),
        "time_x": _rat(record.time_x),
        "time_y": _rat(record.time_y),
        "chart": record.chart,
        "swap_xy": record.swap_xy,
        "symmetry": _symmetry_dict(record.symmetry),
    }


def _homog_dict(h: HomogSystem):
    return {
        "system": _system_dict(h.sys),
        "degree": h.degree,
        "target_class": h.target_class,
    }


def _structure_dict(qh: QhStructure | None):
    if qh is None:
        return None
    return {
        "family": qh.family_name(),
        "p": qh.p,
        "varsigma": qh.varsigma,
        "kappa": qh.kappa,
        "s": qh.s,
        "swapped": qh.swapped,
        "degree_one": qh.degree_one,
        "blocks": [
            {"degree": deg, **_system_dict(block)} for deg, block in qh.parts
        ],
    }


def _direction_dict(rep: DirectionReport):
    return {
        "direction": _root_dict(rep.direction),
        "vertical": rep.direction is None,
        "multiplicity": rep.multiplicity,
        "local_type_blowup": rep.local_type_blowup,
        "orbit_count_origin": rep.orbit_count_origin,
        "flow_sign": rep.flow_sign,
        "infinity_type": rep.infinity_type,
        "infinity_stability": rep.infinity_stability,
        "radial_sign": rep.radial_sign,
        "deriv_sign": rep.deriv_sign,
    }


def _ray_dict(ray: RayCode):
    return {
        "kind": ray.kind,
        "label": ray.label,
        "half": ray.half,
        "flow": ray.flow,
        "orbit_count": ray.orbit_count,
        "axis": ray.axis,
        "root": _root_dict(ray.root),
    }


def _sector_dict(sec: SectorCode):
    return {"kind": sec.kind, "sweep": sec.sweep}


def _infinity_dict(entry: InfinityEntry):
    return {
        "label": entry.label,
        "kind": entry.kind,
        "stability": entry.stability,
        "multiplicity": entry.multiplicity,
    }


def _portrait_dict(code: PortraitCode):
    return {
        "origin_kind": code.origin_kind,
        "rays": [_ray_dict(r) for r in code.rays],
        "sectors": [_sector_dict(s) for s in code.sectors],
        "sector_counts": code.sector_counts(),
        "index": code.index,
        "infinity_ring": [_infinity_dict(e) for e in code.infinity_ring],
        "infinity_marker": code.infinity_marker,
        "symmetry": _symmetry_dict(code.symmetry),
        "figure_label": code.figure_label,
        "canonical": code.canonical(),
        "warnings": list(code.warnings),
    }


def _center_dict(rep: CenterReport | None):
    if rep is None:
        return None
    return {
        "verdict": rep.verdict,
        "method": rep.method,
        "integral_sign": rep.integral_sign,
        "integral_value": rep.integral_value,
        "exact_terms": [
            {"coefficient": _rat(c), "radicand": _rat(d)} for c, d in rep.exact_terms
        ]
        if rep.exact_terms is not None
        else None,
    }


def _x111_dict(block: X111Block | None):
    if block is None:
        return None
    sig = block.signature
    return {
        "label": block.label,
        "a14_regime": sig.a14_regime,
        "root_case": sig.root_case,
        "subcase": sig.subcase,
        "time_reversed": sig.time_reversed,
        "delta": _rat(sig.delta),
        "reduced_coefficients": {
            "c12": _rat(sig.c12),
            "c21": _rat(sig.c21),
            "c30": _rat(sig.c30),
            "d12": _rat(sig.d12),
            "d21": _rat(sig.d21),
        },
        "signs": [{"name": name, "sign": value} for name, value in sig.signs],
        "u1": _rat(sig.u1) if sig.u1 is not None else None,
        "u_minus": _root_dict(sig.u_minus),
        "u_plus": _root_dict(sig.u_plus),
        "vertical_infinity": block.vertical,
    }


def _h2_dict(block: H2Report | None):
    if block is None:
        return None
    return {
        "case": block.case,
        "direction_count": block.direction_count,
        "published_code_count": block.published_code_count,
        "u0": _root_dict(block.u0),
        "alpha22": _rat(block.alpha22),
        "i1_test_sign": block.i1_test_sign,
        "i1_type": block.i1_type,
        "surrogate_marker": block.surrogate_marker,
    }


def _probe_dict(probe: SectorProbe):
    return {
        "angle": probe.angle,
        "radius": probe.radius,
        "side_plus": probe.side_plus,
        "side_minus": probe.side_minus,
        "verdict": probe.verdict,
        "ray_flow": probe.ray_flow,
    }


def _oracle_dict(summary: OracleSummary | None):
    if summary is None:
        return None
    return {
        "tol": summary.tol,
        "radius": summary.radius,
        "agreements": summary.agreements,
        "disagreements": summary.disagreements,
        "inconclusive": summary.inconclusive,
        "checks": [
            {
                "direction": c.direction_label,
                "angle": c.angle,
                "local_type_blowup": c.local_type,
                "probe": _probe_dict(c.probe),
                "agrees": c.agrees,
                "retried": c.retried,
            }
            for c in summary.checks
        ],
    }


def report_dict(report: AnalysisReport) -> dict:
    return {
        "schema": SCHEMA,
        "input": _system_dict(report.system),
        "degree": report.system.degree(),
        "weights": {
            "minimal": _weight_dict(report.weights.minimal),
            "all": [_weight_dict(v) for v in report.weights.vectors],
            "family": report.weights.description,
        },
        "structure": _structure_dict(report.structure),
        "symmetry": _symmetry_dict(report.record.symmetry),
        "symmetry_verified": report.symmetry_verified,
        "image": _homog_dict(report.homog),
        "transform": _record_dict(report.record),
        "image_lcm": _homog_dict(report.homog_lcm),
        "transform_lcm": _record_dict(report.record_lcm),
        "directions": [_direction_dict(r) for r in report.directions],
        "center": _center_dict(report.center),
        "portrait": _portrait_dict(report.portrait),
        "x111": _x111_dict(report.x111),
        "h2": _h2_dict(report.h2),
        "oracle": _oracle_dict(report.oracle),
        "warnings": list(report.warnings),
    }


def to_json(report: AnalysisReport) -> str:
    return json.dumps(report_dict(report), indent=2, sort_keys=True) + "\n"
