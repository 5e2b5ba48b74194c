"""Global phase-portrait codes and their transport back to the original plane.

A portrait code is a combinatorial description of the flow near a degenerate
equilibrium together with the ring of equilibria at infinity: the cyclic list
of characteristic rays (each with a flow direction and the number of orbits
tangent to it) alternating with the sectors between them (hyperbolic,
parabolic or elliptic, each with the sign of the angular sweep).  Codes are
compared up to rotation and reflection of the circle.

For a homogeneous system the code is assembled directly from the blow-up
classification: flow signs come from P(1, u0), sweep signs from the sign of
G(1, u) between consecutive roots, and the sector type between two adjacent
rays follows from the sweep direction and the two boundary flows.  The
Poincare index 1 + (e - h)/2 and the sphere-total identity are asserted on
every assembled code.

For a quasi-homogeneous system the code is pulled back from the homogenised
image through the power substitution.  The substitution maps each open
quadrant of the original plane homeomorphically onto a quadrant of the image
plane; orientation and time-direction bookkeeping per quadrant plus explicit
handling of the four half-axes reassembles the full circle.  The ring at
infinity of the original system is computed from its own top-degree part,
which may leave genuinely degenerate equator points; these are reported, not
classified.

On a pulled-back code the sweep sign of a sector is the transported crossing
orientation (which boundary ray feeds the sector), not the pointwise sign of
x*Q - y*P: the power substitution distorts Euclidean angles, so the two can
differ on parabolic sectors.  The sector kind only ever depends on the
crossing orientation and the boundary flows, which transport exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .blowup import (
    NODE,
    SADDLE,
    SADDLE_NODE,
    CENTER,
    CENTER_UNVERIFIED,
    CharPolys,
    DirectionReport,
    center_test,
    char_polys,
    direction_reports,
)
from .errors import InternalInvariantError
from .poly import BiPoly, PolySystem, Rat, UniPoly
from .roots import AlgebraicRoot, gap_points, mth_derivative_sign, real_roots
from .transform import HomogSystem, SymmetryInfo, TransformRecord
from .weights import swap_system

HYPERBOLIC = "hyperbolic"
PARABOLIC = "parabolic"
ELLIPTIC = "elliptic"

RAY_DIRECTION = "direction"
RAY_VERTICAL = "vertical"
RAY_AXIS = "axis"


def _root_label(root: AlgebraicRoot) -> str:
    if root.rational is not None:
        return str(root.rational)
    return f"({root.lo}, {root.hi})"


def _root_sign(root: AlgebraicRoot) -> int:
    """Sign of an isolated real root; refines until zero leaves the interval."""
    if root.rational is not None:
        v = root.rational
        return 0 if v == 0 else (1 if v > 0 else -1)
    guard = 0
    while root.lo < 0 < root.hi:
        root.refine_once()
        if root.rational is not None:
            return _root_sign(root)
        guard += 1
        if guard > 4096:
            raise InternalInvariantError("sign refinement did not separate the root from zero")
    if root.lo >= 0:
        return 1
    return -1


@dataclass(frozen=True)
class RayCode:
    """One characteristic ray on the circle of directions."""

    kind: str  # direction | vertical | axis
    label: str
    half: int  # +1 for x>0 (or the upward vertical), -1 for the mirror half
    flow: int  # +1 leaving the origin, -1 approaching
    orbit_count: str
    root: AlgebraicRoot | None = None
    axis: str | None = None  # "+x" | "+y" | "-x" | "-y" on pulled-back codes


@dataclass(frozen=True)
class SectorCode:
    kind: str
    sweep: int


@dataclass(frozen=True)
class InfinityEntry:
    label: str
    kind: str  # saddle | node | saddle-node | degenerate
    stability: str | None
    multiplicity: int | None


@dataclass(frozen=True)
class PortraitCode:
    """Cyclic origin code plus the ring at infinity.

    sectors[i] sits between rays[i] and rays[(i+1) % len].  origin_kind is
    "sectored" whenever rays exist; rayless monodromic origins carry one of
    the center/focus kinds instead, and a linear star node and the constant
    field keep their own markers.
    """

    origin_kind: str
    rays: tuple[RayCode, ...]
    sectors: tuple[SectorCode, ...]
    infinity_ring: tuple[InfinityEntry, ...]
    infinity_marker: str | None
    symmetry: SymmetryInfo | None
    figure_label: str | None
    index: int
    warnings: tuple[str, ...] = ()

    @property
    def invariant_rays(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.rays)

    def sector_counts(self) -> dict[str, int]:
        counts = {HYPERBOLIC: 0, PARABOLIC: 0, ELLIPTIC: 0}
        for s in self.sectors:
            counts[s.kind] += 1
        return counts

    def canonical(self) -> str:
        slot_seq = [
            (r.flow, r.orbit_count, s.kind, s.sweep)
            for r, s in zip(self.rays, self.sectors)
        ]
        best = _cyclic_min(slot_seq)
        if slot_seq:
            reflected = _reflect_slots(slot_seq)
            best = min(best, _cyclic_min(reflected))
        ring_seq = [(e.kind, e.stability) for e in self.infinity_ring]
        ring_best = _cyclic_min(ring_seq)
        if ring_seq:
            ring_best = min(ring_best, _cyclic_min(list(reversed(ring_seq))))
        return repr((self.origin_kind, best, ring_best, self.infinity_marker))

    def equivalent(self, other: "PortraitCode") -> bool:
        return self.canonical() == other.canonical()

    def time_reversal(self) -> "PortraitCode":
        """The code of the same field with t -> -t.

        Sector shapes survive time reversal; flows, sweeps, and focus and
        node stabilities flip.  Comparing canonical() of a code and of its
        reversal implements equivalence "without taking into account the
        direction of the time"."""
        origin = {
            "stable-focus": "unstable-focus",
            "unstable-focus": "stable-focus",
        }.get(self.origin_kind, self.origin_kind)
        flip_stab = {"stable": "unstable", "unstable": "stable"}
        return replace(
            self,
            origin_kind=origin,
            rays=tuple(replace(r, flow=-r.flow) for r in self.rays),
            sectors=tuple(SectorCode(s.kind, -s.sweep) for s in self.sectors),
            infinity_ring=tuple(
                replace(e, stability=flip_stab.get(e.stability, e.stability))
                for e in self.infinity_ring
            ),
        )


def _cyclic_min(seq: list) -> tuple:
    if not seq:
        return ()
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def _reflect_slots(slot_seq: list[tuple]) -> list[tuple]:
    """Reverse the circle orientation: ray order reverses, each sector flips
    its sweep and re-attaches to the ray that now precedes it."""
    k = len(slot_seq)
    out = []
    for j in range(k):
        flow, count, _, _ = slot_seq[(k - j) % k]
        _, _, kind, sweep = slot_seq[(k - j - 1) % k]
        out.append((flow, count, kind, -sweep))
    return out


# --- circle assembly for a homogeneous system ------------------------------


def _sign_at(f: UniPoly, sample: Rat) -> int:
    v = f.eval(sample)
    if v == 0:
        raise InternalInvariantError("gap sample landed on a root")
    return 1 if v > 0 else -1


def _circle(cp: CharPolys, reports: list[DirectionReport]) -> tuple[list[RayCode], list[int]]:
    """The cyclic ray list (counterclockwise from u = -inf on x > 0) and the
    sweep sign of each gap between consecutive rays."""
    interior = [r for r in reports if r.direction is not None]
    vert = next((r for r in reports if r.direction is None), None)
    if not interior and vert is None:
        raise InternalInvariantError("circle assembly needs at least one characteristic ray")
    n = cp.degree
    flip = (-1) ** (n + 1)
    roots = [r.direction for r in interior]
    samples = gap_points(roots)
    low = _sign_at(cp.g_u, samples[0])
    high = _sign_at(cp.g_u, samples[-1])
    betweens = [_sign_at(cp.g_u, samples[i]) for i in range(1, len(samples) - 1)]

    def ray(rep: DirectionReport, half: int) -> RayCode:
        if rep.direction is None:
            label = "vertical-up" if half > 0 else "vertical-down"
            return RayCode(RAY_VERTICAL, label, half, rep.radial_sign * (1 if half > 0 else flip),
                           rep.orbit_count_origin)
        side = "x>0" if half > 0 else "x<0"
        label = f"u={_root_label(rep.direction)} ({side})"
        return RayCode(RAY_DIRECTION, label, half, rep.radial_sign * (1 if half > 0 else flip),
                       rep.orbit_count_origin, root=rep.direction)

    rays: list[RayCode] = []
    arcs: list[int] = []
    r = len(interior)
    for idx, rep in enumerate(interior):
        rays.append(ray(rep, 1))
        arcs.append(betweens[idx] if idx < r - 1 else high)
    if vert is not None:
        rays.append(ray(vert, 1))
        arcs.append(flip * low)
    elif r:
        if high != flip * low:
            raise InternalInvariantError("sweep sign mismatch across the non-characteristic vertical")
    for idx, rep in enumerate(interior):
        rays.append(ray(rep, -1))
        arcs.append(flip * (betweens[idx] if idx < r - 1 else high))
    if vert is not None:
        rays.append(ray(vert, -1))
        arcs.append(low)
    if len(arcs) != len(rays):
        raise InternalInvariantError("ray/arc alignment broke")
    return rays, arcs


def _sectors_from(rays: list[RayCode], arcs: list[int]) -> list[SectorCode]:
    sectors = []
    k = len(rays)
    for i, sweep in enumerate(arcs):
        lower = rays[i].flow
        upper = rays[(i + 1) % k].flow
        start, end = (lower, upper) if sweep > 0 else (upper, lower)
        if start > 0 and end < 0:
            kind = ELLIPTIC
        elif start < 0 and end > 0:
            kind = HYPERBOLIC
        else:
            kind = PARABOLIC
        sectors.append(SectorCode(kind, sweep))
    return sectors


def _index_of(sectors: list[SectorCode]) -> int:
    e = sum(1 for s in sectors if s.kind == ELLIPTIC)
    h = sum(1 for s in sectors if s.kind == HYPERBOLIC)
    if (e - h) % 2:
        raise InternalInvariantError("odd elliptic-hyperbolic defect; gluing is inconsistent")
    return 1 + (e - h) // 2


_RING_INDEX = {SADDLE: -1, NODE: 1, SADDLE_NODE: 0}


def _sphere_total(index: int, ring: tuple[InfinityEntry, ...]) -> int | None:
    total = 2 * index
    for entry in ring:
        if entry.kind == "degenerate":
            return None
        total += _RING_INDEX[entry.kind]
    return total


def _ring_from_reports(reports: list[DirectionReport], n: int) -> tuple[InfinityEntry, ...]:
    """Equator ring of a homogeneous system, ccw, aligned with the ray circle."""
    interior = [r for r in reports if r.direction is not None]
    vert = next((r for r in reports if r.direction is None), None)
    entries: list[InfinityEntry] = []

    def entry(rep: DirectionReport, half: int) -> InfinityEntry:
        if rep.direction is None:
            label = "I(vertical)" + ("" if half > 0 else "*")
        else:
            label = f"I(u={_root_label(rep.direction)})" + ("" if half > 0 else "*")
        stab = rep.infinity_stability
        if half < 0 and n % 2 == 0 and stab is not None:
            stab = "unstable" if stab == "stable" else "stable"
        return InfinityEntry(label, rep.infinity_type, stab, rep.multiplicity)

    for rep in interior:
        entries.append(entry(rep, 1))
    if vert is not None:
        entries.append(entry(vert, 1))
    for rep in interior:
        entries.append(entry(rep, -1))
    if vert is not None:
        entries.append(entry(vert, -1))
    return tuple(entries)


def homogeneous_portrait(
    system: PolySystem,
    cp: CharPolys | None = None,
    reports: list[DirectionReport] | None = None,
    symmetry: SymmetryInfo | None = None,
) -> PortraitCode:
    """Assemble the global code of a homogeneous (or constant) system."""
    x = BiPoly.monomial(1, 0)
    y = BiPoly.monomial(0, 1)
    g = x * system.q - y * system.p
    if g.is_zero:
        # x' = a x, y' = a y: every direction is an invariant ray.
        return PortraitCode(
            origin_kind="star-node",
            rays=(),
            sectors=(),
            infinity_ring=(),
            infinity_marker="infinity fulfils singularities",
            symmetry=symmetry,
            figure_label=None,
            index=1,
            warnings=(),
        )
    if cp is None:
        cp = char_polys(system)
    if reports is None:
        reports = direction_reports(cp)

    if not reports:
        report = center_test(system, cp)
        warnings: tuple[str, ...] = ()
        if report.verdict == CENTER:
            kind = "center"
        elif report.verdict == CENTER_UNVERIFIED:
            kind = "center"
            warnings = ("period integral vanishes only numerically; centre unverified",)
        else:
            g_sign = _sign_at(cp.g_u, Fraction(0))
            if report.integral_sign is None:
                raise InternalInvariantError("focus without an integral sign")
            kind = "stable-focus" if report.integral_sign * g_sign < 0 else "unstable-focus"
        return PortraitCode(
            origin_kind=kind,
            rays=(),
            sectors=(),
            infinity_ring=(),
            infinity_marker=None,
            symmetry=symmetry,
            figure_label=None,
            index=1,
            warnings=warnings,
        )

    rays, arcs = _circle(cp, reports)
    sectors = _sectors_from(rays, arcs)
    index = _index_of(sectors)
    ring = _ring_from_reports(reports, cp.degree)
    total = _sphere_total(index, ring)
    if total is not None and total != 2:
        raise InternalInvariantError(f"sphere index total {total} != 2")
    return PortraitCode(
        origin_kind="sectored",
        rays=tuple(rays),
        sectors=tuple(sectors),
        infinity_ring=ring,
        infinity_marker=None,
        symmetry=symmetry,
        figure_label=None,
        index=index,
        warnings=(),
    )


# --- ring at infinity of a (generally non-homogeneous) polynomial system ---


def infinity_ring(system: PolySystem) -> tuple[tuple[InfinityEntry, ...], str | None]:
    """Equator equilibria of the Poincare compactification, from the
    top-degree part.  Points whose transverse eigenvalue vanishes are
    genuinely degenerate for this method and are marked as such."""
    n = system.degree()
    p_top = system.p.homogeneous_part(n)
    q_top = system.q.homogeneous_part(n)
    x = BiPoly.monomial(1, 0)
    y = BiPoly.monomial(0, 1)
    g_top = x * q_top - y * p_top
    if g_top.is_zero:
        return (), "infinity fulfils singularities"
    ghat = g_top.eval_x1()
    gv = g_top.eval_y1()
    phat = p_top.eval_x1()
    roots = real_roots(ghat)

    def interior_entry(u0: AlgebraicRoot, half: int) -> InfinityEntry:
        label = f"I(u={_root_label(u0)})" + ("" if half > 0 else "*")
        ps = 0 if phat.is_zero else u0.sign_of(phat)
        if ps == 0:
            return InfinityEntry(label, "degenerate", None, u0.multiplicity)
        m = u0.multiplicity
        ds = mth_derivative_sign(ghat, u0, m)
        if m % 2 == 0:
            return InfinityEntry(label, SADDLE_NODE, None, m)
        if ps * ds > 0:
            return InfinityEntry(label, SADDLE, None, m)
        stab = "stable" if ps > 0 else "unstable"
        if half < 0 and n % 2 == 0:
            stab = "unstable" if stab == "stable" else "stable"
        return InfinityEntry(label, NODE, stab, m)

    m_vert, reduced = gv.shift_down()

    def vertical_entry(half: int) -> InfinityEntry | None:
        if m_vert == 0:
            return None
        label = "I(vertical)" + ("" if half > 0 else "*")
        q01 = q_top.eval(0, 1)
        if q01 == 0:
            return InfinityEntry(label, "degenerate", None, m_vert)
        if m_vert % 2 == 0:
            return InfinityEntry(label, SADDLE_NODE, None, m_vert)
        gm = reduced.eval(Fraction(0))
        prod = (1 if gm > 0 else -1) * (1 if q01 > 0 else -1)
        if prod < 0:
            return InfinityEntry(label, SADDLE, None, m_vert)
        stab = "stable" if q01 > 0 else "unstable"
        if half < 0 and n % 2 == 0:
            stab = "unstable" if stab == "stable" else "stable"
        return InfinityEntry(label, NODE, stab, m_vert)

    entries: list[InfinityEntry] = []
    for u0 in roots:
        entries.append(interior_entry(u0, 1))
    v = vertical_entry(1)
    if v is not None:
        entries.append(v)
    for u0 in roots:
        entries.append(interior_entry(u0, -1))
    v = vertical_entry(-1)
    if v is not None:
        entries.append(v)
    return tuple(entries), None


# --- pullback through the power substitution -------------------------------

# circle sections for sort keys: x>0 rays, vertical-up, x<0 rays, vertical-down
_SECTIONS = {1: 0, -1: 2}


def _image_key(ray: RayCode, root_order: dict[int, int]) -> tuple[int, int, int]:
    if ray.kind == RAY_VERTICAL:
        return (1 if ray.half > 0 else 3, 0, 0)
    section = _SECTIONS[ray.half]
    sign = _root_sign(ray.root)
    if sign == 0:
        # the root at u = 0 shares its key with the image x-axis direction
        return (section, 0, 0)
    return (section, sign, root_order[id(ray.root)])


_AXIS_KEYS = {"+x": (0, 0, 0), "+y": (1, 0, 0), "-x": (2, 0, 0), "-y": (3, 0, 0)}


def _arc_after(keys: list[tuple], target: tuple) -> int:
    """Index of the gap that starts at, or spans, the direction `target`."""
    k = len(keys)
    for i in range(k):
        if keys[i] == target:
            return i
    # gap spanning target: the gap after the last key below it (cyclically)
    below = [i for i in range(k) if keys[i] < target]
    if below:
        return max(below, key=lambda i: keys[i])
    return max(range(k), key=lambda i: keys[i])


def _trivial_record(record: TransformRecord) -> bool:
    return (
        record.expo_x == 1
        and record.expo_y == 1
        and record.time_x == 0
        and record.time_y == 0
        and not record.swap_xy
    )


_QUADRANTS = ((1, 1), (-1, 1), (-1, -1), (1, -1))  # QI, QII, QIII, QIV (ccw)
_AXES_CCW = ("+x", "+y", "-x", "-y")  # axis before QI is +x, before QII is +y, ...


def _axis_monomial(f: BiPoly, on_x_axis: bool) -> tuple[int, Rat] | None:
    """The single monomial of f surviving on an axis, or None when f vanishes
    there.  Quasi-homogeneity guarantees at most one such monomial."""
    hits = [(i, c) for (i, j), c in f.terms() if j == 0] if on_x_axis else [
        (j, c) for (i, j), c in f.terms() if i == 0
    ]
    if not hits:
        return None
    if len(hits) > 1:
        raise InternalInvariantError("several monomials survive on an axis of a quasi-homogeneous system")
    return hits[0]


def pullback_portrait(
    original: PolySystem,
    image_code: PortraitCode,
    record: TransformRecord,
    symmetry: SymmetryInfo | None = None,
) -> PortraitCode:
    """Transport the image origin code back through the power substitution.

    Needs the integer-exponent route: expo_x, expo_y positive integers and an
    integer time monomial.  The ring at infinity is NOT transported; compute
    it from the original system via infinity_ring.
    """
    work = swap_system(original) if record.swap_xy else original
    ex, ey = record.expo_x, record.expo_y
    if ex.denominator != 1 or ey.denominator != 1 or ex < 1 or ey < 1:
        raise ValueError("portrait pullback needs integer substitution exponents")
    sx_pow, sy_pow = int(ex), int(ey)
    tm = record.time_monomial_original()
    if tm[0].denominator != 1 or tm[1].denominator != 1:
        raise ValueError("portrait pullback needs an integer time monomial")
    m, k = int(tm[0]), int(tm[1])
    if m < 0 or k < 0:
        raise ValueError("portrait pullback needs nonnegative time exponents")

    warnings: list[str] = list(image_code.warnings)

    def tau(sx: int, sy: int) -> int:
        return (sx**m) * (sy**k)

    def orient(sx: int, sy: int) -> int:
        o = 1
        if sx < 0 and sx_pow % 2 == 0:
            o = -o
        if sy < 0 and sy_pow % 2 == 0:
            o = -o
        return o

    def source_signs(sx: int, sy: int) -> tuple[int, int]:
        return (sx if sx_pow % 2 else 1, sy if sy_pow % 2 else 1)

    # monodromic image: no rays anywhere
    if image_code.origin_kind in ("center", "stable-focus", "unstable-focus"):
        rhos = {orient(sx, sy) * tau(sx, sy) for sx, sy in _QUADRANTS}
        if len(rhos) != 1:
            raise InternalInvariantError("incoherent rotation signs across quadrants")
        rho = rhos.pop()
        kind = image_code.origin_kind
        if rho < 0 and kind != "center":
            kind = "stable-focus" if kind == "unstable-focus" else "unstable-focus"
        ring, marker = infinity_ring(original)
        return PortraitCode(
            origin_kind=kind,
            rays=(),
            sectors=(),
            infinity_ring=ring,
            infinity_marker=marker,
            symmetry=symmetry,
            figure_label=None,
            index=1,
            warnings=tuple(warnings),
        )
    if image_code.origin_kind != "sectored":
        raise ValueError(f"cannot pull back an image code of kind {image_code.origin_kind}")

    im_rays = list(image_code.rays)
    im_arcs = [s.sweep for s in image_code.sectors]
    root_order: dict[int, int] = {}
    for ray in im_rays:
        if ray.kind == RAY_DIRECTION and id(ray.root) not in root_order:
            root_order[id(ray.root)] = len(root_order)
    keys = [_image_key(ray, root_order) for ray in im_rays]

    def image_ray_at(key: tuple) -> RayCode | None:
        for ray, rk in zip(im_rays, keys):
            if rk == key:
                return ray
        return None

    def counterpart(axis: str) -> tuple:
        if axis == "+x":
            return _AXIS_KEYS["+x"]
        if axis == "+y":
            return _AXIS_KEYS["+y"]
        if axis == "-x":
            return _AXIS_KEYS["-x" if sx_pow % 2 else "+x"]
        return _AXIS_KEYS["-y" if sy_pow % 2 else "+y"]

    # stream of slots and gap pieces around the original circle
    stream: list[tuple[str, object]] = []
    p_on_x = _axis_monomial(work.p, True)
    q_on_x = _axis_monomial(work.q, True)
    p_on_y = _axis_monomial(work.p, False)
    q_on_y = _axis_monomial(work.q, False)

    def axis_slot(axis: str) -> RayCode | None:
        if axis in ("+x", "-x"):
            invariant = q_on_x is None
            mono = p_on_x
        else:
            invariant = p_on_y is None
            mono = q_on_y
        image_ray = image_ray_at(counterpart(axis))
        if not invariant:
            if image_ray is not None:
                raise InternalInvariantError(f"image has a ray at {axis} but the axis is not invariant")
            return None
        if mono is None:
            raise InternalInvariantError("both components vanish on an invariant axis")
        if image_ray is None:
            raise InternalInvariantError(f"invariant axis {axis} has no image ray")
        exp, coeff = mono
        base = 1 if coeff > 0 else -1
        if axis in ("+x", "+y"):
            flow = base
        else:
            flow = base * ((-1) ** (exp + 1))
        return RayCode(RAY_AXIS, f"axis {axis}", 1 if axis[0] == "+" else -1,
                       flow, image_ray.orbit_count, axis=axis)

    for pos, (sx, sy) in enumerate(_QUADRANTS):
        slot = axis_slot(_AXES_CCW[pos])
        if slot is not None:
            stream.append(("slot", slot))
        o = orient(sx, sy)
        t = tau(sx, sy)
        ssx, ssy = source_signs(sx, sy)
        # interior image rays of the source quadrant, in image-ccw order
        in_quad = [
            (rk, ray)
            for ray, rk in zip(im_rays, keys)
            if ray.kind == RAY_DIRECTION and _quadrant_of_key(rk) == (ssx, ssy)
        ]
        in_quad.sort(key=lambda p: p[0])
        start_axis = _AXES_CCW[pos]
        end_axis = _AXES_CCW[(pos + 1) % 4]
        a_key = counterpart(start_axis)
        b_key = counterpart(end_axis)
        if o < 0:
            a_key, b_key = b_key, a_key
        # pieces in image-ccw order: gap after a_key, then after each ray
        pieces = [im_arcs[_arc_after(keys, a_key)]]
        for rk, _ray in in_quad:
            pieces.append(im_arcs[_arc_after(keys, rk)])
        ray_list = [ray for _rk, ray in in_quad]
        if o < 0:
            pieces.reverse()
            ray_list.reverse()
        interleaved: list[tuple[str, object]] = [("piece", pieces[0] * o * t)]
        for ray, piece in zip(ray_list, pieces[1:]):
            pulled = RayCode(
                RAY_DIRECTION,
                f"{ray.label} via quadrant ({'+' if sx > 0 else '-'}," f"{'+' if sy > 0 else '-'})",
                sx,
                ray.flow * t,
                ray.orbit_count,
                root=ray.root,
            )
            interleaved.append(("slot", pulled))
            interleaved.append(("piece", piece * o * t))
        stream.extend(interleaved)

    slots = [item for tag, item in stream if tag == "slot"]
    if not slots:
        raise InternalInvariantError("sectored image produced no pulled-back rays")
    # fold gap pieces between consecutive slots, cyclically
    first_slot_at = next(i for i, (tag, _) in enumerate(stream) if tag == "slot")
    rotated = stream[first_slot_at:] + stream[:first_slot_at]
    qh_arcs: list[int] = []
    current: list[int] = []
    for tag, item in rotated[1:] + rotated[:1]:
        if tag == "piece":
            current.append(item)
        else:
            if not current:
                raise InternalInvariantError("two rays with no gap between them")
            if len(set(current)) != 1:
                raise InternalInvariantError("sweep signs disagree inside one pulled-back sector")
            qh_arcs.append(current[0])
            current = []
    qh_rays = [item for tag, item in rotated if tag == "slot"]
    if len(qh_arcs) != len(qh_rays):
        raise InternalInvariantError("pulled-back ray/arc alignment broke")

    sectors = _sectors_from(qh_rays, qh_arcs)
    if record.swap_xy:
        qh_rays, sectors = _swap_circle(qh_rays, sectors)
    index = _index_of(sectors)
    ring, marker = infinity_ring(original)
    total = _sphere_total(index, ring)
    if marker is None and total is not None and total != 2:
        raise InternalInvariantError(f"sphere index total {total} != 2 after pullback")
    if marker is not None or total is None:
        warnings.append("ring at infinity is degenerate; sphere total not checked")
    return PortraitCode(
        origin_kind="sectored",
        rays=tuple(qh_rays),
        sectors=tuple(sectors),
        infinity_ring=ring,
        infinity_marker=marker,
        symmetry=symmetry,
        figure_label=None,
        index=index,
        warnings=tuple(warnings),
    )


def _quadrant_of_key(key: tuple) -> tuple[int, int]:
    section, sign, _ = key
    if section == 0:
        return (1, sign)
    if section == 2:
        return (-1, -sign)
    raise InternalInvariantError("vertical ray asked for a quadrant")


def _swap_circle(rays: list[RayCode], sectors: list[SectorCode]) -> tuple[list[RayCode], list[SectorCode]]:
    """Undo a coordinate swap: reflect the circle across the diagonal."""
    swap_axis = {"+x": "+y", "+y": "+x", "-x": "-y", "-y": "-x"}
    k = len(rays)
    new_rays = []
    new_sectors = []
    for j in range(k):
        ray = rays[(k - j) % k]
        if ray.axis is not None:
            ray = replace(ray, axis=swap_axis[ray.axis], label=f"axis {swap_axis[ray.axis]}")
        new_rays.append(ray)
        sec = sectors[(k - j - 1) % k]
        new_sectors.append(SectorCode(sec.kind, -sec.sweep))
    return new_rays, new_sectors


def assemble_portrait(
    h: HomogSystem,
    reports: list[DirectionReport],
    record: TransformRecord,
    original: PolySystem | None = None,
) -> PortraitCode:
    """Portrait code of the system behind a homogenisation record.

    With a trivial record this is the homogeneous code itself; otherwise the
    origin code is pulled back to the original plane (which must be supplied)
    and the ring at infinity is recomputed from the original top-degree part.
    """
    if _trivial_record(record):
        return homogeneous_portrait(h.sys, reports=reports, symmetry=record.symmetry)
    if original is None:
        raise ValueError("pullback needs the original system")
    image_code = homogeneous_portrait(h.sys, reports=reports)
    return pullback_portrait(original, image_code, record, symmetry=record.symmetry)
