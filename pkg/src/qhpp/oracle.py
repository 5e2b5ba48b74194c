"""Floating-point cross-checks for the exact classification.

Everything in this module is advisory: the classification pipeline is exact
rational arithmetic, and the integrations here exist to catch bugs in it, to
feed the plot exporter, and to give acceptance tests an independent pair of
eyes.  Disagreements are reported, never used to overrule the exact result.

Two integration styles are used.  ``integrate`` runs the raw vector field
with an adaptive order-5(4) Runge-Kutta pair, which keeps conserved
quantities honest (the usual accuracy yardstick).  The sector probe and the
streamline tracer instead follow the unit-speed direction field: near a
degenerate equilibrium the raw field is polynomially slow, and after
normalisation the time parameter becomes arc length, so event thresholds and
budgets can be stated in geometric units.  Orbits and their fates are
unchanged by the normalisation.

The sector probe answers one question: do orbits near a given ray approach
the origin, leave it, or pass by?  It seeds a small angular fan on both
sides of the ray and watches each seed inside the cone around the direction
(leaving the cone sideways is the "pass by" outcome).  The verdicts are
designed to be comparable with the exact per-direction classification:
a node direction shows approach (or leave) on both sides, a saddle shows
pass-by on both sides, and a saddle-node splits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .blowup import NODE, SADDLE, SADDLE_NODE, DirectionReport
from .errors import BadWindowError
from .poly import PolySystem

__all__ = [
    "Window",
    "Trajectory",
    "SectorProbe",
    "integrate",
    "sector_probe",
    "probe_agrees",
    "streamlines",
    "streamlines_csv",
    "streamlines_svg",
    "hausdorff_distance",
    "MAX_TIME",
    "ESCAPED_WINDOW",
    "APPROACHED_ORIGIN",
    "STEP_UNDERFLOW",
]

MAX_TIME = "max-time"
ESCAPED_WINDOW = "escaped-window"
APPROACHED_ORIGIN = "approached-origin"
STEP_UNDERFLOW = "step-underflow"

ORIGIN_RADIUS = 1e-8  # below this the equilibrium is considered reached
TOL_MIN, TOL_MAX = 1e-12, 1e-3


# ---------------------------------------------------------------------------
# window


@dataclass(frozen=True)
class Window:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self) -> None:
        if not all(map(math.isfinite, (self.xmin, self.xmax, self.ymin, self.ymax))):
            raise BadWindowError("window bounds must be finite")
        if self.xmin >= self.xmax or self.ymin >= self.ymax:
            raise BadWindowError("window is degenerate (need xmin < xmax and ymin < ymax)")

    @staticmethod
    def parse(text: str) -> "Window":
        """Accepts ``xmin:xmax,ymin:ymax``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise BadWindowError(f"expected 'xmin:xmax,ymin:ymax', got {text!r}")
        try:
            (xmin, xmax), (ymin, ymax) = (tuple(float(v) for v in p.split(":")) for p in parts)
        except ValueError as exc:
            raise BadWindowError(f"cannot read window {text!r}: {exc}") from None
        return Window(xmin, xmax, ymin, ymax)

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)


# ---------------------------------------------------------------------------
# trajectories


@dataclass(frozen=True)
class Trajectory:
    """Ordered samples (t, x, y) with monotone t and a termination reason."""

    samples: tuple[tuple[float, float, float], ...]
    termination: str

    def points(self) -> np.ndarray:
        return np.array([(x, y) for _t, x, y in self.samples], dtype=float)

    @property
    def last(self) -> tuple[float, float, float]:
        return self.samples[-1]


def _field(system: PolySystem):
    pf = system.p.eval_float
    qf = system.q.eval_float

    def f(_t, s):
        return (pf(s[0], s[1]), qf(s[0], s[1]))

    return f


def _unit_field(system: PolySystem):
    pf = system.p.eval_float
    qf = system.q.eval_float

    def f(_t, s):
        vx, vy = pf(s[0], s[1]), qf(s[0], s[1])
        n = math.hypot(vx, vy)
        if n == 0.0:
            return (0.0, 0.0)
        return (vx / n, vy / n)

    return f


def _check_tol(tol: float) -> None:
    if not (TOL_MIN <= tol <= TOL_MAX):
        raise ValueError(f"tol {tol} outside [{TOL_MIN}, {TOL_MAX}]")


def integrate(
    system: PolySystem,
    start: tuple[float, float],
    window: Window,
    tol: float = 1e-10,
    tmax: float = 1e4,
    direction: int = 1,
) -> Trajectory:
    """Raw-field trajectory from start, forward (direction=+1) or backward.

    Terminates on leaving the window, on entering the 1e-8 ball around the
    origin, at |t| = tmax, or on integrator step underflow.  Deterministic:
    the samples are the solver's accepted steps.
    """
    _check_tol(tol)
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    x0, y0 = float(start[0]), float(start[1])
    if not window.contains(x0, y0):
        return Trajectory(((0.0, x0, y0),), ESCAPED_WINDOW)
    f = _field(system)
    if f(0.0, (x0, y0)) == (0.0, 0.0):
        # equilibrium: the orbit is the point itself
        return Trajectory(((0.0, x0, y0),), MAX_TIME)

    def ev_origin(_t, s):
        return math.hypot(s[0], s[1]) - ORIGIN_RADIUS

    def ev_window(_t, s):
        return min(s[0] - window.xmin, window.xmax - s[0],
                   s[1] - window.ymin, window.ymax - s[1])

    ev_origin.terminal = True
    ev_origin.direction = -1
    ev_window.terminal = True
    ev_window.direction = -1
    sol = solve_ivp(
        f,
        (0.0, direction * tmax),
        (x0, y0),
        method="RK45",
        rtol=tol,
        atol=tol * 1e-3,
        events=(ev_origin, ev_window),
        dense_output=False,
    )
    samples = tuple(
        (float(t), float(x), float(y)) for t, x, y in zip(sol.t, sol.y[0], sol.y[1])
    )
    if sol.status == -1:
        reason = STEP_UNDERFLOW
    elif sol.status == 1:
        reason = APPROACHED_ORIGIN if sol.t_events[0].size else ESCAPED_WINDOW
    else:
        reason = MAX_TIME
    return Trajectory(samples, reason)


# ---------------------------------------------------------------------------
# sector probe


_FAN = (0.25, 0.5)  # angular seed offsets as fractions of the cone half-width

_RADIAL_IN = "in"
_RADIAL_OUT = "out"
_SWEPT = "sweep"
_BUDGET = "budget"
_DIED = "died"


@dataclass(frozen=True)
class SectorProbe:
    """Fan verdicts near one ray.

    side_plus / side_minus summarise the seeds on the two angular sides:
    "approach" (orbits reach the origin forward in time inside the cone),
    "leave" (they reach it backward in time), "both" (homoclinic-style,
    seen inside elliptic sectors), "pass-by", or "inconclusive".  verdict
    is the pair folded together, "mixed" when the sides disagree.
    ray_flow is the sign of the radial velocity on the ray itself
    ("outward", "inward", or "zero"), independent of the fan.
    """

    angle: float
    radius: float
    side_plus: str
    side_minus: str
    verdict: str
    ray_flow: str


def _cone_fate(system, angle, seed_angle, radius, cone, tol, length_budget):
    f = _unit_field(system)
    r_in = max(radius * 0.02, ORIGIN_RADIUS)
    r_out = radius * 3.0
    x0, y0 = radius * math.cos(seed_angle), radius * math.sin(seed_angle)

    def ev_in(_t, s):
        return math.hypot(s[0], s[1]) - r_in

    def ev_out(_t, s):
        return math.hypot(s[0], s[1]) - r_out

    def ev_cone(_t, s):
        d = math.atan2(s[1], s[0]) - angle
        while d > math.pi:
            d -= 2 * math.pi
        while d < -math.pi:
            d += 2 * math.pi
        return cone - abs(d)

    for ev, direction in ((ev_in, -1), (ev_out, 1), (ev_cone, -1)):
        ev.terminal = True
        ev.direction = direction

    out = []
    for sign in (1, -1):
        g = f if sign > 0 else (lambda t, s: tuple(-v for v in f(t, s)))
        sol = solve_ivp(g, (0.0, length_budget), (x0, y0), method="RK45",
                        rtol=tol, atol=tol * 1e-3, max_step=radius / 4,
                        events=(ev_in, ev_out, ev_cone))
        if sol.status == -1:
            out.append(_DIED)
        elif sol.status == 0:
            out.append(_BUDGET)
        elif sol.t_events[0].size:
            out.append(_RADIAL_IN)
        elif sol.t_events[1].size:
            out.append(_RADIAL_OUT)
        else:
            out.append(_SWEPT)
    return tuple(out)  # (forward fate, backward fate)


def _side_verdict(fates):
    # nearest seed decides; the farther one only breaks inconclusive ties
    for fwd, bwd in fates:
        if fwd == _DIED or bwd == _DIED:
            continue
        approach = fwd == _RADIAL_IN
        leave = bwd == _RADIAL_IN
        if approach and leave:
            return "both"
        if approach:
            return "approach"
        if leave:
            return "leave"
        return "pass-by"
    return "inconclusive"


def sector_probe(
    system: PolySystem,
    direction: float,
    radius: float = 0.05,
    tol: float = 1e-10,
    cone: float = 0.1,
) -> SectorProbe:
    """Probe the ray at angle ``direction`` (radians) from the origin.

    Seeds sit at ``radius`` from the origin, offset by fractions of the cone
    half-width on both sides; keep neighbouring characteristic directions
    well outside ``cone``.  At a double characteristic root the saddle-side
    sweep happens at radius ~ exp(-1/(c*offset)) where c is the root's
    quadratic coefficient, so the split is invisible when c*cone << 1.
    """
    _check_tol(tol)
    if radius <= 0 or not 0 < cone < math.pi / 2:
        raise ValueError("need radius > 0 and 0 < cone < pi/2")
    budget = 60.0 * radius
    sides = []
    for side in (1, -1):
        fates = [
            _cone_fate(system, direction, direction + side * frac * cone,
                       radius, cone, tol, budget)
            for frac in _FAN
        ]
        sides.append(_side_verdict(fates))
    plus, minus = sides
    if plus == minus:
        verdict = plus
    elif "inconclusive" in (plus, minus):
        verdict = "inconclusive"
    else:
        verdict = "mixed"
    x0, y0 = radius * math.cos(direction), radius * math.sin(direction)
    rv = x0 * system.p.eval_float(x0, y0) + y0 * system.q.eval_float(x0, y0)
    scale = radius ** (system.degree() + 1)
    if abs(rv) <= 1e-9 * scale:
        flow = "zero"
    else:
        flow = "outward" if rv > 0 else "inward"
    return SectorProbe(direction, radius, plus, minus, verdict, flow)


def probe_agrees(probe: SectorProbe, report: DirectionReport) -> bool | None:
    """Exact-vs-numeric consistency for one direction; None when the probe
    was inconclusive (caller may retry at a smaller radius)."""
    if "inconclusive" in (probe.side_plus, probe.side_minus):
        return None
    radial = {"approach", "leave", "both"}
    plus = probe.side_plus in radial
    minus = probe.side_minus in radial
    local = report.local_type_blowup
    if local == NODE:
        return plus and minus
    if local == SADDLE:
        return not plus and not minus
    if local == SADDLE_NODE:
        return plus != minus
    return None


# ---------------------------------------------------------------------------
# streamlines


def _grid_seeds(window: Window, n: int) -> list[tuple[float, float]]:
    if n <= 0:
        return []
    k = math.ceil(math.sqrt(n))
    seeds = []
    for row in range(k):
        for col in range(k):
            if len(seeds) == n:
                return seeds
            seeds.append((
                window.xmin + (col + 0.5) * window.width / k,
                window.ymin + (row + 0.5) * window.height / k,
            ))
    return seeds


def _trace_leg(system, seed, window, tol, budget, sign):
    """Unit-speed leg from seed: (samples after the seed, reason, closed).

    A closed orbit is cut at its first return to the seed, leaving an
    endpoint gap of at most diagonal * 1e-5.  Return detection is a funnel:
    after getting clear of the seed, hunt at full step for entry into a
    coarse ball around it, then refine through smaller balls with steps
    sized so the entry event cannot be stepped over; a ball entered by a
    pass that misses the next ball is a false alarm and the hunt resumes.
    Closed orbits smaller than about four hunt steps across stay inside the
    coarse ball, are never flagged closed, and simply retrace themselves.
    """
    f = _unit_field(system)
    if f(0.0, seed) == (0.0, 0.0):
        return [], MAX_TIME, False
    max_step = window.diagonal / 50
    r_leave = max(window.diagonal * 1e-3, 10 * ORIGIN_RADIUS)
    r_close = max(window.diagonal * 1e-5, 10 * ORIGIN_RADIUS)
    balls = (2.0 * max_step, 0.5 * r_leave, r_close)

    def dist(s):
        return math.hypot(s[0] - seed[0], s[1] - seed[1])

    def ev_origin(_t, s):
        return math.hypot(s[0], s[1]) - ORIGIN_RADIUS

    def ev_window(_t, s):
        return min(s[0] - window.xmin, window.xmax - s[0],
                   s[1] - window.ymin, window.ymax - s[1])

    def ev_away(_t, s):
        return dist(s) - r_leave

    def _ball_event(r):
        def ev(_t, s):
            return dist(s) - r
        ev.terminal = True
        ev.direction = -1
        return ev

    for ev, direction in ((ev_origin, -1), (ev_window, -1), (ev_away, 1)):
        ev.terminal = True
        ev.direction = direction
    ball_evs = tuple(_ball_event(r) for r in balls)

    g = f if sign > 0 else (lambda t, s: tuple(-v for v in f(t, s)))

    def run(t0, s0, cap, events, step):
        return solve_ivp(g, (t0, cap), s0, method="RK45", rtol=tol,
                         atol=tol * 1e-3, max_step=step, events=events)

    sol = run(0.0, seed, budget, (ev_origin, ev_window, ev_away), max_step)
    samples = list(zip(sol.t[1:], sol.y[0][1:], sol.y[1][1:]))
    level = -1  # -1: still leaving the seed; 0..: index of the ball hunted
    while True:
        if sol.status == -1:
            return samples, STEP_UNDERFLOW, False
        if sol.status == 1 and sol.t_events[0].size:
            return samples, APPROACHED_ORIGIN, False
        if sol.status == 1 and sol.t_events[1].size:
            return samples, ESCAPED_WINDOW, False
        t0 = sol.t[-1]
        s0 = (sol.y[0][-1], sol.y[1][-1])
        if sol.status == 1:  # left the seed ball, or entered the current ball
            if level == len(balls) - 1:
                return samples, MAX_TIME, True
            level += 1
        elif t0 >= budget * (1 - 1e-12):
            return samples, MAX_TIME, False
        else:
            level = 0  # refine cap expired without closing: resume the hunt
        if level == 0:
            cap, step = budget, max_step
        else:
            cap = min(t0 + 4.0 * balls[level - 1], budget)
            step = balls[level] if level == len(balls) - 1 else balls[level] / 2
        sol = run(t0, s0, cap, (ev_origin, ev_window, ball_evs[level]), step)
        samples += list(zip(sol.t[1:], sol.y[0][1:], sol.y[1][1:]))


def streamlines(
    system: PolySystem,
    window: Window,
    n: int,
    tol: float = 1e-8,
) -> list[Trajectory]:
    """Unit-speed streamlines seeded on a uniform grid, clipped to window.

    The parameter t of each trajectory is signed arc length through the
    seed.  Deterministic: seeds in row-major order, each traced forward
    then (unless the forward leg closed a loop) backward.
    """
    _check_tol(tol)
    if n > 10000:
        raise ValueError("streamline seed count capped at 10000")
    budget = 4.0 * window.diagonal
    out = []
    for seed in _grid_seeds(window, n):
        fwd, fwd_reason, closed = _trace_leg(system, seed, window, tol, budget, 1)
        if closed:
            back = []
            back_reason = MAX_TIME
        else:
            back, back_reason, _ = _trace_leg(system, seed, window, tol, budget, -1)
        samples = [(-t, x, y) for t, x, y in reversed(back)]
        samples.append((0.0, seed[0], seed[1]))
        samples.extend(fwd)
        reason = fwd_reason if fwd_reason != MAX_TIME else back_reason
        out.append(Trajectory(tuple(samples), reason))
    return out


def streamlines_csv(trajectories: list[Trajectory]) -> str:
    """Header ``t,x,y``; one blank line between trajectories."""
    blocks = []
    for traj in trajectories:
        blocks.append("\n".join(f"{t:.10g},{x:.10g},{y:.10g}" for t, x, y in traj.samples))
    return "t,x,y\n" + "\n\n".join(blocks) + ("\n" if blocks else "")


_STROKES = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2")


def streamlines_svg(trajectories: list[Trajectory], window: Window) -> str:
    """Polyline per trajectory; viewBox equals the window (y flipped to keep
    the mathematical orientation)."""
    flip = window.ymin + window.ymax
    width = max(window.diagonal / 600, 1e-9)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{window.xmin:g} {window.ymin:g} '
        f'{window.width:g} {window.height:g}">'
    ]
    for i, traj in enumerate(trajectories):
        pts = " ".join(f"{x:.6g},{flip - y:.6g}" for _t, x, y in traj.samples)
        stroke = _STROKES[i % len(_STROKES)]
        lines.append(
            f'<polyline fill="none" stroke="{stroke}" stroke-width="{width:.3g}" points="{pts}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# comparison


def hausdorff_distance(a, b) -> float:
    """Symmetric sampled Hausdorff distance between two point sets.

    Accepts Trajectory or any iterable of (x, y).
    """
    pa = a.points() if isinstance(a, Trajectory) else np.asarray(list(a), dtype=float)
    pb = b.points() if isinstance(b, Trajectory) else np.asarray(list(b), dtype=float)
    if pa.size == 0 or pb.size == 0:
        raise ValueError("hausdorff_distance needs nonempty sample sets")
    d = np.linalg.norm(pa[:, None, :] - pb[None, :, :], axis=2)
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))
