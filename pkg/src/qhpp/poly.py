"""Exact bivariate polynomial arithmetic over the rationals.

Polynomials are sparse maps from exponent pairs (i, j) to nonzero Fraction
coefficients, representing sum c_ij * x^i * y^j.  Everything here is
immutable and pure; results are always normalized (no stored zeros).

The univariate companion class UniPoly (dense coefficient tuple, low degree
first) backs the real-root isolation in roots.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rat = Fraction

RatLike = Union[Rat, int]


def _rat(value: RatLike) -> Rat:
    return value if isinstance(value, Fraction) else Fraction(value)


# ---------------------------------------------------------------------------
# bivariate


class BiPoly:
    """Bivariate polynomial in x, y with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], RatLike] | Iterable[tuple[tuple[int, int], RatLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        tidy: dict[tuple[int, int], Rat] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial x^{i} y^{j}")
            c = _rat(c)
            if c == 0:
                continue
            acc = tidy.get((i, j), Fraction(0)) + c
            if acc == 0:
                tidy.pop((i, j), None)
            else:
                tidy[(i, j)] = acc
        self._terms = tidy

    # construction helpers ---------------------------------------------------

    @staticmethod
    def zero() -> BiPoly:
        return BiPoly()

    @staticmethod
    def const(c: RatLike) -> BiPoly:
        return BiPoly({(0, 0): c})

    @staticmethod
    def monomial(i: int, j: int, c: RatLike = 1) -> BiPoly:
        return BiPoly({(i, j): c})

    # inspection -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def terms(self) -> Iterator[tuple[tuple[int, int], Rat]]:
        """Terms in graded-lex order, x > y, highest first."""
        for key in sorted(self._terms, key=lambda e: (e[0] + e[1], e[0]), reverse=True):
            yield key, self._terms[key]

    def coeff(self, i: int, j: int) -> Rat:
        return self._terms.get((i, j), Fraction(0))

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._terms)

    def homogeneous_part(self, degree: int) -> BiPoly:
        return BiPoly({e: c for e, c in self._terms.items() if e[0] + e[1] == degree})

    def is_homogeneous(self) -> bool:
        degrees = {i + j for i, j in self._terms}
        return len(degrees) <= 1

    def deg_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: BiPoly) -> BiPoly:
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return BiPoly(merged)

    def __neg__(self) -> BiPoly:
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other: BiPoly) -> BiPoly:
        out: dict[tuple[int, int], Rat] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return BiPoly(out)

    def scale(self, c: RatLike) -> BiPoly:
        c = _rat(c)
        return BiPoly({e: c * v for e, v in self._terms.items()})

    def shift_exponents(self, di: int, dj: int) -> BiPoly:
        """Multiply by the monomial x^di * y^dj (di, dj may be negative if divisible)."""
        return BiPoly({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def diff_x(self) -> BiPoly:
        return BiPoly({(i - 1, j): c * i for (i, j), c in self._terms.items() if i > 0})

    def diff_y(self) -> BiPoly:
        return BiPoly({(i, j - 1): c * j for (i, j), c in self._terms.items() if j > 0})

    def eval(self, x: RatLike, y: RatLike) -> Rat:
        x, y = _rat(x), _rat(y)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * x**i * y**j
        return total

    def eval_float(self, x: float, y: float) -> float:
        total = 0.0
        for (i, j), c in self._terms.items():
            total += float(c) * x**i * y**j
        return total

    def eval_x1(self) -> "UniPoly":
        """The univariate polynomial f(1, u)."""
        coeffs = [Fraction(0)] * (self.deg_y() + 1)
        for (_, j), c in self._terms.items():
            coeffs[j] += c
        return UniPoly(coeffs)

    def eval_y1(self) -> "UniPoly":
        """The univariate polynomial f(v, 1)."""
        coeffs = [Fraction(0)] * (self.deg_x() + 1)
        for (i, _), c in self._terms.items():
            coeffs[i] += c
        return UniPoly(coeffs)

    def compose_powers(self, a: int, b: int) -> BiPoly:
        """Substitute x -> x^a, y -> y^b (a, b >= 1)."""
        return BiPoly({(i * a, j * b): c for (i, j), c in self._terms.items()})

    def substitute(self, px: "BiPoly", py: "BiPoly") -> "BiPoly":
        """Full polynomial substitution x -> px, y -> py."""
        out = BiPoly.zero()
        for (i, j), c in self._terms.items():
            term = BiPoly.const(c)
            for _ in range(i):
                term = term * px
            for _ in range(j):
                term = term * py
            out = out + term
        return out

    # comparison / formatting ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(f: BiPoly) -> str:
    """Canonical printed form, parseable back by parsing.parse_expr.

    Graded-lex term order with x > y; coefficients printed as integers or
    a/b; unit coefficients elided except on the constant term.
    """
    if f.is_zero:
        return "0"
    chunks: list[str] = []
    for (i, j), c in f.terms():
        vars_part = "*".join(
            s
            for s in (
                ("x" if i == 1 else f"x^{i}" if i else ""),
                ("y" if j == 1 else f"y^{j}" if j else ""),
            )
            if s
        )
        mag = abs(c)
        if not vars_part:
            body = str(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{mag}*{vars_part}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


# ---------------------------------------------------------------------------
# univariate


class UniPoly:
    """Dense univariate polynomial over Q, coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RatLike] = ()):
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Rat, ...] = tuple(cs)

    @staticmethod
    def const(c: RatLike) -> UniPoly:
        return UniPoly([c])

    @staticmethod
    def x_power(k: int, c: RatLike = 1) -> UniPoly:
        return UniPoly([0] * k + [c])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> Rat:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Rat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly) -> UniPoly:
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            for b, cb in enumerate(other.coeffs):
                out[a + b] += ca * cb
        return UniPoly(out)

    def scale(self, c: RatLike) -> UniPoly:
        c = _rat(c)
        return UniPoly([c * v for v in self.coeffs])

    def monic(self) -> UniPoly:
        if self.is_zero:
            return self
        return self.scale(1 / self.lc())

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree() - other.degree() + 1)
        rem = list(self.coeffs)
        d, lcd = other.degree(), other.lc()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            factor = rem[-1] / lcd
            q[k] = factor
            for idx in range(d + 1):
                rem[k + idx] -= factor * other.coeffs[idx]
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def rem(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> UniPoly:
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, u: RatLike) -> Rat:
        u = _rat(u)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * u + c
        return total

    def eval_float(self, u: float) -> float:
        total = 0.0
        for c in reversed(self.coeffs):
            total = total * u + float(c)
        return total

    def compose_neg(self) -> UniPoly:
        """f(-u)."""
        return UniPoly([(-1) ** k * c for k, c in enumerate(self.coeffs)])

    def shift_down(self) -> tuple[int, UniPoly]:
        """Strip the u^k factor: return (k, f / u^k)."""
        if self.is_zero:
            return 0, self
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k, UniPoly(self.coeffs[k:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self[k]
            if c == 0:
                continue
            var = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            mag = abs(c)
            body = var if (mag == 1 and var) else (f"{mag}*{var}" if var else str(mag))
            parts.append(("- " if c < 0 else ("+ " if parts else "")) + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q."""
    while not b.is_zero:
        a, b = b, a.rem(b)
    return a.monic() if not a.is_zero else a


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: f = prod g_k^k with the g_k squarefree, pairwise coprime.

    Returns [(g_k, k)] for the nonconstant g_k only.  Characteristic zero, so
    no wild cases.
    """
    if f.degree() < 1:
        return []
    a = uni_gcd(f, f.derivative())
    if a.degree() == 0:
        return [(f.monic(), 1)]
    b = f.exact_div(a)
    c = f.derivative().exact_div(a)
    d = c - b.derivative()
    out: list[tuple[UniPoly, int]] = []
    k = 1
    while b.degree() >= 1:
        g = uni_gcd(b, d)
        if g.degree() >= 1:
            out.append((g.monic(), k))
        b2 = b.exact_div(g) if g.degree() >= 1 else b
        c2 = d.exact_div(g) if g.degree() >= 1 else d
        b, c = b2, c2
        d = c - b.derivative()
        k += 1
    return out


def squarefree_part(f: UniPoly) -> UniPoly:
    g = uni_gcd(f, f.derivative())
    if g.degree() < 1:
        return f.monic()
    return f.exact_div(g).monic()


# ---------------------------------------------------------------------------
# bivariate gcd (content / primitive-part recursion over Q[y][x])


def _x_coeffs(f: BiPoly) -> list[UniPoly]:
    """f as a dense polynomial in x with UniPoly-in-y coefficients."""
    n = f.deg_x()
    cols: list[list[Rat]] = [[] for _ in range(n + 1)]
    for (i, j), c in f._terms.items():
        col = cols[i]
        while len(col) <= j:
            col.append(Fraction(0))
        col[j] += c
    return [UniPoly(col) for col in cols]

def _from_x_coeffs(cols: Sequence[UniPoly]) -> BiPoly:
    terms: dict[tuple[int, int], Rat] = {}
    for i, p in enumerate(cols):
        for j, c in enumerate(p.coeffs):
            if c != 0:
                terms[(i, j)] = c
    return BiPoly(terms)


def _content_x(cols: Sequence[UniPoly]) -> UniPoly:
    g = UniPoly()
    for p in cols:
        if not p.is_zero:
            g = uni_gcd(g, p) if not g.is_zero else p.monic()
        if g.degree() == 0:
            break
    return g


def _pseudo_rem(f: list[UniPoly], g: list[UniPoly]) -> list[UniPoly]:
    """Pseudo-remainder of f by g in (Q[y])[x]; both lc-trimmed, deg f >= deg g."""
    f = list(f)
    dg = len(g) - 1
    lcg = g[-1]
    while len(f) - 1 >= dg and any(not p.is_zero for p in f):
        while f and f[-1].is_zero:
            f.pop()
        if len(f) - 1 < dg:
            break
        k = len(f) - 1 - dg
        top = f[-1]
        f = [p * lcg for p in f]
        for idx in range(dg + 1):
            f[k + idx] = f[k + idx] - top * g[idx]
        f.pop()
    while f and f[-1].is_zero:
        f.pop()
    return f


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """gcd in Q[x, y], normalized to have leading (graded-lex) coefficient 1.

    Primitive PRS over Q[y][x].  Degrees in this project stay small (<= 20),
    so no subresultant bookkeeping is needed.
    """
    if a.is_zero:
        return _normalize_lead(b)
    if b.is_zero:
        return _normalize_lead(a)

    fa, fb = _x_coeffs(a), _x_coeffs(b)
    ca, cb = _content_x(fa), _content_x(fb)
    content = uni_gcd(ca, cb)

    pa = [p.exact_div(ca) for p in fa]
    pb = [p.exact_div(cb) for p in fb]
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while any(not p.is_zero for p in pb):
        r = _pseudo_rem(pa, pb)
        if not r:
            pa, pb = pb, []
            break
        cr = _content_x(r)
        pa, pb = pb, [p.exact_div(cr) for p in r]
    # pa is the primitive gcd in x; restore the y-content
    cols = [p * content for p in pa] if content.degree() >= 1 else pa
    return _normalize_lead(_from_x_coeffs(cols))


def _normalize_lead(f: BiPoly) -> BiPoly:
    if f.is_zero:
        return f
    lead = next(iter(f.terms()))[1]
    return f.scale(1 / lead)


def bipoly_divides(d: BiPoly, f: BiPoly) -> bool:
    q, r = bipoly_divmod(f, d)
    return r.is_zero


def bipoly_divmod(f: BiPoly, d: BiPoly) -> tuple[BiPoly, BiPoly]:
    """Division in Q[x,y] by graded-lex leading terms; exact when d | f."""
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    (di, dj), dc = next(iter(d.terms()))
    q = BiPoly.zero()
    r = f
    while not r.is_zero:
        (ri, rj), rc = next(iter(r.terms()))
        if ri >= di and rj >= dj:
            t = BiPoly.monomial(ri - di, rj - dj, rc / dc)
            q = q + t
            r = r - t * d
        else:
            break
    return q, r


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class PolySystem:
    """Planar polynomial vector field x' = p(x, y), y' = q(x, y)."""

    p: BiPoly
    q: BiPoly

    def degree(self) -> int:
        return max(self.p.degree(), self.q.degree())

    def is_homogeneous(self) -> bool:
        return (
            self.p.is_homogeneous()
            and self.q.is_homogeneous()
            and (self.p.is_zero or self.q.is_zero or self.p.degree() == self.q.degree())
        )

    def eval(self, x: RatLike, y: RatLike) -> tuple[Rat, Rat]:
        return self.p.eval(x, y), self.q.eval(x, y)

    def eval_float(self, x: float, y: float) -> tuple[float, float]:
        return self.p.eval_float(x, y), self.q.eval_float(x, y)

    def __str__(self) -> str:
        return f"dx/dt = {format_poly(self.p)}\ndy/dt = {format_poly(self.q)}"


def coprime_check(system: PolySystem) -> tuple[bool, BiPoly | None]:
    """True plus None when gcd(p, q) is constant; else False plus the gcd."""
    g = bipoly_gcd(system.p, system.q)
    if g.is_zero or g.degree() <= 0:
        return True, None
    return False, g


def eval_poly(f: BiPoly, x: RatLike, y: RatLike) -> Rat:
    return f.eval(x, y)
