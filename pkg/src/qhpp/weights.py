"""Weight-vector detection and graded decomposition.

A planar system x' = p, y' = q is quasi-homogeneous when there are
positive integers (s1, s2, d) such that every monomial x^i y^j of p
satisfies i*s1 + j*s2 = s1 + d - 1 and every monomial of q satisfies
i*s1 + j*s2 = s2 + d - 1.  The set of such triples, rewritten over
(s1, s2, d-1), is the kernel of an integer matrix; everything below is a
thin layer over an exact null-space computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from qhpp.errors import InternalInvariantError, NotQuasiHomogeneousError
from qhpp.poly import BiPoly, PolySystem, Rat

__all__ = [
    "WeightVector",
    "WeightFamily",
    "QhStructure",
    "weight_vectors",
    "weight_satisfies",
    "minimality_audit",
    "decompose",
]


@dataclass(frozen=True)
class WeightVector:
    s1: int
    s2: int
    d: int
    minimal: bool = False

    def triple(self) -> tuple[int, int, int]:
        return (self.s1, self.s2, self.d)

    def __str__(self) -> str:
        return f"({self.s1}, {self.s2}, {self.d})"


@dataclass(frozen=True)
class WeightFamily:
    """All weight vectors of a system: the minimal one, a couple of its
    scalings, and a closed-form description of the full solution set."""

    vectors: tuple[WeightVector, ...]
    description: str

    @property
    def minimal(self) -> WeightVector:
        return self.vectors[0]


def weight_satisfies(w: WeightVector, system: PolySystem) -> bool:
    """Check the defining monomial equations directly."""
    for (i, j), _ in system.p.terms():
        if i * w.s1 + j * w.s2 != w.s1 + w.d - 1:
            return False
    for (i, j), _ in system.q.terms():
        if i * w.s1 + j * w.s2 != w.s2 + w.d - 1:
            return False
    return True


# ---------------------------------------------------------------------------
# exact null space


def _null_space(rows: list[tuple[int, int, int]]) -> list[tuple[Rat, Rat, Rat]]:
    """Basis of the rational null space of a matrix with 3 columns."""
    mat = [[Fraction(v) for v in row] for row in rows]
    ncols = 3
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        lead = mat[r][c]
        mat[r] = [v / lead for v in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                factor = mat[k][c]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pc in enumerate(pivots):
            vec[pc] = -mat[prow][fc]
        basis.append(tuple(vec))
    return basis


def _primitive(vec: tuple[Rat, Rat, Rat]) -> tuple[int, int, int]:
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)  # type: ignore[return-value]


def _weight_rows(system: PolySystem) -> list[tuple[int, int, int]]:
    rows = []
    for (i, j), _ in system.p.terms():
        rows.append((i - 1, j, -1))
    for (i, j), _ in system.q.terms():
        rows.append((i, j - 1, -1))
    return rows


def weight_vectors(system: PolySystem) -> WeightFamily:
    """Minimal weight vector plus low-order scalings, or raise.

    The unknowns are (s1, s2, e) with e = d - 1; each monomial contributes
    one homogeneous linear equation.  Raises NotQuasiHomogeneousError when
    the kernel contains no positive solution.
    """
    basis = _null_space(_weight_rows(system))

    if not basis:
        raise NotQuasiHomogeneousError("the weight equations only admit the zero solution")

    if len(basis) == 1:
        v1, v2, e = _primitive(basis[0])
        if v1 < 0 and v2 < 0:
            v1, v2, e = -v1, -v2, -e
        if v1 <= 0 or v2 <= 0:
            raise NotQuasiHomogeneousError("the weight solution line has no positive direction")
        if e < 0:
            raise NotQuasiHomogeneousError("every solution forces degree d < 1")
        minimal = WeightVector(v1, v2, e + 1, minimal=True)
        _check_minimal_invariants(minimal)
        vectors = (minimal,) + tuple(
            WeightVector(r * v1, r * v2, r * e + 1) for r in (2, 3)
        )
        description = f"all weight vectors: (r*{v1}, r*{v2}, r*{e} + 1) for integers r >= 1"
        return WeightFamily(vectors, description)

    if len(basis) == 2:
        # only the linear diagonal system x' = a*x, y' = b*y gets here
        if system.p.support() != {(1, 0)} or system.q.support() != {(0, 1)}:
            raise InternalInvariantError("two-parameter weight family on a non-diagonal system")
        vectors = (
            WeightVector(1, 1, 1, minimal=True),
            WeightVector(2, 1, 1),
            WeightVector(1, 2, 1),
        )
        return WeightFamily(vectors, "all weight vectors: (s1, s2, 1) for any integers s1, s2 >= 1")

    raise InternalInvariantError("weight equation matrix with empty row set")


def _check_minimal_invariants(w: WeightVector) -> None:
    if gcd(w.s1, w.s2) != 1:
        raise InternalInvariantError(f"minimal weight vector {w} with non-coprime weights")
    if w.s1 % 2 == 0 and w.s2 % 2 == 0:
        raise InternalInvariantError(f"minimal weight vector {w} with both weights even")


def minimality_audit(w: WeightVector, system: PolySystem) -> bool:
    """Can w be divided down by r = gcd(s1, s2) and still satisfy the
    monomial equations?  True means w really is minimal."""
    if not weight_satisfies(w, system):
        raise ValueError(f"{w} is not a weight vector of the system")
    r = gcd(w.s1, w.s2)
    if r == 1:
        return True
    if (w.d - 1) % r != 0:
        return True
    candidate = WeightVector(w.s1 // r, w.s2 // r, (w.d - 1) // r + 1)
    return not weight_satisfies(candidate, system)


# ---------------------------------------------------------------------------
# graded decomposition


@dataclass(frozen=True)
class QhStructure:
    """Degree-graded block structure of a quasi-homogeneous system.

    With s1 > s2 (coordinates swapped first when needed) the weights
    factor as s1 = (varsigma + kappa)/s, s2 = kappa/s; the primitive
    choice here always has s = 1.  parts lists (total degree, block) in
    descending degree; each block holds at most one monomial per
    component.  degree_one marks the d = 1 family, which shares the same
    block formulas but is handled separately downstream.
    """

    p: int
    varsigma: int
    kappa: int
    s: int
    weight: WeightVector
    swapped: bool
    degree_one: bool
    parts: tuple[tuple[int, PolySystem], ...]

    def reassemble(self) -> PolySystem:
        total_p = BiPoly.zero()
        total_q = BiPoly.zero()
        for _, block in self.parts:
            total_p = total_p + block.p
            total_q = total_q + block.q
        return PolySystem(total_p, total_q)

    def structural_pieces(self) -> tuple[PolySystem, PolySystem, PolySystem]:
        """(top block, second block, summed tail): the coarse three-piece
        view of the grading, tail possibly spanning several degrees."""
        top = self.parts[0][1]
        second = self.parts[1][1] if len(self.parts) > 1 else PolySystem(BiPoly.zero(), BiPoly.zero())
        tail_p = BiPoly.zero()
        tail_q = BiPoly.zero()
        for _, block in self.parts[2:]:
            tail_p = tail_p + block.p
            tail_q = tail_q + block.q
        return top, second, PolySystem(tail_p, tail_q)

    def family_name(self) -> str:
        if self.degree_one:
            return "X_1"
        return f"X_{self.p}{self.varsigma}{self.kappa}"


def swap_system(system: PolySystem) -> PolySystem:
    """Exchange the roles of x and y."""
    sp = BiPoly({(j, i): c for (i, j), c in system.p.terms()})
    sq = BiPoly({(j, i): c for (i, j), c in system.q.terms()})
    return PolySystem(sq, sp)


def decompose(system: PolySystem, w: WeightVector) -> QhStructure:
    """Split a quasi-homogeneous system into its graded blocks.

    Requires the minimal weight vector.  Homogeneous systems (s1 = s2 = 1)
    are a single block and are not decomposed here.
    """
    if not weight_satisfies(w, system):
        raise ValueError(f"{w} is not a weight vector of the system")
    if w.s1 == w.s2:
        raise ValueError("decompose needs s1 != s2; homogeneous systems are a single block")

    swapped = w.s1 < w.s2
    if swapped:
        system = swap_system(system)
        w = WeightVector(w.s2, w.s1, w.d, w.minimal)

    varsigma = w.s1 - w.s2
    kappa = w.s2
    if gcd(varsigma, kappa) != 1:
        raise InternalInvariantError("non-primitive (varsigma, kappa) from a minimal weight vector")

    degrees = sorted(
        {i + j for (i, j), _ in system.p.terms()} | {i + j for (i, j), _ in system.q.terms()},
        reverse=True,
    )
    parts = []
    for t in degrees:
        block_p = system.p.homogeneous_part(t)
        block_q = system.q.homogeneous_part(t)
        block = PolySystem(block_p, block_q)
        if len(block_p.support()) > 1 or len(block_q.support()) > 1:
            raise InternalInvariantError("graded block with more than one monomial per component")
        if not weight_satisfies(w, block):
            raise InternalInvariantError("graded block breaks the weight equations")
        parts.append((t, block))

    top_p, top_q = parts[0][1].p, parts[0][1].q
    if not top_p.is_zero:
        p_exp = next(iter(top_p.support()))[0]
    else:
        p_exp = next(iter(top_q.support()))[0] + 1

    return QhStructure(
        p=p_exp,
        varsigma=varsigma,
        kappa=kappa,
        s=1,
        weight=w,
        swapped=swapped,
        degree_one=(w.d == 1),
        parts=tuple(parts),
    )
