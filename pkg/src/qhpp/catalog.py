"""The fifteen quintic quasi-homogeneous families.

Each family is determined by the top x-exponent p and the primitive
degree-drop pair (varsigma, kappa): weights are s1 = varsigma + kappa,
s2 = kappa, monomial supports follow the graded chain, and the
nonvanishing conditions are exactly what keeps an instance coprime, of
full degree, and inside the family.  The enumeration below regenerates
the whole table from those three integers; nothing is hand-listed except
the degree n = 5.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from qhpp.errors import InternalInvariantError
from qhpp.poly import BiPoly, PolySystem, Rat, RatLike, coprime_check
from qhpp.weights import WeightVector

_N = 5


def _coeff_name(prefix: str, i: int, j: int) -> str:
    return f"{prefix}{i}{j}"


@dataclass(frozen=True)
class FamilySpec:
    """One catalog family: supports, weights, nonvanishing condition."""

    name: str
    p: int
    varsigma: int
    kappa: int
    weight: WeightVector
    p_support: tuple[tuple[int, int], ...]
    q_support: tuple[tuple[int, int], ...]
    condition: tuple[str, ...]  # product of these coefficients must be nonzero

    def coefficient_names(self) -> tuple[str, ...]:
        return tuple(_coeff_name("a", i, j) for i, j in self.p_support) + tuple(
            _coeff_name("b", i, j) for i, j in self.q_support
        )

    def instantiate(self, values: Mapping[str, RatLike]) -> PolySystem:
        """Build a concrete system; unspecified coefficients are zero.

        Rejects unknown names and zero values on condition coefficients.
        """
        known = set(self.coefficient_names())
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"coefficients {sorted(unknown)} not in family {self.name}")
        for name in self.condition:
            if Fraction(values.get(name, 0)) == 0:
                raise ValueError(f"family {self.name} requires {name} != 0")
        p_terms = {}
        for i, j in self.p_support:
            c = Fraction(values.get(_coeff_name("a", i, j), 0))
            if c != 0:
                p_terms[(i, j)] = c
        q_terms = {}
        for i, j in self.q_support:
            c = Fraction(values.get(_coeff_name("b", i, j), 0))
            if c != 0:
                q_terms[(i, j)] = c
        return PolySystem(BiPoly(p_terms), BiPoly(q_terms))

    def unit_instance(self) -> PolySystem:
        """All supported coefficients set to 1.  Handy for weight checks;
        note a unit instance is not always coprime."""
        return self.instantiate({name: 1 for name in self.coefficient_names()})


def _family_from(p: int, varsigma: int, kappa: int) -> FamilySpec | None:
    """Build the family for one (p, varsigma, kappa), or None if the
    combination is structurally invalid."""
    s1, s2 = varsigma + kappa, kappa
    a_sup: list[tuple[int, int]] = [(p, _N - p)]
    b_sup: list[tuple[int, int]] = [(p - 1, _N + 1 - p)] if p >= 1 else []
    t = 1
    while True:
        ia, ja = p + t * kappa, _N - t * varsigma - p - t * kappa
        ib, jb = ia - 1, ja + 1
        hit = False
        if ja >= 0:
            a_sup.append((ia, ja))
            hit = True
        if ib >= 0 and jb >= 0:
            b_sup.append((ib, jb))
            hit = True
        if not hit:
            break
        t += 1

    base_count = 1 if p == 0 else 2
    if len(a_sup) + len(b_sup) <= base_count:
        return None  # top block only: plain homogeneous, not a catalog family
    d = (p - 1) * s1 + (_N - p) * s2 + 1
    if d < 1:
        return None
    support = a_sup + b_sup
    if all(i >= 1 for i, _ in support) or all(j >= 1 for _, j in support):
        return None  # every instance would share a monomial factor

    condition = set()
    if p == 0:
        condition.add(_coeff_name("a", 0, _N))
    if len(a_sup) == 1:
        condition.add(_coeff_name("a", *a_sup[0]))
    if len(b_sup) == 1:
        condition.add(_coeff_name("b", *b_sup[0]))
    for this, other, prefix in ((a_sup, b_sup, "a"), (b_sup, a_sup, "b")):
        if all(i >= 1 for i, _ in other):
            free = [m for m in this if m[0] == 0]
            if len(free) != 1:
                raise InternalInvariantError("expected a unique x-free monomial")
            condition.add(_coeff_name(prefix, *free[0]))
        if all(j >= 1 for _, j in other):
            free = [m for m in this if m[1] == 0]
            if len(free) != 1:
                raise InternalInvariantError("expected a unique y-free monomial")
            condition.add(_coeff_name(prefix, *free[0]))

    name = "X_1" if d == 1 else f"X_{p}{varsigma}{kappa}"
    return FamilySpec(
        name=name,
        p=p,
        varsigma=varsigma,
        kappa=kappa,
        weight=WeightVector(s1, s2, d, minimal=True),
        p_support=tuple(sorted(a_sup)),
        q_support=tuple(sorted(b_sup)),
        condition=tuple(sorted(condition)),
    )


def quintic_catalog() -> tuple[FamilySpec, ...]:
    """All quintic families, degree-one family last."""
    regular: list[FamilySpec] = []
    degree_one: list[FamilySpec] = []
    for p in range(_N):
        for varsigma in range(1, _N + 2):
            for kappa in range(1, _N + 2):
                if gcd(varsigma, kappa) != 1:
                    continue
                spec = _family_from(p, varsigma, kappa)
                if spec is None:
                    continue
                (degree_one if spec.weight.d == 1 else regular).append(spec)
    out = tuple(regular + degree_one)
    if len(out) != 15:
        raise InternalInvariantError(f"quintic enumeration produced {len(out)} families")
    return out


def family_by_name(name: str) -> FamilySpec:
    for spec in quintic_catalog():
        if spec.name == name:
            return spec
    raise KeyError(name)


def random_instance(
    spec: FamilySpec,
    rng: random.Random,
    max_tries: int = 50,
) -> tuple[PolySystem, dict[str, Rat]]:
    """Random coprime member of the family, all coefficients nonzero."""
    for _ in range(max_tries):
        values: dict[str, Rat] = {}
        for name in spec.coefficient_names():
            num = rng.choice([k for k in range(-9, 10) if k != 0])
            den = rng.randint(1, 4)
            values[name] = Fraction(num, den)
        system = spec.instantiate(values)
        ok, _ = coprime_check(system)
        if ok:
            return system, values
    raise InternalInvariantError(f"could not sample a coprime {spec.name} instance")
