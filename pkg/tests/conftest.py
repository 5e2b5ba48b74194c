"""Shared helpers: parsing shorthand and deterministic catalog sampling."""
from __future__ import annotations

import random

from hypothesis import settings

from qhpp.catalog import quintic_catalog, random_instance
from qhpp.parsing import parse_system
from qhpp.poly import PolySystem

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


def sys_of(p: str, q: str) -> PolySystem:
    return parse_system(f"dx/dt = {p}\ndy/dt = {q}\n")


def catalog_samples(per_family: int, seed: int):
    """Coprime random instances, per_family from each quintic family."""
    rng = random.Random(seed)
    samples = []
    for spec in quintic_catalog():
        for _ in range(per_family):
            system, values = random_instance(spec, rng)
            samples.append((spec, system, values))
    return samples
