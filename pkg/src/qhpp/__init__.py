"""Exact analysis of planar quasi-homogeneous polynomial vector fields.

The package takes a polynomial system dx/dt = p(x,y), dy/dt = q(x,y) with
rational coefficients, decides whether it is quasi-homogeneous, reduces it
to a homogeneous system through a power substitution, classifies the origin
and the behaviour at infinity with exact arithmetic, and emits a global
phase-portrait code.  A numerical integration oracle cross-checks the
symbolic verdicts.
"""

from __future__ import annotations

from qhpp.parsing import parse_system, parse_system_file
from qhpp.poly import BiPoly, PolySystem, Rat, UniPoly
from qhpp.report import AnalysisReport, analyze, to_json
from qhpp.weights import WeightVector, weight_vectors

__all__ = [
    "AnalysisReport",
    "BiPoly",
    "PolySystem",
    "Rat",
    "UniPoly",
    "WeightVector",
    "analyze",
    "parse_system",
    "parse_system_file",
    "to_json",
    "weight_vectors",
]

__version__ = "0.1.0"
