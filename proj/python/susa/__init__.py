"""Exact sexagesimal arithmetic and coefficient reconstruction.

Rationals come back as fractions.Fraction, structured results as dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, Sexagesimal, evaluate, run_cli

__all__ = [
    "DomainError",
    "Sexagesimal",
    "babylonian_area",
    "evaluate",
    "fraction",
    "report",
    "run_cli",
    "solve_quadratic",
    "sqrt_trace",
    "verify",
]


def fraction(x):
    """Rational value of a Sexagesimal."""
    return Fraction(x.rational())


def sqrt_trace(n, steps=5, trunc=None, places=4):
    trace = json.loads(_core.sqrt_trace(str(Fraction(n)), steps, trunc, places))
    for step in trace["steps"]:
        step["exact"] = Fraction(step["exact"])
    return trace


def solve_quadratic(p, q):
    return json.loads(_core.solve_quadratic(str(p), str(q)))


def babylonian_area(figure, profile="coarse", sqrt21=None, places=4):
    area = json.loads(_core.babylonian_area(figure, profile, sqrt21, places))
    area["rational"] = Fraction(area["rational"])
    return area


def verify(record_id, profile=None, sqrt21=None):
    return json.loads(_core.verify(record_id, profile, sqrt21))


def report(as_json=False):
    text = _core.report(as_json)
    return json.loads(text) if as_json else text
