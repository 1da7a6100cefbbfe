"""Exact hypersurface-singularity invariants.

Values come back as ``fractions.Fraction`` (``math.inf`` for an infinite minimal exponent).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from ._core import (
    CapsExceeded,
    DimensionMismatch,
    InputError,
    InvariantViolation,
    ParseError,
    SingulactError,
    UnsupportedClass,
    lct_json,
    mult_json,
    poly_json,
    run,
    scan_json,
)

__all__ = [
    "CapsExceeded",
    "DimensionMismatch",
    "InputError",
    "InvariantViolation",
    "ParseError",
    "SingulactError",
    "UnsupportedClass",
    "alpha",
    "beta",
    "lct",
    "milnor",
    "multiplicity",
    "report",
    "run",
    "scan",
    "to_value",
]


def to_value(text: str) -> Fraction | float:
    return math.inf if text == "inf" else Fraction(text)


def report(kind: str, expr: str, vars: str, **kw) -> dict:
    """The full report as a dict, as printed by ``singulact <kind> --json``."""
    if kind == "lct":
        return json.loads(lct_json(expr, vars, kw.get("certificate", False)))
    if kind == "multiplicity":
        return json.loads(mult_json(expr, vars))
    return json.loads(poly_json(kind, expr, vars, kw.get("include_f", False)))


def lct(ideal: str, vars: str) -> Fraction:
    return to_value(report("lct", ideal, vars)["value"])


def beta(poly: str, vars: str, include_f: bool = False) -> Fraction:
    return to_value(report("beta", poly, vars, include_f=include_f)["value"])


def alpha(poly: str, vars: str) -> Fraction | float:
    return to_value(report("alpha", poly, vars)["value"])


def milnor(poly: str, vars: str) -> int:
    return int(to_value(report("milnor", poly, vars)["value"]))


def multiplicity(ideal: str, vars: str) -> int:
    return int(to_value(report("multiplicity", ideal, vars)["value"]))


def scan(family: str, n: int, max_exp: int, check: str, threads: int = 1) -> dict:
    return json.loads(scan_json(family, n, max_exp, check, threads))
