"""Groebner bases for left ideals of differential operators with polynomial coefficients."""

from ._core import (
    ComputationCapExceeded,
    InvariantViolation,
    ParseError,
    compare,
    groebner,
    is_groebner,
    multiply,
    reduce,
    run,
    syzygies,
)

__all__ = [
    "ComputationCapExceeded",
    "InvariantViolation",
    "ParseError",
    "compare",
    "groebner",
    "is_groebner",
    "multiply",
    "reduce",
    "run",
    "syzygies",
]
