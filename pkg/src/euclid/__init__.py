"""Exact ruler-and-compass plane geometry over constructible reals."""
from .cfield import CReal, sqrt
from .errors import (
    AssertionFailed,
    DepthLimitExceeded,
    DivisionByZero,
    EuclidError,
    NegativeRadicand,
    ParseError,
    PreconditionViolated,
)
from .model import Decision, Flag, Line, Point, Ray

__version__ = "0.1.0"

__all__ = [
    "CReal", "sqrt", "AssertionFailed", "DepthLimitExceeded", "DivisionByZero", "EuclidError",
    "NegativeRadicand", "ParseError", "PreconditionViolated", "Decision", "Flag", "Line", "Point", "Ray",
]
