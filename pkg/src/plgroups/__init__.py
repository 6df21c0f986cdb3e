"""Exact computations with groups of piecewise-linear homeomorphisms."""
from .plmap import (
    AffineGerm,
    Compact,
    HalfLine,
    Line,
    PLMap,
    canonicalize,
    compose,
    conjugate,
    evaluate,
    fix_support,
    germ,
    identity,
    invert,
)
from .scalar import QuadraticNumber, parse_scalar, sqrt

__version__ = "0.1.0"

__all__ = [
    "AffineGerm",
    "Compact",
    "HalfLine",
    "Line",
    "PLMap",
    "QuadraticNumber",
    "canonicalize",
    "compose",
    "conjugate",
    "evaluate",
    "fix_support",
    "germ",
    "identity",
    "invert",
    "parse_scalar",
    "sqrt",
]
