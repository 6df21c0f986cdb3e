"""GL(2, Z) equivalence of rationals, infinity and quadratic irrationals.

Two irrationals are equivalent under fractional linear transformations with
an integer matrix of determinant +-1 iff their continued fraction expansions
agree from some point on.  For quadratic irrationals this reduces to the
minimal periods being cyclic rotations of each other.
"""
from __future__ import annotations

import math
from fractions import Fraction

from sympy.ntheory.continued_fraction import continued_fraction_periodic

from ..scalar import QuadraticNumber, as_scalar

__all__ = ["INFINITY", "periodic_expansion", "minimal_period", "gl2z_equivalent"]

INFINITY = "inf"


def _is_inf(x) -> bool:
    return x is None or (isinstance(x, str) and x.strip().lower() in ("inf", "∞", "infinity"))


def periodic_expansion(x: QuadraticNumber) -> tuple[list[int], list[int]]:
    """(pre-period, period) of the regular continued fraction of ``x``."""
    L = math.lcm(x.a.denominator, x.b.denominator)
    A = int(x.a * L)
    B = int(x.b * L)
    cf = continued_fraction_periodic(A, L, B * B * x.d, 1 if B > 0 else -1)
    if cf and isinstance(cf[-1], list):
        return [int(t) for t in cf[:-1]], [int(t) for t in cf[-1]]
    raise ValueError("expansion of a quadratic irrational must be periodic")


def minimal_period(period: list[int]) -> tuple[int, ...]:
    n = len(period)
    for k in range(1, n + 1):
        if n % k == 0 and period == period[:k] * (n // k):
            return tuple(period[:k])
    return tuple(period)


def gl2z_equivalent(x, y) -> bool:
    """Whether some integer matrix of determinant +-1 maps ``x`` to ``y``."""
    xs = None if _is_inf(x) else as_scalar(x)
    ys = None if _is_inf(y) else as_scalar(y)
    x_rat = xs is None or isinstance(xs, Fraction)
    y_rat = ys is None or isinstance(ys, Fraction)
    if x_rat and y_rat:
        return True
    if x_rat != y_rat:
        return False
    if xs.d != ys.d:
        return False
    px = minimal_period(periodic_expansion(xs)[1])
    py = minimal_period(periodic_expansion(ys)[1])
    if len(px) != len(py):
        return False
    return any(py == px[k:] + px[:k] for k in range(len(px)))
