"""Reference computations written independently of the library algorithms."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product


def raw_eval(left, points, right, t):
    """Evaluate from raw data: germs as (slope, intercept), points as pairs."""
    if not points or t <= points[0][0]:
        if points and t == points[0][0]:
            return points[0][1]
        s, c = left
        return s * t + c
    if t >= points[-1][0]:
        s, c = right
        return s * t + c
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x0 <= t <= x1:
            return y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    raise AssertionError("unreachable")


def map_eval(f, t):
    return raw_eval((f.left.slope, f.left.intercept), f.points, (f.right.slope, f.right.intercept), t)


def refined_grid(*maps, extra=()):
    """All breakpoints, their images, midpoints between consecutive ones and
    points beyond both ends."""
    pts = set(extra)
    for f in maps:
        for x, y in f.points:
            pts.add(x)
            pts.add(y)
    pts = sorted(pts)
    if not pts:
        pts = [Fraction(0)]
    grid = [pts[0] - 3, pts[0] - Fraction(1, 7)]
    for a, b in zip(pts, pts[1:]):
        grid += [a, (a + b) / 2, a + (b - a) / 3]
    grid += [pts[-1], pts[-1] + Fraction(1, 5), pts[-1] + 4]
    return grid


def agree_on_grid(f, g, fn, grid) -> bool:
    """``f`` agrees with the function ``fn`` on every grid point."""
    return all(map_eval(f, t) == fn(t) for t in grid)


# -- GL(2, Z) by bounded search ------------------------------------------------------

def _parts(x):
    """(rational part, irrational coefficient, radicand) of a library scalar."""
    if isinstance(x, Fraction):
        return x, Fraction(0), None
    return x.a, x.b, x.d


def gl2z_witness(x, y, bound: int = 20):
    """Search integer matrices with entries in [-bound, bound] and determinant
    +-1 sending ``x`` to ``y``; ``None`` means no witness in the box."""
    if x is None or y is None or isinstance(x, Fraction) and isinstance(y, Fraction):
        return _rational_witness(x, y, bound)
    x1, x2, dx = _parts(x)
    y1, y2, dy = _parts(y)
    if dx is None or dy is None or dx != dy:
        return None
    D = dx
    rng = range(-bound, bound + 1)
    for c, d in product(rng, rng):
        # y (c x + d) = a x + b, split into rational and sqrt(D) parts
        u1, u2 = c * x1 + d, c * x2
        if u1 == 0 and u2 == 0:
            continue
        w1 = y1 * u1 + y2 * u2 * D
        w2 = y1 * u2 + y2 * u1
        a = w2 / x2
        b = w1 - a * x1
        if a.denominator != 1 or b.denominator != 1:
            continue
        a, b = int(a), int(b)
        if abs(a) > bound or abs(b) > bound:
            continue
        if a * d - b * c in (1, -1):
            return (a, b, c, d)
    return None


def _as_pair(x):
    if x is None:
        return 1, 0
    x = Fraction(x)
    return x.numerator, x.denominator


def _rational_witness(x, y, bound):
    p, q = _as_pair(x)
    r, s = _as_pair(y)
    rng = range(-bound, bound + 1)
    for sign in (1, -1):
        rows1 = [(a, b) for a, b in product(rng, rng) if a * p + b * q == sign * r]
        rows2 = [(c, d) for c, d in product(rng, rng) if c * p + d * q == sign * s]
        for (a, b) in rows1:
            for (c, d) in rows2:
                if a * d - b * c in (1, -1):
                    return (a, b, c, d)
    return None


# -- lattice index by counting ---------------------------------------------------------

def index_by_counting(outer, inner) -> int:
    """Index of the full-rank lattice spanned by ``inner`` in the one spanned
    by ``outer`` (both 2x2 integer row bases): the number of outer points in a
    half-open fundamental parallelogram of ``inner``."""
    (a, b), (c, d) = inner
    det = a * d - b * c
    assert det != 0
    (p, q), (r, s) = outer
    odet = p * s - q * r
    xs = [0, a, c, a + c]
    ys = [0, b, d, b + d]
    count = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            # coordinates in the inner basis
            u = Fraction(x * d - y * c, det)
            v = Fraction(y * a - x * b, det)
            if not (0 <= u < 1 and 0 <= v < 1):
                continue
            # membership in the outer lattice
            m = Fraction(x * s - y * r, odet)
            n = Fraction(y * p - x * q, odet)
            if m.denominator == 1 and n.denominator == 1:
                count += 1
    return count


def gcd_all(xs) -> int:
    g = 0
    for x in xs:
        g = math.gcd(g, x)
    return g
