"""Finitary piecewise-linear homeomorphisms of the real line.

Every map is stored in a canonical form: an affine germ valid to the left of
the first breakpoint, the list of breakpoints with their images, and an
affine germ valid to the right of the last breakpoint.  A point is kept only
if the slope actually changes there, so two maps are equal exactly when their
canonical forms are equal field by field.

Maps supported in a compact interval or in the half line are the maps that
are the identity outside that interval; :func:`germ` reads off the endpoint
germs relative to such an interval.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .scalar import Scalar, as_scalar, format_scalar

__all__ = [
    "AffineGerm",
    "Compact",
    "HalfLine",
    "Line",
    "Interval",
    "PLMap",
    "FixSupportReport",
    "NotPreserved",
    "canonicalize",
    "identity",
    "compose",
    "invert",
    "conjugate",
    "fix_support",
    "germ",
    "slope_left",
    "slope_right",
    "breakpoints",
    "segment_slopes",
]

ONE = Fraction(1)
ZERO = Fraction(0)


class NotPreserved(ValueError):
    """The map is not the identity outside the interval it is asked about."""


@dataclass(frozen=True)
class AffineGerm:
    """The affine map ``t -> slope * t + intercept``."""

    slope: Scalar
    intercept: Scalar

    def __post_init__(self):
        if self.slope == 0:
            raise ValueError("affine germ with slope 0 is not a homeomorphism")

    def __call__(self, t):
        return self.slope * t + self.intercept

    def then(self, other: "AffineGerm") -> "AffineGerm":
        """``other ∘ self``."""
        return AffineGerm(other.slope * self.slope, other.slope * self.intercept + other.intercept)

    def after(self, other: "AffineGerm") -> "AffineGerm":
        """``self ∘ other``."""
        return other.then(self)

    def inverse(self) -> "AffineGerm":
        return AffineGerm(ONE / self.slope, -self.intercept / self.slope)

    @property
    def is_identity(self) -> bool:
        return self.slope == 1 and self.intercept == 0

    @property
    def is_translation(self) -> bool:
        return self.slope == 1

    @property
    def amplitude(self) -> Scalar:
        """Translation amplitude; only defined for slope 1."""
        if self.slope != 1:
            raise ValueError(f"germ with slope {format_scalar(self.slope)} is not a translation")
        return self.intercept

    def __str__(self):
        return f"t -> {format_scalar(self.slope)}*t + {format_scalar(self.intercept)}"


IDENTITY_GERM = AffineGerm(ONE, ZERO)


# -- intervals ----------------------------------------------------------------

@dataclass(frozen=True)
class Compact:
    """The compact interval ``[a, b]``; ``a`` defaults to 0."""

    b: Scalar
    a: Scalar = ZERO

    def __post_init__(self):
        object.__setattr__(self, "b", as_scalar(self.b))
        object.__setattr__(self, "a", as_scalar(self.a))
        if not self.b > self.a:
            raise ValueError("compact interval needs a < b")

    def contains(self, t) -> bool:
        return self.a <= t <= self.b

    def interior_contains(self, t) -> bool:
        return self.a < t < self.b


@dataclass(frozen=True)
class HalfLine:
    """The half line ``[0, +inf)``."""

    def contains(self, t) -> bool:
        return t >= 0

    def interior_contains(self, t) -> bool:
        return t > 0


@dataclass(frozen=True)
class Line:
    """The whole real line."""

    def contains(self, t) -> bool:
        return True

    def interior_contains(self, t) -> bool:
        return True


Interval = Union[Compact, HalfLine, Line]


# -- the map ------------------------------------------------------------------

@dataclass(frozen=True)
class PLMap:
    """Canonical finitary PL homeomorphism of the line.

    Do not call the constructor with raw data; use :func:`canonicalize` or a
    constructor from :mod:`plgroups.constructions`.
    """

    left: AffineGerm
    points: tuple
    right: AffineGerm

    @property
    def orientation(self) -> int:
        return 1 if self.left.slope > 0 else -1

    @property
    def is_identity(self) -> bool:
        return not self.points and self.left.is_identity

    def __call__(self, t):
        return evaluate(self, t)

    def __matmul__(self, other: "PLMap") -> "PLMap":
        return compose(self, other)

    def inverse(self) -> "PLMap":
        return invert(self)

    def key(self) -> tuple:
        """Hashable canonical serialization used for deduplication."""
        return (
            format_scalar(self.left.slope),
            format_scalar(self.left.intercept),
            tuple((format_scalar(x), format_scalar(y)) for x, y in self.points),
            format_scalar(self.right.slope),
            format_scalar(self.right.intercept),
        )

    def __str__(self):
        if not self.points:
            return f"PLMap({self.left})"
        pts = ", ".join(f"({format_scalar(x)}, {format_scalar(y)})" for x, y in self.points)
        return f"PLMap[{pts}; left slope {format_scalar(self.left.slope)}, right slope {format_scalar(self.right.slope)}]"


def identity() -> PLMap:
    return PLMap(IDENTITY_GERM, (), IDENTITY_GERM)


def _slope(p, q):
    return (q[1] - p[1]) / (q[0] - p[0])


def canonicalize(
    points: Iterable[Sequence],
    left: Optional[AffineGerm] = None,
    right: Optional[AffineGerm] = None,
) -> PLMap:
    """Build the canonical map through ``points`` with the given end germs.

    Missing germs default to the slope-1 (or slope -1 for decreasing data)
    germ through the adjacent point.  Raises ``ValueError`` for repeated or
    unsorted abscissae, non-monotone ordinates, or germs that do not meet
    the adjacent point.
    """
    pts = [(as_scalar(x), as_scalar(y)) for x, y in points]
    for p, q in zip(pts, pts[1:]):
        if not p[0] < q[0]:
            raise ValueError("interpolation abscissae must be strictly increasing")
    if not pts:
        if left is None and right is None:
            return identity()
        left = left if left is not None else right
        right = right if right is not None else left
        if left != right:
            raise ValueError("germs of a map without breakpoints must coincide")
        return PLMap(left, (), right)

    seg = [_slope(p, q) for p, q in zip(pts, pts[1:])]
    if seg:
        orientation = 1 if seg[0] > 0 else -1
    elif left is not None:
        orientation = 1 if left.slope > 0 else -1
    elif right is not None:
        orientation = 1 if right.slope > 0 else -1
    else:
        orientation = 1
    x0, y0 = pts[0]
    xn, yn = pts[-1]
    if left is None:
        left = AffineGerm(Fraction(orientation), y0 - orientation * x0)
    if right is None:
        right = AffineGerm(Fraction(orientation), yn - orientation * xn)
    if left(x0) != y0:
        raise ValueError("left germ does not pass through the first point")
    if right(xn) != yn:
        raise ValueError("right germ does not pass through the last point")
    slopes = [left.slope] + seg + [right.slope]
    for s in slopes:
        if s == 0 or (s > 0) != (orientation > 0):
            raise ValueError("data is not strictly monotone")
    kept = tuple(p for i, p in enumerate(pts) if slopes[i] != slopes[i + 1])
    if not kept:
        return PLMap(left, (), left)
    return PLMap(left, kept, right)


def _xs(f: PLMap):
    return [p[0] for p in f.points]


def evaluate(f: PLMap, t) -> Scalar:
    t = as_scalar(t)
    pts = f.points
    if not pts or t <= pts[0][0]:
        return f.left(t)
    if t >= pts[-1][0]:
        return f.right(t)
    i = bisect_right(_xs(f), t)
    (x0, y0), (x1, y1) = pts[i - 1], pts[i]
    return y0 + (y1 - y0) / (x1 - x0) * (t - x0)


def evaluate_inverse(f: PLMap, y) -> Scalar:
    """The unique ``t`` with ``f(t) == y``."""
    y = as_scalar(y)
    pts = f.points
    if not pts:
        return f.left.inverse()(y)
    ys = [p[1] for p in pts]
    if f.orientation < 0:
        ys = ys[::-1]
        pts = pts[::-1]
        # now ordered by increasing image value
        if y <= ys[0]:
            return f.right.inverse()(y)
        if y >= ys[-1]:
            return f.left.inverse()(y)
    else:
        if y <= ys[0]:
            return f.left.inverse()(y)
        if y >= ys[-1]:
            return f.right.inverse()(y)
    i = bisect_right(ys, y)
    (x0, y0), (x1, y1) = pts[i - 1], pts[i]
    return x0 + (x1 - x0) / (y1 - y0) * (y - y0)


def breakpoints(f: PLMap) -> list:
    return _xs(f)


def segment_slopes(f: PLMap) -> list:
    """Slopes of all pieces, left germ first, right germ last."""
    return [f.left.slope] + [_slope(p, q) for p, q in zip(f.points, f.points[1:])] + [f.right.slope]


def slope_right(f: PLMap, t) -> Scalar:
    """Slope of ``f`` on a small interval ``(t, t + eps)``."""
    xs = _xs(f)
    i = bisect_right(xs, as_scalar(t))
    return segment_slopes(f)[i]


def slope_left(f: PLMap, t) -> Scalar:
    """Slope of ``f`` on a small interval ``(t - eps, t)``."""
    xs = _xs(f)
    i = bisect_left(xs, as_scalar(t))
    return segment_slopes(f)[i]


def compose(f: PLMap, g: PLMap) -> PLMap:
    """``f ∘ g``, i.e. ``t -> f(g(t))``."""
    if f.is_identity:
        return g
    if g.is_identity:
        return f
    cand = set(_xs(g))
    cand.update(evaluate_inverse(g, x) for x in _xs(f))
    xs = sorted(cand)
    pts = [(x, evaluate(f, evaluate(g, x))) for x in xs]
    if g.orientation > 0:
        left = g.left.then(f.left)
        right = g.right.then(f.right)
    else:
        left = g.left.then(f.right)
        right = g.right.then(f.left)
    return canonicalize(pts, left, right)


def invert(f: PLMap) -> PLMap:
    pts = [(y, x) for x, y in f.points]
    if f.orientation > 0:
        return PLMap(f.left.inverse(), tuple(pts), f.right.inverse())
    return PLMap(f.right.inverse(), tuple(pts[::-1]), f.left.inverse())


def conjugate(phi: PLMap, f: PLMap) -> PLMap:
    """``phi ∘ f ∘ phi^-1``."""
    return compose(compose(phi, f), invert(phi))


# -- fixed set and support ---------------------------------------------------

@dataclass(frozen=True)
class FixSupportReport:
    """Fixed set as closed intervals ``(lo, hi)`` (``lo == hi`` for points,
    ``None`` for an infinite end) and the maximal open intervals of the
    support."""

    fixed_set: tuple
    support_components: tuple

    @property
    def count(self) -> int:
        return len(self.support_components)


def _pieces(f: PLMap):
    """Yield (lo, hi, slope, intercept) with ``None`` for infinite ends."""
    pts = f.points
    if not pts:
        yield None, None, f.left.slope, f.left.intercept
        return
    yield None, pts[0][0], f.left.slope, f.left.intercept
    for p, q in zip(pts, pts[1:]):
        s = _slope(p, q)
        yield p[0], q[0], s, p[1] - s * p[0]
    yield pts[-1][0], None, f.right.slope, f.right.intercept


def _within(t, lo, hi) -> bool:
    return (lo is None or t >= lo) and (hi is None or t <= hi)


def fix_support(f: PLMap) -> FixSupportReport:
    closed = []
    for lo, hi, s, c in _pieces(f):
        if s == 1:
            if c == 0:
                closed.append((lo, hi))
            continue
        t = c / (1 - s)
        if _within(t, lo, hi):
            closed.append((t, t))

    def lo_key(iv):
        return (0, 0) if iv[0] is None else (1, iv[0])

    closed.sort(key=lo_key)
    merged = []
    for lo, hi in closed:
        if merged:
            plo, phi = merged[-1]
            if phi is None or (lo is not None and lo <= phi):
                new_hi = None if (phi is None or hi is None) else max(phi, hi)
                merged[-1] = (plo, new_hi)
                continue
        merged.append((lo, hi))

    comps = []
    prev_hi = "start"
    for lo, hi in merged:
        if prev_hi == "start":
            if lo is not None:
                comps.append((None, lo))
        else:
            comps.append((prev_hi, lo))
        prev_hi = hi
    if prev_hi == "start":
        comps.append((None, None))
    elif prev_hi is not None:
        comps.append((prev_hi, None))
    return FixSupportReport(tuple(merged), tuple(comps))


# -- germs relative to an interval ------------------------------------------

def _check_preserves(f: PLMap, interval: Interval):
    if isinstance(interval, Line):
        return
    if f.orientation < 0:
        raise NotPreserved("decreasing maps are not elements supported in the interval")
    if not f.left.is_identity:
        raise NotPreserved("map is not the identity to the left of the interval")
    lo = interval.a if isinstance(interval, Compact) else ZERO
    if f.points and f.points[0][0] < lo:
        raise NotPreserved("map moves points to the left of the interval")
    if isinstance(interval, Compact):
        if not f.right.is_identity or (f.points and f.points[-1][0] > interval.b):
            raise NotPreserved("map moves points to the right of the interval")


def germ(f: PLMap, side: str, interval: Interval) -> AffineGerm:
    """``lambda(f)`` (``side='left'``) or ``rho(f)`` (``side='right'``).

    On a compact interval ``[a, b]`` these are the affine maps fixing the
    endpoint with the endpoint slope; on the half line the left germ is
    linear and the right germ is the germ at ``+inf``.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    _check_preserves(f, interval)
    if isinstance(interval, Line):
        return f.left if side == "left" else f.right
    if side == "left":
        a = interval.a if isinstance(interval, Compact) else ZERO
        s = slope_right(f, a)
        return AffineGerm(s, a - s * a)
    if isinstance(interval, HalfLine):
        return f.right
    b = interval.b
    s = slope_left(f, b)
    return AffineGerm(s, b - s * b)


def sigma_left(f: PLMap, interval: Interval) -> Scalar:
    return germ(f, "left", interval).slope


def sigma_right(f: PLMap, interval: Interval) -> Scalar:
    return germ(f, "right", interval).slope


def tau_left(f: PLMap, interval: Interval) -> Scalar:
    return germ(f, "left", interval).amplitude


def tau_right(f: PLMap, interval: Interval) -> Scalar:
    return germ(f, "right", interval).amplitude
