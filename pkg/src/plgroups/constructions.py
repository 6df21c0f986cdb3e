"""Constructors for the explicit maps and generator families."""
from __future__ import annotations

from fractions import Fraction

from .plmap import (
    AffineGerm,
    Compact,
    Interval,
    Line,
    PLMap,
    canonicalize,
    identity,
)
from .scalar import as_scalar

__all__ = [
    "affine",
    "translation",
    "homothety",
    "reflection",
    "interpolate",
    "bump",
    "gs_family",
    "dyadic_fgh",
    "multibump",
    "lemma72_pair",
    "independent_pair",
    "prime_family",
]

Q = Fraction


def affine(slope, intercept=0) -> PLMap:
    g = AffineGerm(as_scalar(slope), as_scalar(intercept))
    return PLMap(g, (), g)


def translation(c) -> PLMap:
    return affine(1, c)


def homothety(p) -> PLMap:
    """``t -> p*t``; conjugating by it rescales translation germs at +inf."""
    p = as_scalar(p)
    if not p > 0:
        raise ValueError("homothety factor must be positive")
    return affine(p, 0)


def reflection(interval: Interval) -> PLMap:
    """``t -> a + b - t`` on ``[a, b]`` and ``t -> -t`` on the line."""
    if isinstance(interval, Compact):
        return affine(-1, interval.a + interval.b)
    if isinstance(interval, Line):
        return affine(-1, 0)
    raise ValueError("the half line has no reflection")


def interpolate(points, left_slope=None, right_slope=None) -> PLMap:
    """Affine interpolation of ``points`` extended by germs of the given end
    slopes (default: slope +-1 through the end points).

    Repeated abscissae and non-monotone ordinates are rejected, never sorted.
    """
    pts = [(as_scalar(x), as_scalar(y)) for x, y in points]
    if not pts:
        return identity()
    left = right = None
    if left_slope is not None:
        s = as_scalar(left_slope)
        left = AffineGerm(s, pts[0][1] - s * pts[0][0])
    if right_slope is not None:
        s = as_scalar(right_slope)
        right = AffineGerm(s, pts[-1][1] - s * pts[-1][0])
    return canonicalize(pts, left, right)


def bump(s, b=1, shift=0) -> PLMap:
    """The one-bump map with slope ``1/s`` at the left end and ``s`` at the
    right end of ``[0, b]``, moved to ``[shift, shift + b]``.

    On ``[0, b]`` it is ``t/s`` up to ``s*b/(s+1)`` and then
    ``s*(t - s*b/(s+1)) + b/(s+1)``.
    """
    s, b, c = as_scalar(s), as_scalar(b), as_scalar(shift)
    if not s > 0 or s == 1:
        raise ValueError("bump slope must be positive and different from 1")
    if not b > 0:
        raise ValueError("bump length must be positive")
    knee = s * b / (s + 1)
    pts = [(c, c), (knee + c, knee / s + c), (b + c, b + c)]
    return canonicalize(pts, AffineGerm(Q(1), Q(0)), AffineGerm(Q(1), Q(0)))


def gs_family(s1, s2, s3) -> tuple[PLMap, PLMap, PLMap]:
    """Generators ``(f, g, h)`` on ``[0, 1]``: ``f`` is the bump with slope
    ``s1`` on ``[0, 3/4]``; ``g`` and ``h`` are the bumps with slopes ``s2``
    and ``s3`` on ``[0, 3/4]`` moved by ``1/4``."""
    for s in (s1, s2, s3):
        if not as_scalar(s) > 1:
            raise ValueError("family parameters must exceed 1")
    b = Q(3, 4)
    return bump(s1, b), bump(s2, b, Q(1, 4)), bump(s3, b, Q(1, 4))


def dyadic_fgh(s3=2) -> tuple[PLMap, PLMap, PLMap]:
    """The family with ``s1 = s2 = 2`` and ``s3 >= 2``; ``(f, h)`` then
    satisfies the two-bump hypotheses that force a copy of Thompson's F."""
    s3 = as_scalar(s3)
    if not s3 >= 2:
        raise ValueError("the dyadic variant needs s3 >= 2")
    return gs_family(2, 2, s3)


def multibump(n: int, lo, hi, s=2) -> PLMap:
    """An element with exactly ``n`` support components, each a bump of
    slope ``s`` on one of ``n`` equal pieces of ``[lo, hi]``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lo, hi = as_scalar(lo), as_scalar(hi)
    if not lo < hi:
        raise ValueError("region must have lo < hi")
    if n == 0:
        return identity()
    width = (hi - lo) / n
    s = as_scalar(s)
    knee = s * width / (s + 1)
    pts = []
    for i in range(n):
        c = lo + i * width
        if i == 0:
            pts.append((c, c))
        pts.append((c + knee, c + knee / s))
        pts.append((c + width, c + width))
    return canonicalize(pts, AffineGerm(Q(1), Q(0)), AffineGerm(Q(1), Q(0)))


def lemma72_pair(s_f, s_g, a, b, c, d, nodes=None) -> tuple[PLMap, PLMap]:
    """Two five-point interpolations ``f, g`` with ``supp f = (a, c)``,
    ``supp g = (b, d)``, both moving points left, ``f(g(c)) <= b`` and
    endpoint slopes ``f'(a) = s_f``, ``g'(d) = s_g``.

    ``nodes`` are ``(t1, t2, t3, t4)`` with
    ``a < t1 < b < t2 <= t3 < c < t4 < d``; the default is
    ``((a+b)/2, b+(c-b)/4, (b+c)/2, (c+d)/2)``.
    """
    from .thompson import check_two_bump_conditions

    s_f, s_g = as_scalar(s_f), as_scalar(s_g)
    a, b, c, d = (as_scalar(v) for v in (a, b, c, d))
    if not (0 < s_f < 1 < s_g):
        raise ValueError("need 0 < s_f < 1 < s_g")
    if not (a < b < c < d):
        raise ValueError("need a < b < c < d")
    if nodes is None:
        nodes = ((a + b) / 2, b + (c - b) / 4, (b + c) / 2, (c + d) / 2)
    t1, t2, t3, t4 = (as_scalar(t) for t in nodes)
    if not (a < t1 < b < t2 <= t3 < c < t4 < d):
        raise ValueError("nodes must satisfy a < t1 < b < t2 <= t3 < c < t4 < d")
    t0 = a + s_f * (t1 - a)
    t5 = d - (d - t4) / s_g
    f = interpolate([(a, a), (t1, t0), (t3, b), (c, c), (d, d)], 1, 1)
    g = interpolate([(a, a), (b, b), (c, t2), (t5, t4), (d, d)], 1, 1)
    report = check_two_bump_conditions(f, g)
    if not report.ok:
        raise AssertionError(f"constructed pair violates its defining conditions: {report}")
    from .plmap import slope_left, slope_right

    assert slope_right(f, a) == s_f and slope_left(g, d) == s_g
    return f, g


def independent_pair(s_left, s_right, b=1, b1=None) -> tuple[PLMap, PLMap]:
    """A bump ``f`` with slope ``s_left`` on ``[0, b1]`` and a bump ``g`` with
    slope ``s_right`` on ``[b - b1, b]``; their endpoint characters are
    independent and their supports cover ``(0, b)``."""
    b = as_scalar(b)
    b1 = as_scalar(b1) if b1 is not None else 3 * b / 4
    if not (b / 2 < b1 < b):
        raise ValueError("need b/2 < b1 < b")
    return bump(s_left, b1), bump(s_right, b1, b - b1)


def prime_family(primes) -> dict[str, PLMap]:
    """Generators ``f_p, g_p`` on ``[0, 1]`` with ``sigma_l(f_p) = p``,
    ``sigma_r(f_p) = 1``, ``sigma_l(g_p) = 1`` and ``sigma_r(g_p) = p``.

    The right slope of ``g_p`` is a chosen reading: the defining list
    repeats a left-slope condition for ``g_p``, and ``p`` keeps the right
    character non-zero.
    """
    gens = {}
    b1 = Q(3, 4)
    for p in primes:
        p = as_scalar(p)
        gens[f"f{p}"] = bump(1 / p, b1)
        gens[f"g{p}"] = bump(p, b1, 1 - b1)
    return gens
