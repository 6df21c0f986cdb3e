"""Ready-made groups used by the examples, the CLI and the test suites."""
from __future__ import annotations

from fractions import Fraction

from .constructions import bump, dyadic_fgh, gs_family, independent_pair, interpolate, prime_family, reflection
from .group import FGGroup, ModuleSpec
from .plmap import Compact, PLMap, conjugate
from .scalar import QuadraticNumber, as_scalar
from .slopegroup import CyclicQuadratic, RationalGens

__all__ = [
    "UNIT",
    "dyadic_reflection_group",
    "dyadic_gs_group",
    "gs_group",
    "single_bump_group",
    "independent_group",
    "gnu_group",
    "gnu_map",
    "prime_group",
]

Q = Fraction
UNIT = Compact(Q(1))


def _slope_group(slopes) -> RationalGens | CyclicQuadratic:
    slopes = [as_scalar(s) for s in slopes]
    quad = [s for s in slopes if isinstance(s, QuadraticNumber)]
    if quad:
        if len(set(slopes)) != 1:
            raise ValueError("quadratic slopes are supported for a single cyclic generator only")
        return CyclicQuadratic(quad[0])
    return RationalGens(tuple(sorted(set(slopes))))


def dyadic_reflection_group() -> FGGroup:
    """``gp(f, fbar)`` in ``G([0,1]; Z[1/2], <2>)`` where ``f`` is the dyadic
    bump on ``[0, 3/4]`` and ``fbar`` its mirror image; the reflection
    ``t -> 1 - t`` swaps the two generators."""
    f = dyadic_fgh()[0]
    fbar = conjugate(reflection(UNIT), f)
    return FGGroup(UNIT, RationalGens((2,)), ModuleSpec.dyadic_like(2), (("f", f), ("fbar", fbar)))


def dyadic_gs_group(s3=2) -> FGGroup:
    f, g, h = dyadic_fgh(s3)
    s3 = as_scalar(s3)
    P = RationalGens((2,)) if s3 == 2 else _slope_group([2, s3])
    A = ModuleSpec.dyadic_like(2) if s3 == 2 else ModuleSpec.rationals()
    return FGGroup(UNIT, P, A, (("f", f), ("g", g), ("h", h)))


def gs_group(s1=2, s2=3, s3=5) -> FGGroup:
    f, g, h = gs_family(s1, s2, s3)
    return FGGroup(UNIT, _slope_group([s1, s2, s3]), ModuleSpec.rationals(), (("f", f), ("g", g), ("h", h)))


def single_bump_group(s=2, b=1) -> FGGroup:
    return FGGroup(Compact(as_scalar(b)), _slope_group([s]), ModuleSpec.rationals(), (("f", bump(s, b)),))


def independent_group(s_left=2, s_right=3) -> FGGroup:
    """Two bumps whose endpoint characters are non-zero and independent."""
    f, g = independent_pair(s_left, s_right)
    return FGGroup(UNIT, _slope_group([s_left, s_right]), ModuleSpec.rationals(), (("f", f), ("g", g)))


def gnu_map() -> PLMap:
    """A dyadic map with ``sigma_l = 2`` and ``sigma_r = 4``."""
    return interpolate([(0, 0), (Q(1, 8), Q(1, 4)), (Q(9, 16), Q(15, 32)), (Q(31, 32), Q(7, 8)), (1, 1)], 1, 1)


def gnu_group() -> FGGroup:
    """Generators satisfying ``sigma_r = sigma_l^2``: ``gnu_map`` and a
    dyadic bump bounded away from both ends."""
    u = bump(2, Q(3, 16), Q(1, 4))
    return FGGroup(UNIT, RationalGens((2,)), ModuleSpec.dyadic_like(2), (("u", gnu_map()), ("v", u)))


def prime_group(primes=(2, 3)) -> FGGroup:
    gens = prime_family(primes)
    return FGGroup(UNIT, _slope_group(primes), ModuleSpec.rationals(), tuple(gens.items()))
