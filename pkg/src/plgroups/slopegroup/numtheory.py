"""Slope groups, discrete logarithms and multiplicative independence."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from sympy import factorint

from ..scalar import QuadraticNumber, as_scalar, format_scalar
from .lattice import Lattice, image

__all__ = [
    "RationalGens",
    "CyclicQuadratic",
    "MultGroupSpec",
    "ExponentVector",
    "NotInGroup",
    "prime_exponents",
    "to_exponents",
    "multiplicatively_independent",
    "units_trivial",
    "lemma75_distinct",
]

PRIME_BOUND = 2 ** 64


class NotInGroup(ValueError):
    pass


def _factor(n: int) -> dict[int, int]:
    fac = factorint(n)
    big = [p for p in fac if p >= PRIME_BOUND]
    if big:
        raise ValueError(f"prime factor {big[0]} exceeds the supported 64-bit bound")
    return fac


def prime_exponents(q) -> dict[int, int]:
    """Exponents of the primes in a positive rational."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("only positive rationals have prime exponent vectors")
    exps = dict(_factor(q.numerator))
    for p, e in _factor(q.denominator).items():
        exps[p] = exps.get(p, 0) - e
    return exps


@dataclass(frozen=True)
class RationalGens:
    """Subgroup of the positive rationals generated by ``generators``."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(Fraction(g) for g in self.generators)
        for g in gens:
            if g <= 0 or g == 1:
                raise ValueError("generators must be positive and different from 1")
        object.__setattr__(self, "generators", gens)

    @property
    def primes(self) -> tuple[int, ...]:
        ps = set()
        for g in self.generators:
            ps.update(prime_exponents(g))
        return tuple(sorted(ps))

    def vector(self, q) -> tuple[int, ...]:
        """Prime coordinates of ``q`` over :attr:`primes` (no membership test)."""
        exps = prime_exponents(q)
        basis = self.primes
        extra = [p for p in exps if p not in basis]
        if extra:
            raise NotInGroup(f"{format_scalar(q)} involves prime {extra[0]} outside the group")
        return tuple(exps.get(p, 0) for p in basis)

    def lattice(self) -> Lattice:
        basis = self.primes
        return image([self.vector(g) for g in self.generators], len(basis), basis)

    def __str__(self):
        return "<" + ",".join(format_scalar(g) for g in self.generators) + ">"


@dataclass(frozen=True)
class CyclicQuadratic:
    """Cyclic group generated by a positive quadratic irrational ``!= 1``."""

    generator: QuadraticNumber

    def __post_init__(self):
        g = as_scalar(self.generator)
        if not isinstance(g, QuadraticNumber):
            raise ValueError("use RationalGens for rational generators")
        if not g > 0 or g == 1:
            raise ValueError("generator must be positive and different from 1")

    def __str__(self):
        return f"<{format_scalar(self.generator)}>"


MultGroupSpec = Union[RationalGens, CyclicQuadratic]


@dataclass(frozen=True)
class ExponentVector:
    """Formal logarithm ``sum e_i * ln(basis_i)``."""

    basis: tuple
    exponents: tuple

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if self.basis != other.basis:
            raise ValueError("exponent vectors over different bases")
        return ExponentVector(self.basis, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self):
        return ExponentVector(self.basis, tuple(-a for a in self.exponents))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "ExponentVector":
        return ExponentVector(self.basis, tuple(k * a for a in self.exponents))

    @property
    def is_zero(self) -> bool:
        return not any(self.exponents)

    def __str__(self):
        terms = [f"{e}*ln({format_scalar(b)})" for b, e in zip(self.basis, self.exponents) if e]
        return " + ".join(terms) if terms else "0"


def to_exponents(P: MultGroupSpec, x) -> ExponentVector:
    """Discrete logarithm of ``x`` in ``P``; raises :class:`NotInGroup`."""
    x = as_scalar(x)
    if isinstance(P, RationalGens):
        if isinstance(x, QuadraticNumber):
            raise NotInGroup(f"{format_scalar(x)} is irrational")
        if x <= 0:
            raise NotInGroup(f"{format_scalar(x)} is not positive")
        v = P.vector(x)
        if v not in P.lattice():
            raise NotInGroup(f"{format_scalar(x)} is not a product of powers of {P}")
        return ExponentVector(P.primes, v)
    g = P.generator
    if not x > 0:
        raise NotInGroup(f"{format_scalar(x)} is not positive")
    if isinstance(x, QuadraticNumber) and x.d != g.d:
        raise NotInGroup(f"{format_scalar(x)} lies in another quadratic field")
    # iterate towards 1; g^k is monotone in k
    big = g if g > 1 else 1 / g
    k, y = 0, x
    if y >= 1:
        while y > 1:
            y = y / big
            k += 1
    else:
        while y < 1:
            y = y * big
            k -= 1
    if y != 1:
        raise NotInGroup(f"{format_scalar(x)} is not a power of {format_scalar(g)}")
    if g < 1:
        k = -k
    return ExponentVector((g,), (k,))


def multiplicatively_independent(xs: Sequence) -> bool:
    """True iff no non-trivial integer-exponent product of ``xs`` equals 1."""
    qs = []
    for x in xs:
        x = as_scalar(x)
        if isinstance(x, QuadraticNumber):
            raise TypeError("multiplicative independence is decided for rationals only")
        if x <= 0 or x == 1:
            raise ValueError("entries must be positive rationals different from 1")
        qs.append(x)
    if not qs:
        return True
    P = RationalGens(tuple(qs))
    return P.lattice().rank == len(qs)


def units_trivial(P: RationalGens) -> tuple[bool, str]:
    """Whether the unit group of ``ln P`` is ``{1, -1}``.

    Non-trivial subgroups of the positive rationals are free abelian, so the
    answer is decided by the rank alone; no search for units is performed.
    """
    rank = P.lattice().rank if P.generators else 0
    if rank == 0:
        return False, "trivial group: ln P = 0 and every non-zero real is a unit"
    return True, (
        f"{P} is a non-trivial subgroup of Q_>0, hence free abelian (rank {rank}); "
        "U(ln P) = {1, -1}"
    )


def lemma75_distinct(P1: RationalGens, P2: RationalGens) -> tuple[str, object]:
    """One-sided test that ``ln P2 != u * ln P1`` for every ``u > 0``.

    Returns ``("distinct_for_all_u", prime)`` when some prime occurs in an
    element of ``P1`` but in no element of ``P2`` and ``ln P1`` has rank at
    least 3; otherwise ``("inapplicable", reason)``.
    """
    L1 = P1.lattice()
    support1 = [p for j, p in enumerate(P1.primes) if any(r[j] for r in L1.basis)]
    L2 = P2.lattice()
    support2 = {p for j, p in enumerate(P2.primes) if any(r[j] for r in L2.basis)}
    if L1.rank < 3:
        return "inapplicable", f"rank of ln P1 is {L1.rank} < 3"
    only1 = [p for p in support1 if p not in support2]
    if not only1:
        return "inapplicable", "every prime of P1 also occurs in P2"
    return "distinct_for_all_u", only1[0]
