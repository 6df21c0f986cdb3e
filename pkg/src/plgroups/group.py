"""Finitely generated groups of PL homeomorphisms with an ambient
``G(I; A, P)`` context."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from sympy import primefactors

from .plmap import (
    Compact,
    Interval,
    NotPreserved,
    PLMap,
    _check_preserves,
    compose,
    evaluate,
    fix_support,
    germ,
    identity,
    invert,
    segment_slopes,
)
from .scalar import QuadraticNumber, Scalar, as_scalar, format_scalar
from .slopegroup import (
    CharacterSpec,
    ExponentVector,
    Lattice,
    MultGroupSpec,
    NotInGroup,
    RationalGens,
    char_exponents,
    direct_sum,
    image,
    to_exponents,
)

__all__ = [
    "ModuleSpec",
    "FGGroup",
    "slope_group_of",
    "Word",
    "BudgetExceeded",
    "Ball",
    "Membership",
    "IndependenceReport",
    "PsiInvarianceReport",
    "ConstraintSpec",
    "OrbitSumCharacter",
    "parse_word",
    "format_word",
    "word_eval",
    "ball",
    "membership",
    "in_bounded",
    "irreducible",
    "endpoint_exponents",
    "char_image",
    "independence",
    "psi",
    "psi_invariance",
    "constraint_check",
    "orbit_sum_character",
]

DEFAULT_BUDGET = 200_000


# -- the additive module A -----------------------------------------------------

@dataclass(frozen=True)
class ModuleSpec:
    """The additive group ``A`` of admissible breakpoints.

    ``kind`` is one of ``dyadic_like`` (``Z[1/n]``), ``quadratic_ring``
    (``Z[sqrt d]``), ``rationals``, ``cyclic`` (``Z*step``) or ``unchecked``.
    """

    kind: str
    n: Optional[int] = None
    d: Optional[int] = None
    step: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind == "dyadic_like" and (self.n is None or self.n < 2):
            raise ValueError("Z[1/n] needs n >= 2")
        if self.kind == "quadratic_ring" and self.d is None:
            raise ValueError("Z[sqrt d] needs d")
        if self.kind == "cyclic":
            if self.step is None or Fraction(self.step) == 0:
                raise ValueError("Z*step needs a non-zero step")
            object.__setattr__(self, "step", Fraction(self.step))
        if self.kind not in ("dyadic_like", "quadratic_ring", "rationals", "cyclic", "unchecked"):
            raise ValueError(f"unknown module kind {self.kind!r}")

    @classmethod
    def dyadic_like(cls, n: int = 2):
        return cls("dyadic_like", n=n)

    @classmethod
    def quadratic_ring(cls, d: int):
        return cls("quadratic_ring", d=d)

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @classmethod
    def cyclic(cls, step):
        return cls("cyclic", step=Fraction(step))

    @classmethod
    def unchecked(cls):
        return cls("unchecked")

    @property
    def decidable(self) -> bool:
        return self.kind != "unchecked"

    def contains(self, x) -> Optional[bool]:
        x = as_scalar(x)
        if self.kind == "unchecked":
            return None
        if self.kind == "quadratic_ring":
            if isinstance(x, QuadraticNumber):
                return x.d == self.d and x.a.denominator == 1 and x.b.denominator == 1
            return x.denominator == 1
        if isinstance(x, QuadraticNumber):
            return False
        if self.kind == "rationals":
            return True
        if self.kind == "cyclic":
            return (x / self.step).denominator == 1
        allowed = set(primefactors(self.n))
        return set(primefactors(x.denominator)) <= allowed

    def ip_description(self) -> str:
        """The submodule generated by ``(p - 1) * a``, where it is known."""
        if self.kind == "dyadic_like":
            return f"({self.n - 1})*Z[1/{self.n}] (for P = <{self.n}>)"
        return "not computed"

    def __str__(self):
        if self.kind == "dyadic_like":
            return f"Z[1/{self.n}]"
        if self.kind == "quadratic_ring":
            return f"Z[√{self.d}]"
        if self.kind == "rationals":
            return "Q"
        if self.kind == "cyclic":
            return f"Z*{format_scalar(self.step)}"
        return "unchecked"


def _p_closed(module: ModuleSpec, P: MultGroupSpec) -> Optional[bool]:
    """Whether every generator of ``P`` and its inverse multiply ``A`` into
    itself (so ``A`` is a ``Z[P]``-module and ``p*A = A``)."""
    if module.kind == "unchecked":
        return None
    gens = P.generators if isinstance(P, RationalGens) else (P.generator,)
    if module.kind == "cyclic":
        return all(g in (1, -1) for g in gens)
    return all(module.contains(g) and module.contains(1 / g) for g in gens)


# -- groups and words ------------------------------------------------------------

@dataclass(frozen=True)
class FGGroup:
    """Subgroup of ``G(I; A, P)`` generated by named maps (order matters)."""

    interval: Interval
    slope_group: MultGroupSpec
    module: ModuleSpec
    generators: tuple  # ((name, PLMap), ...)

    def __post_init__(self):
        gens = self.generators
        if isinstance(gens, dict):
            gens = tuple(gens.items())
        object.__setattr__(self, "generators", tuple(gens))
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        for name, g in self.generators:
            if g.orientation < 0:
                raise ValueError(f"generator {name} is decreasing")
            try:
                _check_preserves(g, self.interval)
            except NotPreserved as exc:
                raise ValueError(f"generator {name}: {exc}") from None

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.generators]

    def generator(self, name: str) -> PLMap:
        for n, g in self.generators:
            if n == name:
                return g
        raise KeyError(f"unknown generator {name!r}")

    def letters(self) -> list[tuple[tuple[str, int], PLMap]]:
        """Generators and their inverses in the fixed shortlex letter order."""
        out = []
        for n, g in self.generators:
            out.append(((n, 1), g))
            out.append(((n, -1), invert(g)))
        return out

    def with_generators(self, generators) -> "FGGroup":
        if isinstance(generators, dict):
            generators = generators.items()
        return FGGroup(self.interval, self.slope_group, self.module, tuple(generators))


def slope_group_of(maps) -> RationalGens:
    """The group generated by all segment slopes of rational maps."""
    slopes = {s for f in maps for s in segment_slopes(f) if s != 1}
    if any(isinstance(s, QuadraticNumber) for s in slopes):
        raise ValueError("derived slope groups are available for rational slopes only")
    return RationalGens(tuple(sorted(slopes)))


Word = tuple  # ((name, +1 | -1), ...)


def parse_word(text: str) -> Word:
    """``"f g^-1 h"`` (spaces or dots between letters); ``""`` or ``"1"`` is empty."""
    text = text.strip()
    if text in ("", "1", "e"):
        return ()
    out = []
    for tok in text.replace(".", " ").split():
        if tok.endswith("^-1"):
            out.append((tok[:-3], -1))
        elif tok.endswith("^1"):
            out.append((tok[:-2], 1))
        else:
            out.append((tok, 1))
    return tuple(out)


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(n if e == 1 else f"{n}^-1" for n, e in w)


def word_eval(G: FGGroup, w: Word) -> PLMap:
    """Product ``x1 ∘ x2 ∘ ... ∘ xk`` of the letters of ``w``."""
    result = identity()
    for name, e in w:
        g = G.generator(name)
        result = compose(result, g if e == 1 else invert(g))
    return result


class BudgetExceeded(RuntimeError):
    def __init__(self, radius: int, count: int, budget: int):
        super().__init__(f"ball enumeration exceeded budget {budget} at radius {radius} ({count} elements)")
        self.radius = radius
        self.count = count
        self.budget = budget


@dataclass
class Ball:
    """Elements of word length at most ``radius`` in shortlex discovery order."""

    radius: int
    elements: list
    words: list
    lengths: list
    index: dict = field(repr=False)
    _neighbors: Optional[list] = field(default=None, repr=False)
    _germs: Optional[list] = field(default=None, repr=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g: PLMap) -> bool:
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    def counts_by_length(self) -> list[int]:
        out = [0] * (self.radius + 1)
        for k in self.lengths:
            out[k] += 1
        return out

    def right_neighbors(self, G: "FGGroup") -> list:
        """For each element ``g``, the ball indices of ``g ∘ x`` for the
        generators ``x`` (``None`` outside the ball); computed once."""
        if self._neighbors is None:
            gens = [x for _, x in G.generators]
            self._neighbors = [[self.index.get(compose(g, x)) for x in gens] for g in self.elements]
        return self._neighbors

    def germs(self, G: "FGGroup") -> list:
        """Endpoint germs ``(lambda, rho)`` of every element; computed once."""
        if self._germs is None:
            self._germs = [(germ(g, "left", G.interval), germ(g, "right", G.interval)) for g in self.elements]
        return self._germs


def ball(G: FGGroup, r: int, budget: int = DEFAULT_BUDGET) -> Ball:
    """Breadth-first enumeration with canonical-form deduplication; the first
    word to reach an element is its shortlex-least word."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    e = identity()
    elements, words, lengths = [e], [()], [0]
    index = {e: 0}
    letters = G.letters()
    frontier = [0]
    for k in range(1, r + 1):
        nxt = []
        for i in frontier:
            g, w = elements[i], words[i]
            for letter, x in letters:
                y = compose(g, x)
                if y in index:
                    continue
                index[y] = len(elements)
                nxt.append(len(elements))
                elements.append(y)
                words.append(w + (letter,))
                lengths.append(k)
                if len(elements) > budget:
                    raise BudgetExceeded(k, len(elements), budget)
        frontier = nxt
    return Ball(r, elements, words, lengths, index)


# -- membership in the ambient group ------------------------------------------

@dataclass
class Membership:
    """``verdict`` is True, False, or None when undecidable here."""

    verdict: Optional[bool]
    reasons: list

    def __bool__(self):
        return bool(self.verdict)

    def __str__(self):
        v = {True: "member", False: "not a member", None: "indeterminate"}[self.verdict]
        return f"{v}: " + "; ".join(self.reasons)


def membership(G: FGGroup, g: PLMap) -> Membership:
    """Test ``g`` against the defining conditions of ``G(I; A, P)``."""
    reasons = []
    if g.orientation < 0:
        return Membership(False, ["map is decreasing"])
    try:
        _check_preserves(g, G.interval)
    except NotPreserved as exc:
        return Membership(False, [f"support not inside the interval: {exc}"])
    reasons.append("support inside the interval")
    for s in dict.fromkeys(segment_slopes(g)):
        try:
            to_exponents(G.slope_group, s)
        except NotInGroup:
            return Membership(False, [f"slope {format_scalar(s)} not in {G.slope_group}"])
    reasons.append(f"all slopes in {G.slope_group}")
    A = G.module
    if not A.decidable:
        reasons.append("breakpoint module unchecked")
        return Membership(None, reasons)
    for x, y in g.points:
        if not A.contains(x):
            return Membership(False, [f"breakpoint {format_scalar(x)} not in {A}"])
        if not A.contains(y):
            return Membership(False, [f"image {format_scalar(y)} of breakpoint {format_scalar(x)} not in {A}"])
    if not g.points and not A.contains(evaluate(g, 0)):
        return Membership(False, [f"g(0) = {format_scalar(evaluate(g, 0))} not in {A}"])
    reasons.append(f"breakpoints and their images in {A}")
    closed = _p_closed(A, G.slope_group)
    if not closed:
        reasons.append(f"{A} is not closed under {G.slope_group}; g(A) = A not certified")
        return Membership(None, reasons)
    reasons.append(
        f"g(A) = A certified: {A} is stable under {G.slope_group} and its inverses, "
        "so each affine piece maps A into A, and likewise for the inverse"
    )
    return Membership(True, reasons)


def in_bounded(G: FGGroup, g: PLMap) -> bool:
    """Identity near both ends of the interval."""
    return germ(g, "left", G.interval).is_identity and germ(g, "right", G.interval).is_identity


def _clip_fixed(f: PLMap, a, b) -> list:
    out = []
    for lo, hi in fix_support(f).fixed_set:
        lo = a if lo is None or lo < a else lo
        hi = b if hi is None or hi > b else hi
        if lo <= hi:
            out.append((lo, hi))
    return out


def _intersect(xs: list, ys: list) -> list:
    out = []
    for a1, b1 in xs:
        for a2, b2 in ys:
            lo, hi = max(a1, a2), min(b1, b2)
            if lo <= hi:
                out.append((lo, hi))
    return sorted(out)


def irreducible(G: FGGroup) -> tuple[bool, Optional[Scalar]]:
    """Whether no interior point of the compact interval is fixed by all
    generators; otherwise also return a common fixed interior point."""
    if not isinstance(G.interval, Compact):
        raise NotImplementedError("irreducibility is implemented for compact intervals only")
    a, b = G.interval.a, G.interval.b
    common = [(a, b)]
    for _, g in G.generators:
        common = _intersect(common, _clip_fixed(g, a, b))
    for lo, hi in common:
        if lo < hi:
            return False, (lo + hi) / 2
        if a < lo < b:
            return False, lo
    return True, None


# -- characters -----------------------------------------------------------------

def endpoint_exponents(G: FGGroup, g: PLMap) -> tuple[ExponentVector, ExponentVector]:
    lam = germ(g, "left", G.interval)
    rho = germ(g, "right", G.interval)
    return to_exponents(G.slope_group, lam.slope), to_exponents(G.slope_group, rho.slope)


def _basis(G: FGGroup) -> tuple:
    if isinstance(G.slope_group, RationalGens):
        return G.slope_group.primes
    return (G.slope_group.generator,)


def char_image(G: FGGroup, spec: CharacterSpec) -> Lattice:
    """Image of an integer slope character as an HNF lattice over the
    exponent basis of ``P``, computed from generator germs."""
    basis = _basis(G)
    vecs = [char_exponents(spec, g, G.interval, G.slope_group).exponents for _, g in G.generators]
    return image(vecs, len(basis), basis)


@dataclass
class IndependenceReport:
    kind: str  # independent | almost_independent | neither
    index: object  # int or math.inf
    left: Lattice
    right: Lattice
    joint: Lattice

    def lines(self) -> list[str]:
        idx = "infinite" if self.index == math.inf else str(self.index)
        return [
            f"classification: {self.kind}",
            f"index of joint image in im chi_l x im chi_r: {idx}",
            f"rank im chi_l = {self.left.rank}, rank im chi_r = {self.right.rank}, rank joint = {self.joint.rank}",
        ]


def independence(G: FGGroup) -> IndependenceReport:
    """Classify ``chi_l``, ``chi_r`` by the index of the image of
    ``(chi_l, chi_r)`` in ``im chi_l x im chi_r``."""
    basis = _basis(G)
    k = len(basis)
    ls, rs = [], []
    for _, g in G.generators:
        el, er = endpoint_exponents(G, g)
        ls.append(el.exponents)
        rs.append(er.exponents)
    L = image(ls, k, basis)
    R = image(rs, k, basis)
    if L.rank == 0 or R.rank == 0:
        raise ValueError("chi_l or chi_r vanishes on the group")
    product = direct_sum(L, R)
    joint = image([a + b for a, b in zip(ls, rs)], 2 * k, product.ambient)
    idx = product.index(joint)
    if idx == 1:
        kind = "independent"
    elif idx == math.inf:
        kind = "neither"
    else:
        kind = "almost_independent"
    return IndependenceReport(kind, idx, L, R, joint)


def psi(G: FGGroup, g: PLMap) -> Scalar:
    return germ(g, "left", G.interval).slope * germ(g, "right", G.interval).slope


@dataclass
class PsiInvarianceReport:
    radius: int
    checked: int
    failures: list
    membership_failures: list

    @property
    def ok(self) -> bool:
        return not self.failures and not self.membership_failures

    def lines(self) -> list[str]:
        out = [f"radius {self.radius}: {self.checked} elements checked, {len(self.failures)} failures"]
        for name, m in self.membership_failures:
            out.append(f"image of generator {name} leaves the ambient group: {m}")
        for w, a, b in self.failures[:10]:
            out.append(f"  {w}: psi(g) = {a}, psi(alpha(g)) = {b}")
        return out


def psi_invariance(G: FGGroup, alpha: Callable[[PLMap], PLMap], r: int, budget: int = DEFAULT_BUDGET) -> PsiInvarianceReport:
    """Check ``psi(alpha(g)) == psi(g)`` on every element of the ball."""
    mem_fail = []
    for name, g in G.generators:
        m = membership(G, alpha(g))
        if m.verdict is False:
            mem_fail.append((name, str(m)))
    B = ball(G, r, budget)
    failures = []
    for g, w in zip(B.elements, B.words):
        a, b = psi(G, g), psi(G, alpha(g))
        if a != b:
            failures.append((format_word(w), format_scalar(a), format_scalar(b)))
    return PsiInvarianceReport(r, len(B), failures, mem_fail)


# -- germ constraints -------------------------------------------------------------

@dataclass(frozen=True)
class ConstraintSpec:
    """Germ relation defining a subgroup family.

    kinds: ``G1`` (sigma_l = 1), ``G2`` (sigma_l = sigma_r), ``G3``
    (sigma_l = 1/sigma_r), ``Gnu`` (sigma_r = sigma_l^m), ``QPair``
    (sigma_l in Q_l, sigma_r in Q_r), ``Translations`` (rho(g) is a
    translation with amplitude in A0).
    """

    kind: str
    m: Optional[int] = None
    q_left: Optional[MultGroupSpec] = None
    q_right: Optional[MultGroupSpec] = None
    a0: Optional[ModuleSpec] = None

    @classmethod
    def G1(cls):
        return cls("G1")

    @classmethod
    def G2(cls):
        return cls("G2")

    @classmethod
    def G3(cls):
        return cls("G3")

    @classmethod
    def Gnu(cls, m: int):
        return cls("Gnu", m=m)

    @classmethod
    def QPair(cls, q_left, q_right):
        return cls("QPair", q_left=q_left, q_right=q_right)

    @classmethod
    def Translations(cls, a0: ModuleSpec):
        return cls("Translations", a0=a0)


def _in_group(Q: MultGroupSpec, x) -> bool:
    if x == 1:
        return True
    try:
        to_exponents(Q, x)
    except NotInGroup:
        return False
    return True


def constraint_check(g: PLMap, c: ConstraintSpec, interval: Interval) -> bool:
    lam = germ(g, "left", interval)
    rho = germ(g, "right", interval)
    sl, sr = lam.slope, rho.slope
    if c.kind == "G1":
        return sl == 1
    if c.kind == "G2":
        return sl == sr
    if c.kind == "G3":
        return sl * sr == 1
    if c.kind == "Gnu":
        return sr == sl ** c.m
    if c.kind == "QPair":
        return _in_group(c.q_left, sl) and _in_group(c.q_right, sr)
    if c.kind == "Translations":
        if sr != 1:
            return False
        verdict = c.a0.contains(rho.amplitude)
        if verdict is None:
            raise ValueError("translation subgroup A0 is unchecked")
        return verdict
    raise ValueError(f"unknown constraint {c.kind!r}")


# -- orbit sums of characters --------------------------------------------------------

@dataclass
class OrbitSumCharacter:
    """``eta(g) = sum_i chi_i(alpha_i(g))`` as a formal logarithm."""

    group: FGGroup
    terms: tuple  # ((CharacterSpec, automorphism), ...)

    def __call__(self, g: PLMap) -> ExponentVector:
        G = self.group
        total = None
        for spec, alpha in self.terms:
            v = char_exponents(spec, alpha(g), G.interval, G.slope_group)
            total = v if total is None else total + v
        return total

    def sign(self, g: PLMap) -> int:
        # eta is a sum of integer slope characters, so it is itself one on
        # the multiplicative side: compare the product of slopes with 1
        value = Fraction(1)
        G = self.group
        for spec, alpha in self.terms:
            h = alpha(g)
            value = value * germ(h, "left", G.interval).slope ** int(spec.c_left)
            value = value * germ(h, "right", G.interval).slope ** int(spec.c_right)
        return (value > 1) - (value < 1)


def orbit_sum_character(G: FGGroup, terms: Sequence) -> OrbitSumCharacter:
    for spec, _ in terms:
        if spec.flavor != "slope":
            raise ValueError("orbit sums are formed from slope characters only")
        if spec.c_left.denominator != 1 or spec.c_right.denominator != 1:
            raise ValueError("orbit sums need integer coefficients")
    return OrbitSumCharacter(G, tuple(terms))
