"""Automorphisms induced by PL conjugators, the twisted action and invariants
that are constant on twisted conjugacy classes."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .constructions import homothety, reflection
from .group import DEFAULT_BUDGET, FGGroup, ball, format_word, membership, psi
from .plmap import (
    Compact,
    HalfLine,
    PLMap,
    compose,
    conjugate,
    evaluate,
    fix_support,
    germ,
    identity,
    invert,
)
from .scalar import as_scalar, format_scalar

__all__ = [
    "NotAnAutomorphism",
    "Automorphism",
    "twist",
    "order2_invariant",
    "verify_order2",
    "ClassCell",
    "SeparationReport",
    "separate_classes",
    "HomothetyReport",
    "homothety_pullback_check",
]


class NotAnAutomorphism(ValueError):
    pass


def _preserves_interval_setwise(phi: PLMap, interval) -> bool:
    if isinstance(interval, Compact):
        ends = {interval.a, interval.b}
        return {evaluate(phi, interval.a), evaluate(phi, interval.b)} == ends
    if isinstance(interval, HalfLine):
        return phi.orientation > 0 and evaluate(phi, 0) == 0
    return True


@dataclass(frozen=True)
class Automorphism:
    """``g -> phi ∘ g ∘ phi^-1`` on ``group``.

    Construction checks that ``phi`` maps the interval onto itself and that
    the image of every generator passes the ambient membership test.
    """

    conjugator: PLMap
    group: FGGroup = field(compare=False)
    label: str = "conjugation"

    def __post_init__(self):
        G = self.group
        if not _preserves_interval_setwise(self.conjugator, G.interval):
            raise NotAnAutomorphism("conjugator does not map the interval onto itself")
        for name, g in G.generators:
            m = membership(G, conjugate(self.conjugator, g))
            if m.verdict is False:
                raise NotAnAutomorphism(f"image of generator {name} leaves the ambient group: {m}")

    @classmethod
    def identity(cls, G: FGGroup) -> "Automorphism":
        return cls(identity(), G, "identity")

    @classmethod
    def reflection(cls, G: FGGroup) -> "Automorphism":
        return cls(reflection(G.interval), G, "reflection")

    @classmethod
    def homothety(cls, G: FGGroup, p) -> "Automorphism":
        return cls(homothety(p), G, f"homothety by {format_scalar(as_scalar(p))}")

    @property
    def increasing(self) -> bool:
        return self.conjugator.orientation > 0

    def __call__(self, g: PLMap) -> PLMap:
        return conjugate(self.conjugator, g)

    def __str__(self):
        kind = "increasing" if self.increasing else "decreasing"
        return f"{self.label} ({kind})"


def twist(z: PLMap, x: PLMap, alpha: Automorphism, check: bool = False) -> PLMap:
    """``z ∘ x ∘ alpha(z)^-1``."""
    if check:
        for name, v in (("z", z), ("x", x)):
            m = membership(alpha.group, v)
            if m.verdict is False:
                raise ValueError(f"{name} is not in the ambient group: {m}")
    return compose(compose(z, x), invert(alpha(z)))


@lru_cache(maxsize=64)
def _order2_on_ball(conjugator: PLMap, G: FGGroup, radius: int, budget: int) -> Optional[str]:
    sq = compose(conjugator, conjugator)
    B = ball(G, radius, budget)
    for g, w in zip(B.elements, B.words):
        if conjugate(sq, g) != g:
            return format_word(w)
    return None


def verify_order2(beta: Automorphism, radius: int = 2, budget: int = DEFAULT_BUDGET) -> None:
    """Raise unless ``beta ∘ beta`` fixes every element of the ball."""
    bad = _order2_on_ball(beta.conjugator, beta.group, radius, budget)
    if bad is not None:
        raise ValueError(f"automorphism is not of order 2: beta^2 moves {bad}")


def order2_invariant(x: PLMap, beta: Automorphism, radius: int = 2) -> int:
    """Number of support components of ``x ∘ beta(x)``.

    Twisting ``x`` by ``z`` conjugates ``x ∘ beta(x)`` by ``z`` when
    ``beta^2 = 1``, so the count is constant on twisted classes.
    """
    verify_order2(beta, radius)
    return fix_support(compose(x, beta(x))).count


def _fixed_on_generators(fn, alpha: Automorphism) -> bool:
    return all(fn(alpha(g)) == fn(g) for _, g in alpha.group.generators)


@dataclass
class ClassCell:
    invariants: tuple
    members: list  # indices into the input list

    @property
    def label(self) -> str:
        return "certified-distinct" if len(self.members) == 1 else "inconclusive"


@dataclass
class SeparationReport:
    automorphism: str
    invariant_names: list
    cells: list
    radius: int

    @property
    def certified_classes(self) -> int:
        """Lower bound for the number of twisted classes met by the inputs."""
        return len(self.cells)

    def lines(self) -> list[str]:
        out = [
            f"automorphism: {self.automorphism}",
            f"invariants: {', '.join(self.invariant_names) or 'none'}",
            f"order-2 check radius: {self.radius}",
            f"cells: {len(self.cells)} (inputs in different cells lie in different twisted classes)",
        ]
        for cell in self.cells:
            inv = ", ".join(f"{n}={v}" for n, v in zip(self.invariant_names, cell.invariants))
            out.append(f"  [{inv}] inputs {cell.members}: {cell.label}")
        return out


def _invariants(alpha: Automorphism, radius: int):
    G = alpha.group
    out = []
    candidates = [
        ("psi", lambda g: psi(G, g)),
        ("sigma_l", lambda g: germ(g, "left", G.interval).slope),
        ("sigma_r", lambda g: germ(g, "right", G.interval).slope),
    ]
    for name, fn in candidates:
        if _fixed_on_generators(fn, alpha):
            out.append((name, fn))
    try:
        verify_order2(alpha, radius)
    except ValueError:
        pass
    else:
        out.append(("order2_components", lambda g: fix_support(compose(g, alpha(g))).count))
    return out


def separate_classes(xs: Sequence[PLMap], alpha: Automorphism, radius: int = 2) -> SeparationReport:
    """Group inputs by invariants that ``alpha``-twisting cannot change.

    An invariant is used only when it provably survives twisting: the slope
    invariants when ``alpha`` fixes them on the generators, the order-2
    component count when ``alpha^2`` is trivial on the ball of ``radius``.
    Different cells are different twisted classes; elements sharing a cell
    are reported as inconclusive, never as equal.
    """
    invs = _invariants(alpha, radius)
    cells: dict[tuple, list] = {}
    for i, x in enumerate(xs):
        key = tuple(fn(x) for _, fn in invs)
        cells.setdefault(key, []).append(i)
    rows = [ClassCell(tuple(format_scalar(v) if not isinstance(v, int) else str(v) for v in k), m) for k, m in cells.items()]
    return SeparationReport(str(alpha), [n for n, _ in invs], rows, radius)


@dataclass
class HomothetyReport:
    p: object
    radius: int
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"p = {format_scalar(self.p)}, radius {self.radius}: {self.checked} elements, {len(self.failures)} failures",
        ]
        for w, a, b in self.failures[:10]:
            out.append(f"  {w}: tau_r(alpha_p g) = {a}, p*tau_r(g) = {b}")
        return out


def homothety_pullback_check(G: FGGroup, p, radius: int = 3, budget: int = DEFAULT_BUDGET) -> HomothetyReport:
    """Check ``tau_r(alpha_p(g)) = p * tau_r(g)`` on the ball, where
    ``alpha_p`` is conjugation by ``t -> p t`` on the half line."""
    if not isinstance(G.interval, HalfLine):
        raise ValueError("the homothety check needs a half-line group")
    p = as_scalar(p)
    alpha = Automorphism.homothety(G, p)
    for name, g in G.generators:
        if not germ(g, "right", G.interval).is_translation:
            raise ValueError(f"generator {name} is not a translation near +infinity")
    B = ball(G, radius, budget)
    failures = []
    for g, w in zip(B.elements, B.words):
        lhs = germ(alpha(g), "right", G.interval).amplitude
        rhs = p * germ(g, "right", G.interval).amplitude
        if lhs != rhs:
            failures.append((format_word(w), format_scalar(lhs), format_scalar(rhs)))
    return HomothetyReport(p, radius, len(B), failures)
