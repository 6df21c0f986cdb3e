"""Checks that a pair of two-bump generators satisfies the relations of
Thompson's group F.

For ``f`` supported in ``(a, c)`` and ``g`` supported in ``(b, d)``, both
moving points to the left, with ``a < b < c < d`` and ``f(g(c)) <= b``, put
``h = f∘g``.  Then ``g`` commutes with ``h f h^-1`` and ``h^2 f h^-2``, which
yields the chains

    h^2 f h^-2 = f (g h f h^-1 g^-1) f^-1 = f (h f h^-1) f^-1 = (f h) f (f h)^-1
    h^3 f h^-3 = f (g h^2 f h^-2 g^-1) f^-1 = f (h^2 f h^-2) f^-1 = (f h^2) f (f h^2)^-1

i.e. the defining relations of F under ``x -> h``, ``x1 -> f``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .plmap import PLMap, compose, conjugate, fix_support, evaluate

__all__ = ["TwoBumpReport", "RelatorReport", "check_two_bump_conditions", "verify_f_relations"]


@dataclass
class TwoBumpReport:
    ok: bool
    endpoints: tuple | None
    failures: list = field(default_factory=list)

    def __str__(self):
        if self.ok:
            a, b, c, d = self.endpoints
            return f"two-bump conditions hold with a={a}, b={b}, c={c}, d={d}"
        return "two-bump conditions fail: " + "; ".join(self.failures)


def _single_left_mover(f: PLMap):
    """Return ``(lo, hi)`` if ``f`` has one bounded support component on
    which it moves points to the left, else ``None``."""
    comps = fix_support(f).support_components
    if len(comps) != 1:
        return None
    lo, hi = comps[0]
    if lo is None or hi is None:
        return None
    mid = (lo + hi) / 2
    if not evaluate(f, mid) < mid:
        return None
    return lo, hi


def check_two_bump_conditions(f: PLMap, g: PLMap) -> TwoBumpReport:
    failures = []
    sf = _single_left_mover(f)
    sg = _single_left_mover(g)
    if sf is None:
        failures.append("f is not a single bump moving points left")
    if sg is None:
        failures.append("g is not a single bump moving points left")
    if failures:
        return TwoBumpReport(False, None, failures)
    (a, c), (b, d) = sf, sg
    if not (a < b < c < d):
        failures.append("supports are not staggered as a < b < c < d")
    elif not evaluate(f, evaluate(g, c)) <= b:
        failures.append("f(g(c)) > b")
    return TwoBumpReport(not failures, (a, b, c, d), failures)


@dataclass
class RelatorReport:
    hypotheses: TwoBumpReport
    chain1: list
    chain2: list
    disjoint1: bool
    disjoint2: bool

    @property
    def chain1_holds(self) -> bool:
        return all(m == self.chain1[0] for m in self.chain1)

    @property
    def chain2_holds(self) -> bool:
        return all(m == self.chain2[0] for m in self.chain2)

    @property
    def presentation_holds(self) -> bool:
        # x -> h, x1 -> f: first and last members of each chain
        return self.chain1[0] == self.chain1[-1] and self.chain2[0] == self.chain2[-1]

    @property
    def ok(self) -> bool:
        return self.chain1_holds and self.chain2_holds and self.presentation_holds

    def lines(self) -> list[str]:
        def mark(b):
            return "PASS" if b else "FAIL"

        return [
            f"hypotheses: {self.hypotheses}",
            f"supp g disjoint from supp(h f h^-1): {self.disjoint1}",
            f"supp g disjoint from supp(h^2 f h^-2): {self.disjoint2}",
            f"{mark(self.chain1_holds)} h^2 f h^-2 = f(g h f h^-1 g^-1)f^-1 = f(h f h^-1)f^-1 = (fh) f (fh)^-1",
            f"{mark(self.chain2_holds)} h^3 f h^-3 = f(g h^2 f h^-2 g^-1)f^-1 = f(h^2 f h^-2)f^-1 = (fh^2) f (fh^2)^-1",
            f"{mark(self.chain1[0] == self.chain1[-1])} x^2 x1 x^-2 = (x1 x) x1 (x1 x)^-1 under x->h, x1->f",
            f"{mark(self.chain2[0] == self.chain2[-1])} x^3 x1 x^-3 = (x1 x^2) x1 (x1 x^2)^-1 under x->h, x1->f",
        ]


def _disjoint_supports(u: PLMap, v: PLMap) -> bool:
    cu = fix_support(u).support_components
    cv = fix_support(v).support_components

    def below(x, y):  # open-interval end x <= open-interval start y
        return x is not None and y is not None and x <= y

    return all(below(p[1], q[0]) or below(q[1], p[0]) for p in cu for q in cv)


def verify_f_relations(f: PLMap, g: PLMap) -> RelatorReport:
    """Evaluate both relator chains exactly for ``h = f∘g``."""
    h = compose(f, g)
    h2 = compose(h, h)
    h3 = compose(h2, h)
    hf = conjugate(h, f)
    h2f = conjugate(h2, f)
    chain1 = [
        conjugate(h2, f),
        conjugate(f, conjugate(compose(g, h), f)),
        conjugate(f, hf),
        conjugate(compose(f, h), f),
    ]
    chain2 = [
        conjugate(h3, f),
        conjugate(f, conjugate(compose(g, h2), f)),
        conjugate(f, h2f),
        conjugate(compose(f, h2), f),
    ]
    return RelatorReport(
        hypotheses=check_two_bump_conditions(f, g),
        chain1=chain1,
        chain2=chain2,
        disjoint1=_disjoint_supports(g, hf),
        disjoint2=_disjoint_supports(g, h2f),
    )
