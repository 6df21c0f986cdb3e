"""Characters built from endpoint germs, with exact sign decisions.

A character is a rational combination ``c_l * chi_l + c_r * chi_r`` of the
logarithmic endpoint slopes, or ``c_l * tau_l + c_r * tau_r`` of the
translation amplitudes.  Logarithms are never evaluated: the sign of a slope
combination is decided by comparing ``sigma_l^(L c_l) * sigma_r^(L c_r)``
with 1 after clearing denominators.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from ..plmap import AffineGerm, Interval, PLMap, germ
from .numtheory import ExponentVector, MultGroupSpec, to_exponents

__all__ = [
    "CharacterSpec",
    "UnsupportedCharacter",
    "parse_character",
    "char_sign",
    "germ_sign",
    "char_value",
    "char_exponents",
]


class UnsupportedCharacter(ValueError):
    """Mixed slope/translation combinations have no exact sign test."""


@dataclass(frozen=True)
class CharacterSpec:
    flavor: str  # "slope" or "translation"
    c_left: Fraction = Fraction(0)
    c_right: Fraction = Fraction(0)

    def __post_init__(self):
        if self.flavor not in ("slope", "translation"):
            raise ValueError(f"unknown character flavor {self.flavor!r}")
        object.__setattr__(self, "c_left", Fraction(self.c_left))
        object.__setattr__(self, "c_right", Fraction(self.c_right))

    @classmethod
    def chi_left(cls):
        return cls("slope", 1, 0)

    @classmethod
    def chi_right(cls):
        return cls("slope", 0, 1)

    @classmethod
    def tau_left(cls):
        return cls("translation", 1, 0)

    @classmethod
    def tau_right(cls):
        return cls("translation", 0, 1)

    @property
    def is_zero(self) -> bool:
        return self.c_left == 0 and self.c_right == 0

    def __add__(self, other: "CharacterSpec") -> "CharacterSpec":
        if self.flavor != other.flavor:
            raise UnsupportedCharacter("slope and translation characters cannot be combined")
        return CharacterSpec(self.flavor, self.c_left + other.c_left, self.c_right + other.c_right)

    def scaled(self, k) -> "CharacterSpec":
        k = Fraction(k)
        return CharacterSpec(self.flavor, k * self.c_left, k * self.c_right)

    def __str__(self):
        sym = ("chi_l", "chi_r") if self.flavor == "slope" else ("tau_l", "tau_r")
        terms = []
        for c, s in zip((self.c_left, self.c_right), sym):
            if c == 0:
                continue
            if c == 1:
                terms.append(s)
            elif c == -1:
                terms.append(f"-{s}")
            else:
                terms.append(f"{c}*{s}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


_TERM = re.compile(r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(chi_l|chi_r|tau_l|tau_r)")


def parse_character(text: str) -> CharacterSpec:
    """Parse combinations such as ``chi_l``, ``2*chi_l+3*chi_r`` or ``chi_l - 1/2 chi_r``."""
    s = text.replace(" ", "")
    pos, coeffs, flavors = 0, {}, set()
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.start() != pos:
            raise ValueError(f"cannot parse character {text!r}")
        sign = -1 if m[1] == "-" else 1
        c = Fraction(m[2]) if m[2] else Fraction(1)
        coeffs[m[3]] = coeffs.get(m[3], 0) + sign * c
        flavors.add("slope" if m[3].startswith("chi") else "translation")
        pos = m.end()
    if not coeffs:
        raise ValueError(f"cannot parse character {text!r}")
    if len(flavors) > 1:
        raise UnsupportedCharacter(f"{text!r} mixes slope and translation characters")
    flavor = flavors.pop()
    if flavor == "slope":
        return CharacterSpec("slope", coeffs.get("chi_l", 0), coeffs.get("chi_r", 0))
    return CharacterSpec("translation", coeffs.get("tau_l", 0), coeffs.get("tau_r", 0))


def _denominator_lcm(spec: CharacterSpec) -> int:
    return math.lcm(spec.c_left.denominator, spec.c_right.denominator)


def char_sign(spec: CharacterSpec, g: PLMap, interval: Interval) -> int:
    """Exact sign of ``spec`` at ``g``."""
    return germ_sign(spec, germ(g, "left", interval), germ(g, "right", interval))


def germ_sign(spec: CharacterSpec, lam: AffineGerm, rho: AffineGerm) -> int:
    """Exact sign of ``spec`` evaluated on a pair of endpoint germs."""
    if spec.flavor == "slope":
        L = _denominator_lcm(spec)
        el, er = int(spec.c_left * L), int(spec.c_right * L)
        v = Fraction(1)
        if el:
            v = v * lam.slope ** el
        if er:
            v = v * rho.slope ** er
        return (v > 1) - (v < 1)
    total = Fraction(0)
    if spec.c_left:
        total = total + spec.c_left * lam.amplitude
    if spec.c_right:
        total = total + spec.c_right * rho.amplitude
    return (total > 0) - (total < 0)


def char_value(spec: CharacterSpec, g: PLMap, interval: Interval):
    """Exact value for translation characters; for slope characters the
    multiplicative value ``sigma_l^c_l * sigma_r^c_r`` (integer coefficients only)."""
    lam = germ(g, "left", interval)
    rho = germ(g, "right", interval)
    if spec.flavor == "translation":
        v = Fraction(0)
        if spec.c_left:
            v = v + spec.c_left * lam.amplitude
        if spec.c_right:
            v = v + spec.c_right * rho.amplitude
        return v
    if _denominator_lcm(spec) != 1:
        raise ValueError("multiplicative value needs integer coefficients")
    v = Fraction(1)
    if spec.c_left:
        v = v * lam.slope ** int(spec.c_left)
    if spec.c_right:
        v = v * rho.slope ** int(spec.c_right)
    return v


def char_exponents(spec: CharacterSpec, g: PLMap, interval: Interval, P: MultGroupSpec) -> ExponentVector:
    """Formal-logarithm value of an integer slope combination."""
    if spec.flavor != "slope":
        raise UnsupportedCharacter("exponent vectors exist only for slope characters")
    if _denominator_lcm(spec) != 1:
        raise ValueError("exponent vectors need integer coefficients")
    el = to_exponents(P, germ(g, "left", interval).slope)
    er = to_exponents(P, germ(g, "right", interval).slope)
    return el.scale(int(spec.c_left)) + er.scale(int(spec.c_right))
