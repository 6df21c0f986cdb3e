"""Exact ordered-field scalars.

Rationals are plain :class:`fractions.Fraction` values.  Elements of a real
quadratic field ``Q(sqrt d)`` are :class:`QuadraticNumber` instances with a
non-zero irrational part; every operation that produces a zero irrational
part collapses back to a ``Fraction``, so each real number has exactly one
representation.  No floating point is used in any comparison.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from sympy import factorint

__all__ = [
    "QuadraticNumber",
    "Scalar",
    "IncompatibleRadicands",
    "as_scalar",
    "sqrt",
    "compare",
    "parse_scalar",
    "format_scalar",
    "scalar_to_json",
    "scalar_from_json",
    "radicand",
]


class IncompatibleRadicands(ValueError):
    """Raised when two quadratic numbers from different fields meet."""


def _squarefree(d: int) -> bool:
    return d > 1 and all(e == 1 for e in factorint(d).values())


class QuadraticNumber:
    """The real number ``a + b*sqrt(d)`` with rational ``a``, ``b`` and
    square-free ``d > 1``.

    Construct through :func:`sqrt` or :meth:`make`; the latter returns a
    ``Fraction`` when ``b == 0``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        a, b = Fraction(a), Fraction(b)
        if b == 0:
            raise ValueError("irrational part must be non-zero; use QuadraticNumber.make")
        if not _squarefree(d):
            raise ValueError(f"radicand {d} is not a square-free integer > 1")
        self.a = a
        self.b = b
        self.d = d

    @staticmethod
    def make(a, b, d: int) -> "Scalar":
        b = Fraction(b)
        if b == 0:
            return Fraction(a)
        return QuadraticNumber(a, b, d)

    # -- coercion helpers -------------------------------------------------
    def _parts(self, other):
        """Return (a, b) of ``other`` viewed in this field."""
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise IncompatibleRadicands(f"sqrt({self.d}) vs sqrt({other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadraticNumber.make(self.a + p[0], self.b + p[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadraticNumber.make(self.a - p[0], self.b - p[1], self.d)

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return QuadraticNumber.make(p[0] - self.a, p[1] - self.b, self.d)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, e = p
        return QuadraticNumber.make(
            self.a * c + self.b * e * self.d, self.a * e + self.b * c, self.d
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def reciprocal(self) -> "QuadraticNumber":
        n = self.norm()
        # n != 0 because d is not a square
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        if p[1] == 0:
            if p[0] == 0:
                raise ZeroDivisionError("division by zero")
            return QuadraticNumber.make(self.a / p[0], self.b / p[0], self.d)
        return self * QuadraticNumber(p[0], p[1], self.d).reciprocal()

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.reciprocal() * p[0]

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.reciprocal()
        result: Scalar = Fraction(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    # -- order ------------------------------------------------------------
    def sign(self) -> int:
        return _quadratic_sign(self.a, self.b, self.d)

    def _cmp(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return _quadratic_sign(self.a - p[0], self.b - p[1], self.d)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return False  # b != 0, so never rational
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        # display only, never used in decisions
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"QuadraticNumber({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadraticNumber]


def _quadratic_sign(a: Fraction, b: Fraction, d: int) -> int:
    """Exact sign of ``a + b*sqrt(d)``."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with d*b^2
    lhs, rhs = a * a, d * b * b
    if lhs == rhs:  # impossible for square-free d, kept for safety
        return 0
    return sa if lhs > rhs else sb


def as_scalar(x) -> Scalar:
    if isinstance(x, QuadraticNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def sqrt(d: int) -> QuadraticNumber:
    return QuadraticNumber(0, 1, d)


def radicand(x) -> int | None:
    return x.d if isinstance(x, QuadraticNumber) else None


def compare(x, y) -> int:
    """Return -1, 0 or +1 according to the real order of ``x`` and ``y``."""
    x, y = as_scalar(x), as_scalar(y)
    if x < y:
        return -1
    if x == y:
        return 0
    return 1


# -- text and JSON forms ----------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^\(\s*(?P<a>{_RAT})\s*\)\s*\+\s*\(\s*(?P<b>{_RAT})\s*\)\s*(?:√|sqrt)\s*(?P<d>\d+)$"
)


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(_RAT, text):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def parse_scalar(text: str) -> Scalar:
    """Parse ``p/q``, ``p`` or ``(a)+(b)√d`` (``sqrt`` accepted for ``√``)."""
    text = text.strip()
    m = _QUAD_RE.match(text)
    if m:
        return QuadraticNumber.make(
            _parse_rational(m["a"]), _parse_rational(m["b"]), int(m["d"])
        )
    return _parse_rational(text)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    x = as_scalar(x)
    if isinstance(x, QuadraticNumber):
        return f"({_fmt_rat(x.a)})+({_fmt_rat(x.b)})√{x.d}"
    return _fmt_rat(x)


def scalar_to_json(x):
    x = as_scalar(x)
    if isinstance(x, QuadraticNumber):
        return {"a": _fmt_rat(x.a), "b": _fmt_rat(x.b), "d": x.d}
    return _fmt_rat(x)


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, dict):
        return QuadraticNumber.make(
            _parse_rational(str(obj["a"])), _parse_rational(str(obj["b"])), int(obj["d"])
        )
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if isinstance(obj, str):
        return parse_scalar(obj)
    raise ValueError(f"scalars must be strings or {{a,b,d}} objects, got {obj!r}")
