"""Integer lattices in Hermite normal form."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["Lattice", "hnf", "image", "direct_sum", "IncompatibleLattices"]


class IncompatibleLattices(ValueError):
    pass


def hnf(rows: Iterable[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, strictly increasing in column, and every entry above
    a pivot lies in ``[0, pivot)``.  Zero rows are dropped.
    """
    A = [list(r) for r in rows]
    for r in A:
        if len(r) != dim:
            raise ValueError(f"row {r} does not have length {dim}")
    A = [r for r in A if any(r)]
    top = 0
    for col in range(dim):
        while True:
            nz = [i for i in range(top, len(A)) if A[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][col]))
            A[top], A[piv] = A[piv], A[top]
            p = A[top][col]
            clean = True
            for i in range(top + 1, len(A)):
                q = A[i][col] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[top])]
                if A[i][col]:
                    clean = False
            if clean:
                break
        if top < len(A) and A[top][col] != 0:
            if A[top][col] < 0:
                A[top] = [-x for x in A[top]]
            p = A[top][col]
            for i in range(top):
                q = A[i][col] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[top])]
            top += 1
        A = A[:top] + [r for r in A[top:] if any(r)]
    return tuple(tuple(r) for r in A[:top])


@dataclass(frozen=True)
class Lattice:
    """A subgroup of ``Z^dim`` stored by its HNF basis.

    ``ambient`` labels the coordinates (e.g. the primes of an exponent
    basis); lattices over different labels are never compared.
    """

    dim: int
    basis: tuple
    ambient: tuple = ()

    @classmethod
    def from_rows(cls, rows, dim: int, ambient=()) -> "Lattice":
        return cls(dim, hnf(rows, dim), tuple(ambient))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _check(self, other: "Lattice"):
        if self.dim != other.dim or self.ambient != other.ambient:
            raise IncompatibleLattices(
                f"lattices over {self.ambient or self.dim} and {other.ambient or other.dim}"
            )

    def coordinates(self, v: Sequence[int]):
        """Integer coordinates of ``v`` in the HNF basis, or ``None``."""
        if len(v) != self.dim:
            raise IncompatibleLattices(f"vector of length {len(v)} in a lattice of dimension {self.dim}")
        v = list(v)
        coords = []
        for row in self.basis:
            col = next(j for j, x in enumerate(row) if x)
            if any(v[j] for j in range(col)):
                return None
            q, r = divmod(v[col], row[col])
            if r:
                return None
            coords.append(q)
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        if any(v):
            return None
        return coords

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_lattice(self, other: "Lattice") -> bool:
        self._check(other)
        return all(r in self for r in other.basis)

    def index(self, sub: "Lattice"):
        """``[self : sub]`` for a sublattice; ``math.inf`` if ranks differ."""
        self._check(sub)
        if not self.contains_lattice(sub):
            raise ValueError("second lattice is not contained in the first")
        if sub.rank < self.rank:
            return math.inf
        M = [self.coordinates(r) for r in sub.basis]
        return abs(_det(M))

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.dim, self.basis, self.ambient) == (other.dim, other.basis, other.ambient)

    def __hash__(self):
        return hash((self.dim, self.basis, self.ambient))

    def matrix_lines(self) -> list[str]:
        if not self.basis:
            return ["(zero lattice)"]
        width = max(len(str(x)) for r in self.basis for x in r)
        return ["[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.basis]


def image(vectors, dim: int, ambient=()) -> Lattice:
    return Lattice.from_rows(vectors, dim, ambient)


def direct_sum(L1: Lattice, L2: Lattice) -> Lattice:
    rows = [tuple(r) + (0,) * L2.dim for r in L1.basis]
    rows += [(0,) * L1.dim + tuple(r) for r in L2.basis]
    amb = ()
    if L1.ambient or L2.ambient:
        amb = tuple(("L", a) for a in L1.ambient) + tuple(("R", a) for a in L2.ambient)
    return Lattice.from_rows(rows, L1.dim + L2.dim, amb)


def _det(M) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]
