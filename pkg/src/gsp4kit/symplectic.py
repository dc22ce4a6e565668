"""Exact 4x4 matrices for GSp4 over Q or Z/m.

The symplectic form is J = antidiag(1, 1, -1, -1) read top to bottom, so
J[0][3] = J[1][2] = 1 and J[2][1] = J[3][0] = -1. A matrix g is a
similitude when g^t J g = nu J.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import reduce_mod
from .errors import DeterminantMismatch, RingMismatch


def _normalise(x, ring: int | None):
    if ring is None:
        x = Fraction(x)
        return int(x) if x.denominator == 1 else x
    return reduce_mod(x, ring)


@dataclass(frozen=True)
class Matrix:
    """Square matrix with a ring tag: None for Q, an integer m for Z/m."""

    rows: tuple[tuple, ...]
    ring: int | None = None

    def __post_init__(self):
        rows = tuple(tuple(_normalise(x, self.ring) for x in r) for r in self.rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Iterable[Sequence], ring: int | None = None) -> Matrix:
        return cls(tuple(tuple(r) for r in rows), ring)

    @classmethod
    def identity(cls, n: int = 4, ring: int | None = None) -> Matrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), ring)

    @classmethod
    def diag(cls, *entries, ring: int | None = None) -> Matrix:
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)), ring)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: Matrix) -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"cannot combine matrices over {self.ring} and {other.ring}")
        if self.size != other.size:
            raise ValueError("size mismatch")

    def __mul__(self, other: Matrix | int | Fraction) -> Matrix:
        if not isinstance(other, Matrix):
            return Matrix(tuple(tuple(x * other for x in r) for r in self.rows), self.ring)
        self._check(other)
        n = self.size
        cols = list(zip(*other.rows))
        return Matrix(
            tuple(tuple(sum(a * b for a, b in zip(self.rows[i], cols[j])) for j in range(n)) for i in range(n)),
            self.ring,
        )

    def __rmul__(self, c) -> Matrix:
        return self * c

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ring)

    def __neg__(self) -> Matrix:
        return self * -1

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def transpose(self) -> Matrix:
        return Matrix(tuple(zip(*self.rows)), self.ring)

    def det(self):
        return _det(self.rows, self.ring)

    def reduce(self, modulus: int) -> Matrix:
        if self.ring is not None and self.ring % modulus:
            raise RingMismatch(f"cannot reduce from Z/{self.ring} to Z/{modulus}")
        return Matrix(self.rows, modulus)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def _det(rows, ring):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _det(minor, ring)
    return _normalise(total, ring)


def J(ring: int | None = None) -> Matrix:
    return Matrix.of([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]], ring)


def similitude(m: Matrix):
    """nu with m^t J m = nu J, or None when m is not a symplectic similitude."""
    if m.size != 4:
        raise ValueError("expected a 4x4 matrix")
    j = J(m.ring)
    lhs = m.transpose() * j * m
    nu = lhs[0, 3]
    if nu == 0 or lhs != j * nu:
        return None
    return nu


def is_symplectic(m: Matrix) -> tuple[bool, object]:
    nu = similitude(m)
    return (nu is not None, nu)


def iota(h1: Matrix, h2: Matrix) -> Matrix:
    """Embed a pair with equal determinants: h1 on the outer coordinates, h2 on the inner ones."""
    if h1.size != 2 or h2.size != 2:
        raise ValueError("expected 2x2 matrices")
    if h1.ring != h2.ring:
        raise RingMismatch("h1 and h2 live over different rings")
    d1, d2 = h1.det(), h2.det()
    if d1 != d2:
        raise DeterminantMismatch(f"det h1 = {d1} but det h2 = {d2}")
    if d1 == 0:
        raise DeterminantMismatch("determinant must be nonzero")
    (a, b), (c, d) = h1.rows
    (a2, b2), (c2, d2_) = h2.rows
    g = Matrix.of(
        [[a, 0, 0, b], [0, a2, b2, 0], [0, c2, d2_, 0], [c, 0, 0, d]],
        h1.ring,
    )
    assert similitude(g) == d1
    return g


PARABOLICS = ("Borel", "Siegel", "Klingen")


def in_parabolic(m: Matrix, which: str) -> bool:
    """Membership of m in the standard Borel, Siegel or Klingen parabolic (zero pattern only)."""
    z = [[m[i, j] == 0 for j in range(4)] for i in range(4)]
    if which == "Borel":
        return all(z[i][j] for i in range(4) for j in range(i))
    if which == "Siegel":
        return all(z[i][j] for i in (2, 3) for j in (0, 1))
    if which == "Klingen":
        return z[1][0] and z[2][0] and z[3][0] and z[3][1] and z[3][2]
    raise ValueError(f"unknown parabolic {which!r}; choose from {PARABOLICS}")


def valid_u_kl(m: Matrix, p: int) -> bool:
    """First column mod p avoids the shapes (0,*,*,0) and (*,0,0,*)."""
    col = [x % p for x in m.reduce(p).column(0)] if m.ring is not None else [reduce_mod(x, p) for x in m.column(0)]
    inner_only = col[0] == 0 and col[3] == 0
    outer_only = col[1] == 0 and col[2] == 0
    return not (inner_only or outer_only)


def u_b_constant(ring: int | None = None) -> Matrix:
    """Lower unipotent representative of the open orbit, first column (1, 1, 0, 0)."""
    m = Matrix.of(
        [[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, -1, -1, 1]],
        ring,
    )
    assert similitude(m) == 1
    return m
