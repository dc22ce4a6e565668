"""Exact numbers in Q or in a single quadratic field Q(sqrt d).

An element is stored as x + y*sqrt(d) with d a squarefree integer other
than 1 and x, y rationals. Elements with y = 0 are normalised to the
rational form, so equality is coordinate equality.

A p-adic valuation on Q(sqrt d) depends on an embedding when p splits.
The ``branch`` tag picks it: branch 0 sends sqrt(d) to the p-adic root
returned by :func:`gsp4kit.arith.sqrt_mod_prime_power` (the root with the
smaller residue mod p, or the one congruent to 1 mod 4 when p = 2) and
branch 1 to its negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    is_square,
    rational_sqrt,
    reduce_mod,
    sqrt_mod_prime_power,
    squarefree_decomposition,
    valuation,
)
from .errors import FieldMismatch, Unsupported, ZeroDenominator


def _frac(v) -> Fraction:
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


@dataclass(frozen=True)
class AlgebraicNumber:
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    d: int = 1
    branch: int | None = None

    def __post_init__(self):
        x, y, d = _frac(self.x), _frac(self.y), int(self.d)
        if y != 0 and d != 1:
            if d == 0:
                raise ValueError("d must be nonzero")
            dd, s = squarefree_decomposition(d)
            if dd == 1:
                x, y, d = x + y * s, Fraction(0), 1
            else:
                y, d = y * s, dd
        if y == 0 or d == 1:
            x, y, d = x + y if d == 1 else x, Fraction(0), 1
        branch = self.branch if d != 1 else None
        if branch not in (None, 0, 1):
            raise ValueError("branch must be 0 or 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "branch", branch)

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, q) -> AlgebraicNumber:
        return cls(_frac(q))

    @classmethod
    def sqrt(cls, q, branch: int | None = None) -> AlgebraicNumber:
        """sqrt(q) for rational q, landing in Q or Q(sqrt d)."""
        q = _frac(q)
        if q == 0:
            return cls()
        d, s = squarefree_decomposition(q)
        if d == 1:
            return cls(s)
        return cls(Fraction(0), s, d, branch)

    @classmethod
    def from_theta(cls, t, n, x, y, branch: int | None = None) -> AlgebraicNumber:
        """x + y*theta where theta is the root of X^2 - tX + n with +sqrt of the discriminant."""
        t, n, x, y = map(_frac, (t, n, x, y))
        disc = t * t - 4 * n
        root = cls.sqrt(disc, branch)
        theta = (root + t) / 2
        return theta * y + x

    @classmethod
    def coerce(cls, v) -> AlgebraicNumber:
        if isinstance(v, AlgebraicNumber):
            return v
        if isinstance(v, (int, Fraction, str)):
            return cls(_frac(v))
        raise TypeError(f"cannot interpret {v!r} as an algebraic number")

    # -- arithmetic ----------------------------------------------------------

    def _join(self, other: AlgebraicNumber) -> tuple[int, int | None]:
        if self.d != 1 and other.d != 1 and self.d != other.d:
            raise FieldMismatch(
                f"Q(sqrt {self.d}) and Q(sqrt {other.d}) differ; only one quadratic field at a time"
            )
        if self.branch is not None and other.branch is not None and self.branch != other.branch:
            raise FieldMismatch("operands use different p-adic embeddings")
        d = self.d if self.d != 1 else other.d
        b = self.branch if self.branch is not None else other.branch
        return d, b

    def __add__(self, other) -> AlgebraicNumber:
        try:
            other = AlgebraicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d, b = self._join(other)
        return AlgebraicNumber(self.x + other.x, self.y + other.y, d, b)

    __radd__ = __add__

    def __neg__(self) -> AlgebraicNumber:
        return AlgebraicNumber(-self.x, -self.y, self.d, self.branch)

    def __sub__(self, other) -> AlgebraicNumber:
        try:
            other = AlgebraicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> AlgebraicNumber:
        return AlgebraicNumber.coerce(other) - self

    def __mul__(self, other) -> AlgebraicNumber:
        try:
            other = AlgebraicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d, b = self._join(other)
        return AlgebraicNumber(
            self.x * other.x + d * self.y * other.y,
            self.x * other.y + self.y * other.x,
            d,
            b,
        )

    __rmul__ = __mul__

    def inverse(self) -> AlgebraicNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDenominator("division by zero")
        c = self.conjugate()
        return AlgebraicNumber(c.x / n, c.y / n, self.d, self.branch)

    def __truediv__(self, other) -> AlgebraicNumber:
        try:
            other = AlgebraicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> AlgebraicNumber:
        return AlgebraicNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> AlgebraicNumber:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = AlgebraicNumber(1, 0, self.d, self.branch), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.d == 1 and self.x == other
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return (self.x, self.y, self.d) == (other.x, other.y, other.d)

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.d))

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    # -- structure -------------------------------------------------------

    def conjugate(self) -> AlgebraicNumber:
        return AlgebraicNumber(self.x, -self.y, self.d, self.branch)

    def norm(self) -> Fraction:
        return self.x * self.x - self.d * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def is_rational(self) -> bool:
        return self.d == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.x

    def with_branch(self, branch: int | None) -> AlgebraicNumber:
        return AlgebraicNumber(self.x, self.y, self.d, branch)

    def sqrt_in_field(self) -> AlgebraicNumber:
        """A square root inside Q or the same quadratic field; Unsupported if none exists there."""
        if self.is_rational():
            q = self.x
            if q == 0 or is_square(q):
                return AlgebraicNumber(rational_sqrt(q) if q else 0)
            return AlgebraicNumber.sqrt(q, self.branch)
        u, v, d = self.x, self.y, self.d
        n = u * u - d * v * v
        if is_square(n):
            rn = rational_sqrt(n)
            for a2 in ((u + rn) / 2, (u - rn) / 2):
                if a2 > 0 and is_square(a2):
                    a = rational_sqrt(a2)
                    return AlgebraicNumber(a, v / (2 * a), d, self.branch)
        raise Unsupported(f"{self} has no square root in Q(sqrt {d})")

    # -- p-adic ------------------------------------------------------------

    def splitting(self, p: int) -> str:
        """'rational', 'split', 'inert' or 'ramified' for p in this field."""
        d = self.d
        if d == 1:
            return "rational"
        if p == 2:
            if d % 4 != 1:
                return "ramified"
            return "split" if d % 8 == 1 else "inert"
        if d % p == 0:
            return "ramified"
        return "split" if pow(d % p, (p - 1) // 2, p) == 1 else "inert"

    def _split_image(self, p: int, precision: int) -> int:
        """Image of a p-integral element in Z/p^precision under the chosen embedding."""
        if self.branch is None:
            raise ValueError(f"p = {p} splits in Q(sqrt {self.d}); a branch is required")
        s = sqrt_mod_prime_power(self.d, p, precision + 3)
        if self.branch == 1:
            s = -s
        mod = p**precision
        return (reduce_mod(self.x, mod) + reduce_mod(self.y, mod) * s) % mod

    def valuation(self, p: int) -> Fraction | float:
        if not self:
            return math.inf
        kind = self.splitting(p)
        if kind == "rational":
            return Fraction(valuation(self.x, p))
        if kind != "split":
            return Fraction(valuation(self.norm(), p), 2)
        vx, vy = valuation(self.x, p), valuation(self.y, p)
        m = min(vx, vy)
        scaled = self / Fraction(p) ** m
        prec = valuation(scaled.norm(), p) + 1
        image = scaled._split_image(p, prec)
        return Fraction(m + valuation(image, p)) if image else Fraction(m + prec)

    def residue(self, p: int, precision: int) -> int:
        """Image in Z/p^precision; requires a p-integral element with a Z_p-valued embedding."""
        kind = self.splitting(p)
        mod = p**precision
        if kind == "rational":
            return reduce_mod(self.x, mod)
        if kind != "split":
            raise Unsupported(f"Q(sqrt {self.d}) does not embed in Q_{p}")
        if valuation(self.x, p) < 0 or valuation(self.y, p) < 0:
            if self.valuation(p) < 0:
                raise ValueError("element is not p-integral")
            raise Unsupported("coordinates with p in the denominator are not supported")
        return self._split_image(p, precision)

    # -- presentation --------------------------------------------------------

    def to_record(self) -> dict:
        if self.is_rational():
            return {"rational": str(self.x)}
        rec = {"d": self.d, "x": str(self.x), "y": str(self.y)}
        if self.branch is not None:
            rec["branch"] = self.branch
        return rec

    @classmethod
    def from_record(cls, rec) -> AlgebraicNumber:
        if isinstance(rec, (int, str)):
            return cls(_frac(rec))
        if "rational" in rec:
            return cls(_frac(rec["rational"]))
        branch = rec.get("branch")
        if "t" in rec:
            return cls.from_theta(rec["t"], rec["n"], rec.get("x", 0), rec.get("y", 0), branch)
        if "d" in rec:
            return cls(_frac(rec.get("x", 0)), _frac(rec.get("y", 0)), int(rec["d"]), branch)
        raise ValueError(f"unrecognised algebraic number record {rec!r}")

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.x)
        sign = "+" if self.y >= 0 else "-"
        return f"{self.x} {sign} {abs(self.y)}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self})"


def as_algebraic(v) -> AlgebraicNumber:
    return AlgebraicNumber.coerce(v)
