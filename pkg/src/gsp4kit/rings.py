"""Coefficient rings for truncated q-expansions.

Each ring is a small immutable descriptor whose methods act on plain Python
values: Fractions for Q, AlgebraicNumbers for a quadratic field, ints for
Z/p^M and tuples of ints for (Z/p^M)[T]/(T^D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicNumber
from .arith import primitive_root, reduce_mod
from .characters import RootOfUnity
from .errors import RingMismatch, Unsupported

MAX_MODULUS_EXPONENT = 64


class CoefficientRing:
    """Interface shared by the concrete rings below."""

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, x):  # pragma: no cover - abstract
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def root_of_unity(self, z: RootOfUnity):
        """Image of a character value; only signs embed in characteristic-zero rings here."""
        return self.coerce(z.sign())

    def descriptor(self) -> dict:  # pragma: no cover - abstract
        raise NotImplementedError

    def to_json(self, a):  # pragma: no cover - abstract
        raise NotImplementedError

    def from_json(self, v):  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(CoefficientRing):
    def coerce(self, x):
        if isinstance(x, AlgebraicNumber):
            return x.to_fraction()
        return Fraction(x)

    def descriptor(self) -> dict:
        return {"type": "rationals"}

    def to_json(self, a):
        return str(a)

    def from_json(self, v):
        return Fraction(v)


@dataclass(frozen=True)
class QuadraticRing(CoefficientRing):
    d: int
    branch: int | None = None

    def coerce(self, x):
        x = AlgebraicNumber.coerce(x)
        if not x.is_rational() and x.d != self.d:
            raise RingMismatch(f"{x} does not lie in Q(sqrt {self.d})")
        return AlgebraicNumber(x.x, x.y, self.d, self.branch)

    def descriptor(self) -> dict:
        return {"type": "quadratic", "d": self.d, "branch": self.branch}

    def to_json(self, a):
        return a.to_record()

    def from_json(self, v):
        return self.coerce(AlgebraicNumber.from_record(v))


def _teichmuller_image(z: RootOfUnity, p: int, M: int) -> int:
    n = z.frac.denominator
    if (p - 1) % n:
        raise Unsupported(f"a root of unity of order {n} does not lie in Z_{p}")
    e = z.frac.numerator * ((p - 1) // n)
    # omega(g) is the Teichmuller lift of the smallest primitive root g mod p
    modulus = p**M
    t = pow(primitive_root(p), p ** (M - 1), modulus)
    return pow(t, e, modulus)


@dataclass(frozen=True)
class IntegersModPower(CoefficientRing):
    p: int
    M: int

    def __post_init__(self):
        if not 1 <= self.M <= MAX_MODULUS_EXPONENT:
            raise ValueError(f"modulus exponent must be in 1..{MAX_MODULUS_EXPONENT}")

    @property
    def modulus(self) -> int:
        return self.p**self.M

    def coerce(self, x):
        if isinstance(x, AlgebraicNumber):
            return x.residue(self.p, self.M)
        return reduce_mod(x, self.modulus)

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def root_of_unity(self, z: RootOfUnity):
        return _teichmuller_image(z, self.p, self.M)

    def descriptor(self) -> dict:
        return {"type": "zmod", "p": self.p, "M": self.M}

    def to_json(self, a):
        return a

    def from_json(self, v):
        return int(v) % self.modulus


@dataclass(frozen=True)
class IwasawaRing(CoefficientRing):
    """(Z/p^M)[T]/(T^D), the weight variable T = [1 + p] - 1."""

    p: int
    M: int
    D: int

    def __post_init__(self):
        if not 1 <= self.M <= MAX_MODULUS_EXPONENT or self.D < 1:
            raise ValueError("need 1 <= M <= 64 and D >= 1")

    @property
    def modulus(self) -> int:
        return self.p**self.M

    def coerce(self, x):
        if isinstance(x, tuple):
            if len(x) != self.D:
                raise ValueError(f"expected {self.D} coefficients")
            return tuple(c % self.modulus for c in x)
        return (reduce_mod(x, self.modulus),) + (0,) * (self.D - 1)

    def add(self, a, b):
        return tuple((x + y) % self.modulus for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.modulus for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.modulus for x in a)

    def mul(self, a, b):
        out = [0] * self.D
        for i, x in enumerate(a):
            if x:
                for j in range(self.D - i):
                    out[i + j] += x * b[j]
        return tuple(c % self.modulus for c in out)

    def root_of_unity(self, z: RootOfUnity):
        return self.coerce(_teichmuller_image(z, self.p, self.M))

    def descriptor(self) -> dict:
        return {"type": "iwasawa", "p": self.p, "M": self.M, "D": self.D}

    def to_json(self, a):
        return list(a)

    def from_json(self, v):
        return self.coerce(tuple(int(c) for c in v))

    def evaluate(self, a, x: int, modulus: int) -> int:
        """Substitute T = x and reduce mod ``modulus`` (Horner)."""
        acc = 0
        for c in reversed(a):
            acc = (acc * x + c) % modulus
        return acc


def ring_from_descriptor(desc: dict) -> CoefficientRing:
    kind = desc.get("type")
    if kind == "rationals":
        return Rationals()
    if kind == "quadratic":
        return QuadraticRing(int(desc["d"]), desc.get("branch"))
    if kind == "zmod":
        return IntegersModPower(int(desc["p"]), int(desc["M"]))
    if kind == "iwasawa":
        return IwasawaRing(int(desc["p"]), int(desc["M"]), int(desc["D"]))
    raise ValueError(f"unknown ring descriptor {desc!r}")
