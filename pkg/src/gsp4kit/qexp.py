"""Truncated q-expansions and the operator calculus on them.

A :class:`QExpansion` holds a_0, ..., a_N (N is the truncation, inclusive)
over one of the rings in :mod:`gsp4kit.rings`. Operators never read past
a_N and shrink N when they must (T_l and U_p divide it by l or p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .algebraic import AlgebraicNumber
from .arith import hensel_unit_root, is_prime, valuation
from .characters import DirichletCharacter, WeightCharacter
from .errors import (
    NegativePower,
    NotOrdinary,
    RingMismatch,
    TruncationTooShort,
    Unsupported,
    ValidationError,
)
from .hecke import ordinary_gl2
from .rings import (
    CoefficientRing,
    IntegersModPower,
    IwasawaRing,
    QuadraticRing,
    Rationals,
    ring_from_descriptor,
)
from .weights import Weights

MAX_TRUNCATION = 10_000


@dataclass(frozen=True)
class QExpansion:
    coefficients: tuple
    ring: CoefficientRing = field(default_factory=Rationals)
    weight: int = 0
    character: DirichletCharacter = field(default_factory=DirichletCharacter.trivial)
    level: int = 1
    twist: str | None = None

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("need at least a_0")
        if len(self.coefficients) - 1 > MAX_TRUNCATION:
            raise ValueError(f"truncation above {MAX_TRUNCATION}")
        object.__setattr__(self, "coefficients", tuple(self.ring.coerce(c) for c in self.coefficients))

    @classmethod
    def from_list(cls, coeffs: Sequence, **kw) -> QExpansion:
        return cls(tuple(coeffs), **kw)

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int):
        if not 0 <= n <= self.truncation:
            raise TruncationTooShort(f"a_{n} lies beyond the truncation {self.truncation}")
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def with_coefficients(self, coeffs: Sequence, **changes) -> QExpansion:
        return replace(self, coefficients=tuple(coeffs), **changes)

    def truncate(self, n: int) -> QExpansion:
        if n > self.truncation:
            raise TruncationTooShort(f"cannot extend truncation {self.truncation} to {n}")
        return self.with_coefficients(self.coefficients[: n + 1])

    def _check_ring(self, other: QExpansion) -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.descriptor()} vs {other.ring.descriptor()}")

    def __add__(self, other: QExpansion) -> QExpansion:
        self._check_ring(other)
        n = min(self.truncation, other.truncation)
        R = self.ring
        return self.with_coefficients([R.add(self[i], other[i]) for i in range(n + 1)])

    def __sub__(self, other: QExpansion) -> QExpansion:
        self._check_ring(other)
        n = min(self.truncation, other.truncation)
        R = self.ring
        return self.with_coefficients([R.sub(self[i], other[i]) for i in range(n + 1)])

    def scale(self, c) -> QExpansion:
        R = self.ring
        c = R.coerce(c)
        return self.with_coefficients([R.mul(c, a) for a in self.coefficients])

    def __mul__(self, other: QExpansion) -> QExpansion:
        """Cauchy product; weights add and characters multiply."""
        self._check_ring(other)
        n = min(self.truncation, other.truncation)
        R = self.ring
        out = [R.zero() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self[i]
            if R.is_zero(a):
                continue
            for j in range(n + 1 - i):
                out[i + j] = R.add(out[i + j], R.mul(a, other[j]))
        return replace(
            self,
            coefficients=tuple(out),
            weight=self.weight + other.weight,
            character=self.character * other.character,
            level=math.lcm(self.level, other.level),
        )

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(a) for a in self.coefficients)

    def agrees_with(self, other: QExpansion) -> bool:
        """Coefficient equality up to the smaller truncation."""
        self._check_ring(other)
        n = min(self.truncation, other.truncation)
        return self.coefficients[: n + 1] == other.coefficients[: n + 1]

    def change_ring(self, ring: CoefficientRing) -> QExpansion:
        return replace(self, coefficients=tuple(ring.coerce(c) for c in self.coefficients), ring=ring)

    def to_record(self) -> dict:
        rec = {
            "ring": self.ring.descriptor(),
            "weight": self.weight,
            "character": self.character.to_record(),
            "level": self.level,
            "coefficients": [self.ring.to_json(a) for a in self.coefficients],
        }
        if self.twist is not None:
            rec["twist"] = self.twist
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> QExpansion:
        ring = ring_from_descriptor(rec.get("ring", {"type": "rationals"}))
        return cls(
            tuple(ring.from_json(c) for c in rec["coefficients"]),
            ring,
            int(rec.get("weight", 0)),
            DirichletCharacter.from_record(rec.get("character", {"modulus": 1})),
            int(rec.get("level", 1)),
            rec.get("twist"),
        )


def _require_prime(l: int) -> None:
    if not is_prime(l):
        raise ValidationError(f"{l} is not prime")


def _char_value(f: QExpansion, n: int):
    """chi(n) in the coefficient ring, zero when n shares a factor with the modulus."""
    z = f.character.evaluate(n)
    return f.ring.zero() if z is None else f.ring.root_of_unity(z)


def _ring_prime(ring: CoefficientRing) -> int | None:
    return getattr(ring, "p", None)


def hecke_T(f: QExpansion, l: int) -> QExpansion:
    """a_n -> a_{nl} + l^(k-1) chi(l) a_{n/l}; the truncation becomes floor(N/l)."""
    _require_prime(l)
    if f.level % l == 0 or _ring_prime(f.ring) == l:
        raise ValidationError(f"T_{l} needs l prime to the level and to p")
    if isinstance(f.ring, IwasawaRing):
        raise Unsupported("T_l on families needs the weight as a Lambda-element")
    if f.truncation < l:
        raise TruncationTooShort(f"T_{l} needs truncation >= {l}")
    R = f.ring
    n_out = f.truncation // l
    c = R.mul(R.coerce(Fraction(l) ** (f.weight - 1)), _char_value(f, l))
    out = []
    for n in range(n_out + 1):
        a = f[n * l]
        if n % l == 0:
            a = R.add(a, R.mul(c, f[n // l]))
        out.append(a)
    return f.with_coefficients(out)


def u_p(f: QExpansion, p: int) -> QExpansion:
    """a_n -> a_{np}."""
    _require_prime(p)
    if f.truncation < p:
        raise TruncationTooShort(f"U_{p} needs truncation >= {p}")
    return f.with_coefficients([f[n * p] for n in range(f.truncation // p + 1)])


def diamond(f: QExpansion, d: int) -> QExpansion:
    """<d> acts on a form with character chi as multiplication by chi(d)."""
    if math.gcd(d, f.level) != 1:
        raise ValidationError(f"<{d}> needs d prime to the level {f.level}")
    return f.scale(_char_value(f, d))


def p_deplete(f: QExpansion, p: int) -> QExpansion:
    R = f.ring
    out = [R.zero() if n % p == 0 else a for n, a in enumerate(f.coefficients)]
    return f.with_coefficients(out, level=math.lcm(f.level, p))


def theta_power(f: QExpansion, t: int) -> QExpansion:
    if t < 0:
        raise NegativePower(f"theta^{t} is not defined here")
    R = f.ring
    out = [R.mul(R.coerce(n**t), a) for n, a in enumerate(f.coefficients)]
    return f.with_coefficients(out, weight=f.weight + 2 * t)


def _v_of_q(f: QExpansion, p: int) -> QExpansion:
    """f(q^p), truncated at the same N."""
    R = f.ring
    out = [f[n // p] if n % p == 0 else R.zero() for n in range(f.truncation + 1)]
    return f.with_coefficients(out)


@dataclass(frozen=True)
class Stabilization:
    form: QExpansion
    unit_root: object
    other_root: object


def p_stabilize_with_roots(f: QExpansion, p: int, branch: int | None = 0) -> Stabilization:
    """f(q) - beta f(q^p) with beta the non-unit root of X^2 - a_p X + p^(k-1) chi(p)."""
    _require_prime(p)
    if f.truncation < p:
        raise TruncationTooShort(f"stabilisation at {p} needs truncation >= {p}")
    R = f.ring
    if f.level % p == 0:
        # already p-stabilised: check the eigenrelation and return unchanged
        a_p = f[p]
        if not u_p(f, p).agrees_with(f.scale(a_p)):
            raise ValidationError(f"form of level divisible by {p} is not a U_{p}-eigenvector")
        return Stabilization(f, a_p, R.zero())
    a_p = f[p]
    k = f.weight
    if isinstance(R, IntegersModPower):
        if R.p != p:
            raise RingMismatch(f"coefficients live in Z/{R.p}^{R.M}, not a {p}-adic ring")
        chi_p = _char_value(f, p)
        b = R.mul(R.coerce(p ** (k - 1)), chi_p)
        if a_p % p == 0:
            raise NotOrdinary(f"a_{p} is divisible by {p}")
        alpha = hensel_unit_root(a_p, b, p, R.M)
        beta = R.sub(a_p, alpha)
    elif isinstance(R, (Rationals, QuadraticRing)):
        chi_p = _char_value(f, p)
        params = ordinary_gl2(AlgebraicNumber.coerce(a_p), k, p, AlgebraicNumber.coerce(chi_p), branch)
        alpha, beta = params.a, params.b
        if isinstance(R, QuadraticRing) or not beta.is_rational():
            d = R.d if isinstance(R, QuadraticRing) else beta.d
            R = QuadraticRing(d, branch)
            f = f.change_ring(R)
        alpha, beta = R.coerce(alpha), R.coerce(beta)
    else:
        raise Unsupported("stabilisation of Lambda-adic coefficients is not implemented")
    g = replace(f - _v_of_q(f, p).scale(beta), level=f.level * p)
    assert u_p(g, p).agrees_with(g.scale(alpha)), "U_p eigenrelation failed"
    return Stabilization(g, alpha, beta)


def p_stabilize(f: QExpansion, p: int, branch: int | None = 0) -> QExpansion:
    return p_stabilize_with_roots(f, p, branch).form


def specialization_precision(M: int, D: int, p: int, k: int) -> int:
    """Exponent r such that the specialisation is exact mod p^r."""
    if k == 0:
        return M
    return min(M, D * (1 + valuation(k, p)))


def specialize(family: QExpansion, point: WeightCharacter | int, p: int | None = None) -> QExpansion:
    """Apply T -> (1+p)^k - 1 to every coefficient of a Lambda-adic series."""
    R = family.ring
    if not isinstance(R, IwasawaRing):
        raise RingMismatch("specialisation needs Iwasawa coefficients")
    if isinstance(point, WeightCharacter):
        if not point.finite_part.is_trivial():
            raise Unsupported("only points with trivial finite part are supported")
        k = point.exponent
        if point.p != R.p:
            raise RingMismatch("point and family use different primes")
    else:
        k = int(point)
    if p is not None and p != R.p:
        raise RingMismatch("p does not match the family")
    if k < 0:
        raise ValidationError("weight exponent must be non-negative")
    r = specialization_precision(R.M, R.D, R.p, k)
    mod = R.p**r
    x = (pow(1 + R.p, k, mod) - 1) % mod
    target = IntegersModPower(R.p, r)
    coeffs = [R.evaluate(a, x, mod) for a in family.coefficients]
    return QExpansion(tuple(coeffs), target, k, family.character, family.level, family.twist)


@dataclass(frozen=True)
class EFamily:
    first: QExpansion
    second: QExpansion
    t: int
    r: int


def build_E_family(g1: QExpansion, g2: QExpansion, weights: Weights | int, p: int) -> EFamily:
    """(g1 depleted, theta^t of g2 depleted); t comes from the weights when given."""
    if isinstance(weights, Weights):
        t, r = weights.t, weights.r
    else:
        t, r = int(weights), None
    if t < 0:
        raise NegativePower(f"t = {t} is negative; the weights are outside region f")
    return EFamily(p_deplete(g1, p), theta_power(p_deplete(g2, p), t), t, r)
