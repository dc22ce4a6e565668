"""Dirichlet characters, weight-characters of Z_p^x and classical points.

Characters are stored in discrete-log form. For an odd prime power q the
generator of (Z/q)^x is the smallest primitive root, and a character is the
single exponent e with chi(g) = exp(2 pi i e / phi(q)). For q = 4 the
generator is -1; for q = 2^r with r >= 3 the generators are (-1, 5).
Values are :class:`RootOfUnity` objects, i.e. exact elements of Q/Z.

Identification of roots of unity with p-adic ones (needed to compare a
character with a power of the Teichmuller character) is fixed by declaring
omega(g) = exp(2 pi i / (p - 1)) for g the smallest primitive root mod p.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from .arith import discrete_log, euler_phi, factor, is_prime, primitive_root
from .errors import NoSquareRoot, ParityViolation, RangeViolation


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2 pi i * frac), frac kept reduced in [0, 1)."""

    frac: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "frac", Fraction(self.frac) % 1)

    @classmethod
    def from_sign(cls, s: int) -> RootOfUnity:
        if s not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return cls(Fraction(0) if s == 1 else Fraction(1, 2))

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity(self.frac + other.frac)

    def __truediv__(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity(self.frac - other.frac)

    def __pow__(self, n: int) -> RootOfUnity:
        return RootOfUnity(self.frac * n)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(-self.frac)

    @property
    def order(self) -> int:
        return self.frac.denominator

    def is_one(self) -> bool:
        return self.frac == 0

    def sign(self) -> int:
        """+1 or -1 for real values; raises otherwise."""
        if self.frac == 0:
            return 1
        if self.frac == Fraction(1, 2):
            return -1
        raise ValueError(f"{self} is not real")

    def to_complex(self) -> complex:
        return cmath.exp(2j * math.pi * float(self.frac))

    def __str__(self) -> str:
        if self.frac == 0:
            return "1"
        if self.frac == Fraction(1, 2):
            return "-1"
        return f"zeta_{self.frac.denominator}^{self.frac.numerator}"


ONE = RootOfUnity()


def _component_orders(q: int) -> tuple[int, ...]:
    """Orders of the canonical generators of (Z/q)^x for a prime power q."""
    ((p, r),) = factor(q)
    if p != 2:
        return (euler_phi(q),)
    if r == 1:
        return ()
    if r == 2:
        return (2,)
    return (2, 2 ** (r - 2))


def _component_generators(q: int) -> tuple[int, ...]:
    ((p, r),) = factor(q)
    if p != 2:
        return (primitive_root(q),)
    if r == 1:
        return ()
    if r == 2:
        return (q - 1,)
    return (q - 1, 5)


def _component_logs(a: int, q: int) -> tuple[int, ...]:
    """Coordinates of the unit a in terms of the canonical generators mod q."""
    ((p, r),) = factor(q)
    a %= q
    if p != 2:
        return (discrete_log(a, q),)
    if r == 1:
        return ()
    if r == 2:
        return (0 if a == 1 else 1,)
    s = 0 if a % 4 == 1 else 1
    b = a if s == 0 else (-a) % q
    return (s, discrete_log_in_five(b, q))


def discrete_log_in_five(b: int, q: int) -> int:
    x, k = 1, 0
    while x != b:
        x = x * 5 % q
        k += 1
        if k > q:
            raise ValueError(f"{b} not in <5> mod {q}")
    return k


def _crt_lift(residue: int, q: int, modulus: int) -> int:
    """Integer congruent to residue mod q and to 1 mod modulus/q."""
    rest = modulus // q
    if rest == 1:
        return residue % q
    # x = residue (mod q), x = 1 (mod rest)
    x = residue + q * ((1 - residue) * pow(q, -1, rest) % rest)
    return x % modulus


@dataclass(frozen=True)
class DirichletCharacter:
    """A character of (Z/modulus)^x in discrete-log form.

    ``exponents`` maps each prime power q exactly dividing the modulus to a
    tuple of exponents, one per canonical generator of (Z/q)^x.
    """

    modulus: int
    exponents: tuple[tuple[int, tuple[int, ...]], ...] = field(default=())

    def __post_init__(self):
        if self.modulus < 1:
            raise RangeViolation("modulus must be positive")
        given = dict(self.exponents)
        norm = []
        for p, r in factor(self.modulus) if self.modulus > 1 else ():
            q = p**r
            orders = _component_orders(q)
            es = tuple(given.pop(q, (0,) * len(orders)))
            if len(es) != len(orders):
                raise ValueError(f"expected {len(orders)} exponents for modulus {q}")
            norm.append((q, tuple(e % n for e, n in zip(es, orders))))
        if given:
            raise ValueError(f"prime powers {sorted(given)} do not divide {self.modulus}")
        object.__setattr__(self, "exponents", tuple(norm))

    # -- construction ---------------------------------------------------

    @classmethod
    def trivial(cls, modulus: int = 1) -> DirichletCharacter:
        return cls(modulus)

    @classmethod
    def from_function(
        cls, modulus: int, f: Callable[[int], RootOfUnity]
    ) -> DirichletCharacter:
        """Build from a multiplicative function on units, read off on generators."""
        comps = []
        for p, r in factor(modulus) if modulus > 1 else ():
            q = p**r
            es = []
            for g, n in zip(_component_generators(q), _component_orders(q)):
                v = f(_crt_lift(g, q, modulus)).frac * n
                if v.denominator != 1:
                    raise ValueError("function is not a character of this modulus")
                es.append(int(v))
            comps.append((q, tuple(es)))
        return cls(modulus, tuple(comps))

    @classmethod
    def legendre(cls, p: int) -> DirichletCharacter:
        if p == 2 or not is_prime(p):
            raise RangeViolation("Legendre symbol needs an odd prime")
        return cls(p, ((p, ((p - 1) // 2,)),))

    @classmethod
    def teichmuller(cls, p: int) -> DirichletCharacter:
        """omega mod p, normalised by omega(g) = exp(2 pi i/(p-1))."""
        if p == 2 or not is_prime(p):
            raise RangeViolation("Teichmuller character needs an odd prime")
        return cls(p, ((p, (1,)),))

    @classmethod
    def all_characters(cls, modulus: int) -> Iterator[DirichletCharacter]:
        parts = []
        qs = [p**r for p, r in factor(modulus)] if modulus > 1 else []
        for q in qs:
            parts.append([(q, es) for es in product(*(range(n) for n in _component_orders(q)))])
        for combo in product(*parts):
            yield cls(modulus, tuple(combo))

    # -- evaluation -------------------------------------------------------

    def __call__(self, a: int) -> RootOfUnity | None:
        return self.evaluate(a)

    def evaluate(self, a: int) -> RootOfUnity | None:
        """chi(a), or None when gcd(a, modulus) > 1."""
        if math.gcd(a, self.modulus) != 1:
            return None
        total = Fraction(0)
        for q, es in self.exponents:
            for e, n, k in zip(es, _component_orders(q), _component_logs(a, q)):
                total += Fraction(e * k, n)
        return RootOfUnity(total)

    def parity(self) -> int:
        return self.evaluate(-1).sign()

    def is_even(self) -> bool:
        return self.parity() == 1

    def is_trivial(self) -> bool:
        return all(e == 0 for _, es in self.exponents for e in es)

    @property
    def order(self) -> int:
        o = 1
        for q, es in self.exponents:
            for e, n in zip(es, _component_orders(q)):
                o = math.lcm(o, n // math.gcd(e, n))
        return o

    # -- group structure ---------------------------------------------------

    def lift(self, modulus: int) -> DirichletCharacter:
        """The same character viewed modulo a multiple of its modulus."""
        if modulus % self.modulus:
            raise ValueError(f"{modulus} is not a multiple of {self.modulus}")
        if modulus == self.modulus:
            return self
        return DirichletCharacter.from_function(modulus, self.evaluate)

    def _common(self, other: DirichletCharacter) -> tuple[DirichletCharacter, DirichletCharacter]:
        m = math.lcm(self.modulus, other.modulus)
        return self.lift(m), other.lift(m)

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        a, b = self._common(other)
        comps = []
        for (q, es), (_, fs) in zip(a.exponents, b.exponents):
            comps.append((q, tuple(e + f for e, f in zip(es, fs))))
        return DirichletCharacter(a.modulus, tuple(comps))

    def inverse(self) -> DirichletCharacter:
        return DirichletCharacter(
            self.modulus, tuple((q, tuple(-e for e in es)) for q, es in self.exponents)
        )

    def __truediv__(self, other: DirichletCharacter) -> DirichletCharacter:
        return self * other.inverse()

    def __pow__(self, n: int) -> DirichletCharacter:
        return DirichletCharacter(
            self.modulus, tuple((q, tuple(e * n for e in es)) for q, es in self.exponents)
        )

    def component(self, p: int) -> DirichletCharacter:
        """The p-part: a character of p-power modulus."""
        for q, es in self.exponents:
            if q % p == 0:
                return DirichletCharacter(q, ((q, es),))
        return DirichletCharacter(1)

    def primitive(self) -> DirichletCharacter:
        """The primitive character inducing this one."""
        result = DirichletCharacter(1)
        for q, es in self.exponents:
            ((p, r),) = factor(q)
            comp = DirichletCharacter(q, ((q, es),))
            best = comp
            for rr in range(r - 1, -1, -1):
                try:
                    smaller = DirichletCharacter.from_function(p**rr, comp.evaluate)
                except ValueError:
                    break
                if smaller.lift(q) != comp:
                    break
                best = smaller
            result = result * best
        return result

    @property
    def conductor(self) -> int:
        return self.primitive().modulus

    def equivalent(self, other: DirichletCharacter) -> bool:
        """Equality of the underlying primitive characters."""
        return self.primitive() == other.primitive()

    # -- serialisation -----------------------------------------------------

    def to_record(self) -> dict:
        return {
            "modulus": self.modulus,
            "exponents": {str(q): list(es) for q, es in self.exponents},
        }

    @classmethod
    def from_record(cls, rec: dict) -> DirichletCharacter:
        exps = tuple((int(q), tuple(es)) for q, es in rec.get("exponents", {}).items())
        return cls(int(rec["modulus"]), exps)

    def __str__(self) -> str:
        if self.is_trivial():
            return f"trivial mod {self.modulus}"
        parts = ", ".join(f"{q}:{list(es)}" for q, es in self.exponents if any(es))
        return f"chi mod {self.modulus} [{parts}]"


def _check_odd_prime(p: int) -> None:
    if p == 2:
        raise RangeViolation("p = 2 is excluded; p must be an odd prime")
    if not is_prime(p):
        raise RangeViolation(f"{p} is not prime")


def _check_p_power(chi: DirichletCharacter, p: int) -> None:
    if chi.modulus > 1 and factor(chi.modulus)[0][0] != p or len(factor(chi.modulus) if chi.modulus > 1 else ()) > 1:
        raise RangeViolation(f"modulus {chi.modulus} is not a power of {p}")


def teichmuller_exponent(chi: DirichletCharacter, p: int) -> int:
    """e mod p-1 with chi restricted to mu_{p-1} equal to omega^e."""
    _check_odd_prime(p)
    chi = chi.component(p)
    if chi.modulus == 1:
        return 0
    q = chi.modulus
    r = factor(q)[0][1]
    t = pow(primitive_root(p), p ** (r - 1), q)
    v = chi.evaluate(t).frac * (p - 1)
    assert v.denominator == 1
    return int(v) % (p - 1)


def square_roots(chi: DirichletCharacter, p: int) -> list[DirichletCharacter]:
    """All characters psi of modulus dividing p * modulus(chi) with psi^2 = chi.

    Returned in primitive form, sorted by (modulus, exponents). Empty exactly
    when chi is odd.
    """
    _check_odd_prime(p)
    _check_p_power(chi, p)
    big = chi.lift(chi.modulus * p)
    ((q, (e,)),) = big.exponents
    n = euler_phi(q)
    if e % 2:
        return []
    roots = [DirichletCharacter(q, ((q, (f,)),)).primitive() for f in (e // 2, e // 2 + n // 2)]
    return sorted(roots, key=lambda c: (c.modulus, c.exponents))


@dataclass(frozen=True)
class WeightCharacter:
    """x -> x^exponent * finite_part(x) on Z_p^x."""

    exponent: int
    finite_part: DirichletCharacter
    p: int

    def __post_init__(self):
        _check_odd_prime(self.p)
        _check_p_power(self.finite_part, self.p)

    def evaluate(self, u: int, r: int) -> tuple[int, RootOfUnity]:
        """(u^k mod p^r, chi(u)) for a unit u given modulo p^r."""
        q = self.p**r
        if q % self.finite_part.modulus:
            raise ValueError(f"character modulus {self.finite_part.modulus} does not divide {q}")
        if u % self.p == 0:
            raise ValueError("u must be a p-adic unit")
        return pow(u, self.exponent, q), self.finite_part.evaluate(u)

    @property
    def component(self) -> int:
        """The residue class mod p-1 of the weight space component."""
        return (self.exponent + teichmuller_exponent(self.finite_part, self.p)) % (self.p - 1)

    def to_record(self) -> dict:
        return {"exponent": self.exponent, "character": self.finite_part.to_record(), "p": self.p}


@dataclass(frozen=True)
class ClassicalPoint:
    weight1: WeightCharacter
    weight2: WeightCharacter
    cbar: int
    tau: DirichletCharacter

    @property
    def p(self) -> int:
        return self.weight1.p

    @property
    def half_weight(self) -> int:
        """floor((c1 + c2) / 2), the algebraic part of the square-root character."""
        return (self.weight1.exponent + self.weight2.exponent) // 2

    @property
    def chi1(self) -> DirichletCharacter:
        return self.weight1.finite_part

    @property
    def chi2(self) -> DirichletCharacter:
        return self.weight2.finite_part


def _cbar_consistent(cbar: int, cbar1: int, cbar2: int, p: int) -> bool:
    s = cbar1 + cbar2
    shift = s % 2
    return (2 * cbar + shift - s) % (p - 1) == 0


def valid_taus(w1: WeightCharacter, w2: WeightCharacter, cbar: int) -> list[DirichletCharacter]:
    """Square roots of chi1*chi2 compatible with the chosen class cbar.

    phi(c) restricted to mu_{p-1} must be omega^cbar, which pins down one
    of the two square roots.
    """
    p = w1.p
    roots = square_roots(w1.finite_part * w2.finite_part, p)
    if not roots:
        raise NoSquareRoot("chi1*chi2 is odd")
    half = (w1.exponent + w2.exponent) // 2
    return [t for t in roots if (half + teichmuller_exponent(t, p) - cbar) % (p - 1) == 0]


def make_classical_point(
    w1: WeightCharacter, w2: WeightCharacter, cbar: int, tau_choice: int = 0
) -> ClassicalPoint:
    if w1.p != w2.p:
        raise ValueError("weight characters live over different primes")
    p = w1.p
    chi1, chi2 = w1.finite_part, w2.finite_part
    if chi1.parity() * chi2.parity() != 1:
        raise ParityViolation("chi1(-1) chi2(-1) must be +1")
    cbar1, cbar2 = w1.component, w2.component
    if (w1.exponent + w2.exponent - cbar1 - cbar2) % 2:
        raise ParityViolation("c1 + c2 and cbar1 + cbar2 have different parity")
    if not _cbar_consistent(cbar, cbar1, cbar2, p):
        raise ParityViolation(
            f"cbar = {cbar} is not a half of cbar1 + cbar2 = {cbar1} + {cbar2} mod {p - 1}"
        )
    taus = valid_taus(w1, w2, cbar)
    assert len(taus) == 1, "exactly one square root matches the component"
    if not 0 <= tau_choice < len(taus):
        raise IndexError(f"tau_choice {tau_choice} out of range ({len(taus)} candidates)")
    return ClassicalPoint(w1, w2, cbar % (p - 1), taus[tau_choice])


def is_crystalline(pt: ClassicalPoint, p: int | None = None) -> bool:
    if p is not None and p != pt.p:
        raise RangeViolation(f"point lives over p = {pt.p}, not {p}")
    triv = pt.chi1.is_trivial() and pt.chi2.is_trivial() and pt.tau.is_trivial()
    if triv:
        p = pt.p
        s = pt.weight1.exponent + pt.weight2.exponent
        assert (s - 2 * pt.cbar - s % 2) % (2 * p - 2) == 0
    return triv


def is_fully_ramified(pt: ClassicalPoint) -> bool:
    return not pt.tau.primitive().is_trivial() and not (pt.chi1 / pt.tau).primitive().is_trivial()
