"""Hecke parameters at p for the GSp4 and GL2 factors, and ordinarity tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebraic import AlgebraicNumber, as_algebraic
from .arith import is_prime
from .errors import NotOrdinary, RangeViolation, ValidationError


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise RangeViolation(f"{p} is not prime")


@dataclass(frozen=True)
class GSp4HeckeParams:
    """Frobenius eigenvalues alpha, beta, gamma, delta at p, ordered by valuation."""

    alpha: AlgebraicNumber
    beta: AlgebraicNumber
    gamma: AlgebraicNumber
    delta: AlgebraicNumber
    chi_p: AlgebraicNumber
    k1: int
    k2: int
    p: int

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "chi_p"):
            object.__setattr__(self, name, as_algebraic(getattr(self, name)))
        _check_prime(self.p)
        target = self.chi_p * Fraction(self.p) ** (self.k1 + self.k2 - 3)
        if self.alpha * self.delta != target or self.beta * self.gamma != target:
            raise ValidationError("need alpha*delta = beta*gamma = p^(k1+k2-3) chi(p)")
        if self.chi_p.valuation(self.p) != 0:
            raise ValidationError("chi(p) must be a p-adic unit")
        v = self.valuations()
        if not (0 <= v[0] <= v[1] <= v[2] <= v[3]):
            raise ValidationError(f"valuations {tuple(map(str, v))} must be nondecreasing from 0")

    @property
    def params(self) -> tuple[AlgebraicNumber, ...]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def valuations(self) -> tuple[Fraction, ...]:
        return tuple(x.valuation(self.p) for x in self.params)

    def to_record(self) -> dict:
        return {
            "p": self.p,
            "k1": self.k1,
            "k2": self.k2,
            "alpha": self.alpha.to_record(),
            "beta": self.beta.to_record(),
            "gamma": self.gamma.to_record(),
            "delta": self.delta.to_record(),
            "chi_p": self.chi_p.to_record(),
        }

    @classmethod
    def from_record(cls, rec: dict) -> GSp4HeckeParams:
        return cls(
            *(AlgebraicNumber.from_record(rec[k]) for k in ("alpha", "beta", "gamma", "delta")),
            chi_p=AlgebraicNumber.from_record(rec.get("chi_p", {"rational": "1"})),
            k1=int(rec["k1"]),
            k2=int(rec["k2"]),
            p=int(rec["p"]),
        )


@dataclass(frozen=True)
class GL2HeckeParams:
    """Roots a (the unit root in the ordinary case) and b of the Hecke polynomial at p."""

    a: AlgebraicNumber
    b: AlgebraicNumber
    c: int
    p: int
    unit_scalar: AlgebraicNumber = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        a, b = as_algebraic(self.a), as_algebraic(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        _check_prime(self.p)
        prod = a * b / Fraction(self.p) ** (self.c - 1)
        if self.unit_scalar is None:
            object.__setattr__(self, "unit_scalar", prod)
        else:
            us = as_algebraic(self.unit_scalar)
            object.__setattr__(self, "unit_scalar", us)
            if us != prod:
                raise ValidationError("need a*b = p^(c-1) * unit_scalar")
        if self.unit_scalar.valuation(self.p) != 0:
            raise ValidationError("a*b / p^(c-1) must be a p-adic unit")

    @property
    def trace(self) -> AlgebraicNumber:
        return self.a + self.b

    def to_record(self) -> dict:
        return {"a": self.a.to_record(), "b": self.b.to_record(), "c": self.c}

    @classmethod
    def from_record(cls, rec: dict, c: int, p: int) -> GL2HeckeParams:
        return cls(AlgebraicNumber.from_record(rec["a"]), AlgebraicNumber.from_record(rec["b"]), c, p)


def is_borel_ordinary(params: GSp4HeckeParams) -> bool:
    k1, k2 = params.k1, params.k2
    return params.valuations() == (0, k2 - 2, k1 - 1, k1 + k2 - 3)


def is_klingen_ordinary(params: GSp4HeckeParams) -> bool:
    v = params.valuations()
    return v[0] + v[1] == params.k2 - 2


def is_siegel_ordinary(params: GSp4HeckeParams) -> bool:
    return params.valuations()[0] == 0


def ordinary_gl2(a_p, c: int, p: int, chi_p=1, branch: int | None = 0) -> GL2HeckeParams:
    """Split X^2 - a_p X + p^(c-1) chi(p) into its unit root a and the other root b.

    The roots must live in Q or in the field of a_p; otherwise Unsupported.
    For a split quadratic field the valuation is read through ``branch``.
    """
    _check_prime(p)
    a_p, chi_p = as_algebraic(a_p), as_algebraic(chi_p)
    const = chi_p * Fraction(p) ** (c - 1)
    if a_p.valuation(p) > 0:
        raise NotOrdinary(f"a_p = {a_p} is not a p-adic unit")
    disc = a_p * a_p - const * 4
    root = disc.sqrt_in_field().with_branch(branch)
    a_p = a_p.with_branch(branch)
    r1, r2 = (a_p + root) / 2, (a_p - root) / 2
    units = [r for r in (r1, r2) if r.valuation(p) == 0]
    if not units:
        raise NotOrdinary("no unit root")
    a = units[0]
    b = r2 if a is r1 else r1
    return GL2HeckeParams(a, b, c, p, unit_scalar=chi_p)


def monomial_gsp4(p: int, k1: int, k2: int) -> GSp4HeckeParams:
    """Borel-ordinary parameters (1, p^(k2-2), p^(k1-1), p^(k1+k2-3))."""
    return GSp4HeckeParams(
        AlgebraicNumber(1),
        AlgebraicNumber(Fraction(p) ** (k2 - 2)),
        AlgebraicNumber(Fraction(p) ** (k1 - 1)),
        AlgebraicNumber(Fraction(p) ** (k1 + k2 - 3)),
        AlgebraicNumber(1),
        k1,
        k2,
        p,
    )


def tempered_family(p: int, u: AlgebraicNumber, k1: int, k2: int, c1: int, c2: int):
    """Parameters built from an element u of norm p, giving |xi| = p^(w + 1/2) in every embedding.

    Returns (gsp4, gl2_1, gl2_2); u should have valuation 0 in its branch.
    """
    if u.norm() != p or u.is_rational():
        raise ValidationError("u must be a non-rational element of norm p")
    ub = u.conjugate()
    gsp4 = GSp4HeckeParams(
        u ** (k1 + k2 - 3),
        u ** (k1 - 1) * ub ** (k2 - 2),
        ub ** (k1 - 1) * u ** (k2 - 2),
        ub ** (k1 + k2 - 3),
        AlgebraicNumber(1),
        k1,
        k2,
        p,
    )
    g1 = GL2HeckeParams(u ** (c1 - 1), ub ** (c1 - 1), c1, p)
    g2 = GL2HeckeParams(u ** (c2 - 1), ub ** (c2 - 1), c2, p)
    return gsp4, g1, g2

