"""Euler factors at p and the local zeta constants.

Two routes are provided for region (f): the table-driven product over the
contributing set, and the explicit eight-factor product over
{alpha, beta} x {a1, b1} x {a2, b2}. They share no code beyond the
parameter lookup, so their agreement is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicNumber
from .characters import ClassicalPoint, is_fully_ramified
from .errors import NonTempered, Unsupported, ValidationError, WrongRegion, ZeroDenominator
from .hecke import GL2HeckeParams, GSp4HeckeParams, is_borel_ordinary
from .panchishkin import ALL_LABELS, ConstituentLabel, contributing_set
from .weights import Region, Weights, as_region, classify


@dataclass(frozen=True)
class EulerInput:
    weights: Weights
    gsp4: GSp4HeckeParams
    gl2_1: GL2HeckeParams
    gl2_2: GL2HeckeParams
    point: ClassicalPoint | None = None

    def __post_init__(self):
        p = self.gsp4.p
        wt = self.weights
        if self.gl2_1.p != p or self.gl2_2.p != p:
            raise ValidationError("all Hecke data must share the same p")
        if (self.gsp4.k1, self.gsp4.k2) != (wt.k1, wt.k2):
            raise ValidationError("GSp4 weights disagree with (k1, k2)")
        if (self.gl2_1.c, self.gl2_2.c) != (wt.c1, wt.c2):
            raise ValidationError("GL2 weights disagree with (c1, c2)")
        if not is_borel_ordinary(self.gsp4):
            raise ValidationError("GSp4 parameters are not Borel-ordinary")
        for g in (self.gl2_1, self.gl2_2):
            if (g.a.valuation(p), g.b.valuation(p)) != (0, g.c - 1):
                raise ValidationError(f"GL2 parameters need valuations (0, {g.c - 1})")
        if self.point is not None:
            pt = self.point
            if pt.p != p or (pt.weight1.exponent, pt.weight2.exponent) != (wt.c1, wt.c2):
                raise ValidationError("classical point does not match p or (c1, c2)")

    @property
    def p(self) -> int:
        return self.gsp4.p

    def xi(self, label: ConstituentLabel) -> AlgebraicNumber:
        g1 = (self.gl2_1.a, self.gl2_1.b)[label.j]
        g2 = (self.gl2_2.a, self.gl2_2.b)[label.k]
        return self.gsp4.params[label.i] * g1 * g2

    @classmethod
    def from_record(cls, rec: dict) -> EulerInput:
        """Flat schema: p, k1, k2, c1, c2, alpha..delta, chi_p, sigma1 {a, b}, sigma2 {a, b}."""
        wt = Weights(int(rec["k1"]), int(rec["k2"]), int(rec["c1"]), int(rec["c2"]))
        p = int(rec["p"])
        gsp4 = GSp4HeckeParams.from_record(rec)
        g1 = GL2HeckeParams.from_record(rec["sigma1"], wt.c1, p)
        g2 = GL2HeckeParams.from_record(rec["sigma2"], wt.c2, p)
        return cls(wt, gsp4, g1, g2)

    def to_record(self) -> dict:
        rec = self.gsp4.to_record()
        rec.update(c1=self.weights.c1, c2=self.weights.c2)
        rec["sigma1"] = {k: v for k, v in self.gl2_1.to_record().items() if k != "c"}
        rec["sigma2"] = {k: v for k, v in self.gl2_2.to_record().items() if k != "c"}
        return rec


def is_tempered(xi: AlgebraicNumber, p: int, w: int) -> bool:
    """|xi| = p^(w + 1/2) under every complex embedding."""
    target = Fraction(p) ** (2 * w + 1)
    if xi.is_rational():
        return False
    if xi.d < 0:
        return xi.norm() == target
    return xi * xi == target


def check_tempered(inp: EulerInput) -> None:
    w = inp.weights.w
    for lab in ALL_LABELS:
        if not is_tempered(inp.xi(lab), inp.p, w):
            raise NonTempered(f"{lab} = {inp.xi(lab)} does not have absolute value p^(w+1/2)")


def _factor(xi: AlgebraicNumber, pw: Fraction) -> AlgebraicNumber:
    if xi == pw:
        raise ZeroDenominator(f"xi = p^w = {pw} makes a factor vanish")
    if not xi:
        raise ZeroDenominator("xi = 0")
    return 1 - xi.inverse() * pw


def _resolve_region(inp: EulerInput, region: Region | str | None) -> Region:
    actual = classify(inp.weights)
    if region is not None and as_region(region) != actual:
        raise WrongRegion(f"weights lie in region {actual}, not {as_region(region)}")
    return actual


def euler_factor(inp: EulerInput, region: Region | str | None = None, strict: bool = False) -> AlgebraicNumber:
    """Product of (1 - p^w / xi) over the constituents with v(xi) <= w."""
    _resolve_region(inp, region)
    if strict:
        check_tempered(inp)
    if inp.point is not None and is_fully_ramified(inp.point):
        return AlgebraicNumber(1)
    pw = Fraction(inp.p) ** inp.weights.w
    result = AlgebraicNumber(1)
    for lab in sorted(contributing_set(inp.weights)):
        result = result * _factor(inp.xi(lab), pw)
    return result


def euler_factor_f_closed_form(inp: EulerInput, strict: bool = False) -> AlgebraicNumber:
    if classify(inp.weights).label != "f":
        raise WrongRegion(f"closed form needs region f, weights lie in {classify(inp.weights)}")
    if strict:
        check_tempered(inp)
    if inp.point is not None and is_fully_ramified(inp.point):
        return AlgebraicNumber(1)
    pw = Fraction(inp.p) ** inp.weights.w
    result = AlgebraicNumber(1)
    for x in (inp.gsp4.alpha, inp.gsp4.beta):
        for y in (inp.gl2_1.a, inp.gl2_1.b):
            for z in (inp.gl2_2.a, inp.gl2_2.b):
                xi = x * y * z
                if xi == pw:
                    raise ZeroDenominator(f"xi = p^w = {pw}")
                result = result * (1 - pw / xi)
    return result


def zeta_constant(region: Region | str, p: int) -> Fraction:
    lab = as_region(region).label
    q = Fraction(p)
    if lab == "f":
        return q**3 / ((q + 1) ** 2 * (q - 1))
    if lab == "e":
        return q**4 / (q**2 - 1) ** 2
    raise Unsupported(f"no local zeta constant is available for region {lab}")


def fast_path_applies(inp: EulerInput) -> bool:
    """Every contributing xi has v(xi) < w, so each factor is 1 minus a non-unit."""
    w = inp.weights.w
    return all(inp.xi(lab).valuation(inp.p) < w for lab in contributing_set(inp.weights))


def crystalline_nonvanishing(inp: EulerInput) -> bool:
    if fast_path_applies(inp):
        return True
    return bool(euler_factor(inp))
