import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4kit.algebraic import AlgebraicNumber
from gsp4kit.characters import DirichletCharacter, WeightCharacter, make_classical_point
from gsp4kit.errors import NonTempered, Unsupported, ValidationError, WrongRegion, ZeroDenominator
from gsp4kit.euler import (
    EulerInput,
    crystalline_nonvanishing,
    euler_factor,
    euler_factor_f_closed_form,
    fast_path_applies,
    zeta_constant,
)
from gsp4kit.hecke import GL2HeckeParams, GSp4HeckeParams, monomial_gsp4, tempered_family
from gsp4kit.weights import Weights
from oracles import naive_euler


def degenerate():
    wt = Weights(8, 4, 2, 2)
    return EulerInput(wt, monomial_gsp4(2, 8, 4), GL2HeckeParams(1, 2, 2, 2), GL2HeckeParams(1, 2, 2, 2))


def test_pinned_degenerate_value():
    inp = degenerate()
    assert euler_factor(inp) == 3075975
    assert euler_factor_f_closed_form(inp) == 3075975
    assert naive_euler(2, 5, [1, 4, 2**7, 2**9], [1, 2], [1, 2]) == 3075975
    assert crystalline_nonvanishing(inp)


def _unit(rng, p):
    while True:
        num, den = rng.randint(1, 40), rng.randint(1, 40)
        if num % p and den % p:
            return Fraction(rng.choice([1, -1]) * num, den)


def _random_f_input(rng, p):
    k2 = rng.randint(2, 6)
    k1 = rng.randint(k2, 10)
    pairs = [
        (c1, c2)
        for c1 in range(1, 8)
        for c2 in range(1, 8)
        if (c1 + c2 - k1 - k2) % 2 == 0 and c1 + c2 <= k1 - k2 + 2
    ]
    c1, c2 = rng.choice(pairs)
    chi = _unit(rng, p)
    top = chi * Fraction(p) ** (k1 + k2 - 3)
    a0, b0 = _unit(rng, p), _unit(rng, p) * Fraction(p) ** (k2 - 2)
    gsp4 = GSp4HeckeParams(a0, b0, top / b0, top / a0, chi, k1, k2, p)
    g1 = GL2HeckeParams(_unit(rng, p), _unit(rng, p) * Fraction(p) ** (c1 - 1), c1, p)
    g2 = GL2HeckeParams(_unit(rng, p), _unit(rng, p) * Fraction(p) ** (c2 - 1), c2, p)
    return EulerInput(Weights(k1, k2, c1, c2), gsp4, g1, g2)


def test_paths_agree_on_random_rational_inputs():
    rng = random.Random(2024)
    for _ in range(200):
        p = rng.choice([3, 5, 7])
        inp = _random_f_input(rng, p)
        try:
            a = euler_factor(inp)
        except ZeroDenominator:
            continue
        assert a == euler_factor_f_closed_form(inp)
        gs = inp.gsp4.params
        oracle = naive_euler(p, inp.weights.w, [g.to_fraction() for g in gs],
                             [inp.gl2_1.a.to_fraction(), inp.gl2_1.b.to_fraction()],
                             [inp.gl2_2.a.to_fraction(), inp.gl2_2.b.to_fraction()])
        assert a == oracle


U = AlgebraicNumber.from_theta(1, 5, 0, 1, branch=0)


@given(st.integers(2, 8), st.integers(0, 6), st.integers(1, 5), st.integers(1, 5))
def test_tempered_paths_agree_and_rational(k2, dk, c1, c2):
    k1 = k2 + dk
    if (c1 + c2 - k1 - k2) % 2 or c1 + c2 > k1 - k2 + 2:
        return
    gsp4, g1, g2 = tempered_family(5, U, k1, k2, c1, c2)
    inp = EulerInput(Weights(k1, k2, c1, c2), gsp4, g1, g2)
    a = euler_factor(inp, strict=True)
    assert a == euler_factor_f_closed_form(inp, strict=True)
    # the full product over a conjugation-stable set of eigenvalues is rational
    assert (a * a.conjugate()).is_rational()


def test_strict_mode_rejects_degenerate_input():
    with pytest.raises(NonTempered):
        euler_factor(degenerate(), strict=True)


def _region_e_monomial(unit=1):
    # (3,3,2,2): w = 2, and with unit = 1 several contributing xi equal p^w = 25
    gsp4 = monomial_gsp4(5, 3, 3)
    return EulerInput(
        Weights(3, 3, 2, 2), gsp4, GL2HeckeParams(unit, 5 * unit, 2, 5), GL2HeckeParams(1, 5, 2, 5)
    )


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        euler_factor(_region_e_monomial())


def test_wrong_region():
    inp = _region_e_monomial(unit=2)
    with pytest.raises(WrongRegion):
        euler_factor_f_closed_form(inp)
    with pytest.raises(WrongRegion):
        euler_factor(inp, region="f")
    assert euler_factor(inp, region="e") == euler_factor(inp)
    assert euler_factor(inp) == naive_euler(5, 2, [1, 5, 25, 125], [2, 10], [1, 5])


def test_fully_ramified_point_gives_one():
    leg = DirichletCharacter.legendre(5)
    triv = DirichletCharacter.trivial()
    w1, w2 = WeightCharacter(3, leg, 5), WeightCharacter(3, triv, 5)
    pt = next(
        make_classical_point(w1, w2, c) for c in range(4) if _ok(w1, w2, c)
    )
    gsp4 = monomial_gsp4(5, 8, 4)
    inp = EulerInput(Weights(8, 4, 3, 3), gsp4, GL2HeckeParams(1, 25, 3, 5), GL2HeckeParams(1, 25, 3, 5), pt)
    assert euler_factor(inp) == 1


def _ok(w1, w2, c):
    try:
        make_classical_point(w1, w2, c)
        return True
    except ValidationError:
        return False


@pytest.mark.parametrize("p", [3, 5, 7])
def test_zeta_constants(p):
    q = Fraction(p)
    assert zeta_constant("f", p) == q**3 / ((q + 1) ** 2 * (q - 1))
    assert zeta_constant("e", p) == q**4 / (q**2 - 1) ** 2


def test_zeta_examples():
    assert zeta_constant("f", 5) == Fraction(125, 144)
    assert zeta_constant("e", 5) == Fraction(625, 576)
    with pytest.raises(Unsupported):
        zeta_constant("c", 5)


def test_fast_path_on_tempered_input():
    gsp4, g1, g2 = tempered_family(5, U, 8, 4, 2, 2)
    inp = EulerInput(Weights(8, 4, 2, 2), gsp4, g1, g2)
    # contributing valuations are 0..4 < w = 5
    assert fast_path_applies(inp)
    assert crystalline_nonvanishing(inp)


def test_record_round_trip():
    inp = degenerate()
    assert EulerInput.from_record(inp.to_record()) == inp
