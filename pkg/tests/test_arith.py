from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4kit.arith import (
    discrete_log,
    factor,
    hensel_unit_root,
    is_prime,
    primitive_root,
    rational_sqrt,
    sqrt_mod_prime_power,
    squarefree_decomposition,
    valuation,
)
from oracles import unit_root_by_iteration
from oracles import valuation as naive_valuation

PRIMES = [3, 5, 7, 11, 13]


def test_small_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.integers(1, 10**6))
def test_factor_multiplies_back(n):
    prod = 1
    for p, e in factor(n):
        assert is_prime(p)
        prod *= p**e
    assert prod == n


@given(st.integers(-(10**9), 10**9).filter(bool), st.integers(1, 10**6), st.sampled_from(PRIMES))
def test_valuation_matches_naive(a, b, p):
    x = Fraction(a, b)
    assert valuation(x, p) == naive_valuation(x, p)


def test_valuation_of_zero_is_infinite():
    assert valuation(0, 5) == float("inf")


@pytest.mark.parametrize("q", [5, 7, 25, 27, 49, 121])
def test_primitive_root_and_log(q):
    g = primitive_root(q)
    for a in range(1, q):
        if a % factor(q)[0][0]:
            assert pow(g, discrete_log(a, q), q) == a


@given(st.integers(-500, 500).filter(bool), st.integers(1, 500))
def test_squarefree_decomposition(a, b):
    x = Fraction(a, b)
    d, s = squarefree_decomposition(x)
    assert d * s * s == x


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        rational_sqrt(Fraction(2))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_sqrt_mod_prime_power(p):
    for a in range(1, p**3):
        if a % p and pow(a, (p - 1) // 2, p) == 1:
            r = sqrt_mod_prime_power(a, p, 3)
            assert r * r % p**3 == a % p**3


@given(st.sampled_from(PRIMES), st.integers(1, 10**6), st.integers(1, 11), st.integers(2, 12))
def test_hensel_root_matches_fixed_point_iteration(p, a, k, m):
    if a % p == 0:
        a += 1
    b = p**k
    r = hensel_unit_root(a, b, p, m)
    assert (r * r - a * r + b) % p**m == 0
    assert r == unit_root_by_iteration(a, b, p, m)
