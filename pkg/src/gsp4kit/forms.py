"""A small corpus of eigenforms and one Lambda-adic family."""

from __future__ import annotations

from math import comb

from .arith import is_prime
from .characters import DirichletCharacter
from .qexp import QExpansion
from .rings import IntegersModPower, IwasawaRing, Rationals

KNOWN_TAU = {1: 1, 2: -24, 3: 252, 5: 4830, 7: -16744, 11: 534612, 13: -577738}


def _euler_product(n: int) -> list[int]:
    """prod (1 - q^m) to q^n via the pentagonal number theorem."""
    out = [0] * (n + 1)
    k = 0
    while True:
        hit = False
        for m in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if m <= n:
                out[m] = (-1) ** k
                hit = True
        if not hit:
            break
        k += 1
    return out


def _mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j in range(n + 1 - i):
                out[i + j] += x * b[j]
    return out


def delta(n: int) -> QExpansion:
    """Ramanujan's Delta = q prod (1 - q^m)^24 up to q^n."""
    e = _euler_product(n)
    e2 = _mul(e, e, n)
    e4 = _mul(e2, e2, n)
    e8 = _mul(e4, e4, n)
    e24 = _mul(_mul(e8, e8, n), e8, n)
    coeffs = [0] + e24[: n]
    return QExpansion(tuple(coeffs), Rationals(), 12, DirichletCharacter(1), 1)


def eisenstein(k: int, n: int, chi: DirichletCharacter | None = None) -> QExpansion:
    """a_0 = 0 and a_m = sum over d | m of chi(d) d^(k-1); chi must be real (values +-1)."""
    chi = chi or DirichletCharacter(1)
    coeffs = [0] * (n + 1)
    for d in range(1, n + 1):
        z = chi.evaluate(d)
        if z is None:
            continue
        term = z.sign() * d ** (k - 1)
        for m in range(d, n + 1, d):
            coeffs[m] += term
    return QExpansion(tuple(coeffs), Rationals(), k, chi, chi.modulus)


def log_one_plus_p(u: int, p: int, precision: int) -> int:
    """s mod p^precision with (1+p)^s = u for u = 1 mod p (p odd)."""
    if u % p != 1 % p:
        raise ValueError("u must be 1 mod p")
    mod = p ** (precision + 1)
    s, step = 0, 1
    gen = 1 + p
    for i in range(precision):
        # fix the p-adic digit of s at position i
        target = p ** (i + 2)
        base = pow(gen, s, target)
        g = pow(gen, step, target)
        for digit in range(p):
            if (base * pow(g, digit, target) - u) % target == 0:
                s += digit * step
                break
        else:  # pragma: no cover
            raise AssertionError("no digit found")
        step *= p
    assert (pow(gen, s, mod) - u) % mod == 0
    return s


def teichmuller_lift(a: int, p: int, M: int) -> int:
    mod = p**M
    return pow(a, p ** (M - 1), mod)


def eisenstein_family(p: int, M: int, D: int, k0: int, n: int) -> QExpansion:
    """Lambda-adic family whose weight-k specialisation (k = k0 mod p-1) is sum_{d | m, p !| d} d^(k-1)."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    R = IwasawaRing(p, M, D)
    mod = p**M
    prec = M + D
    coeffs = [R.zero() for _ in range(n + 1)]
    for d in range(1, n + 1):
        if d % p == 0:
            continue
        omega = teichmuller_lift(d, p, M)
        big = p ** (prec + 1)
        s = log_one_plus_p(d * pow(teichmuller_lift(d, p, prec + 1), -1, big) % big, p, prec)
        scal = pow(omega, k0, mod) * pow(d, -1, mod) % mod
        term = tuple(scal * comb(s, i) % mod for i in range(D))
        for m in range(d, n + 1, d):
            coeffs[m] = R.add(coeffs[m], term)
    return QExpansion(tuple(coeffs), R, k0, DirichletCharacter(1), p)


def depleted_eisenstein_mod(k: int, n: int, p: int, r: int) -> QExpansion:
    """sum_{d | m, p !| d} d^(k-1) reduced mod p^r: the expected specialisation of the family."""
    R = IntegersModPower(p, r)
    mod = p**r
    coeffs = [0] * (n + 1)
    for d in range(1, n + 1):
        if d % p:
            t = pow(d, k - 1, mod)
            for m in range(d, n + 1, d):
                coeffs[m] = (coeffs[m] + t) % mod
    return QExpansion(tuple(coeffs), R, k, DirichletCharacter(1), p)


__all__ = [
    "KNOWN_TAU",
    "delta",
    "eisenstein",
    "eisenstein_family",
    "depleted_eisenstein_mod",
    "log_one_plus_p",
    "teichmuller_lift",
]
