"""Elementary integer and p-adic helpers shared by the other modules."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = int | Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=4096)
def factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``|n|`` as sorted ``((p, e), ...)``."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = []
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e:
            out.append((f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factor(n) if n > 1 else ():
        result = result // p * (p - 1)
    return result


def valuation(x: Rational, p: int) -> int | float:
    """p-adic valuation of a rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def unit_part(x: Rational, p: int) -> Fraction:
    x = Fraction(x)
    return x / Fraction(p) ** valuation(x, p)


def reduce_mod(x: Rational, modulus: int) -> int:
    """Image of a p-integral rational in Z/modulus."""
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


@lru_cache(maxsize=None)
def primitive_root(q: int) -> int:
    """Smallest generator of (Z/q)^x for q = p^r with p odd, or q in {1, 2, 4}."""
    if q in (1, 2):
        return 1
    if q == 4:
        return 3
    ((p, _),) = factor(q)
    if p == 2:
        raise ValueError(f"(Z/{q})^x is not cyclic")
    order = euler_phi(q)
    primes = [r for r, _ in factor(order)]
    for g in range(2, q):
        if math.gcd(g, q) == 1 and all(pow(g, order // r, q) != 1 for r in primes):
            return g
    raise AssertionError("unreachable")


@lru_cache(maxsize=256)
def _dlog_table(q: int, g: int) -> dict[int, int]:
    table = {}
    x = 1
    for k in range(euler_phi(q)):
        table[x] = k
        x = x * g % q
    return table


def discrete_log(a: int, q: int, g: int | None = None) -> int:
    """Exponent k with g^k = a mod q (g defaults to the smallest primitive root)."""
    if g is None:
        g = primitive_root(q)
    return _dlog_table(q, g)[a % q]


def squarefree_decomposition(x: Rational) -> tuple[int, Fraction]:
    """Write a nonzero rational as ``s**2 * d`` with d a squarefree integer; return (d, s)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if x < 0 else 1
    num = x.numerator * x.denominator  # x = num / den**2
    d, s = sign, Fraction(1, x.denominator)
    for p, e in factor(num) if abs(num) > 1 else ():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return d, s


def is_square(x: Rational) -> bool:
    x = Fraction(x)
    if x < 0:
        return False
    return math.isqrt(x.numerator) ** 2 == x.numerator and math.isqrt(x.denominator) ** 2 == x.denominator


def rational_sqrt(x: Rational) -> Fraction:
    x = Fraction(x)
    if not is_square(x):
        raise ValueError(f"{x} is not a rational square")
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))


def _sqrt_mod_prime(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def sqrt_mod_prime_power(a: int, p: int, k: int) -> int:
    """A square root of the unit ``a`` modulo p^k.

    For odd p the root returned reduces mod p to the smaller of the two
    residues; for p = 2 (k >= 3) it is the root congruent to 1 mod 4.
    """
    mod = p**k
    a %= mod
    if a % p == 0:
        raise ValueError("only unit square roots are supported")
    if p == 2:
        if k <= 2:
            roots = [x for x in range(mod) if x * x % mod == a]
            if not roots:
                raise ValueError(f"{a} is not a square mod {mod}")
            return min(roots)
        if a % 8 != 1:
            raise ValueError(f"{a} is not a 2-adic square")
        x = 1
        for j in range(3, k):
            # x^2 = a mod 2^j; fix the next bit
            if (x * x - a) % (1 << (j + 1)):
                x += 1 << (j - 1)
        x %= mod
        return x if x % 4 == 1 else mod - x
    r = _sqrt_mod_prime(a, p)
    r = min(r, p - r)
    x, cur = r, p
    while cur < mod:
        cur = min(cur * cur, mod)
        x = (x - (x * x - a) * pow(2 * x, -1, cur)) % cur
    return x % mod


def hensel_unit_root(a: int, b: int, p: int, m: int) -> int:
    """The unique root of X^2 - aX + b in Z/p^m that is a unit, when a is a unit and p | b."""
    mod = p**m
    if a % p == 0:
        raise ValueError("trace is not a unit")
    if b % p != 0:
        raise ValueError("constant term is a unit")
    x, cur = a % p, p
    while cur < mod:
        cur = min(cur * cur, mod)
        fx = (x * x - a * x + b) % cur
        x = (x - fx * pow(2 * x - a, -1, cur)) % cur
    return x % mod
