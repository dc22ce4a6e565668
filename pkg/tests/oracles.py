"""Reference computations written independently of the package.

Nothing here imports gsp4kit; each oracle uses a different route from the
library code it checks.
"""

from fractions import Fraction
from math import gcd


def tau_via_jacobi(n):
    """tau(1..n) from q * (sum (-1)^m (2m+1) q^(m(m+1)/2))^8."""
    cube = [0] * n
    m = 0
    while m * (m + 1) // 2 < n:
        cube[m * (m + 1) // 2] += (-1) ** m * (2 * m + 1)
        m += 1
    series = [1] + [0] * (n - 1)
    for _ in range(8):
        out = [0] * n
        for i, a in enumerate(series):
            if a:
                for j in range(n - i):
                    out[i + j] += a * cube[j]
        series = out
    return [0] + series[: n]  # index = exponent of q


def sigma(k, n):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def unit_root_by_iteration(a, b, p, m):
    """Root of X^2 - aX + b that is a unit, via x -> a - b/x mod p^m (b divisible by p)."""
    mod = p**m
    x = a % mod
    for _ in range(m + 2):
        x = (a - b * pow(x, -1, mod)) % mod
    return x


def region_by_inequalities(k1, k2, c1, c2):
    """Literal transcription of the six inequalities and the nine signatures."""
    s = (
        c2 - c1 <= k1 + k2 - 4,
        c1 - c2 <= k1 + k2 - 4,
        c1 + c2 <= k1 + k2 - 2,
        c2 - c1 <= k1 - k2,
        c1 - c2 <= k1 - k2,
        c1 + c2 <= k1 - k2 + 2,
    )
    A1, A2, A3, B1, B2, B3 = s
    if not A1:
        return "a"
    if not A2:
        return "a'"
    if B3:
        return "f"
    if not A3:
        return "c" if (B1 and B2) else ("b" if not B1 else "b'")
    if not B1:
        return "d"
    if not B2:
        return "d'"
    return "e"


def valuation(x, p):
    x = Fraction(x)
    if x == 0:
        return None
    v, num, den = 0, x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def naive_euler(p, w, gsp4, gl1, gl2):
    """prod (1 - p^w/xi) over all 16 rational xi with v(xi) <= w."""
    out = Fraction(1)
    for x in gsp4:
        for y in gl1:
            for z in gl2:
                xi = Fraction(x) * y * z
                if valuation(xi, p) <= w:
                    out *= 1 - Fraction(p) ** w / xi
    return out


def character_table(p, r):
    """All characters mod p^r as dicts a -> exponent fraction, by brute-force generator search."""
    q = p**r
    n = q - q // p
    g = next(g for g in range(2, q) if gcd(g, p) == 1 and all(pow(g, n // f, q) != 1 for f in _primes(n)))
    log = {}
    x = 1
    for e in range(n):
        log[x] = e
        x = x * g % q
    return [{a: Fraction(j * e, n) % 1 for a, e in log.items()} for j in range(n)], q


def _primes(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
