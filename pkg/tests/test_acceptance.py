"""Acceptance criteria, one timed check each.

Run under pytest (the PASS/FAIL lines appear in the terminal summary) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gsp4kit.algebraic import AlgebraicNumber
from gsp4kit.arith import hensel_unit_root, primitive_root
from gsp4kit.atlas import global_sign, load_descriptor, render_atlas
from gsp4kit.characters import (
    DirichletCharacter,
    WeightCharacter,
    is_crystalline,
    is_fully_ramified,
    make_classical_point,
    square_roots,
    teichmuller_exponent,
)
from gsp4kit.errors import NotRankOne, ParityViolation, ZeroDenominator
from gsp4kit.euler import (
    EulerInput,
    euler_factor,
    euler_factor_f_closed_form,
    fast_path_applies,
    zeta_constant,
)
from gsp4kit.forms import delta, eisenstein_family
from gsp4kit.hecke import GL2HeckeParams, GSp4HeckeParams, monomial_gsp4
from gsp4kit.panchishkin import (
    ALL_LABELS,
    contributing_set,
    panchishkin_quotient,
    quotient_for_regions,
    regenerate_table1,
    swap_symmetry,
    table1_diff,
    table1_reference,
)
from gsp4kit.qexp import QExpansion, hecke_T, p_deplete, p_stabilize_with_roots, specialize, theta_power, u_p
from gsp4kit.rings import IntegersModPower, IwasawaRing
from gsp4kit.symplectic import J, Matrix, iota, is_symplectic, u_b_constant, valid_u_kl
from gsp4kit.weights import ADJACENT_PAIRS, LABELS, MIRROR, SIGNATURE_OF, Weights, classify, region_is_empty, representative
from oracles import naive_euler, tau_via_jacobi, unit_root_by_iteration

GOLDEN = Path(__file__).parent / "golden"
EMPTY_WHEN_K2_IS_2 = {"b", "b'", "d", "d'", "e"}


def _sweep(kmax=14, cmax=40):
    for k1 in range(2, kmax + 1):
        for k2 in range(2, k1 + 1):
            for c1 in range(1, cmax + 1):
                for c2 in range(1, cmax + 1):
                    if (c1 + c2 - k1 - k2) % 2 == 0:
                        yield Weights(k1, k2, c1, c2)


# 1 ---------------------------------------------------------------------------

REFERENCE_ROWS = {
    "a": ("YNYNYNYN", ("0", "0", "B")),
    "b": ("YYYNYNYN", ("Sieg", "B", "B")),
    "c": ("YYYNYYYN", ("Kl", "B", "B")),
    "d": ("YYYYYNYN", ("Sieg", "0", "B")),
    "e": ("YYYYYYYN", ("B", "B", "B")),
    "f": ("YYYYYYYY", ("Kl", "0", "0")),
}


def _swap_gl2(pattern: str) -> str:
    # columns are (alpha, beta) x (a1a2, a1b2, b1a2, b1b2); the mirror swaps the middle two
    out = []
    for block in (pattern[:4], pattern[4:]):
        out.append(block[0] + block[2] + block[1] + block[3])
    return "".join(out)


def check_table1():
    ref = table1_reference()
    for lab, row in REFERENCE_ROWS.items():
        assert ref[lab] == row
    for lab in ("a", "b", "d"):
        pat, (g, s1, s2) = REFERENCE_ROWS[lab]
        assert ref[MIRROR[lab]] == (_swap_gl2(pat), (g, s2, s1))
    assert table1_diff() == []
    rows = regenerate_table1()
    assert set(rows) == set(LABELS)
    assert all(rows[lab] == ref[lab] for lab in LABELS)


# 2 ---------------------------------------------------------------------------


def check_sweep():
    per_plane: dict[tuple[int, int], dict[str, frozenset]] = {}
    count = 0
    for wt in _sweep():
        count += 1
        sig = wt.signature()
        lab = classify(wt).label
        matches = [r for r in LABELS if SIGNATURE_OF[r] == sig]
        assert matches == [lab], (wt, matches)
        s = contributing_set(wt)
        assert len(s) == 8 and all((x in s) != (x.partner in s) for x in ALL_LABELS)
        plane = per_plane.setdefault((wt.k1, wt.k2), {})
        assert plane.setdefault(lab, s) == s
    assert count > 70_000
    for (k1, k2), seen in per_plane.items():
        if k2 == 2:
            assert not (set(seen) & EMPTY_WHEN_K2_IS_2)
        else:
            assert set(seen) == set(LABELS)
        for lab in LABELS:
            assert region_is_empty(lab, k1, k2) == (k2 == 2 and lab in EMPTY_WHEN_K2_IS_2)


# 3 ---------------------------------------------------------------------------


def check_quotients():
    assert quotient_for_regions("e", "f", 8, 4) == (1, 1, 1)
    assert quotient_for_regions("e", "c", 8, 4) == (3, 0, 0)
    by_plane: dict[tuple[int, int], dict[str, list[Weights]]] = {}
    for wt in _sweep():
        by_plane.setdefault((wt.k1, wt.k2), {}).setdefault(classify(wt).label, []).append(wt)
    edges = 0
    for (k1, k2), members in by_plane.items():
        for pair in ADJACENT_PAIRS:
            r1, r2 = sorted(pair)
            if r1 not in members or r2 not in members:
                continue
            rep1, rep2 = representative(r1, k1, k2), representative(r2, k1, k2)
            forward = panchishkin_quotient(r1, r2, rep1, rep2)
            backward = panchishkin_quotient(r2, r1, rep2, rep1)
            assert swap_symmetry(forward) == backward
            for wt in members[r1]:
                try:
                    assert panchishkin_quotient(r1, r2, wt, rep2) == forward
                except NotRankOne as exc:
                    raise AssertionError(f"rank > 1 at {wt}") from exc
            for wt in members[r2]:
                assert panchishkin_quotient(r2, r1, wt, rep1) == backward
            edges += 1
    assert edges > 500


# 4 ---------------------------------------------------------------------------


def _unit(rng, p):
    while True:
        a, b = rng.randint(1, 60), rng.randint(1, 60)
        if a % p and b % p:
            return Fraction(rng.choice((1, -1)) * a, b)


INERT = {3: -1, 5: 2, 7: -1}


def _qunit(rng, p):
    d = INERT[p]
    while True:
        x, y = rng.randint(-30, 30), rng.randint(-30, 30)
        if y and (x % p or y % p):
            return AlgebraicNumber(x, y, d)


def _random_f_input(rng, quadratic):
    p = rng.choice((3, 5, 7))
    k2 = rng.randint(2, 7)
    k1 = rng.randint(k2, 11)
    pairs = [(c1, c2) for c1 in range(1, 9) for c2 in range(1, 9)
             if (c1 + c2 - k1 - k2) % 2 == 0 and c1 + c2 <= k1 - k2 + 2]
    c1, c2 = rng.choice(pairs)
    u = (lambda: _qunit(rng, p)) if quadratic else (lambda: AlgebraicNumber(_unit(rng, p)))
    chi = AlgebraicNumber(_unit(rng, p))
    top = chi * Fraction(p) ** (k1 + k2 - 3)
    a0, b0 = u(), u() * Fraction(p) ** (k2 - 2)
    gsp4 = GSp4HeckeParams(a0, b0, top / b0, top / a0, chi, k1, k2, p)
    g1 = GL2HeckeParams(u(), u() * Fraction(p) ** (c1 - 1), c1, p)
    g2 = GL2HeckeParams(u(), u() * Fraction(p) ** (c2 - 1), c2, p)
    return EulerInput(Weights(k1, k2, c1, c2), gsp4, g1, g2)


def check_euler_paths():
    rng = random.Random(20240601)
    compared = 0
    while compared < 200:
        inp = _random_f_input(rng, quadratic=compared % 2 == 1)
        try:
            a = euler_factor(inp)
        except ZeroDenominator:
            continue
        assert a == euler_factor_f_closed_form(inp)
        compared += 1
    wt = Weights(8, 4, 2, 2)
    inp = EulerInput(wt, monomial_gsp4(2, 8, 4), GL2HeckeParams(1, 2, 2, 2), GL2HeckeParams(1, 2, 2, 2))
    assert euler_factor(inp) == 3075975
    assert euler_factor_f_closed_form(inp) == 3075975
    assert naive_euler(2, 5, [1, 2**2, 2**7, 2**9], [1, 2], [1, 2]) == 3075975


# 5 ---------------------------------------------------------------------------


def check_ramified_crystalline():
    p = 5
    leg = DirichletCharacter.legendre(p)
    triv = DirichletCharacter.trivial()
    w1, w2 = WeightCharacter(3, leg, p), WeightCharacter(3, triv, p)
    points = []
    for cbar in range(p - 1):
        try:
            points.append(make_classical_point(w1, w2, cbar))
        except ParityViolation:
            pass
    ramified = [pt for pt in points if is_fully_ramified(pt)]
    assert ramified
    inp = EulerInput(
        Weights(8, 4, 3, 3), monomial_gsp4(p, 8, 4),
        GL2HeckeParams(1, p**2, 3, p), GL2HeckeParams(1, p**2, 3, p), ramified[0],
    )
    assert euler_factor(inp) == 1
    # crystalline-style input: every contributing valuation is below w
    plain = EulerInput(
        Weights(8, 4, 2, 2), monomial_gsp4(p, 8, 4), GL2HeckeParams(2, 3 * p, 2, p), GL2HeckeParams(1, p, 2, p)
    )
    assert fast_path_applies(plain)
    assert euler_factor(plain) != 0
    for q in (3, 5, 7):
        Q = Fraction(q)
        assert zeta_constant("f", q) == Q**3 / ((Q + 1) ** 2 * (Q - 1))
        assert zeta_constant("e", q) == Q**4 / (Q**2 - 1) ** 2
    assert zeta_constant("f", 5) == Fraction(125, 144)
    assert zeta_constant("e", 5) == Fraction(625, 576)


# 6 ---------------------------------------------------------------------------


def check_qexp():
    N = 200
    d = delta(N)
    tau = tau_via_jacobi(N)
    assert list(d.coefficients) == tau
    for l in (2, 3, 5, 7, 13):
        assert hecke_T(d, l).agrees_with(d.scale(tau[l]))
    f = d.change_ring(IntegersModPower(11, 10))
    st = p_stabilize_with_roots(f, 11)
    alpha = hensel_unit_root(tau[11], 11**11, 11, 10)
    assert st.unit_root == alpha == unit_root_by_iteration(tau[11], 11**11, 11, 10)
    assert u_p(st.form, 11).agrees_with(st.form.scale(alpha))
    for p in (5, 7, 11):
        assert u_p(p_deplete(d, p), p).is_zero()
        assert u_p(theta_power(d, 1), p).agrees_with(theta_power(u_p(d, p), 1).scale(p))
    rng = random.Random(6)
    P, M, D = 5, 8, 4
    R = IwasawaRing(P, M, D)
    def fam():
        return QExpansion(tuple(tuple(rng.randrange(P**M) for _ in range(D)) for _ in range(30)), R)

    for _ in range(10):
        F, G = fam(), fam()
        for k in (0, 3, 7, 20):
            assert specialize(F * G, k).agrees_with(specialize(F, k) * specialize(G, k))
    E = eisenstein_family(P, M, D, 0, 30)
    for k in (4, 8, 12):
        a, b = specialize(E, k), specialize(E, k + P - 1)
        assert [x % P for x in a.coefficients] == [x % P for x in b.coefficients]
        c = specialize(E, k + P * (P - 1))
        assert [x % P**2 for x in a.coefficients] == [x % P**2 for x in c.coefficients]


# 7 ---------------------------------------------------------------------------


_ROOT_CACHE: dict = {}


def _brute_square_roots(chi, p):
    """(tau, e(tau)) for every tau mod p^2 with tau^2 = chi, by enumeration."""
    key = (chi, p)
    if key not in _ROOT_CACHE:
        big = chi.lift(p * p)
        units = [a for a in range(1, p * p) if a % p]
        target = [big(a) for a in units]
        _ROOT_CACHE[key] = [
            (tau, teichmuller_exponent(tau, p))
            for tau in DirichletCharacter.all_characters(p * p)
            if [tau(a) ** 2 for a in units] == target
        ]
    return _ROOT_CACHE[key]


def _tau_oracle_exists(w1, w2, cbar, p):
    half = (w1.exponent + w2.exponent) // 2
    roots = _brute_square_roots(w1.finite_part * w2.finite_part, p)
    return any((half + e - cbar) % (p - 1) == 0 for _, e in roots)


def check_characters():
    for p in (3, 5, 7):
        for r in range(0, 4):
            for chi in DirichletCharacter.all_characters(p**r):
                roots = square_roots(chi, p)
                assert bool(roots) == (chi.parity() == 1)
                # (Z/p^(r+1))^x is cyclic, so agreement on a generator is agreement everywhere
                g = primitive_root(p ** (r + 1))
                for psi in roots:
                    assert psi.lift(p ** (r + 1))(g) ** 2 == chi.lift(p ** (r + 1))(g)
    for p in (3, 5):
        chars = list(DirichletCharacter.all_characters(p))
        for x1 in chars:
            for x2 in chars:
                for c1 in range(1, 5):
                    for c2 in range(1, 5):
                        w1, w2 = WeightCharacter(c1, x1, p), WeightCharacter(c2, x2, p)
                        for cbar in range(p - 1):
                            expected = _tau_oracle_exists(w1, w2, cbar, p)
                            try:
                                pt = make_classical_point(w1, w2, cbar)
                            except ParityViolation:
                                assert not expected
                                continue
                            assert expected
                            if is_crystalline(pt):
                                assert not is_fully_ramified(pt)


# 8 ---------------------------------------------------------------------------


def check_symplectic():
    assert J().rows == ((0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0))
    assert is_symplectic(J()) == (True, 1)
    assert is_symplectic(Matrix.identity()) == (True, 1)
    for p in (3, 5, 7):
        assert is_symplectic(Matrix.diag(p * p, p, p, 1)) == (True, p * p)
    assert iota(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity()
    assert iota(Matrix.diag(2, 3), Matrix.diag(6, 1)) == Matrix.diag(2, 6, 1, 3)
    u = u_b_constant()
    assert is_symplectic(u) == (True, 1)
    assert all(u[i, j] == (1 if i == j else 0) for i in range(4) for j in range(i, 4))

    def col(c):
        return Matrix.of([[c[i], 0, 0, 0] for i in range(4)])

    for p in (3, 5, 7):
        assert valid_u_kl(u, p)
        assert valid_u_kl(col((1, 1, 0, 0)), p)
        assert not valid_u_kl(col((0, 1, 1, 0)), p)
        assert not valid_u_kl(col((1, 0, 0, 1)), p)


# 9 ---------------------------------------------------------------------------


def check_golden():
    split = load_descriptor(GOLDEN / "split_family.toml")
    definite = load_descriptor(GOLDEN / "definite_family.json")
    for fmt, ext in (("json", "json"), ("svg", "svg"), ("text", "txt")):
        first = render_atlas(split, fmt)
        assert first == render_atlas(split, fmt)
        assert first == (GOLDEN / f"split_atlas.{ext}").read_text()
    assert render_atlas(definite) == (GOLDEN / "definite_atlas.json").read_text()
    assert {lab for lab in LABELS if global_sign(split, lab) == -1} == {"b", "b'", "e"}
    assert all(global_sign(definite, lab) == -global_sign(split, lab) for lab in LABELS)


CRITERIA = [
    (1, "contributing-set table regeneration", 1.0, check_table1),
    (2, "exhaustive region sweep", 30.0, check_sweep),
    (3, "graded-quotient oracle", 5.0, check_quotients),
    (4, "Euler-factor path equality", 5.0, check_euler_paths),
    (5, "fully ramified and crystalline behaviour", 1.0, check_ramified_crystalline),
    (6, "q-expansion suite", 10.0, check_qexp),
    (7, "character suite", 5.0, check_characters),
    (8, "symplectic suite", 1.0, check_symplectic),
    (9, "CLI golden files", 2.0, check_golden),
]


def run_criterion(number, title, limit, fn) -> tuple[bool, str]:
    start = time.perf_counter()
    error = ""
    try:
        fn()
        ok = True
    except AssertionError as exc:
        ok, error = False, f" ({exc})" if str(exc) else " (assertion failed)"
    elapsed = time.perf_counter() - start
    if ok and elapsed > limit:
        ok, error = False, f" (over the {limit:g} s limit)"
    status = "PASS" if ok else "FAIL"
    return ok, f"criterion {number}: {status}  {title}  {elapsed:.2f} s / {limit:g} s{error}"


@pytest.mark.parametrize("number,title,limit,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, fn):
    from conftest import ACCEPTANCE_LINES

    ok, line = run_criterion(number, title, limit, fn)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def main() -> int:
    failures = 0
    for crit in CRITERIA:
        ok, line = run_criterion(*crit)
        print(line)
        failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
