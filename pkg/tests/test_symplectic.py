import random

import pytest

from gsp4kit.errors import DeterminantMismatch, RingMismatch
from gsp4kit.symplectic import J, Matrix, in_parabolic, iota, is_symplectic, u_b_constant, valid_u_kl


def test_j_entries_pinned():
    assert J().rows == ((0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0))


@pytest.mark.parametrize(
    "m,nu",
    [(Matrix.identity(), 1), (J(), 1), (Matrix.diag(25, 5, 5, 1), 25), (Matrix.diag(9, 3, 3, 1), 9)],
)
def test_is_symplectic_examples(m, nu):
    assert is_symplectic(m) == (True, nu)


def test_not_symplectic():
    assert is_symplectic(Matrix.diag(2, 1, 1, 1)) == (False, None)


def test_iota_examples():
    I2 = Matrix.identity(2)
    assert iota(I2, I2) == Matrix.identity()
    a, d, a2, d2 = 2, 3, 6, 1
    assert iota(Matrix.diag(a, d), Matrix.diag(a2, d2)) == Matrix.diag(a, a2, d2, d)
    with pytest.raises(DeterminantMismatch):
        iota(Matrix.diag(1, 2), Matrix.diag(1, 3))


def _random_gl2_pair(rng, det, ring):
    """Random [[a, b], [c, d]] over Z/ring (ring prime) with the given determinant."""
    a = rng.randrange(1, ring)
    b, c = rng.randrange(ring), rng.randrange(ring)
    d = (det + b * c) * pow(a, -1, ring) % ring
    return Matrix.of([[a, b], [c, d]], ring)


@pytest.mark.parametrize("ring", [5, 7, 11])
def test_iota_is_homomorphism(ring):
    rng = random.Random(ring)
    for _ in range(30):
        d1, d2 = rng.randrange(1, ring), rng.randrange(1, ring)
        g1, g2 = _random_gl2_pair(rng, d1, ring), _random_gl2_pair(rng, d1, ring)
        h1, h2 = _random_gl2_pair(rng, d2, ring), _random_gl2_pair(rng, d2, ring)
        assert iota(g1 * h1, g2 * h2) == iota(g1, g2) * iota(h1, h2)
        ok, nu = is_symplectic(iota(g1, g2) * iota(h1, h2))
        assert ok and nu == d1 * d2 % ring


def test_parabolic_membership():
    for which in ("Borel", "Siegel", "Klingen"):
        assert in_parabolic(Matrix.identity(ring=7), which)
    assert not in_parabolic(u_b_constant(7), "Borel")
    assert not in_parabolic(J(7), "Klingen")
    assert in_parabolic(Matrix.diag(4, 2, 2, 1, ring=7), "Borel")


def test_u_kl_patterns():
    def with_col(col):
        return Matrix.of([[col[i]] + [0, 0, 0] for i in range(4)])

    assert valid_u_kl(with_col((1, 1, 0, 0)), 5)
    assert not valid_u_kl(with_col((0, 1, 1, 0)), 5)
    assert not valid_u_kl(with_col((1, 0, 0, 1)), 5)


def test_u_b_constant():
    u = u_b_constant()
    assert is_symplectic(u) == (True, 1)
    assert all(u[i, i] == 1 for i in range(4))
    assert all(u[i, j] == 0 for i in range(4) for j in range(i + 1, 4))
    assert valid_u_kl(u, 5)
    assert u.reduce(5).column(0) == (1, 1, 0, 0)


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatch):
        Matrix.identity(ring=5) * Matrix.identity()
