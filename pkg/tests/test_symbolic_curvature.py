"""Exact polynomial versions of the pointwise curvature claims.

The numeric module checks these to 1e-12 at sampled parameters; here the same
statements are proved as identities in the polynomial ring over (lam, sig),
using the symbolic component table as an independent route.
"""

from fractions import Fraction

import pytest

from edsverify.algebra import Poly
from edsverify.equations import curvature_table, lam, sig

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


@pytest.fixture(scope="module")
def R():
    return curvature_table()


@pytest.fixture(scope="module")
def ricci(R):
    return [[sum((R[i][p][j][p] for p in range(4)), Poly.zero()) for j in range(4)] for i in range(4)]


@pytest.fixture(scope="module")
def weyl(R, ricci):
    s = sum((ricci[i][i] for i in range(4)), Poly.zero())
    delta = lambda a, b: Poly.const(1 if a == b else 0)
    W = [[[[Poly.zero()] * 4 for _ in range(4)] for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for j in range(4):
            for p in range(4):
                for q in range(4):
                    value = R[i][j][p][q] - HALF * (
                        delta(i, p) * ricci[j][q]
                        + delta(j, q) * ricci[i][p]
                        - delta(j, p) * ricci[i][q]
                        - delta(i, q) * ricci[j][p]
                    ) + SIXTH * s * (delta(i, p) * delta(j, q) - delta(j, p) * delta(i, q))
                    W[i][j][p][q] = value
    return W


def test_rwf_normal_form(R):
    """The reduced component list: two sigma slots, two lambda slots, a zero
    mixed slot, and vanishing whenever the index set has three elements."""
    assert R[0][2][0][2] == sig          # R_1313
    assert R[0][3][3][0] == sig          # R_1441
    assert R[0][1][1][0] == lam          # R_1221
    assert R[2][3][2][3] == lam          # R_3434
    assert R[0][1][2][3].is_zero()       # R_1234
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    if len({i, j, k, l}) == 3:
                        assert R[i][j][k][l].is_zero()


def test_ricci_diagonal_and_scalar(ricci):
    assert ricci[0][0] == -lam and ricci[1][1] == -lam
    assert ricci[2][2] == lam and ricci[3][3] == lam
    for i in range(4):
        for j in range(4):
            if i != j:
                assert ricci[i][j].is_zero()
    assert sum((ricci[i][i] for i in range(4)), Poly.zero()).is_zero()


def test_weyl_nonzero_components(weyl):
    # the only nonzero Weyl components are the ones algebraically related to
    # W_1313 = W_2424 = W_1423 = sigma, W_1414 = W_2323 = W_1342 = -sigma
    assert weyl[0][2][0][2] == sig
    assert weyl[1][3][1][3] == sig
    assert weyl[0][3][1][2] == sig
    assert weyl[0][3][0][3] == -sig
    assert weyl[1][2][1][2] == -sig
    assert weyl[0][2][3][1] == -sig
    assert weyl[0][1][0][1].is_zero()
    assert weyl[2][3][2][3].is_zero()


def test_weakly_einstein_identity(R):
    """Triple contraction of the table against itself is (|R|^2 / 4) times
    the metric, as an exact polynomial identity; |R|^2 = 8 lam^2 + 32 sig^2."""
    norm2 = Poly.zero()
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    norm2 = norm2 + R[i][j][k][l] * R[i][j][k][l]
    assert norm2 == 8 * lam**2 + 32 * sig**2
    for i in range(4):
        for j in range(4):
            acc = Poly.zero()
            for p in range(4):
                for q in range(4):
                    for r in range(4):
                        acc = acc + R[i][p][q][r] * R[j][p][q][r]
            expected = Poly.const(Fraction(1, 4)) * norm2 if i == j else Poly.zero()
            assert acc == expected


def _two_form(*pairs):
    m = [[Poly.zero() for _ in range(4)] for _ in range(4)]
    for i, j, v in pairs:
        m[i][j] = v
        m[j][i] = -v
    return m


def _act(weyl, phi):
    out = [[Poly.zero() for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for j in range(4):
            acc = Poly.zero()
            for k in range(4):
                for l in range(4):
                    acc = acc + weyl[i][j][k][l] * phi[k][l]
            out[i][j] = HALF * acc
    return out


def test_weyl_eigenvalues_exact(weyl):
    one = Poly.const(1)
    zeta = _two_form((0, 1, -one), (2, 3, one))
    eta = _two_form((0, 2, -one), (1, 3, -one))
    theta = _two_form((0, 3, -one), (1, 2, one))
    for i in range(4):
        for j in range(4):
            assert _act(weyl, zeta)[i][j].is_zero()
            assert _act(weyl, eta)[i][j] == 2 * sig * eta[i][j]
            assert _act(weyl, theta)[i][j] == -2 * sig * theta[i][j]
    # the Ricci form is lam * zeta, so W annihilates it identically
    rho = _two_form((0, 1, -lam), (2, 3, lam))
    for i in range(4):
        for j in range(4):
            assert _act(weyl, rho)[i][j].is_zero()


def test_self_dual_weyl_part_vanishes_exact(weyl):
    one = Poly.const(1)
    self_dual = (
        _two_form((0, 1, one), (2, 3, one)),
        _two_form((0, 2, one), (1, 3, -one)),
        _two_form((0, 3, one), (1, 2, one)),
    )
    for phi in self_dual:
        acted = _act(weyl, phi)
        for i in range(4):
            for j in range(4):
                assert acted[i][j].is_zero()
