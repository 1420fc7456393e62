import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ttd.errors import Indeterminacy, UnsupportedDivisor
from ttd.exactalg import GF, Poly
from ttd.family import ModuliPoint, build_level_structure
from ttd.isogeny import (MumfordDivisor, build_isogenous, build_matrices, g4_explicit, h4_explicit,
                         kummer_coords, magic_identity_check, psi0, theta0_check)
from ttd.moduli import _random_point, igusa_clebsch

P = 2147483659


def _hi(*c):
    return Poly.from_high(list(c))


def _iso(*rst):
    L = build_level_structure(ModuliPoint.of(*rst))
    return L, build_isogenous(L)


def test_printed_model_minus2_1_2():
    L, I = _iso(-2, 1, 2)
    assert I.H[3] == _hi(15, -26, 10)
    assert I.lam[3] == 1328
    assert I.G[3] == _hi(1, 6, -12, 7) * -332
    printed = _hi(83, 498, -996, 581) ** 2 * -48 - _hi(15, -26, 10) ** 3 * 3984
    assert I.F == printed


def test_printed_model_2_m1_m2():
    L, I = _iso(2, -1, -2)
    assert I.H[3] == _hi(-5, 14, 30)
    assert I.lam[3] == 5648 and L.disc.Delta == 706
    printed = _hi(706, 2118, 4236, 353) ** 2 * -48 + _hi(5, -14, -30) ** 3 * 16944
    assert I.F == printed


def test_printed_models_match_by_invariants():
    for rst, printed in [((-2, 1, 2), _hi(83, 498, -996, 581) ** 2 * -48 - _hi(15, -26, 10) ** 3 * 3984),
                         ((2, -1, -2), _hi(706, 2118, 4236, 353) ** 2 * -48 + _hi(5, -14, -30) ** 3 * 16944)]:
        _, I = _iso(*rst)
        assert igusa_clebsch(I.F).equivalent(igusa_clebsch(printed * 7 * 7))


def test_det_A_examples():
    # frozen from a sympy determinant of the 4x4 matrix
    assert build_matrices(build_level_structure(ModuliPoint.of(-2, 1, 2))).Delta == 166
    assert build_matrices(build_level_structure(ModuliPoint.of(2, -1, -2))).Delta == 706


def test_det_against_sympy(example_points):
    import sympy
    for p in example_points:
        m = build_matrices(build_level_structure(p))
        assert sympy.Matrix(m.A).det() == m.Delta


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_theorem_identities_random_fp(seed):
    K = GF(P)
    L = build_level_structure(_random_point(K, random.Random(seed)))
    I = build_isogenous(L)
    assert magic_identity_check(L, I)["pass"]
    m = I.matrices
    adj = m.adjugate()
    for i in range(4):
        for j in range(4):
            v = sum((m.A[i][k] * adj[k][j] for k in range(4)), K.zero)
            assert v == (m.Delta if i == j else 0)


def test_closed_forms(example_points):
    for p in example_points:
        _, I = _iso(*p.coords())
        assert I.H[3] == h4_explicit(*p.coords(), p.K)
        # closed form of Delta (G_1 - 2t)
        assert I.G[3] == g4_explicit(*p.coords(), p.K)


def test_magic_identity_detects_perturbation():
    L, I = _iso(2, -1, -2)
    bad = type(I)(I.point, (I.H[0] + 1,) + I.H[1:], I.lam, I.G, I.F, I.matrices, I.disc)
    rep = magic_identity_check(L, bad)
    assert not rep["pass"] and rep["nonzero"]


def test_psi0_involution_and_theta0():
    p = ModuliPoint.of(2, -1, -2)
    assert psi0(psi0(p)) == p
    for rst in [(2, -1, -2), (-2, 1, 2)]:
        q = ModuliPoint.of(*rst)
        assert theta0_check(q)["pass"]
        assert not theta0_check(q, perturb=1)["pass"]


def test_psi0_indeterminacy():
    # rs - st - 1 = 0 at (2, 1, 1)
    with pytest.raises(Indeterminacy):
        psi0(ModuliPoint.of(2, 1, 1))


def test_psi0_image_is_twist_of_isogenous():
    p = ModuliPoint.of(2, -1, -2)
    _, I = _iso(2, -1, -2)
    Lq = build_level_structure(psi0(p))
    assert igusa_clebsch(Lq.F).equivalent(igusa_clebsch(I.untwisted_F()))


def _divisor_on(F, K, x1, x2):
    y1, y2 = K.sqrt(F(K(x1))), K.sqrt(F(K(x2)))
    if y1 is None or y2 is None:
        return None
    a = Poly([K(x1 * x2), K(-x1 - x2), K.one], K)
    g1 = (y2 - y1) / K(x2 - x1)
    b = Poly([y1 - g1 * x1, g1], K)
    return a, b, (K(x1), y1), (K(x2), y2)


def _kummer_oracle(F, P1, P2):
    (x1, y1), (x2, y2) = P1, P2
    f = F.coeffs(7)
    s, m = x1 + x2, x1 * x2
    phi = (2 * f[0] + f[1] * s + 2 * f[2] * m + f[3] * m * s + 2 * f[4] * m * m
           + f[5] * m * m * s + 2 * f[6] * m ** 3)
    return (phi - 2 * y1 * y2) / ((x1 - x2) ** 2)


def test_kummer_against_direct_evaluation():
    K = GF(1009)
    L = build_level_structure(ModuliPoint.of(2, -1, -2, K=K))
    found = 0
    for x1 in range(30):
        for x2 in range(x1 + 1, 30):
            d = _divisor_on(L.F, K, x1, x2)
            if d is None:
                continue
            a, b, P1, P2 = d
            D = MumfordDivisor(a, b)
            k = kummer_coords(D, L.F)
            assert k == kummer_coords(D.involute(), L.F)
            xi = k.normalized()
            assert xi[1] == x1 + x2 and xi[2] == x1 * x2
            assert xi[3] == _kummer_oracle(L.F, P1, P2)
            found += 1
    assert found > 10


def test_kummer_rejects_repeated_root():
    K = GF(1009)
    L = build_level_structure(ModuliPoint.of(2, -1, -2, K=K))
    x0 = next(x for x in range(100) if K.sqrt(L.F(K(x))) not in (None, K.zero))
    y0 = K.sqrt(L.F(K(x0)))
    # tangent-free double point: (x - x0)^2 with b constant does not satisfy the
    # Mumford condition, so build it from a genuine one and only repeat the x
    a = Poly([K(x0 * x0), K(-2 * x0), K.one], K)
    with pytest.raises(UnsupportedDivisor):
        kummer_coords(MumfordDivisor(a, Poly([y0], K)), L.F)
