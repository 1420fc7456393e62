from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from ttd.numberfields import (OMEGA, PI3, UNITS, EisensteinInt, KNumber, eis_factor, is_primary,
                              k_class, k_places, local_cube_class, norm_kernel_subspace, nullspace3,
                              padic_sqrt, q_class, q_place, rank3, split_prime, sunit_cube_basis, val)

ints = st.integers(-60, 60)
eis = st.builds(EisensteinInt, ints, ints).filter(bool)


def _add(u, v):
    return tuple((a + b) % 3 for a, b in zip(u, v))


def test_split_seven():
    pi, pib = split_prime(7)
    assert pi * pib == EisensteinInt(7)
    assert pi.norm() == 7 and is_primary(pi) and is_primary(pib)
    # (3 + w)(2 - w) is the same factorisation up to units
    assert {p.norm() for p in (EisensteinInt(3, 1), EisensteinInt(2, -1))} == {7}
    assert EisensteinInt(3, 1) * EisensteinInt(2, -1) == EisensteinInt(7)
    for p in (EisensteinInt(3, 1), EisensteinInt(2, -1)):
        assert any((p * u) in (pi, pib) for u in UNITS)


def test_inert_and_ramified():
    assert [p.kind for p in k_places(2)] == ["inert"]
    assert [p.kind for p in k_places(3)] == ["ramified"]
    unit, fac = eis_factor(EisensteinInt(3))
    assert fac == [(PI3, 2)]
    assert unit * PI3 * PI3 == EisensteinInt(3)
    assert PI3 * PI3 == OMEGA * -3


def test_units():
    assert len(set(UNITS)) == 6
    assert all(u.norm() == 1 for u in UNITS)


@settings(max_examples=200, deadline=None)
@given(eis, eis)
def test_factorisation_multiplicative(x, y):
    ux, fx = eis_factor(x)
    uy, fy = eis_factor(y)
    u, f = eis_factor(x * y)
    merged = {}
    for p, e in fx + fy:
        merged[p] = merged.get(p, 0) + e
    assert dict(f) == merged
    assert u == ux * uy


@settings(max_examples=200, deadline=None)
@given(eis)
def test_norm_nonnegative(z):
    assert z.norm() > 0
    prod = z.conj() * z
    assert prod == EisensteinInt(z.norm())


def test_q_class_examples():
    assert q_class(2, 7) != (0, 0)
    assert q_class(10, 3) == (0, 0)
    assert q_class(2, 5) == (0,)
    assert q_class(7 ** 3 * 2, 5) == (0,)
    assert q_place(7).order == 9 and q_place(3).order == 9 and q_place(5).order == 3


rats = st.fractions(max_denominator=500).filter(lambda x: x != 0)


@settings(max_examples=200, deadline=None)
@given(rats, rats, st.sampled_from([3, 5, 7, 11, 13, 19, 31]))
def test_q_class_homomorphism(x, y, q):
    assert q_class(x * y, q) == _add(q_class(x, q), q_class(y, q))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10 ** 6), st.sampled_from([7, 13, 19, 31, 37]))
def test_q_class_against_cube_oracle(u, q):
    assume(u % q)
    assert (q_class(u, q) == (0, 0)) == oracles.is_cube_mod(u, q)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10 ** 6))
def test_q3_class_against_cube_oracle(u):
    assume(u % 3)
    cubes = {pow(v, 3, 27) for v in range(27) if v % 3}
    assert (q_class(u, 3) == (0, 0)) == (u % 27 in cubes)


@settings(max_examples=150, deadline=None)
@given(eis)
def test_ramified_class_against_oracle(z):
    assume(z.norm() % 3)
    assert (k_class(z, k_places(3)[0]) == (0, 0, 0, 0)) == oracles.is_cube_k3((z.a, z.b))


def _cube_mod_q_in_k(z, q):
    target = (z.a % q, z.b % q)
    for a in range(q):
        for b in range(q):
            if (a, b) != (0, 0):
                v = (a, b)
                if oracles.eis_mul(oracles.eis_mul(v, v, q), v, q) == target:
                    return True
    return False


@settings(max_examples=60, deadline=None)
@given(eis, st.sampled_from([2, 5, 11]))
def test_inert_class_against_oracle(z, q):
    assume(z.norm() % q)
    assert (k_class(z, k_places(q)[0]) == (0, 0)) == _cube_mod_q_in_k(z, q)


@settings(max_examples=100, deadline=None)
@given(eis, st.sampled_from([7, 13, 19]))
def test_split_class_against_oracle(z, q):
    for pl in k_places(q):
        assume(not pl.pi.divides(z))
        # reduce z mod pi: w maps to the root of x^2 + x + 1 that pi kills
        w0 = next(w for w in range(q) if pl.pi.divides(EisensteinInt(-w, 1)))
        u = (z.a + z.b * w0) % q
        assert (k_class(z, pl) == (0, 0)) == oracles.is_cube_mod(u, q)


@settings(max_examples=150, deadline=None)
@given(eis, eis, st.sampled_from([2, 3, 5, 7, 13]))
def test_k_class_homomorphism(x, y, q):
    for pl in k_places(q):
        assert k_class(x * y, pl) == _add(k_class(x, pl), k_class(y, pl))


def test_local_cube_class_dispatch():
    assert local_cube_class(Fraction(2), q_place(7)) == q_class(2, 7)
    assert local_cube_class(EisensteinInt(2), k_places(7)[0]) == k_class(EisensteinInt(2), k_places(7)[0])


def test_sunit_bases():
    B = sunit_cube_basis("Q", [3, 7])
    assert B.dim == 2 and B.gens == (3, 7)
    BK = sunit_cube_basis("K", [3, 7])
    assert BK.dim == 4
    assert sunit_cube_basis("K", [2, 3]).dim == 3
    for S in ([3], [2, 3], [3, 7], [2, 3, 5, 7, 13]):
        # torsion unit w plus one generator per prime above S
        splits = sum(2 if q % 3 == 1 else 1 for q in S)
        assert sunit_cube_basis("K", S).dim == 1 + splits
    with pytest.raises(ValueError):
        sunit_cube_basis("K", [7])


def test_sunit_generators_independent():
    for S in ([2, 3, 7], [3, 5, 13, 19]):
        B = sunit_cube_basis("K", S)
        rows = []
        for g in B.gens:
            rows.append([c for pl in B.places() for c in k_class(g, pl)])
        assert oracles.f3_rank(rows) == B.dim


def test_coordinates_round_trip():
    B = sunit_cube_basis("K", [2, 3, 7])
    for vec in ([1, 0, 0, 0, 0], [0, 1, 2, 0, 1], [2, 2, 1, 1, 2]):
        assert B.coordinates(B.element(vec)) == vec
    with pytest.raises(ValueError):
        B.coordinates(EisensteinInt(5))


def test_norm_kernel():
    B = sunit_cube_basis("K", [3, 7])
    ker = norm_kernel_subspace(B)
    assert len(ker) == 2
    for v in ker:
        n = B.element(v).norm()
        assert all(val(n, q) % 3 == 0 for q in (3, 7))
    # w is in the kernel, 1 - w is not, pi / pi-bar is
    pi, pib = split_prime(7)
    assert B.coordinates(OMEGA) in [list(v) for v in ker] or rank3(ker + [B.coordinates(OMEGA)])[0] == 2
    assert rank3(ker + [B.coordinates(PI3)])[0] == 3
    quot = KNumber.of(pi.a, pi.b) / KNumber.of(pib.a, pib.b)
    assert rank3(ker + [B.coordinates(quot)])[0] == 2


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=5, max_size=5), min_size=0, max_size=6))
def test_f3_linear_algebra(rows):
    rk, _ = rank3(rows)
    assert rk == oracles.f3_rank(rows)
    ns = nullspace3(rows, 5)
    assert len(ns) == 5 - rk
    for v in ns:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) % 3 == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10 ** 8), st.sampled_from([2, 3, 5, 7, 11]))
def test_padic_sqrt(n, p):
    x = Fraction(n) ** 2
    r = padic_sqrt(x, p, 20)
    assert r is not None
    assert (r * r - x) % p ** 20 == 0 if isinstance(r, int) else val(r * r - x, p) >= 20
