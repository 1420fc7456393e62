import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ttd.errors import Indeterminacy
from ttd.exactalg import GF, Poly
from ttd.family import ModuliPoint, build_level_structure
from ttd.moduli import (_random_point, apply_psi, compose, group_relations_check, igusa_clebsch,
                        label_scalars, orbit, theta_check)

EX = ModuliPoint.of(2, -1, -2)
P = 2147483659


def test_psi_values():
    assert apply_psi("psi1", EX).coords() == (Fraction(-1, 2), 4, Fraction(1, 2))
    assert apply_psi("psi2", EX).coords() == (2, Fraction(-1, 22), -2)


def test_psi0prime_involution_at_example():
    assert compose(["psi0prime", "psi0prime"], EX) == EX
    assert compose(["psi0", "psi0"], EX) == EX


def test_unknown_map():
    with pytest.raises(ValueError):
        apply_psi("psi7", EX)


def test_indeterminacy():
    with pytest.raises(Indeterminacy):
        apply_psi("psi1", ModuliPoint.of(0, 1, 2))


@pytest.mark.parametrize("i,rst", [(1, (2, -1, -2)), (2, (2, -1, -2)), (3, (-2, 1, 2)), (3, (2, -1, -2))])
def test_theta_maps(i, rst):
    p = ModuliPoint.of(*rst)
    assert theta_check(i, p)["pass"]
    assert not theta_check(i, p, corrupt=True)["pass"]


def test_printed_y_factors_fail():
    # the factors t r^3 and s delta_4^2 do not give the identity, t^2 and delta_4/s do
    for i in (1, 2):
        assert not theta_check(i, EX, printed=True)["pass"]


def test_group_relations():
    rep = group_relations_check(samples=40)
    assert rep["pass"], rep
    for v in rep["relations"].values():
        assert v["failed"] == 0


def test_orbit_order_divides_24():
    K = GF(P)
    rng = random.Random(2)
    for _ in range(5):
        assert 24 % len(orbit(_random_point(K, rng))) == 0


def test_label_permutation_is_proportional():
    for i in (1, 2, 3):
        assert None not in label_scalars(i, EX)


def test_ic_of_psi1_image():
    a = igusa_clebsch(build_level_structure(EX).F)
    b = igusa_clebsch(build_level_structure(apply_psi("psi1", EX)).F)
    assert a.equivalent(b)


def test_ic_i10_is_discriminant_multiple():
    from ttd.exactalg import discriminant
    F = build_level_structure(EX).F
    assert igusa_clebsch(F).I10 == discriminant(F)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_ic_invariant_under_transformations(seed):
    K = GF(1000003)
    rng = random.Random(seed)
    while True:
        F = Poly([K.random(rng) for _ in range(7)], K)
        a, b, c, d, e = (K.random(rng) for _ in range(5))
        if F.deg == 6 and a * d - b * c != 0 and e != 0:
            try:
                I = igusa_clebsch(F)
            except Exception:
                continue
            break
    G = F.moebius(a, b, c, d, 6) * (e * e)
    assert I.equivalent(igusa_clebsch(G))
    assert I.equivalent(igusa_clebsch(F.reverse(6)))


def test_ic_distinguishes_curves():
    a = igusa_clebsch(build_level_structure(EX).F)
    b = igusa_clebsch(build_level_structure(ModuliPoint.of(-2, 1, 2)).F)
    assert not a.equivalent(b)
