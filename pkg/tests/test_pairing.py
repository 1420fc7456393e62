import random

import pytest

from ttd.errors import SameClass, SharedSupport
from ttd.exactalg import GF, Poly
from ttd.family import ModuliPoint, TorsionPresentation, build_level_structure
from ttd.moduli import _random_point
from ttd.pairing import (classify, divides_component, isotropy_certificate, synthetic_nonisotropic,
                         weil_pairing)


def test_family_pairs_are_isotropic(example_points):
    for p in example_points:
        cert = isotropy_certificate(build_level_structure(p))
        assert cert["pass"]
        assert len(cert["pairs"]) == 6
        assert all(r["value"] == 1 and r["methods_agree"] for r in cert["pairs"])


def test_isotropy_over_prime_field():
    K = GF(1000003)
    rng = random.Random(3)
    for _ in range(10):
        L = build_level_structure(_random_point(K, rng))
        assert isotropy_certificate(L)["pass"]


def test_synthetic_failure_gives_primitive_root():
    K = GF(1000003)
    T1, T2, F, expected = synthetic_nonisotropic(K, random.Random(1))
    e = weil_pairing(T1, T2, F)
    assert e.tag == "primitive"
    assert e.value == expected
    divisible, info = divides_component(T1, T2)
    assert divisible and info["divisible_components"] >= 1


def test_same_class_and_shared_support():
    L = build_level_structure(ModuliPoint.of(2, -1, -2))
    T = L.presentation(1)
    with pytest.raises(SameClass):
        weil_pairing(T, T)
    x = Poly.x()
    A = TorsionPresentation(x ** 3, (x - 1) * (x - 2), 1, 1)
    B = TorsionPresentation(x ** 3 + (x - 1) * 5, (x - 1) * (x - 3), 1, 2)
    with pytest.raises(SharedSupport):
        weil_pairing(A, B)


def test_classify():
    K = GF(7)
    assert classify(K(1)) == "one"
    assert classify(K(2)) == "primitive"  # 2^3 = 1 mod 7
    assert classify(K(3)) == "invalid"


def test_pairing_is_alternating(example_points):
    L = build_level_structure(example_points[2])
    T = L.presentations
    for i in range(4):
        for j in range(4):
            if i != j:
                assert weil_pairing(T[i], T[j]).value * weil_pairing(T[j], T[i]).value == 1
