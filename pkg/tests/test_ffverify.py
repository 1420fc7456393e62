import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ttd.errors import BadReduction, BoundViolation
from ttd.family import ModuliPoint, build_level_structure, squarefree_model
from ttd.ffverify import (certify_tilde_squares, count, good_primes, grid_certify, identity_names,
                          isogeny_order_check, random_point_checks, reduce_mod)
from ttd.isogeny import build_isogenous

EX = ModuliPoint.of(2, -1, -2)


def test_count_mod_13_matches_brute_force():
    c = count(build_level_structure(EX).F, 13)
    assert (c.N1, c.N2) == oracles.brute_counts([int(a) for a in build_level_structure(EX).F.c], 13)
    assert c.J_order == 198 and c.J_order % 9 == 0


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([(2, -1, -2), (-2, 1, 2), (-3, -3, -3)]), st.integers(0, 14))
def test_count_against_oracle(rst, k):
    pt = ModuliPoint.of(*rst)
    q = good_primes(pt, 15)[k]
    for F in (build_level_structure(pt).F, squarefree_model(build_isogenous(build_level_structure(pt)).F)):
        c = count(F, q)
        assert (c.N1, c.N2) == oracles.brute_counts(reduce_mod(F, q), q)


def test_bad_reduction_at_11():
    with pytest.raises(BadReduction):
        count(build_level_structure(EX).F, 11)


@pytest.mark.parametrize("rst", [(2, -1, -2), (-2, 1, 2)])
def test_isogeny_invariance_of_orders(rst):
    pt = ModuliPoint.of(*rst)
    primes = good_primes(pt, 20, limit=200)
    assert len(primes) >= 20
    for q in primes:
        assert isogeny_order_check(pt, q)["pass"], q


def test_split_and_inert_examples():
    assert isogeny_order_check(EX, 13)["pass"]
    assert isogeny_order_check(ModuliPoint.of(-2, 1, 2), 7)["pass"]
    q = next(q for q in good_primes(EX, 10) if q % 3 == 2)
    rep = isogeny_order_check(EX, q)
    assert rep["pass"] and rep["J"]["Jorder"] % 9 == 0


@pytest.mark.parametrize("name", [n for n in identity_names() if n not in ("falsified", "tilde-squares")])
def test_grid_identities(name):
    rep = grid_certify(name)
    assert rep["pass"], rep
    assert all(g > b for g, b in zip(rep["grid"], rep["degree_bounds"]))


def test_falsified_identity_fails():
    rep = grid_certify("falsified")
    assert not rep["pass"] and rep["failure"] is not None


def test_small_grid_rejected():
    with pytest.raises(BoundViolation):
        grid_certify("det", dims=(2, 2, 2))


@pytest.mark.slow
def test_tilde_squares():
    assert certify_tilde_squares()["pass"]


def test_tilde_squares_corrupted_small_prime():
    assert not certify_tilde_squares(corrupt=True)["pass"]


def test_random_points():
    assert random_point_checks(n=60, seed=5)["pass"]
