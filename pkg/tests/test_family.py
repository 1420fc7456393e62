from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from ttd.errors import Degeneracy
from ttd.exactalg import GF, Poly, discriminant
from ttd.family import (ModuliPoint, build_level_structure, degeneracy, quadratic_twist,
                        squarefree_model)

rats = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def _level(r, s, t):
    p = ModuliPoint.of(r, s, t)
    try:
        return build_level_structure(p)
    except Degeneracy:
        assume(False)


@settings(max_examples=40, deadline=None)
@given(rats, rats, rats)
def test_four_presentations_give_one_sextic(r, s, t):
    L = _level(r, s, t)
    for T in L.presentations:
        assert T.G * T.G + T.H ** 3 * T.lam == L.F
    assert L.F.deg in (5, 6)


@settings(max_examples=25, deadline=None)
@given(rats, rats, rats)
def test_disc_factorisation_against_sympy(r, s, t):
    L = _level(r, s, t)
    if L.F.deg != 6:
        return
    assert oracles.discriminant(list(L.F.c)) == L.disc.disc_formula()


def test_sextic_of_worked_example():
    L = build_level_structure(ModuliPoint.of(2, -1, -2))
    assert [int(c) for c in L.F.c] == [68, 192, 768, 688, 312, 72, 12]


def test_sextic_at_minus_three():
    # G_1 = -13x^3 + 105 here, so the leading coefficient is 13^2 - 12 = 157
    L = build_level_structure(ModuliPoint.of(-3, -3, -3))
    assert [int(c) for c in L.F.c] == [11349, 972, 648, -3054, -216, 108, 157]
    assert L.presentation(1).G == Poly([105, 0, 0, -13])
    printed = Poly.from_high([12, 0, 0, -105]) ** 2 - Poly.from_high([1, -3, -3]) ** 3 * 12
    assert printed.lc == 132 and printed != L.F


def test_degenerate_point_reports_delta4():
    with pytest.raises(Degeneracy) as e:
        build_level_structure(ModuliPoint.of(1, 1, 1))
    assert e.value.report.vanishing == ("delta4",)


def test_degeneracy_lists_all_vanishing():
    d = degeneracy(ModuliPoint.of(0, 0, 0))
    assert "delta1" in d.vanishing and "delta2" in d.vanishing


def test_over_prime_field_matches_reduction():
    p = 1000003
    LQ = build_level_structure(ModuliPoint.of(2, -1, -2))
    Lp = build_level_structure(ModuliPoint.of(2, -1, -2, K=GF(p)))
    assert [int(c) for c in Lp.F.c] == [int(c) % p for c in LQ.F.c]


def test_quadratic_twist_class():
    L = build_level_structure(ModuliPoint.of(2, -1, -2))
    assert quadratic_twist(L, 12).d == 3
    assert quadratic_twist(quadratic_twist(L, 5), 5).d == 1


def test_squarefree_model_normalises_scalars():
    F = Poly([Fraction(1, 2), 3, 0, 0, 0, 1, 2])
    G = squarefree_model(F * 9)
    assert G == squarefree_model(F)
    assert all(Fraction(c).denominator == 1 for c in G.c)


def test_discriminant_equals_formula_exactly(example_points):
    for p in example_points:
        L = build_level_structure(p)
        assert discriminant(L.F) == L.disc.disc_formula()
