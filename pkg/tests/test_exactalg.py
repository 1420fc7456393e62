from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ttd.errors import NotASquare
from ttd.exactalg import (GF, GF2, QQ, CubicRadicalAlgebra, DegreeRing, Poly, discriminant, gcd,
                          interpolate, poly_sqrt, resultant)

ints = st.integers(-30, 30)
polys = st.lists(ints, min_size=1, max_size=6)


def nonzero(c):
    return any(c)


@given(polys, polys)
def test_mul_and_divmod_match_sympy(a, b):
    P, Q = Poly(a), Poly(b)
    assert (P * Q).c == tuple(oracles.from_sympy(oracles.to_sympy(a) * oracles.to_sympy(b)))[:len((P * Q).c)]
    if Q:
        q, r = P.divmod(Q)
        assert q * Q + r == P
        assert r.deg < Q.deg


@settings(max_examples=60)
@given(polys.filter(nonzero), polys.filter(nonzero))
def test_resultant_matches_sympy(a, b):
    P, Q = Poly(a), Poly(b)
    if P.deg < 1 or Q.deg < 1:
        return
    assert resultant(P, Q) == oracles.resultant(list(P.c), list(Q.c))


@settings(max_examples=60)
@given(st.lists(ints, min_size=3, max_size=7))
def test_discriminant_matches_sympy(a):
    P = Poly(a)
    if P.deg < 2:
        return
    assert discriminant(P) == oracles.discriminant(list(P.c))


def test_resultant_small_cases():
    x = Poly.x()
    assert resultant(x - 1, x - 3) == -2
    assert resultant(x * x + 1, x * x - 1) == 4
    assert resultant(x + 2, x ** 3) == -8  # lc(P)^3 * Q(-2)


@given(polys.filter(nonzero))
def test_poly_sqrt_roundtrip(a):
    P = Poly(a)
    R = poly_sqrt(P * P)
    assert R * R == P * P
    assert R.lc > 0


def test_poly_sqrt_rejects_non_squares():
    x = Poly.x()
    with pytest.raises(NotASquare):
        poly_sqrt(x * x + 1)
    with pytest.raises(NotASquare):
        poly_sqrt(x ** 3)


@given(polys.filter(nonzero), polys.filter(nonzero))
def test_gcd_divides_both(a, b):
    P, Q = Poly(a), Poly(b)
    g = gcd(P, Q)
    assert not (P % g) and not (Q % g)


def test_interpolate_through_points():
    pts = [(Fraction(k), Fraction(k * k * k - 2)) for k in range(4)]
    P = interpolate([x for x, _ in pts], [y for _, y in pts], QQ)
    assert all(P(x) == y for x, y in pts)


@given(st.integers(0, 1000002), st.integers(1, 1000002))
def test_prime_field_inverse(a, b):
    K = GF(1000003)
    x, y = K(a), K(b)
    assert (x / y) * y == x


@given(st.integers(0, 100), st.integers(0, 100))
def test_fp2_square_roots(a, b):
    K = GF2(101)
    z = K((a, b))
    r = K.sqrt(z * z)
    assert r * r == z * z
    assert K.is_square(z * z)


def test_fp2_nonsquare_detected():
    K = GF2(13)
    squares = {K((a, b)) * K((a, b)) for a in range(13) for b in range(13)}
    assert len(squares) == (169 - 1) // 2 + 1
    non = next(K((a, b)) for a in range(13) for b in range(13) if K((a, b)) not in squares)
    assert not K.is_square(non) and K.sqrt(non) is None


def test_cubic_radical_algebra():
    K = GF(1000003)
    A = CubicRadicalAlgebra(K(5), K)
    a = A.alpha
    assert a ** 3 == A(K(5))
    u = a + 2
    assert u * u.inverse() == A(K(1))


def test_degree_ring_bounds():
    R = DegreeRing(3)
    r, s, t = R.var(0), R.var(1), R.var(2)
    e = r ** 3 * s + t * t - 7
    assert e.d == (3, 1, 2)
    assert (e * e).d == (6, 2, 4)
