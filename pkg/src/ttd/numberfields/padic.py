"""Just enough p-adic arithmetic for cube and square tests on rationals."""
from fractions import Fraction

from sympy.ntheory import sqrt_mod

INFINITE = 10 ** 9


def val(q, p):
    if q == 0:
        return INFINITE
    q = Fraction(q)
    n, d = q.numerator, q.denominator
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    while d % p == 0:
        d //= p
        k -= 1
    return k


def unit_part(q, p):
    q = Fraction(q)
    return q / Fraction(p) ** val(q, p)


def unit_mod(q, p, k):
    """The unit part of q reduced mod p^k."""
    u = unit_part(q, p)
    m = p ** k
    return u.numerator * pow(u.denominator, -1, m) % m


def padic_sqrt(q, p, prec):
    """A rational Y with Y^2 = q (1 + O(p^prec)), or None if q is not a square in Q_p."""
    if q == 0:
        return None
    e = val(q, p)
    if e % 2:
        return None
    m = p ** (prec + 5)
    um = unit_mod(q, p, prec + 5)
    if p == 2:
        if um % 8 != 1:
            return None
    elif pow(um % p, (p - 1) // 2, p) != 1:
        return None
    root = sqrt_mod(um, m)
    if root is None:
        return None
    return Fraction(int(root)) * Fraction(p) ** (e // 2)


def nonsquare_classes(p):
    """Representatives e of the nontrivial classes of Q_p^x / squares."""
    if p == 2:
        return [-1, 2, -2, 5, -5, 10, -10]
    n = 2
    while pow(n, (p - 1) // 2, p) == 1:
        n += 1
    return [n, p, n * p]
