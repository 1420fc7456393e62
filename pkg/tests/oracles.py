"""Independent reference computations: sympy and brute force, no package code."""
from fractions import Fraction

import sympy

X = sympy.Symbol("x")


def to_sympy(coeffs):
    """Lowest-first rational coefficients -> sympy expression in x."""
    return sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * X ** k
               for k, c in enumerate(coeffs))


def from_sympy(expr):
    P = sympy.Poly(sympy.expand(expr), X)
    return [Fraction(int(c.p), int(c.q)) for c in reversed(P.all_coeffs())]


def resultant(a, b):
    """Determinant of sympy's Sylvester matrix (sympy.resultant itself gets the
    sign wrong for some inputs, e.g. Res(x + 2, x^3))."""
    from sympy.polys.subresultants_qq_zz import sylvester
    return Fraction(str(sylvester(to_sympy(a), to_sympy(b), X).det()))


def discriminant(a):
    n = len(a) - 1
    d = [k * a[k] for k in range(1, n + 1)]
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(a, d) / Fraction(a[-1])


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def brute_counts(coeffs, p):
    """(N1, N2) for y^2 = F over F_p and F_p^2, F of degree 5 or 6 with good reduction.

    F_p^2 is built as F_p[i]/(i^2 - n) with n the largest non-residue below p,
    independently of the package's choice.
    """
    c = [int(Fraction(a).numerator * pow(Fraction(a).denominator, -1, p)) % p for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    deg = len(c) - 1

    def ev(x):
        acc = 0
        for a in reversed(c):
            acc = (acc * x + a) % p
        return acc

    N1 = sum(1 + legendre(ev(x), p) for x in range(p))
    N1 += (1 + legendre(c[-1], p)) if deg == 6 else 1
    n = max(a for a in range(2, p) if legendre(a, p) == -1)

    def mul(u, v):
        return ((u[0] * v[0] + n * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    N2 = 0
    for a in range(p):
        for b in range(p):
            acc = (0, 0)
            for co in reversed(c):
                acc = mul(acc, (a, b))
                acc = ((acc[0] + co) % p, acc[1])
            if acc == (0, 0):
                N2 += 1
            else:
                norm = (acc[0] * acc[0] - n * acc[1] * acc[1]) % p
                N2 += 2 if legendre(norm, p) == 1 else 0
    N2 += 2 if deg == 6 else 1
    return N1, N2


def is_cube_mod(u, q):
    return u % q in {pow(v, 3, q) for v in range(1, q)}


def eis_mul(u, v, m=None):
    a, b = u
    c, d = v
    out = (a * c - b * d, a * d + b * c - b * d)
    return out if m is None else (out[0] % m, out[1] % m)


def is_cube_k3(z, modulus=27):
    """Is the unit a + b w (a + b not divisible by 3) a cube in Z_3[w]?

    Brute force mod 27 = (1 - w)^6: a unit that is a cube mod (1 - w)^6 is a cube.
    """
    target = (z[0] % modulus, z[1] % modulus)
    for a in range(modulus):
        for b in range(modulus):
            if (a + b) % 3 == 0:
                continue
            v = (a, b)
            if eis_mul(eis_mul(v, v, modulus), v, modulus) == target:
                return True
    return False


def f3_rank(rows):
    """Rank over F_3 via sympy's DomainMatrix."""
    from sympy import GF
    from sympy.polys.matrices import DomainMatrix
    if not rows:
        return 0
    dm = DomainMatrix([[GF(3)(int(a)) for a in r] for r in rows], (len(rows), len(rows[0])), GF(3))
    return dm.rank()
