"""Dense univariate polynomials over an exact coefficient ring.

Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -1.  The coefficient
ring ``K`` is any of the field objects in :mod:`ttd.exactalg.fields`, a
:class:`PolyRing` (polynomials whose coefficients are themselves polynomials),
or the degree-tracking ring used for grid certification.
"""
from fractions import Fraction
from math import lcm

from ..errors import DegenerateInput, NotASquare
from .fields import QQ, Fp, PrimeField


class Poly:
    __slots__ = ("c", "K")

    def __init__(self, coeffs=(), K=QQ):
        c = [K(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)
        self.K = K

    # construction helpers
    @classmethod
    def x(cls, K=QQ):
        return cls([0, 1], K)

    @classmethod
    def const(cls, a, K=QQ):
        return cls([a], K)

    @classmethod
    def from_high(cls, coeffs, K=QQ):
        return cls(list(coeffs)[::-1], K)

    @property
    def deg(self):
        return len(self.c) - 1

    @property
    def lc(self):
        if not self.c:
            return self.K.zero
        return self.c[-1]

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else self.K.zero

    def coeffs(self, n=None):
        """Coefficient list, padded with zeros to length n if given."""
        out = list(self.c)
        if n is not None:
            out += [self.K.zero] * (n - len(out))
        return out

    def is_zero(self):
        return not self.c

    def _coerce(self, o):
        if isinstance(o, Poly):
            return o
        return Poly([o], self.K)

    # arithmetic
    def __add__(self, o):
        o = self._coerce(o)
        n = max(len(self.c), len(o.c))
        return Poly([self.coeff(i) + o.coeff(i) for i in range(n)], self.K)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.c], self.K)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        if not isinstance(o, Poly):
            o = self.K(o)
            return Poly([a * o for a in self.c], self.K)
        if not self.c or not o.c:
            return Poly([], self.K)
        out = [self.K.zero] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.K)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly([self.K.one], self.K)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        if not isinstance(o, Poly):
            o = self._coerce(o)
        return len(self.c) == len(o.c) and all(a == b for a, b in zip(self.c, o.c))

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def __call__(self, a):
        acc = self.K.zero
        for co in reversed(self.c):
            acc = acc * a + co
        return acc

    def divmod(self, o):
        """Euclidean division; needs an invertible leading coefficient of o."""
        o = self._coerce(o)
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [self.K.zero] * max(len(rem) - len(o.c) + 1, 0)
        inv = self.K.one / o.lc if not isinstance(o.lc, Poly) else None
        for k in range(len(rem) - len(o.c), -1, -1):
            top = rem[k + len(o.c) - 1]
            if top == 0:
                continue
            f = top * inv if inv is not None else top / o.lc
            q[k] = f
            for j, b in enumerate(o.c):
                rem[k + j] = rem[k + j] - f * b
        return Poly(q, self.K), Poly(rem[:len(o.c) - 1], self.K)

    def __mod__(self, o):
        return self.divmod(o)[1]

    def __floordiv__(self, o):
        return self.divmod(o)[0]

    def __truediv__(self, o):
        """Exact division (by a scalar or a polynomial)."""
        if not isinstance(o, Poly):
            o = self.K(o)
            if isinstance(o, Poly):
                return Poly([a / o for a in self.c], self.K)
            inv = self.K.one / o
            return Poly([a * inv for a in self.c], self.K)
        q, r = self.divmod(o)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self):
        return Poly([a * i for i, a in enumerate(self.c)][1:], self.K)

    def monic(self):
        return self / self.lc

    def shift(self, a):
        """P(x + a)."""
        out = Poly([], self.K)
        lin = Poly([a, 1], self.K)
        for co in reversed(self.c):
            out = out * lin + co
        return out

    def reverse(self, n):
        """x^n P(1/x) for formal degree n >= deg P."""
        return Poly(self.coeffs(n + 1)[::-1], self.K)

    def moebius(self, a, b, c, d, n):
        """(c x + d)^n P((a x + b)/(c x + d)) for formal degree n."""
        num = Poly([b, a], self.K)
        den = Poly([d, c], self.K)
        out = Poly([], self.K)
        for k, co in enumerate(self.coeffs(n + 1)):
            if co == 0:
                continue
            out = out + num ** k * den ** (n - k) * co
        return out

    def map(self, f, K):
        return Poly([f(a) for a in self.c], K)

    def content_scale(self):
        """Integer multiplier clearing all denominators (QQ only)."""
        return lcm(*[Fraction(a).denominator for a in self.c]) if self.c else 1

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if a == 0:
                continue
            terms.append("(%s)*x^%d" % (a, i) if i else "(%s)" % (a,))
        return " + ".join(terms)


def gcd(P, Q):
    """Monic gcd over a field."""
    while Q:
        P, Q = Q, P % Q
    return P.monic() if P else P


# -- determinants ---------------------------------------------------------

def _det_bareiss_int(M):
    n = len(M)
    M = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _det_modp(M, p):
    n = len(M)
    M = [[a % p for a in r] for r in M]
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det = det * M[k][k] % p
        inv = pow(M[k][k], -1, p)
        for i in range(k + 1, n):
            f = M[i][k] * inv % p
            if f:
                Mi, Mk = M[i], M[k]
                for j in range(k, n):
                    Mi[j] = (Mi[j] - f * Mk[j]) % p
    return det % p


def _det_field(M, K):
    n = len(M)
    M = [list(r) for r in M]
    det = K.one
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return K.zero
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det = det * M[k][k]
        inv = K.one / M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] * inv
            if f != 0:
                for j in range(k, n):
                    M[i][j] = M[i][j] - f * M[k][j]
    return det


def det(M, K):
    """Exact determinant: fraction-free over QQ, modular over F_p."""
    if not M:
        return K.one
    if K == QQ:
        rows = [[Fraction(a) for a in r] for r in M]
        scale = 1
        irows = []
        for r in rows:
            m = lcm(*[a.denominator for a in r])
            scale *= m
            irows.append([int(a * m) for a in r])
        return Fraction(_det_bareiss_int(irows), scale)
    if isinstance(K, PrimeField):
        return Fp(_det_modp([[int(a) for a in r] for r in M], K.p), K.p)
    return _det_field(M, K)


def det_generic(M, zero, one):
    """Division-free determinant by cofactor expansion (small matrices, any ring)."""
    n = len(M)
    if n == 0:
        return one
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    out = zero
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det_generic(minor, zero, one)
        out = out + term if j % 2 == 0 else out - term
    return out


def sylvester(P, Q):
    m, n = P.deg, Q.deg
    size = m + n
    K = P.K
    rows = []
    pc = list(reversed(P.c))
    qc = list(reversed(Q.c))
    for i in range(n):
        rows.append([K.zero] * i + pc + [K.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([K.zero] * i + qc + [K.zero] * (size - n - 1 - i))
    return rows


def resultant(P, Q):
    """Res(P, Q) = lc(P)^deg Q * prod Q(roots of P), via the Sylvester determinant."""
    if not P and not Q:
        raise DegenerateInput("resultant of two zero polynomials")
    K = P.K
    if not P or not Q:
        return K.zero
    if P.deg == 0:
        return P.lc ** Q.deg
    if Q.deg == 0:
        return Q.lc ** P.deg
    if isinstance(K, PrimeField):
        from ..kernels import resultant_modp
        return Fp(resultant_modp([int(a) for a in P.c], [int(a) for a in Q.c], K.p), K.p)
    return det(sylvester(P, Q), K)


def discriminant(P):
    d = P.deg
    if d < 1:
        raise DegenerateInput("discriminant of a constant polynomial")
    r = resultant(P, P.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return r * sign / P.lc


def poly_sqrt(P):
    """Square root with the canonical sign on the leading coefficient.

    Coefficient recursion from the top; raises NotASquare when P is not a square.
    """
    K = P.K
    if not P:
        return P
    if P.deg % 2:
        raise NotASquare("odd degree")
    m = P.deg // 2
    lead = K.sqrt(P.lc)
    if lead is None:
        raise NotASquare("leading coefficient is not a square")
    if not K.is_canonical(lead):
        lead = -lead
    Q = [K.zero] * (m + 1)
    Q[m] = lead
    two_lead = lead * 2
    for k in range(m - 1, -1, -1):
        acc = K.zero
        for i in range(k + 1, m + 1):
            j = m + k - i
            if k < j <= m:
                acc = acc + Q[i] * Q[j]
        try:
            Q[k] = (P.c[m + k] - acc) / two_lead
        except ArithmeticError:
            raise NotASquare("inexact division in square root recursion")
    root = Poly(Q, K)
    if root * root != P:
        raise NotASquare("recursion residue is nonzero")
    return root


class PolyRing:
    """Coefficient ring K[r] (used to take square roots of polynomials in x whose
    coefficients are polynomials in a second variable)."""

    def __init__(self, K):
        self.base = K
        self.char = K.char
        self.zero = Poly([], K)
        self.one = Poly([K.one], K)

    def __call__(self, a):
        if isinstance(a, Poly):
            return a
        return Poly([a], self.base)

    def sqrt(self, a):
        try:
            return poly_sqrt(a)
        except NotASquare:
            return None

    def is_canonical(self, a):
        return self.base.is_canonical(a.lc)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("PolyRing", self.base))


def interpolate(xs, ys, K):
    """Lagrange interpolation over a field: the polynomial of degree < len(xs)."""
    out = Poly([], K)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = Poly([K.one], K)
        den = K.one
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Poly([-xj, 1], K)
                den = den * (xi - xj)
        out = out + num * (yi / den)
    return out
