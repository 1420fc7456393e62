"""The Eisenstein integers Z[w], w^2 + w + 1 = 0, and elements of K = Q(w).

Z[w] is norm-Euclidean with class number 1, so factoring reduces to factoring the
norm over Z and splitting each rational prime.
"""
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint
from sympy.ntheory import sqrt_mod


def _round_div(n, d):
    """Nearest integer to n/d (d > 0)."""
    return (2 * n + d) // (2 * d)


@dataclass(frozen=True)
class EisensteinInt:
    a: int
    b: int = 0

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("EisensteinInt needs integer coordinates")

    @classmethod
    def _lift(cls, o):
        if isinstance(o, EisensteinInt):
            return o
        if isinstance(o, int):
            return cls(o, 0)
        return NotImplemented

    def __add__(self, o):
        o = self._lift(o)
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        a, b, c, d = self.a, self.b, o.a, o.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = EisensteinInt(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self):
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_unit(self):
        return self.norm() == 1

    def __bool__(self):
        return bool(self.a or self.b)

    def divmod(self, o):
        o = self._lift(o)
        if not o:
            raise ZeroDivisionError("division by zero in Z[w]")
        num = self * o.conj()
        n = o.norm()
        q = EisensteinInt(_round_div(num.a, n), _round_div(num.b, n))
        return q, self - q * o

    def __floordiv__(self, o):
        return self.divmod(o)[0]

    def __mod__(self, o):
        return self.divmod(o)[1]

    def exact_div(self, o):
        q, r = self.divmod(o)
        if r:
            raise ArithmeticError("%s does not divide %s" % (o, self))
        return q

    def divides(self, o):
        return not (self._lift(o) % self)

    def to_k(self):
        return KNumber(Fraction(self.a), Fraction(self.b))

    def __str__(self):
        return str(self.to_k())


OMEGA = EisensteinInt(0, 1)
ONE = EisensteinInt(1, 0)
PI3 = EisensteinInt(1, -1)  # 1 - w, the prime above 3
UNITS = tuple(s * OMEGA ** k for s in (ONE, -ONE) for k in range(3))


def gcd(x, y):
    while y:
        x, y = y, x % y
    return x


def is_primary(z):
    """z = 2 mod 3, i.e. z = -1 mod 3."""
    return z.a % 3 == 2 and z.b % 3 == 0


def primary_associate(z):
    for u in UNITS:
        w = u * z
        if is_primary(w):
            return w
    raise ValueError("%s has no primary associate (divisible by 1 - w?)" % (z,))


def omega_root(q):
    """w0 in Z/q with w0^2 + w0 + 1 = 0, from the smaller square root of -3."""
    s = int(min(sqrt_mod(-3 % q, q, all_roots=True)))
    return (s - 1) * pow(2, -1, q) % q


def split_prime(q):
    """(pi, conj(pi)) primary with pi | (w - w0), w0 = omega_root(q)."""
    if q % 3 != 1:
        raise ValueError("%d does not split in Q(w)" % q)
    w0 = omega_root(q)
    pi = primary_associate(gcd(EisensteinInt(q), OMEGA - w0))
    if pi.norm() != q:
        raise ArithmeticError("failed to split %d" % q)
    return pi, pi.conj()


def primes_above(q):
    if q == 3:
        return [PI3]
    if q % 3 == 2:
        return [EisensteinInt(q)]
    return list(split_prime(q))


def eis_factor(z):
    """(unit, [(prime, exponent), ...]) with unit * prod prime^e == z.

    Primes are 1 - w, inert rational primes, or primary split primes.
    """
    z = EisensteinInt._lift(z)
    if not z:
        raise ValueError("cannot factor 0")
    rest = z
    out = []
    for q in sorted(int(p) for p in factorint(z.norm())):
        for pi in primes_above(q):
            e = 0
            while pi.divides(rest):
                rest = rest.exact_div(pi)
                e += 1
            if e:
                out.append((pi, e))
    if not rest.is_unit():
        raise ArithmeticError("factorisation of %s left %s" % (z, rest))
    return rest, out


def unit_exponent(u):
    """(sign, k) with u = sign * w^k."""
    for s in (1, -1):
        for k in range(3):
            if s * OMEGA ** k == u:
                return s, k
    raise ValueError("%s is not a unit" % (u,))


@dataclass(frozen=True)
class KNumber:
    """a + b w with rational a, b."""
    a: Fraction
    b: Fraction = Fraction(0)

    @classmethod
    def of(cls, a, b=0):
        return cls(Fraction(a), Fraction(b))

    def _lift(self, o):
        if isinstance(o, KNumber):
            return o
        if isinstance(o, EisensteinInt):
            return o.to_k()
        return KNumber(Fraction(o), Fraction(0))

    def __add__(self, o):
        o = self._lift(o)
        return KNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return KNumber(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        a, b, c, d = self.a, self.b, o.a, o.b
        return KNumber(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conj(self):
        return KNumber(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in K")
        c = self.conj()
        return KNumber(c.a / n, c.b / n)

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = KNumber(Fraction(1), Fraction(0))
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.a or self.b)

    def __str__(self):
        a, b = self.a, self.b
        if not b:
            return str(a)
        bs = "w" if b == 1 else "-w" if b == -1 else "%s*w" % b
        if not a:
            return bs
        return "%s%s%s" % (a, "" if bs.startswith("-") else "+", bs)


SQRT_M3 = KNumber.of(1, 2)  # 1 + 2w, a square root of -3
