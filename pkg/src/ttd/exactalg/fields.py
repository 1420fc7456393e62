"""Coefficient fields: the rationals, prime fields F_p and their quadratic extensions F_{p^2}.

Every field object is callable (coercion from int / Fraction / own elements) and
exposes ``zero``, ``one``, ``sqrt`` (a root or None), ``is_canonical`` (the sign
rule used by poly_sqrt) and a JSON tag.
"""
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from sympy.ntheory import isprime, sqrt_mod


def _rat_sqrt(q):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    a, b = isqrt(n), isqrt(d)
    if a * a == n and b * b == d:
        return Fraction(a, b)
    return None


class RationalField:
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    def sqrt(self, a):
        return _rat_sqrt(a)

    def is_canonical(self, a):
        return a > 0

    def tag(self):
        return {"field": "QQ"}

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class Fp:
    """Element of F_p, representative kept in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, o):
        if isinstance(o, Fp):
            if o.p != self.p:
                raise ValueError("mixing F_%d and F_%d" % (self.p, o.p))
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.p)
        raise TypeError("cannot combine F_%d element with %r" % (self.p, o))

    def __add__(self, o):
        return Fp(self.v + self._lift(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Fp(self.v - self._lift(o), self.p)

    def __rsub__(self, o):
        return Fp(self._lift(o) - self.v, self.p)

    def __mul__(self, o):
        return Fp(self.v * self._lift(o), self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        d = self._lift(o) % self.p
        if d == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(self.v * pow(d, -1, self.p), self.p)

    def __rtruediv__(self, o):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(self._lift(o) * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pow__(self, n):
        if n < 0 and self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, o):
        try:
            return (self.v - self._lift(o)) % self.p == 0
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return "%d (mod %d)" % (self.v, self.p)


class PrimeField:
    def __init__(self, p):
        if p <= 3 or not isprime(p):
            raise ValueError("prime fields need a prime p > 3, got %r" % (p,))
        self.p = p
        self.char = p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ValueError("element of F_%d given to F_%d" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def legendre(self, a):
        a = self(a)
        if a.v == 0:
            return 0
        return 1 if pow(a.v, (self.p - 1) // 2, self.p) == 1 else -1

    def sqrt(self, a):
        a = self(a)
        if a.v == 0:
            return self.zero
        if self.legendre(a) != 1:
            return None
        return Fp(sqrt_mod(a.v, self.p), self.p)

    def is_canonical(self, a):
        # least representative among {a, -a}
        return a.v <= (-a.v) % self.p

    def random(self, rng):
        return Fp(rng.randrange(self.p), self.p)

    def tag(self):
        return {"field": "Fp", "p": str(self.p)}

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


class Fp2:
    """Element a + b*g of F_p[g]/(g^2 - n), n a fixed non-residue."""

    __slots__ = ("a", "b", "K")

    def __init__(self, a, b, K):
        self.a = a % K.p
        self.b = b % K.p
        self.K = K

    def _lift(self, o):
        if isinstance(o, Fp2):
            return o.a, o.b
        if isinstance(o, Fp):
            return o.v, 0
        if isinstance(o, int):
            return o, 0
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.K.p), 0
        raise TypeError("cannot combine F_p^2 element with %r" % (o,))

    def __add__(self, o):
        c, d = self._lift(o)
        return Fp2(self.a + c, self.b + d, self.K)

    __radd__ = __add__

    def __sub__(self, o):
        c, d = self._lift(o)
        return Fp2(self.a - c, self.b - d, self.K)

    def __rsub__(self, o):
        c, d = self._lift(o)
        return Fp2(c - self.a, d - self.b, self.K)

    def __mul__(self, o):
        c, d = self._lift(o)
        n = self.K.n
        return Fp2(self.a * c + n * self.b * d, self.a * d + self.b * c, self.K)

    __rmul__ = __mul__

    def norm(self):
        return (self.a * self.a - self.K.n * self.b * self.b) % self.K.p

    def inverse(self):
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("division by zero in F_p^2")
        inv = pow(nm, -1, self.K.p)
        return Fp2(self.a * inv, -self.b * inv, self.K)

    def __truediv__(self, o):
        return self * self.K(o).inverse()

    def __rtruediv__(self, o):
        return self.K(o) * self.inverse()

    def __neg__(self):
        return Fp2(-self.a, -self.b, self.K)

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = self.K.one
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def frobenius(self):
        return Fp2(self.a, -self.b, self.K)

    def __eq__(self, o):
        try:
            c, d = self._lift(o)
        except TypeError:
            return NotImplemented
        p = self.K.p
        return (self.a - c) % p == 0 and (self.b - d) % p == 0

    def __hash__(self):
        return hash((self.a, self.b, self.K.p))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return "(%d + %d*g mod %d)" % (self.a, self.b, self.K.p)


class QuadraticExtension:
    """F_{p^2} = F_p(g), g^2 = n with n the least quadratic non-residue."""

    def __init__(self, p):
        base = GF(p)
        self.base = base
        self.p = p
        self.char = p
        n = 2
        while base.legendre(n) != -1:
            n += 1
        self.n = n
        self.zero = Fp2(0, 0, self)
        self.one = Fp2(1, 0, self)
        self.gen = Fp2(0, 1, self)

    def __call__(self, x):
        if isinstance(x, Fp2):
            return x
        if isinstance(x, Fp):
            return Fp2(x.v, 0, self)
        if isinstance(x, int):
            return Fp2(x, 0, self)
        if isinstance(x, Fraction):
            return Fp2(x.numerator * pow(x.denominator, -1, self.p), 0, self)
        if isinstance(x, tuple):
            return Fp2(x[0], x[1], self)
        raise TypeError("cannot coerce %r into F_p^2" % (x,))

    @property
    def order(self):
        return self.p * self.p

    def is_square(self, a):
        a = self(a)
        # a is a square in F_{p^2} iff its norm is a square in F_p
        return not a or self.base.legendre(a.norm()) == 1

    def sqrt(self, a):
        a = self(a)
        if not a:
            return self.zero
        if not self.is_square(a):
            return None
        # Tonelli-Shanks in the cyclic group of order p^2 - 1
        q = self.order - 1
        s = 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = self.gen
        while self.is_square(z):
            z = z + 1
        m, c, t, r = s, z ** q, a ** q, a ** ((q + 1) // 2)
        while t != 1:
            i, tt = 0, t
            while tt != 1:
                tt = tt * tt
                i += 1
            b = c ** (1 << (m - i - 1))
            m, c = i, b * b
            t, r = t * c, r * b
        return r

    def is_canonical(self, a):
        return (a.a, a.b) <= ((-a.a) % self.p, (-a.b) % self.p)

    def random(self, rng):
        return Fp2(rng.randrange(self.p), rng.randrange(self.p), self)

    def tag(self):
        return {"field": "Fp2", "p": str(self.p), "nonresidue": str(self.n)}

    def __repr__(self):
        return "GF(%d^2)" % self.p

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.p == self.p

    def __hash__(self):
        return hash(("Fp2", self.p))


@lru_cache(maxsize=None)
def GF2(p):
    return QuadraticExtension(p)


def field_of(x):
    """Best-effort field of a scalar (used when callers pass bare elements)."""
    if isinstance(x, Fp):
        return GF(x.p)
    if isinstance(x, Fp2):
        return x.K
    return QQ
