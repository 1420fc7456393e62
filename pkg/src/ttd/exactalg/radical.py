"""The algebra k[alpha] = k[t]/(t^3 - c)."""
from ..errors import DegenerateAlgebra


class CubicRadicalAlgebra:
    def __init__(self, c, K):
        c = K(c)
        if c == 0:
            raise DegenerateAlgebra("t^3 - c with c = 0 is not etale")
        self.c = c
        self.K = K
        self.zero = RadicalElem((K.zero,) * 3, self)
        self.one = RadicalElem((K.one, K.zero, K.zero), self)
        self.alpha = RadicalElem((K.zero, K.one, K.zero), self)

    def __call__(self, a):
        if isinstance(a, RadicalElem):
            return a
        if isinstance(a, tuple):
            return RadicalElem(tuple(self.K(x) for x in a), self)
        return RadicalElem((self.K(a), self.K.zero, self.K.zero), self)

    def __eq__(self, other):
        return isinstance(other, CubicRadicalAlgebra) and other.K == self.K and other.c == self.c

    def __hash__(self):
        return hash(("radical", self.c))


class RadicalElem:
    __slots__ = ("a", "A")

    def __init__(self, a, A):
        self.a = a
        self.A = A

    def _lift(self, o):
        return self.A(o).a

    def __add__(self, o):
        b = self._lift(o)
        return RadicalElem(tuple(x + y for x, y in zip(self.a, b)), self.A)

    __radd__ = __add__

    def __neg__(self):
        return RadicalElem(tuple(-x for x in self.a), self.A)

    def __sub__(self, o):
        return self + (-self.A(o))

    def __rsub__(self, o):
        return self.A(o) - self

    def __mul__(self, o):
        a0, a1, a2 = self.a
        b0, b1, b2 = self._lift(o)
        c = self.A.c
        return RadicalElem((a0 * b0 + c * (a1 * b2 + a2 * b1),
                            a0 * b1 + a1 * b0 + c * a2 * b2,
                            a0 * b2 + a1 * b1 + a2 * b0), self.A)

    __rmul__ = __mul__

    def __pow__(self, n):
        out, base = self.A.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def norm(self):
        """Determinant of multiplication by self, an element of k."""
        a0, a1, a2 = self.a
        c = self.A.c
        return a0 ** 3 + c * a1 ** 3 + c * c * a2 ** 3 - 3 * c * a0 * a1 * a2

    def is_unit(self):
        return self.norm() != 0

    def inverse(self):
        # adjugate of the multiplication matrix, first column
        a0, a1, a2 = self.a
        c = self.A.c
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("zero divisor in k[alpha]")
        adj = (a0 * a0 - c * a1 * a2, c * a2 * a2 - a0 * a1, a1 * a1 - a0 * a2)
        return RadicalElem(tuple(x / nm for x in adj), self.A)

    def __truediv__(self, o):
        return self * self.A(o).inverse()

    def __eq__(self, o):
        try:
            b = self._lift(o)
        except TypeError:
            return NotImplemented
        return all(x == y for x, y in zip(self.a, b))

    def __hash__(self):
        return hash(self.a)

    def __bool__(self):
        return any(x != 0 for x in self.a)

    def as_poly(self):
        from .poly import Poly
        return Poly(list(self.a), self.A.K)

    def __repr__(self):
        return "(%s) + (%s)*a + (%s)*a^2" % self.a
