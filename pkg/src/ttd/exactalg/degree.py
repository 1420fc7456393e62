"""Per-variable degree bounds propagated through ring operations.

Running a construction on ``DegreeBound`` scalars instead of field elements
yields, for each variable, an upper bound on the degree of every output
coefficient: sums take the componentwise max and products the componentwise
sum.  Constants (ints, Fractions) have degree zero, and a literal zero is
tracked exactly so that padding zeros do not inflate bounds.  This is how
grid certification obtains its grid sizes from the formulas themselves.
"""
from fractions import Fraction


class DegreeBound:
    __slots__ = ("d", "zero")

    def __init__(self, d, zero=False):
        self.d = tuple(d)
        self.zero = zero

    @classmethod
    def var(cls, i, n):
        return cls(tuple(1 if j == i else 0 for j in range(n)))

    def _lift(self, o):
        if isinstance(o, DegreeBound):
            return o
        if isinstance(o, (int, Fraction)):
            return DegreeBound((0,) * len(self.d), zero=(o == 0))
        raise TypeError("cannot combine a degree bound with %r" % (o,))

    def __add__(self, o):
        o = self._lift(o)
        if self.zero:
            return o
        if o.zero:
            return self
        return DegreeBound(tuple(max(a, b) for a, b in zip(self.d, o.d)))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, o):
        o = self._lift(o)
        if self.zero or o.zero:
            return DegreeBound((0,) * len(self.d), zero=True)
        return DegreeBound(tuple(a + b for a, b in zip(self.d, o.d)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        # only division by nonzero constants keeps a polynomial a polynomial
        if isinstance(o, (int, Fraction)) and o != 0:
            return self
        raise TypeError("degree bounds only allow division by nonzero constants")

    def __pow__(self, n):
        if self.zero:
            return self if n else DegreeBound((0,) * len(self.d))
        return DegreeBound(tuple(a * n for a in self.d))

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.zero and o == 0
        if isinstance(o, DegreeBound):
            return self.zero == o.zero and self.d == o.d
        return NotImplemented

    def __hash__(self):
        return hash((self.d, self.zero))

    def __repr__(self):
        return "DegreeBound(%s)" % (self.d,) if not self.zero else "DegreeBound(zero)"


class DegreeRing:
    """Coefficient 'ring' of degree bounds, usable as Poly's K."""

    char = 0

    def __init__(self, nvars):
        self.n = nvars
        self.zero = DegreeBound((0,) * nvars, zero=True)
        self.one = DegreeBound((0,) * nvars)

    def __call__(self, a):
        if isinstance(a, DegreeBound):
            return a
        return self.one._lift(a)

    def var(self, i):
        return DegreeBound.var(i, self.n)


def join(bounds):
    """Componentwise max over an iterable of bounds (ignoring exact zeros)."""
    out = None
    for b in bounds:
        if b.zero:
            continue
        out = b if out is None else out + b
    return out.d if out is not None else None
