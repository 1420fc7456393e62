"""Cube classes: local classes at finite places of Q and K = Q(w), S-unit bases
mod cubes, and the norm kernel.

A local class is an F_3 vector.  Coordinates:
  Q_q, q = 2 mod 3 : (v)
  Q_q, q = 1 mod 3 : (v, i) with u^((q-1)/3) = zeta_q^i
  Q_3              : (v, k) with +-u = 1 + 3k mod 9
  K at 1 - w       : (v, e1, e2, e3) over the unit generators w, 4, 1 + 3w mod 9
  K at inert q     : (v, i) with u^((q^2-1)/3) = w^i in F_{q^2}
  K at split pi    : the Q_q class of the image under w -> w0
Units of Z_3[w] are cubes once they are 1 mod (1 - w)^4 = (9), so mod 9 suffices.
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .eisenstein import (OMEGA, PI3, EisensteinInt, KNumber, eis_factor, omega_root,
                         primes_above, split_prime, unit_exponent)
from .f3 import nullspace3
from .padic import unit_mod, val


class PrecisionError(ArithmeticError):
    pass


# -- places -------------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    field: str          # "Q" or "K"
    q: int              # residue characteristic
    kind: str           # Q: "q"; K: "ramified", "inert" or "split"
    pi: EisensteinInt = None

    @property
    def dim(self):
        if self.field == "Q":
            return 1 if self.q % 3 == 2 else 2
        return 4 if self.kind == "ramified" else 2

    @property
    def order(self):
        return 3 ** self.dim

    def __str__(self):
        if self.field == "Q":
            return str(self.q)
        return str(self.q) if self.kind != "split" else "(%s)" % self.pi


def q_place(q):
    return Place("Q", q, "q")


def k_places(q):
    if q == 3:
        return [Place("K", 3, "ramified", PI3)]
    if q % 3 == 2:
        return [Place("K", q, "inert", EisensteinInt(q))]
    return [Place("K", q, "split", pi) for pi in split_prime(q)]


_ZETA = {}


def _zeta(q):
    if q not in _ZETA:
        g = 2
        while pow(g, (q - 1) // 3, q) == 1:
            g += 1
        _ZETA[q] = pow(g, (q - 1) // 3, q)
    return _ZETA[q]


_ROOTS = {}


def _embedding_root(pi, prec):
    """w0 mod q^prec, the image of w in Q_q = K_pi."""
    q = pi.norm()
    key = (pi, prec)
    if key not in _ROOTS:
        w0 = omega_root(q)
        if pi != split_prime(q)[0]:
            w0 = (-1 - w0) % q
        m = q ** prec
        for _ in range(prec.bit_length() + 1):  # Newton on w^2 + w + 1
            w0 = (w0 - (w0 * w0 + w0 + 1) * pow(2 * w0 + 1, -1, m)) % m
        _ROOTS[key] = w0
    return _ROOTS[key]


# -- Q classes ------------------------------------------------------------------

def q_class(x, q):
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no cube class")
    e = val(x, q) % 3
    if q == 3:
        u = unit_mod(x, 3, 2)
        if u % 3 == 2:
            u = (-u) % 9
        return (e, (u - 1) // 3 % 3)
    if q % 3 == 2:
        return (e,)
    z = pow(unit_mod(x, q, 1), (q - 1) // 3, q)
    zz = _zeta(q)
    return (e, {1: 0, zz: 1, zz * zz % q: 2}[z])


# -- K classes at 3 -----------------------------------------------------------------

def _mul9(u, v):
    a, b = u
    c, d = v
    return ((a * c - b * d) % 9, (a * d + b * c - b * d) % 9)


def _pow9(u, n):
    r = (1, 0)
    for _ in range(n):
        r = _mul9(r, u)
    return r


_UNITS9 = [(a, b) for a in range(9) for b in range(9) if (a + b) % 3]
_CUBES9 = frozenset(_pow9(u, 3) for u in _UNITS9)
_UNIT_GENS = [(0, 1), (4, 0), (1, 3)]


def _coset_key(u):
    return min(_mul9(u, c) for c in _CUBES9)


def _build_table():
    table = {}
    for e in itertools.product(range(3), repeat=3):
        u = (1, 0)
        for g, k in zip(_UNIT_GENS, e):
            u = _mul9(u, _pow9(g, k))
        table[_coset_key(u)] = e
    if len(table) != 27:
        raise AssertionError("unit classes at 3 do not number 27")
    return table


_TABLE3 = _build_table()


def _k3_valuation_unit(z):
    """(v, u) with z = (1 - w)^v * unit and u the unit mod 9."""
    a, b = z.a, z.b
    den = a.denominator * b.denominator
    k3 = val(den, 3)
    rest = den // 3 ** k3
    A, B = int(a * den), int(b * den)
    v = -2 * k3
    while (A + B) % 3 == 0:
        # (A + B w)/(1 - w) = (A + B w)(2 + w)/3
        A, B = (2 * A - B) // 3, (A + B) // 3
        v += 1
    ri = pow(rest, -1, 9)
    u = (A * ri % 9, B * ri % 9)
    for _ in range(k3):  # 3 = -w^2 (1 - w)^2
        u = _mul9(u, (0, 8))
    return v, u


def _k_class_ramified(z):
    v, u = _k3_valuation_unit(z)
    return (v % 3,) + _TABLE3[_coset_key(u)]


def _k_class_inert(z, q):
    e = min(val(z.a, q), val(z.b, q))
    s = Fraction(q) ** e
    aa, bb = z.a / s, z.b / s
    base = (aa.numerator * pow(aa.denominator, -1, q) % q, bb.numerator * pow(bb.denominator, -1, q) % q)
    n = (q * q - 1) // 3
    r = (1, 0)
    while n:
        if n & 1:
            r = ((r[0] * base[0] - r[1] * base[1]) % q, (r[0] * base[1] + r[1] * base[0] - r[1] * base[1]) % q)
        base = ((base[0] ** 2 - base[1] ** 2) % q, (2 * base[0] * base[1] - base[1] ** 2) % q)
        n >>= 1
    return (e % 3, {(1, 0): 0, (0, 1): 1, (q - 1, q - 1): 2}[r])


def embed_split(z, pi, prec=120):
    """Image of z in Q_q under the embedding attached to pi."""
    w0 = _embedding_root(pi, prec)
    x = z.a + z.b * w0
    if z.b and val(x, pi.norm()) >= prec + val(z.b, pi.norm()) - 2:
        raise PrecisionError("valuation of %s at %s exceeds the working precision" % (z, pi))
    return x


def k_class(z, place, prec=120):
    z = z if isinstance(z, KNumber) else KNumber._lift(KNumber.of(0), z)
    if not z:
        raise ValueError("0 has no cube class")
    if place.kind == "ramified":
        return _k_class_ramified(z)
    if place.kind == "inert":
        return _k_class_inert(z, place.q)
    return q_class(embed_split(z, place.pi, prec), place.q)


def local_cube_class(x, place):
    if place.field == "Q":
        return q_class(x, place.q)
    return k_class(x, place)


# -- S-unit bases ----------------------------------------------------------------------

@dataclass(frozen=True)
class SUnitCubeBasis:
    field: str
    S: tuple
    gens: tuple
    labels: tuple = field(default=())

    @property
    def dim(self):
        return len(self.gens)

    def element(self, vec):
        one = Fraction(1) if self.field == "Q" else KNumber.of(1)
        out = one
        for g, e in zip(self.gens, vec):
            for _ in range(e % 3):
                out = out * g
        return out

    def places(self):
        if self.field == "Q":
            return [q_place(q) for q in self.S]
        return [pl for q in self.S for pl in k_places(q)]

    def coordinates(self, z):
        """Exponent vector of an S-unit z mod cubes."""
        if self.field == "Q":
            z = Fraction(z)
            out = [val(z, q) % 3 for q in self.S]
            rest = abs(z) / _prod(Fraction(q) ** val(z, q) for q in self.S)
            if rest != 1:
                raise ValueError("%s is not an S-unit" % z)
            return out
        if isinstance(z, KNumber):
            den = z.a.denominator * z.b.denominator
            num = EisensteinInt(int(z.a * den), int(z.b * den))
            cn = self.coordinates(num)
            cd = self.coordinates(EisensteinInt(den))
            return [(a - b) % 3 for a, b in zip(cn, cd)]
        unit, fac = eis_factor(z)
        exps = dict((pi, e) for pi, e in fac)
        if any(pi not in self.gens[1:] and pi != PI3 for pi in exps):
            raise ValueError("%s is not an S-unit" % (z,))
        _, k = unit_exponent(unit)
        out = [k % 3]
        out += [exps.get(g, 0) % 3 for g in self.gens[1:]]
        return out


def _prod(it):
    out = Fraction(1)
    for a in it:
        out *= a
    return out


def sunit_cube_basis(fld, S):
    S = tuple(sorted(set(S)))
    if 3 not in S:
        raise ValueError("S must contain 3")
    if fld == "Q":
        return SUnitCubeBasis("Q", S, tuple(Fraction(q) for q in S), tuple(str(q) for q in S))
    if fld != "K":
        raise ValueError("field must be 'Q' or 'K'")
    gens = [OMEGA, PI3]
    for q in S:
        if q != 3:
            gens.extend(primes_above(q))
    return SUnitCubeBasis("K", S, tuple(gens), tuple(str(g) for g in gens))


def norm_kernel_subspace(B):
    """Basis of the classes in B whose norm to Q is a cube."""
    if B.field != "K":
        raise ValueError("norm kernel needs a basis over K")
    rows = [[val(g.norm(), q) % 3 for g in B.gens] for q in B.S]
    return nullspace3(rows, B.dim)
