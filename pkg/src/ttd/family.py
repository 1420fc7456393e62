"""The three-parameter family C_rst: y^2 = F = G_i^2 + lambda_i H_i^3, i = 1..4.

The four presentations correspond to T_1, T_2, T_3 = T_1 + T_2 and
T_4 = T_1 - T_2, which span the rational subgroup (Z/3)^2 of J[3].

The formula functions at the top are written over an arbitrary commutative
ring (field elements, degree bounds, ...) and avoid division: G_3, G_4,
lambda_3 and lambda_4 are returned as numerators together with their
denominators delta_3, delta_5.
"""
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .errors import Degeneracy, InvariantViolation
from .exactalg import QQ, Poly, PrimeField, discriminant

DELTA_NAMES = tuple("delta%d" % i for i in range(1, 8))


def deltas(r, s, t):
    """delta_1 .. delta_7 of the discriminant factorisation."""
    return (
        s,
        t,
        s * t + 1,
        r ** 3 - 3 * r * t + t ** 2 + t,
        r ** 3 * s - 3 * r * s * t + s * t ** 2 + s * t + t,
        r ** 3 * s ** 2 - 3 * r * s ** 2 * t - 3 * r * s + s ** 2 * t ** 2 + s ** 2 * t + 2 * s * t + s + 1,
        (r ** 3 * s ** 2 * t + r ** 3 * s - 3 * r * s ** 2 * t ** 2 - 3 * r * s * t + s ** 2 * t ** 3
         + s ** 2 * t ** 2 + 2 * s * t ** 2 + t),
    )


def big_delta(r, s, t):
    """The degree-(6,2,4) polynomial Delta (the determinant of the isogeny matrix)."""
    return (r ** 6 * s ** 2 - 6 * r ** 4 * s ** 2 * t - 3 * r ** 4 * s + 2 * r ** 3 * s ** 2 * t ** 2
            + 2 * r ** 3 * s ** 2 * t + 3 * r ** 3 * s * t + r ** 3 * s + r ** 3 + 9 * r ** 2 * s ** 2 * t ** 2
            + 6 * r ** 2 * s * t - 6 * r * s ** 2 * t ** 3 - 6 * r * s ** 2 * t ** 2 - 9 * r * s * t ** 2
            - 3 * r * s * t - 3 * r * t + s ** 2 * t ** 4 + 2 * s ** 2 * t ** 3 + s ** 2 * t ** 2
            + 2 * s * t ** 3 + 3 * s * t ** 2 + t ** 2 + t)


def presentation_numerators(r, s, t, K):
    """[(H_i, Ghat_i, lamhat_i, e_i)] with G_i = Ghat_i/e_i and lambda_i = lamhat_i/e_i^2."""
    d3 = s * t + 1
    d5 = r ** 3 * s - 3 * r * s * t + s * t ** 2 + s * t + t
    one = K.one

    H1 = Poly([t, r, 1], K)
    G1 = Poly([-s * t ** 2 + s * r ** 3 + t, 3 * s * r * (r - t), 3 * s * (r - t), s - s * t - 1], K)
    H2 = Poly([r, 1, 1], K)
    G2 = Poly([-s * t ** 2 + s * r ** 3 - t, 3 * s * r * (r - t), 3 * s * (r - t), s - s * t + 1], K)
    H3 = Poly([s * r ** 2, 2 * s * r - s * t - 1, s], K)
    G3 = Poly([
        s ** 2 * t ** 3 - s ** 2 * t * r ** 3 + 2 * s * t ** 2 + s * r ** 3 + t,
        3 * s ** 2 * t ** 2 * r - 3 * s ** 2 * t * r ** 2 + 3 * s * t * r + 3 * s * r ** 2,
        3 * s ** 2 * t ** 2 - 3 * s ** 2 * t * r + 3 * s * t + 3 * s * r,
        s ** 2 * t ** 2 - s ** 2 * t + 2 * s * t + s + 1,
    ], K)
    H4 = Poly([
        s * t ** 2 - s * t * r ** 2 - s * t * r + s * r ** 3 + t,
        s * t ** 2 - s * t * r - s * t - s * r ** 3 + 2 * s * r ** 2 + t,
        s * t * r - s * t - s * r ** 2 + s * r + r,
    ], K)
    G4 = Poly([
        (-s ** 2 * t ** 4 + 3 * s ** 2 * t ** 3 * r + s ** 2 * t ** 3 - 6 * s ** 2 * t ** 2 * r ** 2
         + 3 * s ** 2 * t * r ** 4 + s ** 2 * t * r ** 3 - s ** 2 * r ** 6 - 2 * s * t ** 3
         + 3 * s * t ** 2 * r + s * t ** 2 - 2 * s * t * r ** 3 - t ** 2),
        (-3 * s ** 2 * t ** 3 * r + 6 * s ** 2 * t ** 3 - 9 * s ** 2 * t ** 2 * r + 3 * s ** 2 * t * r ** 4
         + 3 * s ** 2 * t * r ** 3 + 3 * s ** 2 * t * r ** 2 - 3 * s ** 2 * r ** 5 - 3 * s * t ** 2 * r
         + 6 * s * t ** 2 - 3 * s * t * r ** 2),
        (3 * s ** 2 * t ** 3 - 6 * s ** 2 * t ** 2 * r ** 2 - 3 * s ** 2 * t ** 2 + 9 * s ** 2 * t * r ** 3
         - 3 * s ** 2 * t * r ** 2 + 3 * s ** 2 * t * r - 3 * s ** 2 * r ** 4 + 3 * s * t ** 2
         - 6 * s * t * r ** 2 + 3 * s * t * r),
        (s ** 2 * t ** 3 - 3 * s ** 2 * t ** 2 * r - s ** 2 * t * r ** 3 + 6 * s ** 2 * t * r ** 2
         - 3 * s ** 2 * t * r + s ** 2 * t - s ** 2 * r ** 3 + 2 * s * t ** 2 - 3 * s * t * r + 2 * s * t
         - s * r ** 3 + t),
    ], K)
    return [
        (H1, G1, 4 * s, one),
        (H2, G2, 4 * s * t, one),
        (H3, G3, 4 * t, d3),
        (H4, G4, 4 * s * t, d5),
    ]


def sextic(r, s, t, K):
    """F_rst = G_1^2 + lambda_1 H_1^3 (polynomial in r, s, t)."""
    H1, G1, l1, _ = presentation_numerators(r, s, t, K)[0]
    return G1 * G1 + H1 ** 3 * l1


# -- data types ------------------------------------------------------------

@dataclass(frozen=True)
class ModuliPoint:
    r: object
    s: object
    t: object
    K: object = QQ

    @classmethod
    def of(cls, r, s, t, K=QQ):
        return cls(K(r), K(s), K(t), K)

    def coords(self):
        return (self.r, self.s, self.t)

    def __repr__(self):
        return "(%s, %s, %s)" % tuple(str(c) for c in self.coords())


@dataclass(frozen=True)
class DiscriminantData:
    deltas: tuple
    Delta: object
    vanishing: tuple = ()

    @property
    def degenerate(self):
        return bool(self.vanishing)

    def disc_formula(self):
        d1, d2, d3, d4, d5, d6, d7 = self.deltas
        return -(2 ** 12) * 3 ** 6 * d1 ** 3 * d2 ** 3 * d3 * d4 ** 3 * d5 * d6 ** 3 * d7 ** 3


@dataclass(frozen=True)
class TorsionPresentation:
    G: Poly
    H: Poly
    lam: object
    label: int

    def value(self):
        return self.G * self.G + self.H ** 3 * self.lam


@dataclass(frozen=True)
class LevelStructure:
    point: ModuliPoint
    F: Poly
    presentations: tuple
    disc: DiscriminantData
    d: int = 1

    @property
    def K(self):
        return self.point.K

    def presentation(self, i):
        return self.presentations[i - 1]

    def twisted_F(self):
        """The sextic of the twisted model y^2 = d*F(x)."""
        return self.F * self.d


def degeneracy(p):
    """delta_1..delta_7 and Delta at p, with the list of vanishing deltas."""
    r, s, t = p.coords()
    ds = deltas(r, s, t)
    vanish = tuple(name for name, v in zip(DELTA_NAMES, ds) if v == 0)
    return DiscriminantData(ds, big_delta(r, s, t), vanish)


def build_level_structure(p):
    data = degeneracy(p)
    if data.degenerate:
        raise Degeneracy(data)
    K = p.K
    pres = []
    for i, (H, Gn, ln, e) in enumerate(presentation_numerators(p.r, p.s, p.t, K), start=1):
        pres.append(TorsionPresentation(Gn / e, H, ln / (e * e), i))
    F = pres[0].value()
    for T in pres[1:]:
        if T.value() != F:
            raise InvariantViolation("F != G_%d^2 + lambda_%d H_%d^3" % (T.label, T.label, T.label))
    disc = discriminant(F)
    if disc == 0 or disc != data.disc_formula():
        raise InvariantViolation("Disc(F) disagrees with the delta factorisation")
    return LevelStructure(p, F, tuple(pres), data)


def squarefree_part(d, K=QQ):
    """Representative of d modulo squares (an integer for QQ, 1 or a non-residue for F_p)."""
    if isinstance(K, PrimeField):
        n = K(d)
        if n == 0:
            raise ValueError("twist by zero")
        if K.legendre(n) == 1:
            return 1
        m = 2
        while K.legendre(m) != -1:
            m += 1
        return m
    q = Fraction(d)
    if q == 0:
        raise ValueError("twist by zero")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for pr, e in factorint(abs(n)).items():
        if e % 2:
            out *= pr
    return sign * out


def quadratic_twist(L, d):
    """The twist d*y^2 = F, stored unexpanded as (F, d mod squares)."""
    if L.K(d) == 0:
        raise ValueError("twist by zero")
    new = squarefree_part(L.d * d, L.K)
    return LevelStructure(L.point, L.F, L.presentations, L.disc, new)


def squarefree_model(F):
    """Normal form of y^2 = F over QQ under y-scaling: integral, primitive up to a
    squarefree integer factor."""
    from math import gcd as igcd
    scale = F.content_scale()
    ints = [int(a * scale) for a in F.c]
    g = 0
    for a in ints:
        g = igcd(g, a)
    if ints[-1] < 0:
        g = -g
    c = Fraction(g, scale)
    u = squarefree_part(c)
    return Poly([Fraction(a, g) * u for a in ints], QQ)
