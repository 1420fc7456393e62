"""Local images of the connecting map at a prime p, found by sampling points and
quadratic divisors of the curve over Q_p and mapping them to cube classes.

p-adic numbers are rationals carried to relative precision about p^PREC.  Points
come from two affine charts: the model itself (chart 0) and x -> 1/x (chart 1),
which only changes the image by the cube x^3.  A quadratic divisor is a point
(alpha, beta) over L = Q_p(sqrt e) together with its conjugate.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InconclusiveLocalImage, InvariantViolation
from ..numberfields import (KNumber, PrecisionError, k_class, k_places, nonsquare_classes, padic_sqrt,
                            q_class, rank3, val)
from ..numberfields.cubeclass import embed_split

PREC = 80
SCHEDULE = ((200, 60), (800, 300), (3200, 1200))


def local_bound(p):
    """#(image sigma) * #(image sigma_dual) at p."""
    return 9 if p % 3 == 2 else 81


def _coeffs(P, n):
    return [Fraction(a) for a in P.coeffs(n)]


def _ev(c, X):
    acc = 0
    for a in reversed(c):
        acc = acc * X + a
    return acc


# -- arithmetic in L = Q_p(sqrt e), elements (u, w) = u + w sqrt(e) -----------------

def _lmul(a, b, e):
    return (a[0] * b[0] + e * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _lev(c, al, e):
    acc = (Fraction(0), Fraction(0))
    for co in reversed(c):
        acc = _lmul(acc, al, e)
        acc = (acc[0] + co, acc[1])
    return acc


def _lnorm(a, e):
    return a[0] * a[0] - e * a[1] * a[1]


def _lsqrt(z, e, p):
    c0, c1 = z
    n = padic_sqrt(_lnorm(z, e), p, PREC)
    if n is None:
        return None
    for sg in (1, -1):
        u = padic_sqrt((c0 + sg * n) / 2, p, PREC)
        if u:
            return (u, c1 / (2 * u))
    return None


# -- charts ---------------------------------------------------------------------------

@dataclass
class Charts:
    """Coefficient lists of F and G_1, G_2 in both charts."""
    F: tuple
    G: tuple

    @classmethod
    def of(cls, D):
        F0 = _coeffs(D.F, 7)
        G0 = [_coeffs(G, 4) for G in D.G]
        return cls((F0, F0[::-1]), (G0, [g[::-1] for g in G0]))


# -- values of the partial map --------------------------------------------------------

def point_values(ch, conv, m, X, Y):
    out = []
    for G, c in zip(ch.G[m], conv.c):
        out.append(c * (Y - conv.s * _ev(G, X)))
    return out


def quad_values(ch, conv, m, e, alpha, beta):
    """Norms from K(sqrt e) to K of c (beta - s G(alpha)), times c."""
    s0, s1 = conv.s.a, conv.s.b
    out = []
    for G, c in zip(ch.G[m], conv.c):
        g = _lev(G, alpha, e)
        u = (beta[0] - s0 * g[0], beta[1] - s0 * g[1])
        v = (-s1 * g[0], -s1 * g[1])
        nu, nv = _lnorm(u, e), _lnorm(v, e)
        tr = 2 * _lmul(u, (v[0], -v[1]), e)[0]
        out.append(c * c * KNumber(nu - nv, tr - nv))
    return out


def _res_quadratic(a, P):
    """Res(x^2 + a1 x + a0, P) for P with rational coefficients."""
    a0, a1 = a
    r0, r1 = Fraction(0), Fraction(0)
    # P mod a by Horner, tracking (r1 x + r0)
    for co in reversed(P):
        r1, r0 = r0 - a1 * r1, co - a0 * r1
    return r0 * r0 - a1 * r0 * r1 + a0 * r1 * r1


def divisor_values(ch, conv, a, b):
    """c^2 Res(a, b - s G_i) for a monic quadratic a = (a0, a1) and cubic b (chart 0)."""
    s0, s1 = conv.s.a, conv.s.b
    out = []
    for G, c in zip(ch.G[0], conv.c):
        P0 = [bb - s0 * g for bb, g in zip(b, G)]
        P1 = [-s1 * g for g in G]
        X = _res_quadratic(a, P0)
        Y = _res_quadratic(a, P1)
        Z = _res_quadratic(a, [u + v for u, v in zip(P0, P1)]) - X - Y
        out.append(c * c * KNumber(X - Y, Z - Y))
    return out


# -- classes ------------------------------------------------------------------------

class _Skip(Exception):
    pass


def class_vector(target, z, p, depth):
    """Concatenated local classes of a K- or Q-value at the places over p.

    Raises _Skip when z is too close to 0 for the working precision.
    """
    if not z:
        raise _Skip()
    if target == "Q":
        if z.b:
            raise ValueError("value %s is not rational" % (z,))
        if val(z.a, p) > depth:
            raise _Skip()
        return q_class(z.a, p)
    out = ()
    for pl in k_places(p):
        if pl.kind == "split":
            try:
                if val(embed_split(z, pl.pi), p) > depth:
                    raise _Skip()
            except PrecisionError:
                raise _Skip()
        elif min(val(z.a, p), val(z.b, p)) > depth:
            raise _Skip()
        out += k_class(z, pl)
    return out


def class_dim(target, p):
    if target == "Q":
        return 1 if p % 3 == 2 else 2
    return sum(pl.dim for pl in k_places(p))


# -- sampling --------------------------------------------------------------------------

def sample_points(ch, p, rng, budget, first=True):
    """(chart, X, Y) with Y^2 = F(X) in Q_p, to precision."""
    cand = []
    if first:
        cand += [(0, Fraction(X)) for X in range(min(p ** 3, 400))]
        cand += [(1, Fraction(p * z)) for z in range(1, 60)]
    for _ in range(budget):
        cand.append((0, Fraction(rng.randint(0, p ** 6)) * p ** rng.randint(0, 4)))
        cand.append((1, Fraction(rng.randint(1, p ** 4)) * p ** rng.randint(1, 4)))
    out = []
    for m, X in cand:
        Y = padic_sqrt(_ev(ch.F[m], X), p, PREC)
        if Y is not None:
            out.append((m, X, Y))
    return out


def sample_quadratic(ch, p, rng, budget):
    """(chart, e, alpha, beta) with beta^2 = F(alpha) in Q_p(sqrt e)."""
    out = []
    for e in nonsquare_classes(p):
        for _ in range(budget):
            m = rng.randint(0, 1)
            x0 = Fraction(rng.randint(0, p ** 5)) * Fraction(p) ** rng.randint(-2, 3)
            x1 = Fraction(rng.randint(1, p ** 5)) * Fraction(p) ** rng.randint(-2, 3)
            al = (x0, x1)
            be = _lsqrt(_lev(ch.F[m], al, e), e, p)
            if be is not None:
                out.append((m, e, al, be))
    return out


# -- local images ------------------------------------------------------------------------

@dataclass
class LocalImage:
    place: int
    direction: str
    target: str
    class_dim: int          # dimension of one factor of the local class group
    basis: list             # F_3 basis of the image in (class group)^2
    witnesses: list = field(default_factory=list)
    samples: int = 0

    @property
    def dim(self):
        return len(self.basis)

    @property
    def order(self):
        return 3 ** self.dim

    def as_json(self):
        return {"place": self.place, "direction": self.direction, "dimension": self.dim,
                "basis": [list(v) for v in self.basis], "witnesses": self.witnesses,
                "samples": self.samples}


class _Grower:
    def __init__(self, D, conv, p):
        self.D, self.conv, self.p = D, conv, p
        self.ch = Charts.of(D)
        self.img = LocalImage(p, D.tag, D.target, class_dim(D.target, p), [])

    def offer(self, values, depth, witness):
        try:
            vec = sum((class_vector(self.D.target, z, self.p, depth) for z in values), ())
        except _Skip:
            return
        self.img.samples += 1
        basis = self.img.basis
        if len(basis) == len(vec) or rank3(basis + [vec])[0] == len(basis):
            return
        basis.append(vec)
        self.img.witnesses.append(witness)

    def grow(self, rng, budget, qbudget, first):
        p = self.p
        for m, X, Y in sample_points(self.ch, p, rng, budget, first):
            self.offer(point_values(self.ch, self.conv, m, X, Y), PREC - 5,
                       {"kind": "point", "chart": m, "x": str(X)})
        for m, e, al, be in sample_quadratic(self.ch, p, rng, qbudget):
            self.offer(quad_values(self.ch, self.conv, m, e, al, be), PREC // 2,
                       {"kind": "quadratic", "chart": m, "e": e, "x": [str(al[0]), str(al[1])]})


def local_images(models, conventions, p, seed=0, schedule=SCHEDULE):
    """Grow the images of both directions at p until their orders multiply to
    the local bound.  ``models`` and ``conventions`` map direction tag -> object."""
    bound = local_bound(p)
    growers = {tag: _Grower(models[tag], conventions[tag], p) for tag in models}
    rngs = {tag: random.Random("%s:%d:%s" % (seed, p, tag)) for tag in models}
    for k, (budget, qbudget) in enumerate(schedule):
        for tag, g in growers.items():
            g.grow(rngs[tag], budget, qbudget, k == 0)
        total = 1
        for g in growers.values():
            total *= g.img.order
        if total > bound:
            raise InvariantViolation("local images at %d exceed the bound %d" % (p, bound))
        if total == bound:
            return {tag: g.img for tag, g in growers.items()}
    raise InconclusiveLocalImage(p, {tag: g.img for tag, g in growers.items()})
