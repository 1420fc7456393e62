"""The (3,3)-isogenous curve C~_rst, the matrix A and its adjugate, psi_0 / theta_0,
and Kummer coordinates of Mumford divisors.

As in family.py, the raw formulas are written over an arbitrary ring so the same
code computes values over Q or F_p and degree bounds for grid certification.
"""
from dataclasses import dataclass

from .errors import Degeneracy, Indeterminacy, InvariantViolation, NotASquare, UnsupportedDivisor
from .exactalg import Poly, det_generic, discriminant, poly_sqrt
from .family import (DiscriminantData, ModuliPoint, big_delta, build_level_structure, deltas,
                     presentation_numerators)


# -- ring-generic formulas ---------------------------------------------------

def matrix_A(r, s, t, K):
    """Columns are the coefficient vectors (x^2, x, 1) of H_1..H_4; last row
    is (-r/2, -1/2, -delta_3/2, -delta_5/2)."""
    Hs = [H for H, _, _, _ in presentation_numerators(r, s, t, K)]
    d = deltas(r, s, t)
    half = K.one / 2
    rows = [[H.coeff(k) for H in Hs] for k in (2, 1, 0)]
    rows.append([-r * half, -half, -d[2] * half, -d[4] * half])
    return rows


def cofactors(A, K):
    n = len(A)
    M = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [A[a][:j] + A[a][j + 1:] for a in range(n) if a != i]
            m = det_generic(minor, K.zero, K.one)
            row.append(m if (i + j) % 2 == 0 else -m)
        M.append(row)
    return M


def matrix_Atilde(M):
    return [
        list(M[2]),
        [-2 * m for m in M[1]],
        list(M[0]),
        [m / 2 for m in M[3]],
    ]


def tilde_numerators(r, s, t, K):
    """All of the isogenous data without division.

    Returns dict with A, M, At, Ht (H~_1..H~_4), Delta, lam_num, lam_den
    (lambda~_i = lam_num[i] / lam_den[i]^2), G4 (G~_4) and base = G~_4^2 + lambda~_4 H~_4^3.
    """
    A = matrix_A(r, s, t, K)
    M = cofactors(A, K)
    At = matrix_Atilde(M)
    Ht = [Poly([At[2][j], At[1][j], At[0][j]], K) for j in range(4)]
    D = big_delta(r, s, t)
    d = deltas(r, s, t)
    lam_num = [4 * s * D, 4 * s * t * D, 4 * t * D, 4 * s * t * D]
    lam_den = [d[5], d[6], d[3], K.one]
    _, G1, _, _ = presentation_numerators(r, s, t, K)[0]
    G4 = (G1 - 2 * t) * D
    base = G4 * G4 + Ht[3] ** 3 * lam_num[3]
    return {"A": A, "M": M, "At": At, "Ht": Ht, "Delta": D, "lam_num": lam_num,
            "lam_den": lam_den, "G4": G4, "base": base}


def h4_explicit(r, s, t, K):
    """The closed form of H~_4 as given alongside C~_rst."""
    u = r * s - s * t - 1
    return Poly([
        -(r * r - t) * u,
        r ** 3 * s - 2 * r * r * s + r * s * t + r - s * t * t + s * t - t,
        (r - 1) * u,
    ], K)


def g4_explicit(r, s, t, K):
    D = big_delta(r, s, t)
    return Poly([r ** 3 * s - s * t * t - t, 3 * r * s * (r - t), 3 * s * (r - t), s - s * t - 1], K) * D


# -- data types ----------------------------------------------------------------

@dataclass(frozen=True)
class IsogenyMatrices:
    A: list
    M: list
    At: list
    Delta: object

    def adjugate(self):
        return [[self.M[j][i] for j in range(4)] for i in range(4)]


@dataclass(frozen=True)
class IsogenousStructure:
    point: ModuliPoint
    H: tuple
    lam: tuple
    G: tuple
    F: Poly
    matrices: IsogenyMatrices
    disc: object

    @property
    def smooth(self):
        return self.disc != 0

    def untwisted_F(self):
        """G~^2 + lambda~ H~^3, the sextic of the -3 twist of C~."""
        return self.F / -3


def build_matrices(L):
    K = L.K
    r, s, t = L.point.coords()
    A = matrix_A(r, s, t, K)
    M = cofactors(A, K)
    D = L.disc.Delta
    mats = IsogenyMatrices(A, M, matrix_Atilde(M), D)
    det = sum((A[0][j] * M[0][j] for j in range(4)), K.zero)
    if det != D:
        raise InvariantViolation("det A = %s differs from Delta = %s" % (det, D))
    adj = mats.adjugate()
    for i in range(4):
        for j in range(4):
            v = sum((A[i][k] * adj[k][j] for k in range(4)), K.zero)
            if v != (D if i == j else 0):
                raise InvariantViolation("A adj(A) != Delta I at (%d, %d)" % (i, j))
    return mats


def build_isogenous(L):
    K = L.K
    r, s, t = L.point.coords()
    mats = build_matrices(L)
    if mats.Delta == 0:
        raise Degeneracy(DiscriminantData(L.disc.deltas, mats.Delta, ("Delta",)))
    data = tilde_numerators(r, s, t, K)
    Ht = data["Ht"]
    lam = [n / (d * d) for n, d in zip(data["lam_num"], data["lam_den"])]
    base = data["base"]
    G = []
    for i in range(3):
        try:
            G.append(poly_sqrt(base - Ht[i] ** 3 * lam[i]))
        except NotASquare as e:
            raise InvariantViolation("G~_%d^2 is not a square: %s" % (i + 1, e))
    G.append(data["G4"])
    F = base * -3
    for i in range(4):
        if (G[i] * G[i] + Ht[i] ** 3 * lam[i]) * -3 != F:
            raise InvariantViolation("model %d of C~ disagrees" % (i + 1))
    disc = discriminant(F) if F.deg >= 1 else K.zero
    return IsogenousStructure(L.point, tuple(Ht), tuple(lam), tuple(G), F, mats, disc)


def magic_identity_check(L, I):
    """sum H_i(x) H~_i(x~) - Delta (x - x~)^2, coefficient by coefficient."""
    D = L.disc.Delta
    target = {(2, 0): D, (1, 1): -2 * D, (0, 2): D}
    bad = []
    for a in range(3):
        for b in range(3):
            v = sum((T.H.coeff(a) * Ht.coeff(b) for T, Ht in zip(L.presentations, I.H)), L.K.zero)
            v = v - target.get((a, b), 0)
            if v != 0:
                bad.append({"x_deg": a, "xt_deg": b, "value": v})
    return {"pass": not bad, "nonzero": bad}


# -- psi_0 and theta_0 -----------------------------------------------------------

def _check_nonzero(vals, what):
    for v in vals:
        if v == 0:
            raise Indeterminacy("%s: a denominator vanishes" % what)


def psi0(p):
    r, s, t = p.coords()
    d1, d2, d3, d4, d5, d6, d7 = deltas(r, s, t)
    D = big_delta(r, s, t)
    u = r * s - s * t - 1
    _check_nonzero([u, d4, s, t, r - 1, D], "psi0")
    r2 = -s * (r - 1) * (r * r - t) * (d5 - r) / (u * u * d4)
    s2 = u ** 3 * d4 * d4 / (s * t * (r - 1) ** 3 * D)
    t2 = s * s * (r - 1) ** 3 * (r * r - t) ** 3 / (u ** 3 * d4 * d4)
    return ModuliPoint(r2, s2, t2, p.K)


def theta0_coeffs(p):
    """(alpha, beta, gamma) with theta_0(x, y) = (alpha x + beta, gamma y)."""
    r, s, t = p.coords()
    d4 = deltas(r, s, t)[3]
    D = big_delta(r, s, t)
    u = r * s - s * t - 1
    _check_nonzero([r * r - t, r - 1, s], "theta0")
    alpha = -d4 * u / ((r * r - t) * (r - 1) ** 2 * s)
    beta = (r - t) / (r - 1)
    gamma = D * t * u ** 3 * d4 * d4 / (s * s * (r - 1) ** 3 * (r * r - t) ** 3)
    return alpha, beta, gamma


def theta0_check(p, perturb=0):
    """theta_0 carries C_{psi_0(p)} onto y^2 = G~_4^2 + lambda~_4 H~_4^3 (the -3
    twist of C~_p): F0(alpha x + beta) = gamma^2 F_{psi_0(p)}(x)."""
    L = build_level_structure(p)
    I = build_isogenous(L)
    q = psi0(p)
    L2 = build_level_structure(q)
    alpha, beta, gamma = theta0_coeffs(p)
    alpha = alpha + perturb
    lhs = I.untwisted_F().moebius(alpha, beta, 0, 1, 6)
    rhs = L2.F * (gamma * gamma)
    diff = lhs - rhs
    return {"pass": not diff, "image": q, "residual": diff}


# -- Kummer coordinates ------------------------------------------------------------

@dataclass(frozen=True)
class MumfordDivisor:
    a: Poly
    b: Poly

    def check(self, F):
        if self.a.lc != 1 or self.a.deg > 2 or self.b.deg >= max(self.a.deg, 1):
            return False
        return (self.b * self.b - F) % self.a == 0

    def involute(self):
        return MumfordDivisor(self.a, -self.b)


@dataclass(frozen=True)
class KummerPoint:
    xi: tuple

    def normalized(self):
        lead = next(c for c in self.xi if c != 0)
        return tuple(c / lead for c in self.xi)

    def __eq__(self, other):
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())


def kummer_coords(D, F):
    if not D.check(F):
        raise UnsupportedDivisor("not a Mumford representation for this curve")
    if D.a.deg != 2:
        raise UnsupportedDivisor("only divisors with two affine points are supported")
    xi1 = -D.a.coeff(1)
    xi2 = D.a.coeff(0)
    disc = xi1 * xi1 - 4 * xi2
    if disc == 0:
        raise UnsupportedDivisor("repeated x-coordinate")
    g0, g1 = D.b.coeff(0), D.b.coeff(1)
    y1y2 = g0 * g0 + g0 * g1 * xi1 + g1 * g1 * xi2
    f = F.coeffs(7)
    phi = (2 * f[0] + f[1] * xi1 + 2 * f[2] * xi2 + f[3] * xi1 * xi2
           + 2 * f[4] * xi2 * xi2 + f[5] * xi2 * xi2 * xi1 + 2 * f[6] * xi2 ** 3)
    one = F.K.one
    return KummerPoint((one, xi1, xi2, (phi - 2 * y1y2) / disc))
