"""Weil pairing between presented 3-torsion classes, and the isotropy criterion.

For presentations (G_1, H_1, l_1), (G_2, H_2, l_2) of one sextic, with H_i monic,

    e_3(T_1, T_2) = (l_2/l_1) * Res(G_2 - G_1, H_2) / Res(G_1 - G_2, H_1).

Non-monic H are normalised first (H -> H/lc, l -> l*lc^3).  The pairing is
trivial exactly when no factor H_1 - a_i H_2 (a_i^3 = l_2/l_1) divides
G_2 - G_1; this is decided in k[a] = k[t]/(t^3 - l_2/l_1).
"""
from dataclasses import dataclass

from .errors import DegenerateAlgebra, SameClass, SharedSupport
from .exactalg import CubicRadicalAlgebra, Poly, gcd, resultant
from .family import TorsionPresentation


@dataclass(frozen=True)
class PairingValue:
    value: object
    tag: str  # "one", "primitive" or "invalid"


def _monic(T):
    lc = T.H.lc
    return T.G, T.H / lc, T.lam * lc ** 3


def classify(v):
    if v == 1:
        return "one"
    if v ** 3 == 1:
        return "primitive"
    return "invalid"


def weil_pairing(T1, T2, F=None):
    G1, H1, l1 = _monic(T1)
    G2, H2, l2 = _monic(T2)
    if F is not None and (G1 * G1 + H1 ** 3 * l1 != F or G2 * G2 + H2 ** 3 * l2 != F):
        raise ValueError("presentation does not match F")
    if H1 == H2:
        raise SameClass("T and T' have the same support; e3(T, T) = 1 by alternation")
    num = resultant(G2 - G1, H2)
    den = resultant(G1 - G2, H1)
    if num == 0 or den == 0:
        raise SharedSupport("the divisors of T_1 and T_2 share support")
    v = (l2 / l1) * num / den
    return PairingValue(v, classify(v))


def _pseudo_remainder(D, Q, A):
    """lc(Q)^k D mod Q over the algebra A, without inverting lc(Q)."""
    rem = list(D.c)
    lq = Q.lc
    dq = Q.deg
    for k in range(len(rem) - 1 - dq, -1, -1):
        top = rem[k + dq]
        rem = [a * lq for a in rem]
        for j, b in enumerate(Q.c):
            rem[k + j] = rem[k + j] - top * b
    return rem[:dq]


def divides_component(T1, T2):
    """Does some H_1 - a_i H_2 divide G_2 - G_1?  Returns (answer, info)."""
    G1, H1, l1 = _monic(T1)
    G2, H2, l2 = _monic(T2)
    K = H1.K
    c = l2 / l1
    if c == 0:
        raise DegenerateAlgebra("lambda_2/lambda_1 = 0")
    A = CubicRadicalAlgebra(c, K)
    a = A.alpha
    D = Poly([A(x) for x in (G2 - G1).c], A)
    Q = Poly([A(h1) - a * A(h2) for h1, h2 in zip(H1.coeffs(3), H2.coeffs(3))], A)
    rem = _pseudo_remainder(D, Q, A)
    # components of k[a] = prod k(a_i) correspond to factors of t^3 - c
    modulus = Poly([-c, 0, 0, 1], K)
    g = modulus
    for r in rem:
        g = gcd(g, r.as_poly())
    lead_bad = gcd(g, Q.lc.as_poly()) if g.deg > 0 else g
    hit = g.deg - lead_bad.deg
    return hit > 0, {"divisible_components": hit, "degenerate_components": lead_bad.deg}


def isotropy_certificate(L):
    """Divisibility criterion and resultant formula for every pair of presentations.

    Pairs whose divisors share support (r = 0) get value None and are decided by
    the divisibility criterion alone.
    """
    rows = []
    ok = True
    for i in range(4):
        for j in range(i + 1, 4):
            Ti, Tj = L.presentations[i], L.presentations[j]
            divisible, info = divides_component(Ti, Tj)
            crit = not divisible
            try:
                e = weil_pairing(Ti, Tj, L.F)
                value, tag = e.value, e.tag
                agree = crit == (tag == "one")
            except SharedSupport:
                # happens on r = 0; only the divisibility criterion applies
                value, tag, agree = None, "shared_support", True
            ok = ok and crit and agree
            rows.append({
                "pair": [i + 1, j + 1],
                "value": value,
                "tag": tag,
                "criterion_pass": crit,
                "methods_agree": agree,
                "info": info,
            })
    return {"pass": ok, "pairs": rows}


def synthetic_nonisotropic(K, rng):
    """Presentations over F_p (p = 1 mod 3) with G_2 - G_1 = L_1 (H_1 - a_1 H_2).

    Returns (T1, T2, F, zeta) where e_3(T1, T2) should be a_1/a_2, a primitive
    cube root of unity.
    """
    from .exactalg import discriminant
    p = K.p
    if p % 3 != 1:
        raise ValueError("need p = 1 mod 3 for a rational cube root of unity")
    g = 2
    while pow(g, (p - 1) // 3, p) == 1:
        g += 1
    zeta = K(pow(g, (p - 1) // 3, p))
    x = Poly.x(K)
    while True:
        a1 = K.random(rng)
        lam1 = K.random(rng)
        rho = K.random(rng)
        if a1 == 0 or a1 == 1 or lam1 == 0:
            continue
        a2 = a1 * zeta
        a3 = a1 * zeta * zeta
        H2 = Poly([K.random(rng), K.random(rng), 1], K)
        a = K.random(rng)
        # choose b so that H_1 - a_2 H_2 vanishes at rho
        b = a2 * H2(rho) - rho * rho - a * rho
        H1 = Poly([b, a, 1], K)
        Q1, Q2, Q3 = (H1 - H2 * a1, H1 - H2 * a2, H1 - H2 * a3)
        L1 = x - rho
        q2, rem = Q2.divmod(L1)
        if rem or Q1.deg != 2:
            continue
        diff = L1 * Q1
        summ = q2 * Q3 * lam1
        G1 = (summ - diff) / 2
        G2 = (summ + diff) / 2
        F = G1 * G1 + H1 ** 3 * lam1
        lam2 = lam1 * a1 ** 3
        if F.deg < 5 or discriminant(F) == 0 or G2 * G2 + H2 ** 3 * lam2 != F:
            continue
        return (TorsionPresentation(G1, H1, lam1, 1), TorsionPresentation(G2, H2, lam2, 2), F, a1 / a2)
