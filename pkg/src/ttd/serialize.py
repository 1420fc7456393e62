"""JSON encoding: rationals as {"num", "den"} strings, polynomials lowest degree first."""
from fractions import Fraction

from .exactalg import Poly

SCHEMA = "ttd/1"


def field_tag(K):
    t = K.tag() if hasattr(K, "tag") else {"field": "QQ"}
    if t["field"] == "Fp":
        return "GF(%s)" % t["p"]
    if t["field"] == "Fp2":
        return "GF(%s^2)" % t["p"]
    return t["field"]


def number(a):
    if isinstance(a, Fraction):
        return {"num": str(a.numerator), "den": str(a.denominator)}
    if isinstance(a, int):
        return {"num": str(a), "den": "1"}
    if hasattr(a, "__int__"):  # element of F_p
        return {"num": str(int(a)), "den": "1"}
    return str(a)


def poly(P):
    return [number(c) for c in P.c]


def encode(obj):
    """Recursive conversion of package objects to JSON-ready data."""
    if isinstance(obj, Poly):
        return poly(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)) or hasattr(obj, "__int__"):
        return number(obj)
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return str(obj)


def point(p):
    return {"r": number(p.r), "s": number(p.s), "t": number(p.t), "field": field_tag(p.K)}


def level_structure(L):
    return {
        "point": point(L.point),
        "field": field_tag(L.K),
        "F": poly(L.F),
        "presentations": [
            {"label": T.label, "G": poly(T.G), "H": poly(T.H), "lambda": number(T.lam)}
            for T in L.presentations
        ],
        "deltas": [number(d) for d in L.disc.deltas],
        "Delta": number(L.disc.Delta),
    }


def isogenous_structure(I):
    m = I.matrices
    return {
        "point": point(I.point),
        "field": field_tag(I.point.K),
        "F": poly(I.F),
        "presentations": [
            {"label": i + 1, "G": poly(G), "H": poly(H), "lambda": number(l)}
            for i, (G, H, l) in enumerate(zip(I.G, I.H, I.lam))
        ],
        "A": encode(m.A),
        "Atilde": encode(m.At),
        "Delta": number(m.Delta),
        "disc": number(I.disc),
    }
