"""Selmer groups of the two (3,3)-isogenies by local conditions at S.

Global classes are pairs of S-unit classes: in Q^x/Q^x3 (sigma_dual) or in the
norm kernel of K^x/K^x3 (sigma).  Since 2 is invertible mod 3, K^x/K^x3 splits
into conjugation eigenspaces; the norm kernel is the -1 part, which is
H^1(Q, Z/3), and it meets the image of Q^x trivially.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import factorint

from ..errors import InvariantViolation
from ..family import ModuliPoint, degeneracy
from ..numberfields import KNumber, in_span, norm_kernel_subspace, nullspace3, sunit_cube_basis
from .local import class_dim, class_vector, local_images
from .model import DIRECTIONS, lemma_model
from .selftest import certify_convention

OTHER = {"sigma": "sigma_dual", "sigma_dual": "sigma"}


def bad_primes(p):
    """S: 2, 3 and the primes dividing a numerator or denominator of some delta_i."""
    S = {2, 3}
    for d in degeneracy(p).deltas + (p.r, p.s, p.t):
        d = Fraction(d)
        if d == 0:
            continue
        for n in (d.numerator, d.denominator):
            S |= {int(q) for q in factorint(abs(n))}
    S.discard(1)
    return tuple(sorted(S))


@dataclass
class SelmerResult:
    direction: str
    S: tuple
    ambient_labels: tuple       # labels of the global basis of one factor
    ambient_dim: int            # dimension of the pair space
    dimension: int
    generators: list            # F_3 vectors in the pair space
    generator_elements: list    # (element_1, element_2) as strings
    local_images: dict          # place -> LocalImage
    conditions: dict            # place -> list of rows
    convention_certificate: dict = field(default_factory=dict)
    verified: bool = False

    def as_json(self):
        return {
            "direction": self.direction,
            "S": list(self.S),
            "ambient_basis": list(self.ambient_labels),
            "ambient_dimension": self.ambient_dim,
            "dimension": self.dimension,
            "generators": [{"vector": list(v), "elements": list(e)}
                           for v, e in zip(self.generators, self.generator_elements)],
            "local_images": {str(p): img.as_json() for p, img in self.local_images.items()},
            "local_conditions": {str(p): rows for p, rows in self.conditions.items()},
            "convention_certificate": self.convention_certificate,
            "verified": self.verified,
        }


@dataclass
class GlobalSpace:
    """One factor of the ambient group: elements and their exponent vectors."""
    field: str
    labels: tuple
    elements: list

    @property
    def dim(self):
        return len(self.elements)


def global_space(target, S):
    if target == "Q":
        B = sunit_cube_basis("Q", S)
        return GlobalSpace("Q", B.labels, list(B.gens))
    B = sunit_cube_basis("K", S)
    ker = norm_kernel_subspace(B)
    labels = tuple("*".join("(%s)^%d" % (l, e) for l, e in zip(B.labels, v) if e) for v in ker)
    return GlobalSpace("K", labels, [B.element(v) for v in ker])


def _value_of(space, z):
    return z if space.field == "K" else KNumber.of(z)


def _restrictions(space, target, p):
    """Matrix (rows = local coordinates) of restriction of one factor at p."""
    cols = [class_vector(target, _value_of(space, z), p, 10 ** 9) for z in space.elements]
    n = class_dim(target, p)
    return [[c[k] for c in cols] for k in range(n)]


def local_conditions(image, R):
    """Rows on the pair space cutting out restrictions landing in the image."""
    n = len(R)
    m = len(R[0]) if R else 0
    ann = nullspace3(image.basis, 2 * n) if image.basis else [
        [int(i == j) for i in range(2 * n)] for j in range(2 * n)]
    rows = []
    for a in ann:
        row = []
        for f in range(2):
            for j in range(m):
                row.append(sum(a[f * n + k] * R[k][j] for k in range(n)) % 3)
        rows.append(row)
    return rows


def _workers():
    try:
        return max(1, int(os.environ.get("TTD_THREADS", "1")))
    except ValueError:
        return 1


def _local_task(args):
    models, convs, p, seed = args
    return p, local_images(models, convs, p, seed)


def descent_data(p, S=None, seed=0, certify_trials=20):
    """Models, certified conventions and local images of both directions."""
    if not isinstance(p, ModuliPoint):
        raise TypeError("expected a ModuliPoint")
    S = tuple(sorted(set(S))) if S else bad_primes(p)
    models = {tag: lemma_model(p, tag) for tag in DIRECTIONS}
    convs, certs = {}, {}
    for tag, D in models.items():
        conv, cert = certify_convention(D, S, seed, certify_trials)
        if conv is None:
            raise InvariantViolation("no normalisation of the connecting map passes the self-tests (%s)" % tag)
        convs[tag], certs[tag] = conv, cert
    jobs = [(models, convs, q, seed) for q in S]
    if _workers() > 1 and len(S) > 1:
        with ProcessPoolExecutor(max_workers=min(_workers(), len(S))) as ex:
            images = dict(ex.map(_local_task, jobs))
    else:
        images = dict(map(_local_task, jobs))
    return {"S": S, "models": models, "conventions": convs, "certificates": certs, "images": images}


def assemble(direction, data):
    S = data["S"]
    D = data["models"][direction]
    space = global_space(D.target, S)
    m = space.dim
    rows, conds, imgs = [], {}, {}
    for q in S:
        img = data["images"][q][direction]
        R = _restrictions(space, D.target, q)
        c = local_conditions(img, R)
        conds[q] = c
        imgs[q] = img
        rows += c
    sel = nullspace3(rows, 2 * m)
    elems = []
    for v in sel:
        pair = []
        for f in range(2):
            acc = None
            for g, e in zip(space.elements, v[f * m:(f + 1) * m]):
                for _ in range(e):
                    acc = g if acc is None else acc * g
            pair.append("1" if acc is None else str(acc))
        elems.append(tuple(pair))
    res = SelmerResult(direction, S, space.labels, 2 * m, len(sel), sel, elems, imgs, conds,
                       data["certificates"][direction])
    res.verified = verify_generators(res, space, D.target)
    if not res.verified:
        raise InvariantViolation("a Selmer generator fails a local condition")
    return res


def verify_generators(res, space, target):
    """Recompute each generator's local classes from the actual elements."""
    m = space.dim
    for v in res.generators:
        for q, img in res.local_images.items():
            loc = ()
            for f in range(2):
                acc = _value_of(space, Fraction(1))
                for g, e in zip(space.elements, v[f * m:(f + 1) * m]):
                    for _ in range(e):
                        acc = acc * _value_of(space, g)
                loc += class_vector(target, acc, q, 10 ** 9)
            if img.basis and not in_span(loc, img.basis):
                return False
            if not img.basis and any(loc):
                return False
    return True


def selmer_group(p, direction, S=None, seed=0, data=None):
    if direction not in DIRECTIONS:
        raise ValueError("direction must be 'sigma' or 'sigma_dual'")
    data = data or descent_data(p, S, seed)
    return assemble(direction, data)


def monotonicity_check(p, seed=0, data=None):
    """Adding one good prime to S leaves both Selmer dimensions unchanged."""
    data = data or descent_data(p, seed=seed)
    S = data["S"]
    q = 5
    while q in S or any(q % r == 0 for r in range(2, int(q ** 0.5) + 1)):
        q += 1
    bigger = descent_data(p, S + (q,), seed)
    out = {"extra_prime": q, "pass": True, "directions": {}}
    for tag in DIRECTIONS:
        a = assemble(tag, data)
        b = assemble(tag, bigger)
        ok = b.dimension == a.dimension and b.ambient_dim >= a.ambient_dim
        out["directions"][tag] = {"dimension": [a.dimension, b.dimension],
                                  "ambient": [a.ambient_dim, b.ambient_dim], "pass": ok}
        out["pass"] = out["pass"] and ok
    return out
