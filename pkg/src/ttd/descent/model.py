"""Curve models of the shape y^2 = -3d (G^2 + lambda H^3) and the partial map
(x, y) -> c (y - s G_i(x)) that induces the connecting homomorphism.

Two directions:
  sigma       kernel Z/3 x Z/3, classes in the norm kernel of K^x/K^x3.
              Points live on C~ (d = 1).
  sigma_dual  kernel mu_3 x mu_3, classes in Q^x/Q^x3.
              Points live on C_rst, rescaled y -> 3y to get d = -3.

The constant s is sqrt(d) for the literal reading of the map and sqrt(-3d) for
the untwisted one.  With the untwisted s, (y - sG)(y + sG) = -3d lambda H^3, and
c = -3d lambda is the normalisation that makes the norm of c (y - sG) a cube.
"""
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvariantViolation
from ..family import ModuliPoint, build_level_structure
from ..isogeny import build_isogenous
from ..numberfields import SQRT_M3, KNumber

DIRECTIONS = ("sigma", "sigma_dual")


@dataclass(frozen=True)
class Convention:
    name: str
    s: KNumber      # y - s G_i(x)
    c: tuple        # c_i per presentation

    def describe(self):
        return "%s: (x, y) -> c_i (y - (%s) G_i(x)), c_i = %s" % (
            self.name, self.s, ", ".join(str(c) for c in self.c))


@dataclass(frozen=True)
class DescentDirection:
    tag: str
    d: int
    curve: str          # "C" (C_rst) or "Ctilde"
    target: str         # "Q" or "K"
    point: ModuliPoint
    F: object           # Poly: y^2 = F = -3d (G_i^2 + lam_i H_i^3)
    G: tuple
    H: tuple
    lam: tuple
    y_scale: Fraction   # y_model = y_scale * y_original

    def sqrt_d(self):
        return SQRT_M3 if self.d == -3 else KNumber.of(1)

    def sqrt_minus3d(self):
        return KNumber.of(3) if self.d == -3 else SQRT_M3

    def conventions(self):
        c = tuple(KNumber.of(-3 * self.d * l) for l in self.lam)
        return [Convention("literal", self.sqrt_d(), c),
                Convention("untwisted", self.sqrt_minus3d(), c)]

    def check(self):
        for G, H, l in zip(self.G, self.H, self.lam):
            if (G * G + H ** 3 * l) * (-3 * self.d) != self.F:
                raise InvariantViolation("model identity fails for %s" % self.tag)
        return True


def _as_level(obj):
    if isinstance(obj, ModuliPoint):
        return build_level_structure(obj)
    if hasattr(obj, "presentations"):
        return obj
    raise TypeError("expected a ModuliPoint or a LevelStructure")


def lemma_model(obj, direction):
    """The model in the exact shape of the connecting-map lemma.

    ``obj`` is a ModuliPoint, a LevelStructure, or (for sigma) an IsogenousStructure.
    """
    if direction not in DIRECTIONS:
        raise ValueError("direction must be 'sigma' or 'sigma_dual'")
    if direction == "sigma":
        I = obj if hasattr(obj, "matrices") else build_isogenous(_as_level(obj))
        D = DescentDirection("sigma", 1, "Ctilde", "K", I.point, I.F, I.G[:2], I.H[:2], I.lam[:2],
                             Fraction(1))
    else:
        L = _as_level(obj)
        T1, T2 = L.presentations[0], L.presentations[1]
        D = DescentDirection("sigma_dual", -3, "C", "Q", L.point, L.F * 9, (T1.G, T2.G), (T1.H, T2.H),
                             (T1.lam, T2.lam), Fraction(3))
    D.check()
    return D
