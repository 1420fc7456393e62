"""The connecting map on a single point or Mumford divisor."""
from fractions import Fraction

from ..errors import SharedSupport, UnsupportedDivisor
from ..isogeny import MumfordDivisor
from .local import Charts, class_vector, divisor_values, local_images, point_values
from .model import DIRECTIONS, lemma_model


def _convention(D, name):
    for conv in D.conventions():
        if conv.name == name:
            return conv
    raise ValueError("unknown convention %r" % name)


def connecting_image(obj, D, v=None, convention="untwisted"):
    """Image of a point (x, y) on the model of D, or of a Mumford divisor (a, b)
    with a monic of degree <= 2.

    With v = None the pair of global elements is returned; with a prime v, the
    pair of local cube-class vectors at v.
    """
    conv = _convention(D, convention)
    ch = Charts.of(D)
    if isinstance(obj, MumfordDivisor):
        a, b = obj.a, obj.b
        if a.deg == 0:
            vals = [c ** 0 for c in conv.c]
        elif a.deg == 1:
            x = Fraction(-a.coeff(0))
            vals = point_values(ch, conv, 0, x, Fraction(b(x)))
        elif a.deg == 2:
            if a.lc != 1:
                raise UnsupportedDivisor("a must be monic")
            bb = [Fraction(c) for c in b.coeffs(4)]
            vals = divisor_values(ch, conv, (Fraction(a.coeff(0)), Fraction(a.coeff(1))), bb)
        else:
            raise UnsupportedDivisor("degree of a exceeds the genus")
    else:
        x, y = (Fraction(c) for c in obj)
        vals = point_values(ch, conv, 0, x, y)
    if any(not z for z in vals):
        raise SharedSupport("the partial map vanishes here; shift the representative")
    if v is None:
        return tuple(vals)
    return tuple(class_vector(D.target, z, v, 10 ** 9) for z in vals)


def local_image(D, v, seed=0, convention="untwisted"):
    """Local image of D at v, grown together with the other direction until
    the orders reach the local bound."""
    other = lemma_model(D.point, [t for t in DIRECTIONS if t != D.tag][0])
    models = {D.tag: D, other.tag: other}
    convs = {t: _convention(M, convention) for t, M in models.items()}
    return local_images(models, convs, v, seed)[D.tag]
