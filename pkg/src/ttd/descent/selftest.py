"""Runtime certification of the partial map's normalisation.

Both tests use a principal divisor div(y - b(x)) for a cubic b with rational
coefficients, whose image must be trivial.  Local divisors are rational points or
conjugate pairs over Q_p(sqrt e).
  homomorphism    b passes through four points (two divisors of degree 2, or
                  rational points); the residual pair Q is cut out by b, so
                  the images of the chosen divisors and of Q sum to 0.
  well-defined    b has a triple contact at a rational point P and passes
                  through P', so the images of P' and Q cancel (3P maps to 0).
                  Without rational points: double contact along a pair D,
                  giving 2 img(D) + img(Q) = 0.
"""
import random
from fractions import Fraction

from .local import (PREC, Charts, _coeffs, _ev, _lev, _lmul, _Skip, class_vector, divisor_values,
                    point_values, quad_values, sample_points, sample_quadratic)


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pdiv(a, b):
    """Quotient of a by b (remainder dropped; it is p-adically negligible here)."""
    a = list(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        q[k] = a[k + len(b) - 1] / b[-1]
        for j, y in enumerate(b):
            a[k + j] -= q[k] * y
    return q


def _linv(a, e):
    n = a[0] * a[0] - e * a[1] * a[1]
    return (a[0] / n, -a[1] / n)


def _solve(rows, rhs):
    """Solve a square rational system; None if singular."""
    n = len(rows)
    M = [list(r) + [v] for r, v in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


class _Div:
    """A rational point (e = None) or a conjugate pair over Q_p(sqrt e), chart 0."""

    def __init__(self, e, alpha, beta):
        self.e, self.alpha, self.beta = e, alpha, beta

    @property
    def degree(self):
        return 1 if self.e is None else 2

    def minpoly(self):
        if self.e is None:
            return [-self.alpha[0], Fraction(1)]
        a0, a1 = self.alpha
        return [a0 * a0 - self.e * a1 * a1, -2 * a0, Fraction(1)]

    def conditions(self, F):
        """Linear equations on (b0..b3) for b(alpha) = beta, and for b'(alpha) = beta'."""
        e = self.e if self.e is not None else 0
        pw = [(Fraction(1), Fraction(0))]
        for _ in range(3):
            pw.append(_lmul(pw[-1], self.alpha, e))
        val_rows = [[w[0] for w in pw], [w[1] for w in pw]]
        dF = [k * F[k] for k in range(1, 7)]
        dbeta = _lmul(_lev(dF, self.alpha, e), _linv((2 * self.beta[0], 2 * self.beta[1]), e), e)
        der_rows = [[Fraction(0)] + [k * w[0] for k, w in zip((1, 2, 3), pw)],
                    [Fraction(0)] + [k * w[1] for k, w in zip((1, 2, 3), pw)]]
        k = self.degree
        return (val_rows[:k], list(self.beta[:k]), der_rows[:k], [dbeta[0], dbeta[1]][:k])

    def values(self, ch, conv):
        if self.e is None:
            return point_values(ch, conv, 0, self.alpha[0], self.beta[0])
        return quad_values(ch, conv, 0, self.e, self.alpha, self.beta)


def _pool(ch, p, rng):
    pts, pairs = {}, []
    for m, X, Y in sample_points(ch, p, rng, 200):
        if m == 1:  # back to chart 0: x = 1/X, y = Y/X^3
            if X == 0:
                continue
            X, Y = 1 / X, Y / X ** 3
        pts.setdefault(X, _Div(None, (X, Fraction(0)), (Y, Fraction(0))))
    for m, e, al, be in sample_quadratic(ch, p, rng, 20):
        if m == 1:
            inv = _linv(al, e)
            cube = _lmul(_lmul(inv, inv, e), inv, e)
            al, be = inv, _lmul(be, cube, e)
        pairs.append(_Div(e, al, be))
    return list(pts.values()), pairs


def _residual(F, b, factors):
    q = [u - v for u, v in zip(_pmul(b, b), F)]
    while q and q[-1] == 0:
        q.pop()
    if len(q) != 7:
        return None
    div = [Fraction(1)]
    for f in factors:
        div = _pmul(div, f)
    a = _pdiv(q, div)
    return (a[0] / a[2], a[1] / a[2])


def _sum_trivial(D, vecs_by_i, p):
    for values in vecs_by_i:
        total = None
        for mult, z in values:
            v = class_vector(D.target, z, p, PREC // 2)
            total = [0] * len(v) if total is None else total
            total = [(a + mult * b) % 3 for a, b in zip(total, v)]
        if any(total):
            return False
    return True


def _trial(D, ch, conv, p, F, parts, tangent):
    """parts: list of (divisor, multiplicity, use_derivative)."""
    rows, rhs, factors = [], [], []
    for dv, mult, deriv in parts:
        vr, vb, dr, db = dv.conditions(F)
        rows += vr
        rhs += vb
        factors.append(dv.minpoly())
        if deriv:
            rows += dr
            rhs += db
            factors.append(dv.minpoly())
    if tangent is not None:  # third-order contact at a rational point
        dv = tangent
        X, Y = dv.alpha[0], dv.beta[0]
        dF = [k * F[k] for k in range(1, 7)]
        d2F = [k * a for k, a in enumerate(dF)][1:]
        y1 = _ev(dF, X) / (2 * Y)
        y2 = (_ev(d2F, X) / 2 - y1 * y1) / (2 * Y)
        rows.append([Fraction(0), Fraction(0), Fraction(2), 6 * X])
        rhs.append(2 * y2)
        factors.append(dv.minpoly())
    if len(rows) != 4:
        raise ValueError("need four conditions")
    b = _solve(rows, rhs)
    if b is None:
        return None
    a = _residual(F, b, factors)
    if a is None:
        return None
    per_i = [[], []]
    for dv, mult, deriv in parts:
        m = mult * (2 if deriv else 1) + (1 if tangent is dv else 0)
        for i, z in enumerate(dv.values(ch, conv)):
            per_i[i].append((m, z))
    for i, z in enumerate(divisor_values(ch, conv, a, b)):
        per_i[i].append((1, z))
    return _sum_trivial(D, per_i, p)


def _run(D, conv, p, trials, seed, kind):
    ch = Charts.of(D)
    rng = random.Random("%s:%s:%d:%s" % (kind, seed, p, D.tag))
    pts, pairs = _pool(ch, p, rng)
    F = _coeffs(D.F, 7)
    passed = failed = skipped = 0
    attempts = 0
    while passed + failed < trials and attempts < 10 * trials:
        attempts += 1
        if kind == "hom":
            if len(pts) >= 4 and (not pairs or rng.random() < 0.5):
                parts, tangent = [(d, 1, False) for d in rng.sample(pts, 4)], None
            elif len(pairs) >= 2:
                parts, tangent = [(d, 1, False) for d in rng.sample(pairs, 2)], None
            else:
                break
        else:
            if len(pts) >= 2:
                P, P2 = rng.sample(pts, 2)
                parts, tangent = [(P, 1, True), (P2, 1, False)], P
            elif pairs:
                parts, tangent = [(rng.choice(pairs), 1, True)], None
            else:
                break
        try:
            ok = _trial(D, ch, conv, p, F, parts, tangent)
        except _Skip:
            ok = None
        except (ValueError, ZeroDivisionError):  # value left the target field
            ok = False
        if ok is None:
            skipped += 1
            continue
        passed += ok
        failed += not ok
    return passed, failed, skipped


def homomorphism_trials(D, conv, p, trials=20, seed=0):
    """(passed, failed, skipped)."""
    return _run(D, conv, p, trials, seed, "hom")


def tangency_trials(D, conv, p, trials=10, seed=0):
    return _run(D, conv, p, trials, seed, "tan")


def certify_convention(D, places, seed=0, trials=20):
    """Pick the first convention passing both tests at every place.

    Returns (convention or None, certificate dict).
    """
    cert = {"direction": D.tag, "d": D.d, "tried": []}
    for conv in D.conventions():
        rows = {}
        ok = True
        for p in places:
            h = homomorphism_trials(D, conv, p, trials, seed)
            t = tangency_trials(D, conv, p, max(trials // 2, 5), seed)
            good = h[1] == 0 and t[1] == 0 and h[0] > 0 and t[0] > 0
            rows[str(p)] = {"homomorphism": dict(zip(("passed", "failed", "skipped"), h)),
                            "well_defined": dict(zip(("passed", "failed", "skipped"), t)),
                            "pass": good}
            ok = ok and good
            if not ok:
                break
        cert["tried"].append({"convention": conv.name, "map": conv.describe(), "places": rows, "pass": ok})
        if ok:
            cert["selected"] = conv.name
            return conv, cert
    cert["selected"] = None
    return None, cert
