"""Pure-Python reference implementations of the hot loops.

These are the fallback when the compiled extension is unavailable and the
oracle the compiled versions are tested against.
"""


def _trim(c, p):
    c = [a % p for a in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def _chi_table(p):
    chi = [-1] * p
    chi[0] = 0
    for y in range(1, (p + 1) // 2):
        chi[y * y % p] = 1
    return chi


def affine_count_fp(coeffs, p):
    """Number of affine points of y^2 = F(x) over F_p (coeffs lowest first)."""
    c = [a % p for a in coeffs]
    chi = _chi_table(p)
    total = 0
    for x in range(p):
        acc = 0
        for a in reversed(c):
            acc = (acc * x + a) % p
        total += 1 + chi[acc]
    return total


def affine_count_fp2(coeffs, p, n):
    """Affine points of y^2 = F(x) over F_p(g), g^2 = n a non-residue.

    A nonzero z is a square in F_{p^2} iff its norm is a square in F_p.
    """
    c = [a % p for a in coeffs]
    chi = _chi_table(p)
    total = 0
    for a in range(p):
        for b in range(p):
            u = v = 0
            for co in reversed(c):
                u, v = (u * a + n * v * b + co) % p, (u * b + v * a) % p
            total += 1 + chi[(u * u - n * v * v) % p]
    return total


def resultant_modp(a, b, p):
    """Res(A, B) mod p by the Euclidean remainder sequence."""
    a = _trim(a, p)
    b = _trim(b, p)
    if not a or not b:
        return 0
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if da == 0:
            return res * pow(a[0], db, p) % p
        if db == 0:
            return res * pow(b[0], da, p) % p
        # a mod b
        r = list(a)
        inv = pow(b[-1], -1, p)
        for k in range(da - db, -1, -1):
            f = r[k + db] * inv % p
            if f:
                for j in range(db + 1):
                    r[k + j] = (r[k + j] - f * b[j]) % p
        r = r[:db]
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return 0
        dr = len(r) - 1
        if (da * db) % 2:
            res = -res
        res = res * pow(b[-1], da - dr, p) % p
        a, b = b, r
