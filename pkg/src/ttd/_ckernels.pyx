# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ttd._pykernels (same signatures)."""

from libc.stdlib cimport malloc, free


cdef signed char* _chi_table(long long p):
    cdef signed char* chi = <signed char*> malloc(p * sizeof(signed char))
    cdef long long y
    for y in range(p):
        chi[y] = -1
    chi[0] = 0
    for y in range(1, (p + 1) // 2):
        chi[y * y % p] = 1
    return chi


def affine_count_fp(coeffs, long long p):
    cdef int d = len(coeffs)
    cdef long long c[16]
    cdef long long x, acc, total = 0
    cdef int k
    if d > 16:
        raise ValueError("degree too large for the compiled kernel")
    for k in range(d):
        c[k] = coeffs[k] % p
    cdef signed char* chi = _chi_table(p)
    try:
        for x in range(p):
            acc = 0
            for k in range(d - 1, -1, -1):
                acc = (acc * x + c[k]) % p
            total += 1 + chi[acc]
    finally:
        free(chi)
    return total


def affine_count_fp2(coeffs, long long p, long long n):
    cdef int d = len(coeffs)
    cdef long long c[16]
    cdef long long a, b, u, v, u2, total = 0, nm
    cdef int k
    if d > 16:
        raise ValueError("degree too large for the compiled kernel")
    for k in range(d):
        c[k] = coeffs[k] % p
    cdef signed char* chi = _chi_table(p)
    try:
        for a in range(p):
            for b in range(p):
                u = 0
                v = 0
                for k in range(d - 1, -1, -1):
                    u2 = (u * a + (n * v % p) * b + c[k]) % p
                    v = (u * b + v * a) % p
                    u = u2
                nm = (u * u - (n * v % p) * v) % p
                if nm < 0:
                    nm += p
                total += 1 + chi[nm]
    finally:
        free(chi)
    return total


cdef long long _powmod(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    if b < 0:
        b += p
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def resultant_modp(a_in, b_in, long long p):
    cdef long long a[64]
    cdef long long b[64]
    cdef long long r[64]
    cdef int da, db, dr, k, j
    cdef long long res = 1, inv, f
    da = len(a_in) - 1
    db = len(b_in) - 1
    if da >= 64 or db >= 64:
        raise ValueError("degree too large for the compiled kernel")
    for k in range(da + 1):
        a[k] = a_in[k] % p
    for k in range(db + 1):
        b[k] = b_in[k] % p
    while da >= 0 and a[da] == 0:
        da -= 1
    while db >= 0 and b[db] == 0:
        db -= 1
    if da < 0 or db < 0:
        return 0
    while True:
        if da == 0:
            return res * _powmod(a[0], db, p) % p
        if db == 0:
            return res * _powmod(b[0], da, p) % p
        for k in range(da + 1):
            r[k] = a[k]
        inv = _powmod(b[db], p - 2, p)
        for k in range(da - db, -1, -1):
            f = r[k + db] * inv % p
            if f:
                for j in range(db + 1):
                    r[k + j] = (r[k + j] - f * b[j]) % p
                    if r[k + j] < 0:
                        r[k + j] += p
        dr = db - 1 if db - 1 < da else da
        while dr >= 0 and r[dr] == 0:
            dr -= 1
        if dr < 0:
            return 0
        if (da * db) % 2:
            res = (p - res) % p
        res = res * _powmod(b[db], da - dr, p) % p
        for k in range(db + 1):
            a[k] = b[k]
        for k in range(dr + 1):
            b[k] = r[k]
        da = db
        db = dr
