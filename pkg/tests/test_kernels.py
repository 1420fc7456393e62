import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ttd import _pykernels, kernels

ck = pytest.importorskip("ttd._ckernels")

primes = st.sampled_from([5, 7, 11, 13, 31, 101, 211])
polys = st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(polys, primes)
def test_count_fp_backends_agree(c, p):
    assert ck.affine_count_fp(c, p) == _pykernels.affine_count_fp(c, p)


@settings(max_examples=30, deadline=None)
@given(polys, st.sampled_from([5, 7, 11, 13, 31]))
def test_count_fp2_backends_agree(c, p):
    n = next(m for m in range(2, p) if pow(m, (p - 1) // 2, p) == p - 1)
    assert ck.affine_count_fp2(c, p, n) == _pykernels.affine_count_fp2(c, p, n)


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.sampled_from([5, 7, 101, 2147483659]))
def test_resultant_backends_agree(a, b, p):
    want = _pykernels.resultant_modp(a, b, p)
    assert kernels.resultant_modp(a, b, p) == want
    if any(x % p for x in a) and any(x % p for x in b):
        aa, bb = _trim(a, p), _trim(b, p)
        assert want == oracles.resultant(aa, bb) % p


def _trim(c, p):
    c = list(c)
    while c and c[-1] % p == 0:
        c.pop()
    return c


def test_counts_match_brute_force():
    c = [68, 192, 768, 688, 312, 72, 12]
    for p in (13, 17, 19):
        n1, n2 = oracles.brute_counts(c, p)
        inf = 1 + oracles.legendre(12, p)
        assert kernels.affine_count_fp(c, p) + inf == n1


def test_backend_selection_env():
    env = dict(os.environ, TTD_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from ttd import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND == ("python" if os.environ.get("TTD_PURE_PYTHON") == "1" else "cython")
