"""Hot-loop kernels: the compiled extension when built, else the Python fallback.

Set TTD_PURE_PYTHON=1 to force the fallback.  ``BACKEND`` names the active one.
"""
import os

from . import _pykernels

# 64-bit products of residues stay exact below this modulus
_C_MAX_P = 3037000499
_C_MAX_COUNT = 1 << 31

_c = None
if os.environ.get("TTD_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"


def affine_count_fp(coeffs, p):
    if _c is not None and p < _C_MAX_COUNT:
        return _c.affine_count_fp(list(coeffs), p)
    return _pykernels.affine_count_fp(coeffs, p)


def affine_count_fp2(coeffs, p, n):
    if _c is not None and p < _C_MAX_COUNT:
        return _c.affine_count_fp2(list(coeffs), p, n)
    return _pykernels.affine_count_fp2(coeffs, p, n)


def resultant_modp(a, b, p):
    if _c is not None and p < _C_MAX_P and len(a) <= 64 and len(b) <= 64:
        return _c.resultant_modp([x % p for x in a], [x % p for x in b], p)
    return _pykernels.resultant_modp(a, b, p)
