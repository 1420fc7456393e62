"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from ttd import _pykernels

try:
    from ttd import _ckernels
except ImportError:
    _ckernels = None

F = [68, 192, 768, 688, 312, 72, 12]
CASES = [
    ("affine_count_fp p=10007", "affine_count_fp", (F, 10007)),
    ("affine_count_fp p=100003", "affine_count_fp", (F, 100003)),
    ("affine_count_fp2 p=211", "affine_count_fp2", (F, 211, 2)),
    ("resultant_modp deg 40", "resultant_modp",
     ([(i * 7919) % 1000003 for i in range(41)], [(i * 104729) % 1000003 for i in range(38)], 1000003)),
]


def _time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    print("%-28s %12s %12s %8s" % ("case", "python [s]", "cython [s]", "speedup"))
    for name, fn, args in CASES:
        tp, vp = _time(getattr(_pykernels, fn), args, a.repeat)
        if _ckernels is None:
            print("%-28s %12.4f %12s %8s" % (name, tp, "n/a", "n/a"))
            continue
        tc, vc = _time(getattr(_ckernels, fn), args, a.repeat)
        if vc != vp:
            raise SystemExit("backends disagree on %s: %r vs %r" % (name, vc, vp))
        print("%-28s %12.4f %12.4f %7.1fx" % (name, tp, tc, tp / tc))


if __name__ == "__main__":
    main()
