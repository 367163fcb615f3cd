"""Compare the compiled and pure-Python sampling kernels.

    python benchmarks/bench_kernels.py [--n 100000] [--repeat 5]
"""
import argparse
import time

import numpy as np

from ellrange import _pykernels
from ellrange.core import Matrix2C
from ellrange.numrange import numerical_range
from ellrange.sampling import sample_unit_array

try:
    from ellrange import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    A = Matrix2C(1 + 2j, 3 - 1j, 0.5j, -2)
    s = numerical_range(A)
    z1, z2 = sample_unit_array(args.n, 1)
    pts = _pykernels.rayleigh_batch(*A.entries(), z1, z2)
    order = np.lexsort((pts.imag, pts.real))
    hx = np.ascontiguousarray(pts.real[order])
    hy = np.ascontiguousarray(pts.imag[order])

    cases = {
        "sample_unit_array": lambda k: sample_unit_array(args.n, 1),
        "rayleigh_batch": lambda k: k.rayleigh_batch(*A.entries(), z1, z2),
        "max_focal_excess": lambda k: k.max_focal_excess(pts, s.focus1, s.focus2, s.semi_major),
        "sector_gap": lambda k: k.sector_gap(pts, s.center, s.orientation,
                                             s.semi_major, s.semi_minor, 256),
        "segment_gap": lambda k: k.segment_gap(pts, s.center, s.orientation, s.semi_major, 256),
        "hull_chain": lambda k: k.hull_chain(hx, hy),
    }
    print(f"n = {args.n}, best of {args.repeat}")
    print(f"{'kernel':<20}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for name, fn in cases.items():
        tp = timed(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<20}{tp * 1e3:>14.2f}{'n/a':>14}{'':>10}")
            continue
        tc = timed(lambda: fn(_ckernels), args.repeat)
        print(f"{name:<20}{tp * 1e3:>14.2f}{tc * 1e3:>14.2f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
