"""Compare the compiled and pure-Python Sturm bisection kernels.

    python benchmarks/bench_sturm.py [--points 1000 4000 16000] [--count 4] [--repeat 3]
"""

import argparse
import time

import numpy as np

from kgoscillator import _sturm_py
from kgoscillator.solver import GridSpec, radial_matrix
from kgoscillator.sturm import lowest_eigenvalues

try:
    from kgoscillator import _sturm as _compiled
except ImportError:
    _compiled = None


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, nargs="+", default=[1000, 4000, 16000])
    parser.add_argument("--count", type=int, default=4)
    parser.add_argument("--l", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _sturm_py)]
    if _compiled is not None:
        backends.append(("cython", _compiled))
    else:
        print("compiled kernel not built; timing the fallback only")

    print(f"{'points':>8} {'backend':>8} {'seconds':>10} {'speedup':>8}  lowest eigenvalue")
    for points in args.points:
        diag, off = radial_matrix(1.0, args.l, GridSpec(np.sqrt(80.0), points))
        baseline = None
        for name, impl in backends:
            seconds, eigs = best_time(lambda: lowest_eigenvalues(diag, off, args.count, impl=impl), args.repeat)
            baseline = baseline or seconds
            print(f"{points:>8} {name:>8} {seconds:>10.4f} {baseline / seconds:>7.1f}x  {eigs[0]:.12f}")


if __name__ == "__main__":
    main()
