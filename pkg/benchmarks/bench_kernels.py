"""Compare the compiled and numpy recurrence kernels.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]
"""
import argparse
import timeit

import numpy as np

from zernbases import kernels

CASES = [
    ("jacobi n=10 a=3", lambda m, x: m.jacobi(10, 3, 0, x)),
    ("jacobi n=40 a=0", lambda m, x: m.jacobi(40, 0, 0, x)),
    ("gegenbauer n=12 lam=5", lambda m, x: m.gegenbauer(12, 5, x)),
    ("legendre n=30", lambda m, x: m.legendre(30, x)),
    ("chebyshev_u n=30", lambda m, x: m.chebyshev_u(30, x)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, nargs="+", default=[64, 4096, 262144])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':<24}{'points':>9}" + "".join(f"{b + ' [us]':>16}" for b in backends) + f"{'speedup':>10}")
    for npts in args.points:
        x = np.linspace(-1, 1, npts)
        for name, fn in CASES:
            times = {}
            for b in backends:
                mod = kernels.get_module(b)
                t = timeit.Timer(lambda: fn(mod, x))
                loops, _ = t.autorange()
                times[b] = min(t.repeat(args.repeat, loops)) / loops * 1e6
            line = f"{name:<24}{npts:>9}" + "".join(f"{times[b]:>16.1f}" for b in backends)
            if "cython" in times:
                line += f"{times['python'] / times['cython']:>9.2f}x"
            print(line)


if __name__ == "__main__":
    main()
