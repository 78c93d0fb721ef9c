"""Timing comparison of the compiled and plain-numpy kernel paths.

Usage:
    python3 benchmarks/bench_kernels.py [--size 200000] [--repeats 7]

Times three elementwise workloads (oscillator eigenfunctions, the Airy
function with its error envelope, and the turning-point map inversion)
through both backends and prints a speedup table.  Needs numba installed;
run with OSCTUN_DISABLE_NUMBA unset.
"""

import argparse
import time

import numpy as np

from osctun import _kernels


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=200000,
                        help="array length per call (default 200000)")
    parser.add_argument("--repeats", type=int, default=7,
                        help="timed repetitions, best is kept (default 7)")
    args = parser.parse_args()

    if _kernels.hermite_values_numba is None:
        parser.exit(1, "compiled backend unavailable (numba missing or "
                       "OSCTUN_DISABLE_NUMBA set)\n")

    rng = np.random.default_rng(7)
    x = rng.uniform(-12.0, 12.0, args.size)
    t = rng.uniform(-1.0, 50.0, args.size)
    zeta = rng.uniform(0.0, 30.0, args.size)

    cases = [
        ("hermite n=120", _kernels.hermite_values_numba,
         _kernels.hermite_values_numpy, (120, x)),
        ("airy [-1,50]", _kernels.airy_values_numba,
         _kernels.airy_values_numpy, (t,)),
        ("zeta inverse", _kernels.invert_zeta_values_numba,
         _kernels.invert_zeta_values_numpy, (zeta,)),
    ]

    # Warm both paths so compilation stays out of the timings.
    for _, jit_fn, np_fn, call_args in cases:
        jit_fn(*call_args)
        np_fn(*call_args)

    print("size = %d, best of %d runs" % (args.size, args.repeats))
    print("%-16s %12s %12s %9s" % ("kernel", "numba [ms]", "numpy [ms]",
                                   "speedup"))
    for name, jit_fn, np_fn, call_args in cases:
        t_jit = best_of(args.repeats, jit_fn, *call_args)
        t_np = best_of(args.repeats, np_fn, *call_args)
        print("%-16s %12.3f %12.3f %8.1fx"
              % (name, 1e3 * t_jit, 1e3 * t_np, t_np / t_jit))


if __name__ == "__main__":
    main()
