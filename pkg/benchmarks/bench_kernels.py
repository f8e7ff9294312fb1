#!/usr/bin/env python3
"""Time the compiled kernels against the numpy fallback.

Run: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from nfwpt.kernels import _reference

try:
    from nfwpt.kernels import _fastcore
except ImportError:
    _fastcore = None


def timeit(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_superpose(n_points, n_elements, rng):
    points = rng.normal(size=(n_points, 3)) + np.array([0.0, 0.0, 8.0])
    positions = rng.normal(size=(n_elements, 3)) * 0.25
    amps = rng.standard_normal(n_elements) + 1j * rng.standard_normal(
        n_elements)
    normal = np.array([0.0, 0.0, 1.0])
    args = (points, positions, normal, 1, 19.953, 8.976, amps, 0.01)
    t_ref = timeit(_reference.superpose_field, *args)
    t_fast = timeit(_fastcore.superpose_field, *args) if _fastcore else None
    return t_ref, t_fast


def bench_gain(swarm, dim, rng):
    coeffs = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    phases = rng.uniform(0, 2 * np.pi, size=(swarm, dim))
    args = (0.1 + 0.2j, coeffs, phases)
    t_ref = timeit(_reference.coherent_gain, *args)
    t_fast = timeit(_fastcore.coherent_gain, *args) if _fastcore else None
    return t_ref, t_fast


def report(label, t_ref, t_fast):
    if t_fast is None:
        print(f"{label:<42} numpy {t_ref * 1e3:9.2f} ms   compiled: n/a")
    else:
        print(f"{label:<42} numpy {t_ref * 1e3:9.2f} ms   "
              f"compiled {t_fast * 1e3:9.2f} ms   x{t_ref / t_fast:5.1f}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true",
                        help="smaller problem sizes")
    args = parser.parse_args()
    rng = np.random.default_rng(0)
    if _fastcore is None:
        print("compiled core unavailable; timing the numpy fallback only")
    sizes = ([(2000, 676), (5000, 2601)] if args.quick
             else [(10_000, 676), (10_000, 2601), (10_000, 25_351),
                   (100_000, 100)])
    print("field superposition (points x elements)")
    for n_points, n_elements in sizes:
        t_ref, t_fast = bench_superpose(n_points, n_elements, rng)
        report(f"  {n_points} x {n_elements}", t_ref, t_fast)
    print("swarm gain evaluation (particles x dimensions)")
    gain_sizes = ([(50, 2601)] if args.quick
                  else [(50, 2601), (50, 25_351), (50, 63_001)])
    for swarm, dim in gain_sizes:
        t_ref, t_fast = bench_gain(swarm, dim, rng)
        report(f"  {swarm} x {dim}", t_ref, t_fast)


if __name__ == "__main__":
    main()
