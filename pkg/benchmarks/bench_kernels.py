"""Compare the pure-Python and compiled integer-polynomial kernels.

Workload: build Sturm chains for a batch of random integer polynomials,
then count roots in a sweep of rational intervals. This is the hot loop
behind every sign evaluation in the number-field layer.

Run as: python benchmarks/bench_kernels.py [--size N] [--degree D] [--repeat R]
"""

import argparse
import random
import time

from foliation.kernels import get_backend


def make_workload(size, degree, seed=20260817):
    rng = random.Random(seed)
    polys = []
    while len(polys) < size:
        coeffs = [rng.randint(-50, 50) for _ in range(degree + 1)]
        if coeffs[-1] == 0:
            coeffs[-1] = 1
        polys.append(coeffs)
    intervals = []
    for k in range(-20, 20):
        intervals.append((k, 2, k + 7, 3))
    return polys, intervals


def run_workload(kernel, polys, intervals):
    total = 0
    for coeffs in polys:
        chain = kernel.sturm_chain(coeffs)
        for an, ad, bn, bd in intervals:
            total += kernel.count_roots(chain, an, ad, bn, bd)
    return total


def bench(kernel, polys, intervals, repeat):
    best = None
    checksum = None
    for _ in range(repeat):
        start = time.perf_counter()
        checksum = run_workload(kernel, polys, intervals)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return best, checksum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=60, help="polynomial count")
    parser.add_argument("--degree", type=int, default=12, help="polynomial degree")
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats")
    args = parser.parse_args()

    polys, intervals = make_workload(args.size, args.degree)

    pure = get_backend("pure")
    try:
        compiled = get_backend("compiled")
    except (ImportError, ValueError):
        compiled = None

    t_pure, check_pure = bench(pure, polys, intervals, args.repeat)
    print(f"pure      {t_pure * 1000:9.2f} ms   (checksum {check_pure})")

    if compiled is None:
        print("compiled  not built; install with Cython available to compare")
        return

    t_comp, check_comp = bench(compiled, polys, intervals, args.repeat)
    print(f"compiled  {t_comp * 1000:9.2f} ms   (checksum {check_comp})")
    if check_pure != check_comp:
        raise SystemExit("backend mismatch: checksums differ")
    if t_comp > 0:
        print(f"speedup   {t_pure / t_comp:9.2f} x")


if __name__ == "__main__":
    main()
