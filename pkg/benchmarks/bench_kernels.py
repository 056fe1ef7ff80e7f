"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--lengths 12 14 16 18] [--repeat 3]

For each length n the workload counts suitable pairs for every balanced-ish
sign sequence in a fixed sample, which is the hot loop of the e=infinity
constituent computation and of the exhaustive shape check.
"""
import argparse
import random
import time

from spechtb import _kernels_py

try:
    from spechtb import _kernels as compiled
except ImportError:  # extension not built
    compiled = None


def workload(n, samples, seed=0):
    rng = random.Random(seed)
    return [rng.getrandbits(n) for _ in range(samples)]


def best_time(fn, masks, n, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        total = sum(fn(m, n) for m in masks)
        best = min(best, time.perf_counter() - start)
    return best, total


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lengths", type=int, nargs="+", default=[12, 14, 16, 18])
    ap.add_argument("--samples", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    print(f"{'n':>3} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.lengths:
        masks = workload(n, args.samples, seed=n)
        slow, expected = best_time(_kernels_py.count_suitable, masks, n, args.repeat)
        if compiled is None:
            print(f"{n:>3} {slow:>10.4f} {'n/a':>10} {'n/a':>8}")
            continue
        fast, got = best_time(compiled.count_suitable, masks, n, args.repeat)
        assert got == expected, (n, got, expected)
        print(f"{n:>3} {slow:>10.4f} {fast:>10.4f} {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
