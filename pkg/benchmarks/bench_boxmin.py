"""Benchmark the compiled box-minimization kernel against the pure one.

Times min_quadratic_box on random positive-definite integer quadratics
of growing dimension/box size and reports both backends side by side.
Run directly:

    python3 benchmarks/bench_boxmin.py
"""

import argparse
import random
import time

from plumblat import _boxmin_py

try:
    from plumblat import _boxmin
except ImportError:
    _boxmin = None


def make_instance(rng, n, span):
    P = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            P[i][j] = P[j][i] = rng.randint(-2, 2)
    for i in range(n):
        P[i][i] = sum(abs(x) for x in P[i]) + rng.randint(1, 5)
    q = [rng.randint(-10, 10) for _ in range(n)]
    lo = [-span] * n
    hi = [span] * n
    return P, q, lo, hi


def bench(module, instances, repeats):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        for P, q, lo, hi in instances:
            module.min_quadratic_box(P, q, lo, hi)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cases = [
        ("n=2 span=50", 2, 50, 200),
        ("n=3 span=15", 3, 15, 50),
        ("n=4 span=8", 4, 8, 20),
        ("n=5 span=5", 5, 5, 10),
        ("n=6 span=3", 6, 3, 10),
    ]
    print(f"{'case':<14} {'points':>10} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, n, span, count in cases:
        instances = [make_instance(rng, n, span) for _ in range(count)]
        points = count * (2 * span + 1) ** n
        t_py = bench(_boxmin_py, instances, args.repeats)
        if _boxmin is None:
            print(f"{label:<14} {points:>10} {t_py:>9.3f}s {'n/a':>10} {'n/a':>8}")
            continue
        for inst in instances:
            got = _boxmin.min_quadratic_box(*inst)
            want = _boxmin_py.min_quadratic_box(*inst)
            assert got == want, "backends disagree"
        t_cy = bench(_boxmin, instances, args.repeats)
        print(
            f"{label:<14} {points:>10} {t_py:>9.3f}s {t_cy:>9.3f}s "
            f"{t_py / t_cy:>7.1f}x"
        )


if __name__ == "__main__":
    main()
