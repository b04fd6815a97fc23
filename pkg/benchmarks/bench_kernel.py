"""Benchmark the compiled kernel against the pure-Python fallback on the
workloads that dominate the verification suites: small integer matrix
products (Weyl closure), rational row reduction (nullspaces / fixed
subalgebras), the integer Faddeev-LeVerrier recursion (characteristic
polynomials), and a symbolic slice quotient.

Run:  python3 benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction as Q

from foldlie import kernel


def bench(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def workload_weyl_products(impl):
    rng = random.Random(7)
    mats = []
    for _ in range(40):
        mats.append([rng.randint(-2, 2) for _ in range(25)])

    def run():
        acc = mats[0]
        for _ in range(4000):
            for m in mats[:5]:
                acc = impl.mat_mul(acc, m, 5, 5, 5)
                acc = [x % 97 for x in acc]  # keep entries bounded

    return run


def workload_rational_rref(impl):
    rng = random.Random(11)
    rowset = [
        [Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(28 * 28)]
        for _ in range(6)
    ]

    def run():
        for entries in rowset:
            impl.rref(list(entries), 28, 28)

    return run


def workload_integer_charpoly(impl):
    rng = random.Random(13)
    mats = [[rng.randint(-5, 5) for _ in range(28 * 28)] for _ in range(4)]

    def run():
        for m in mats:
            impl.charpoly_int(list(m), 28)

    return run


def workload_symbolic_slice(impl):
    from foldlie.exactalg import MultiPoly

    names = ("v1m", "v2m", "v1p", "v2p")
    v = {n: MultiPoly.var(names, n) for n in names}
    one = MultiPoly.const(names, 1)
    zero = MultiPoly.zero(names)
    entries = [
        zero, v["v1m"], one, zero,
        -v["v1m"], zero, zero, one,
        v["v2p"] + v["v2m"], v["v1p"], zero, v["v1m"],
        v["v1p"], v["v2p"] - v["v2m"], -v["v1m"], zero,
    ]

    def run():
        for _ in range(30):
            impl.charpoly_generic(list(entries), 4, one)

    return run


WORKLOADS = [
    ("weyl-closure 5x5 int products", workload_weyl_products),
    ("rational rref 28x28", workload_rational_rref),
    ("integer charpoly 28x28", workload_integer_charpoly),
    ("symbolic slice charpoly 4x4", workload_symbolic_slice),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    impls = kernel.IMPLEMENTATIONS
    print(f"available backends: {', '.join(impls)} (active: {kernel.BACKEND})")
    if "cython" not in impls:
        print("compiled kernel unavailable; timing the pure-Python backend only")
    header = f"{'workload':<34}" + "".join(f"{name:>12}" for name in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, maker in WORKLOADS:
        times = {}
        for name, impl in impls.items():
            times[name] = bench(maker(impl), args.repeat)
        row = f"{label:<34}" + "".join(f"{times[n]:>11.3f}s" for n in impls)
        if len(times) == 2:
            row += f"{times['python'] / times['cython']:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
