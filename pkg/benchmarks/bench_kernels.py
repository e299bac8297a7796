#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled field-arithmetic kernels.

Micro level: mul_reduce on random reduced vectors at several degrees.
Macro level: a depth-limited exchange-graph enumeration, which is the hot
workload the kernels exist for.

Run:  python benchmarks/bench_kernels.py [--depth 10]
The compiled backend is skipped when the extension is not built.
"""

import argparse
import random
import statistics
import sys
import time

from quiverbelt import _kernels_py as pure

try:
    from quiverbelt import _kernels_c as compiled
except ImportError:
    compiled = None


def bench_mul_reduce(impl, deg: int, rounds: int = 5, batch: int = 4000) -> float:
    rng = random.Random(42)
    vectors = [
        [rng.randint(-(10**6), 10**6) for _ in range(deg)] for _ in range(64)
    ]
    rows = tuple(
        tuple(rng.randint(-4, 4) for _ in range(deg)) for _ in range(deg)
    )
    times = []
    for _ in range(rounds):
        t0 = time.perf_counter()
        for i in range(batch):
            impl.mul_reduce(vectors[i % 64], vectors[(i * 7 + 3) % 64], rows, deg)
        times.append(time.perf_counter() - t0)
    return min(times) / batch


def bench_graph(depth: int) -> float:
    from quiverbelt import exgraph, seedgeom

    t0 = time.perf_counter()
    graph = exgraph.bfs(seedgeom.initial_seed(7), depth_limit=depth)
    elapsed = time.perf_counter() - t0
    print(f"  d=7 depth {depth}: {graph.order()} seeds in {elapsed:.2f}s")
    return elapsed


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--depth", type=int, default=10)
    args = parser.parse_args()

    from quiverbelt import kernels

    print(f"selected backend: {kernels.BACKEND}")
    print("\nmul_reduce microbenchmark (us per call):")
    print(f"{'deg':>5} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for deg in (2, 4, 8, 16):
        t_pure = bench_mul_reduce(pure, deg)
        if compiled is not None:
            t_comp = bench_mul_reduce(compiled, deg)
            print(
                f"{deg:>5} {t_pure * 1e6:>9.2f} {t_comp * 1e6:>9.2f} "
                f"{t_pure / t_comp:>8.2f}x"
            )
        else:
            print(f"{deg:>5} {t_pure * 1e6:>9.2f} {'n/a':>10} {'':>9}")

    print("\nexchange-graph macrobenchmark (selected backend):")
    bench_graph(args.depth)
    if compiled is None:
        print("compiled kernels unavailable; rebuild with "
              "`python setup.py build_ext --inplace` to compare")
    else:
        print(
            "re-run with QUIVERBELT_PURE=1 to time the same enumeration on "
            "the pure backend"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
