#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

The workloads mirror the solver's hot paths: every source-set choice of a
digraph is compressed to bitmask adjacency and fed to the 2-factor or
Hamilton kernel.  Run after `pip install -e .`:

    python benchmarks/bench_kernels.py
"""
import math
import time
from itertools import combinations

from adfactor.generators import complete_digraph, random_digraph, random_regular_digraph
from adfactor.kernels import pure

try:
    from adfactor.kernels import _core as native
except ImportError:
    native = None


def census_workload(d):
    """All (X, adjacency-mask) pairs of a digraph, precompressed."""
    n = d.n
    work = []
    for xs in combinations(range(n), n // 2):
        ys = [v for v in range(n) if v not in set(xs)]
        adj = []
        for x in xs:
            mask = d.out_masks[x]
            adj.append(sum((mask >> y & 1) << j for j, y in enumerate(ys)))
        work.append(adj)
    return n // 2, work


def time_fn(fn, repeats=3):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(name, impls, make_fn):
    timings = {}
    for label, mod in impls:
        timings[label] = time_fn(make_fn(mod))
    base = timings.get("pure")
    row = f"{name:42s}"
    for label, _ in impls:
        row += f"  {label}: {timings[label] * 1000:9.2f} ms"
    if native is not None and base:
        row += f"  speedup: {base / timings['native']:5.1f}x"
    print(row)


def main():
    impls = [("pure", pure)] + ([("native", native)] if native else [])
    if native is None:
        print("compiled kernels not built; timing pure implementation only")

    m, work = census_workload(random_digraph(14, 0.55, "bench"))
    bench(
        f"two-factor census n=14 ({len(work)} splits)",
        impls,
        lambda mod: lambda: [mod.bip_two_factor(m, adj) for adj in work],
    )

    m12, work12 = census_workload(random_regular_digraph(12, 7, "bench"))
    bench(
        f"two-factor census n=12 ({len(work12)} splits)",
        impls,
        lambda mod: lambda: [mod.bip_two_factor(m12, adj) for adj in work12],
    )

    bench(
        f"hamilton census n=12 ({len(work12)} splits)",
        impls,
        lambda mod: lambda: [mod.bip_hamilton(m12, adj, 10**6) for adj in work12],
    )

    dense = complete_digraph(12)
    m_d, work_d = census_workload(dense)
    bench(
        f"hamilton census complete n=12 ({len(work_d)} splits)",
        impls,
        lambda mod: lambda: [mod.bip_hamilton(m_d, adj, 10**6) for adj in work_d],
    )

    big = random_digraph(48, 0.3, "bench-match")
    bench(
        "perfect matching n=48 (500 runs)",
        impls,
        lambda mod: lambda: [
            mod.bip_max_matching(big.n, big.n, big.out_masks) for _ in range(500)
        ],
    )


if __name__ == "__main__":
    main()
