#!/usr/bin/env python3
"""Benchmark: compiled extension kernels vs the pure-Python fallback.

The subset sweeps dominate real workloads (every invariant walks 2^n cuts),
so the comparison runs them on mid-sized random graphs where the pure lane is
still tolerable, plus the graph-enumeration kernel used by the verification
sweeps.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from bei import _purepy

try:
    from bei import _core
except ImportError:
    _core = None


def random_adj(rng: random.Random, n: int, p: float) -> list[int]:
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def connect(rng: random.Random, n: int, p: float) -> list[int]:
    while True:
        adj = random_adj(rng, n, p)
        if _purepy.ncomponents(adj, 0) == 1:
            return adj


def timed(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    if _core is None:
        print("compiled kernel unavailable; build it first (pip install -e .)")
        return

    rng = random.Random(99)
    n_sweep = 12 if args.quick else 14
    n_flow = 16 if args.quick else 20
    n_enum = 5 if args.quick else 6

    sweep_adj = connect(rng, n_sweep, 0.25)
    flow_adj = connect(rng, n_flow, 0.3)

    cases = [
        (f"cut_counts (n={n_sweep}, 2^{n_sweep} subsets)", "cut_counts", (sweep_adj,)),
        (f"toughness_scan (n={n_sweep})", "toughness_scan", (sweep_adj,)),
        (f"max_cut_surplus (n={n_sweep})", "max_cut_surplus", (sweep_adj,)),
        (f"minimal_prime_masks (n={n_sweep})", "minimal_prime_masks", (sweep_adj,)),
        (f"kappa_flow (n={n_flow})", "kappa_flow", (flow_adj,)),
        (f"kappa_bruteforce (n={n_sweep})", "kappa_bruteforce", (sweep_adj,)),
        (f"max_cliques (n={n_flow})", "max_cliques", (flow_adj,)),
        (f"connected_graph_masks (n={n_enum})", "connected_graph_masks", (n_enum,)),
    ]

    print(f"{'kernel':<44} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    print("-" * 77)
    for label, name, fargs in cases:
        fast = timed(getattr(_core, name), *fargs)
        slow = timed(getattr(_purepy, name), *fargs, repeat=1)
        assert getattr(_core, name)(*fargs) == getattr(_purepy, name)(*fargs)
        print(f"{label:<44} {slow*1e3:>8.1f}ms {fast*1e3:>8.1f}ms {slow/fast:>8.1f}x")


if __name__ == "__main__":
    main()
