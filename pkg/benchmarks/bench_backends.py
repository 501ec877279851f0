"""Compare the compiled search kernel against the pure-Python fallback.

Run: python benchmarks/bench_backends.py [--repeat N]
Both kernels explore identical search trees, so node counts must agree; the
interesting number is the wall-clock ratio.
"""

from __future__ import annotations

import argparse
import random
import time

from domlab import complementary_prism, cycle, family_graph
from domlab._gamma_py import solve_gamma as solve_pure
from domlab.verify import random_graph

try:
    from domlab._gamma_cy import solve_gamma as solve_cy
except ImportError:
    solve_cy = None


def instances():
    yield "prism:cycle:9 k=2 r", complementary_prism(cycle(9)), 2, True
    yield "prism:cycle:10 k=2 r", complementary_prism(cycle(10)), 2, True
    yield "prism:path:10 k=1 r", family_graph("prism:path:10"), 1, True
    yield "kpartite:4,4,4 k=3 r", family_graph("kpartite:4,4,4"), 3, True
    rng = random.Random(7)
    for i in range(3):
        g = random_graph(rng, 16, 0.4)
        yield f"random16 #{i} k=2 r", g, 2, True
    yield "cycle:18 k=1 r", cycle(18), 1, True


def bench(fn, g, k, restrained, repeat):
    masks = g.neighbor_masks()
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(g.n, k, restrained, masks)
        best = min(best, time.perf_counter() - t0)
    return out, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if solve_cy is None:
        print("compiled kernel not built; nothing to compare")
        return
    print(f"{'instance':28} {'value':>5} {'nodes':>9} {'pure (s)':>9} "
          f"{'cython (s)':>10} {'speedup':>8}")
    for name, g, k, restrained in instances():
        (vp, _, np_), tp = bench(solve_pure, g, k, restrained, args.repeat)
        (vc, _, nc), tc = bench(solve_cy, g, k, restrained, args.repeat)
        assert vp == vc, f"{name}: value mismatch {vp} != {vc}"
        assert np_ == nc, f"{name}: node-count mismatch {np_} != {nc}"
        ratio = tp / tc if tc > 0 else float("inf")
        print(f"{name:28} {vp:>5} {np_:>9} {tp:>9.4f} {tc:>10.4f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
