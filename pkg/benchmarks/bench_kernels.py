#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled quadruple-check kernels.

Generates one batch of random integer quadruples and one of random float
quadruples, then times each available kernel implementation over the
batch.  Results from the implementations are cross-checked while timing.

    python3 benchmarks/bench_kernels.py --count 200000
"""

import argparse
from random import Random
from time import perf_counter

from quadkit import kernels


def run_int(module, batch):
    start = perf_counter()
    bad = 0
    for coords in batch:
        result = module.check_quad_ints(*coords)
        if result[5] or result[6]:
            bad += 1
    elapsed = perf_counter() - start
    assert bad == 0
    return elapsed


def run_float(module, batch):
    start = perf_counter()
    for coords in batch:
        module.check_quad_floats(*coords)
    return perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--range", type=int, default=10**6)
    args = parser.parse_args()

    rng = Random(args.seed)
    int_batch = [
        tuple(rng.randint(-args.range, args.range) for _ in range(8))
        for _ in range(args.count)
    ]
    float_batch = [
        tuple(rng.uniform(-args.range, args.range) for _ in range(8))
        for _ in range(args.count)
    ]

    impls = kernels.implementations()
    print(f"{args.count} quadruples, coordinate range {args.range}")
    print(f"active implementation: {kernels.IMPLEMENTATION}")
    print()
    print(f"{'kernel':<22}{'impl':<10}{'seconds':>9}{'rec/s':>12}")
    timings = {}
    for name, module in impls.items():
        t = run_int(module, int_batch)
        timings[("int", name)] = t
        print(f"{'check_quad_ints':<22}{name:<10}{t:>9.3f}{args.count / t:>12.0f}")
    for name, module in impls.items():
        t = run_float(module, float_batch)
        timings[("float", name)] = t
        print(f"{'check_quad_floats':<22}{name:<10}{t:>9.3f}{args.count / t:>12.0f}")
    if "compiled" in impls:
        for kind in ("int", "float"):
            speedup = timings[(kind, "pure")] / timings[(kind, "compiled")]
            print(f"\n{kind} kernel speedup (pure / compiled): {speedup:.1f}x")
        sample = int_batch[0]
        assert impls["pure"].check_quad_ints(*sample) == impls[
            "compiled"
        ].check_quad_ints(*sample)


if __name__ == "__main__":
    main()
