#!/usr/bin/env python3
"""Benchmark the compiled reduction kernel against the pure-Python one.

The exponent-vector reduction loop is the hot path of every bounded
search; both backends share the exact same rule application semantics, so
this only measures speed.  Run from the repository root:

    python3 benchmarks/bench_kernel.py [--degree-bound N]

If the compiled extension is missing, only the pure timings are reported.
"""

import argparse
import random
import time

from binoidtop import _kernel_py

try:
    from binoidtop import _ckernel
except ImportError:
    _ckernel = None


def workloads(degree_bound):
    """(name, width, rules, probe vectors) quadruples."""
    rng = random.Random(20260811)
    out = []

    # localized Stanley-Reisner chart: pair cancellation plus a zero rule
    width = 4
    rules = [
        ((1, 0, 0, 1), (0, 0, 0, 0)),
        ((0, 1, 1, 0), None),
    ]
    out.append(("sr_chart", width, rules, _cube(width, degree_bound)))

    # surface relation x^2 y = z^2 with completion consequences
    width = 5
    rules = [
        ((1, 1, 0, 0, 0), (0, 0, 0, 0, 2)),
        ((1, 0, 0, 0, 0), (0, 0, 0, 0, 0)),  # stand-in interreduced rule
        ((0, 0, 1, 1, 0), (0, 0, 0, 0, 0)),
        ((0, 0, 0, 0, 3), (0, 0, 0, 0, 1)),
    ]
    out.append(("mixed_rules", width, rules, _cube(width, degree_bound)))

    # random tame systems
    width = 6
    rules = []
    for _ in range(8):
        lhs = tuple(rng.randint(0, 2) for _ in range(width))
        if sum(lhs) < 2:
            continue
        rhs = tuple(rng.randint(0, 1) for _ in range(width))
        if sum(rhs) >= sum(lhs):
            rhs = tuple(0 for _ in range(width))
        rules.append((lhs, rhs))
    probes = [
        tuple(rng.randint(0, degree_bound // 2) for _ in range(width))
        for _ in range(4000)
    ]
    out.append(("random6", width, rules, probes))
    return out


def _cube(width, degree_bound):
    vecs = []

    def rec(prefix, remaining):
        if len(prefix) == width - 1:
            vecs.append(tuple(prefix + [remaining % 4]))
            return
        for e in range(min(remaining, 4) + 1):
            rec(prefix + [e], remaining - e)

    rec([], degree_bound)
    return vecs


def time_backend(kernel_cls, width, rules, probes, repeats):
    kern = kernel_cls(width, rules)
    best = None
    checksum = 0
    for _ in range(repeats):
        start = time.perf_counter()
        acc = 0
        for v in probes:
            out = kern.reduce(v)
            acc += 1 if out is None else sum(out)
        elapsed = time.perf_counter() - start
        checksum = acc
        best = elapsed if best is None else min(best, elapsed)
    return best, checksum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree-bound", type=int, default=12)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    print(f"{'workload':<12} {'probes':>7} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, width, rules, probes in workloads(args.degree_bound):
        pure_t, pure_sum = time_backend(
            _kernel_py.RuleKernel, width, rules, probes, args.repeats
        )
        if _ckernel is None:
            print(f"{name:<12} {len(probes):>7} {pure_t * 1e3:>9.1f}ms {'n/a':>10} {'':>8}")
            continue
        comp_t, comp_sum = time_backend(
            _ckernel.RuleKernel, width, rules, probes, args.repeats
        )
        assert pure_sum == comp_sum, "backends disagree"
        print(
            f"{name:<12} {len(probes):>7} {pure_t * 1e3:>9.1f}ms "
            f"{comp_t * 1e3:>8.1f}ms {pure_t / comp_t:>7.1f}x"
        )


if __name__ == "__main__":
    main()
