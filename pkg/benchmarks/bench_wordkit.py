"""Benchmark: compiled word-statistics kernels vs the pure-Python twin.

Runs the workloads that dominate `qdomains verify all` (bulk inversion
counting over all short words, fiber enumeration, Mahonian sums) against
both implementations and prints a speedup table.

    python3 benchmarks/bench_wordkit.py
"""

import itertools
import time

from qdomains import _wordkit_py

try:
    from qdomains import _wordkit
except ImportError:
    _wordkit = None


def all_words(n, max_len):
    for d in range(max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=d)


def bench_inversions(impl):
    total = 0
    for word in all_words(4, 8):
        total += impl.inversions(word)
    return total


def bench_profiles(impl):
    total = 0
    for word in all_words(4, 8):
        total += impl.word_profile(word, 4)[0]
    return total


def bench_fiber(impl):
    return len(impl.fiber_words((4, 4, 4)))


def bench_mahonian(impl):
    return impl.mahonian_sum((4, 4, 4), 0.97)


WORKLOADS = [
    ("inversions, all words n=4 len<=8", bench_inversions),
    ("profiles, all words n=4 len<=8", bench_profiles),
    ("fiber enumeration, k=(4,4,4)", bench_fiber),
    ("Mahonian sum, k=(4,4,4)", bench_mahonian),
]


def timed(fn, impl, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    if _wordkit is None:
        print("compiled kernels unavailable; timing the pure-Python twin only")
    header = f"{'workload':38s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for label, fn in WORKLOADS:
        pure_time, pure_result = timed(fn, _wordkit_py)
        if _wordkit is None:
            print(f"{label:38s} {pure_time:10.4f} {'-':>13s} {'-':>8s}")
            continue
        fast_time, fast_result = timed(fn, _wordkit)
        assert pure_result == fast_result or abs(pure_result - fast_result) < 1e-9
        print(f"{label:38s} {pure_time:10.4f} {fast_time:13.4f} "
              f"{pure_time / fast_time:7.1f}x")


if __name__ == "__main__":
    main()
