"""Benchmark the compiled census kernel against the pure-Python fallback.

Usage:
    python3 benchmarks/bench_census.py [--repeat 5] [--m M ...]

Each value of m is scanned with both kernels (when the compiled one is
available) and the best-of-repeat wall times are reported side by side.
"""

import argparse
import time

from cubeforge import _census_py
from cubeforge.oracle import INT64_SAFE_M

try:
    from cubeforge import _census
except ImportError:
    _census = None

DEFAULT_MS = [
    1729,
    87539319,
    6963472309248,  # Ta(4)
    3999999999999,  # near the int64 kernel cutoff
]


def best_time(func, m, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(m)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument(
        "--m", type=int, nargs="*", default=DEFAULT_MS,
        help=f"values to scan (|m| <= {INT64_SAFE_M} for the compiled kernel)",
    )
    args = parser.parse_args()

    if _census is None:
        print("compiled kernel not available; timing the pure kernel only")
    header = f"{'m':>16}  {'pure (s)':>10}  {'compiled (s)':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for m in args.m:
        pure_t, pure_pairs = best_time(_census_py.census_scan, m, args.repeat)
        if _census is not None and abs(m) <= INT64_SAFE_M:
            comp_t, comp_pairs = best_time(_census.census_scan, m, args.repeat)
            if sorted(comp_pairs) != sorted(pure_pairs):
                raise SystemExit(f"kernel disagreement at m={m}")
            print(
                f"{m:>16}  {pure_t:>10.4f}  {comp_t:>12.4f}"
                f"  {pure_t / comp_t:>7.1f}x"
            )
        else:
            print(f"{m:>16}  {pure_t:>10.4f}  {'n/a':>12}  {'':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
