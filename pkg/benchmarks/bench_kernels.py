#!/usr/bin/env python3
"""Benchmark the statistic kernels: numba backend vs pure-numpy fallback.

Both implementations are imported directly, so the comparison runs in one
process regardless of the BIINC_NO_NUMBA selection. The first jitted call is
excluded by a warmup pass.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from biinc import kernels


def time_backend(fn, perms, codes, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for code in codes:
            fn(perms, code)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    codes = tuple(range(len(kernels.STAT_NAMES)))
    workloads = [
        ("S_8 (40320 x 8)", kernels.s_n_array(8)),
        ("B_12 (208012 x 12)", kernels.b_n_array(12)),
        ("B_14 (2674440 x 14)", kernels.b_n_array(14)),
    ]

    if kernels.HAVE_NUMBA:
        # warmup: trigger jit compilation outside the timed region
        kernels.stat_values_numba(kernels.s_n_array(4), 0)

    print(f"selected backend: {kernels.backend()}  (set BIINC_NO_NUMBA=1 to force numpy)")
    print(f"{'workload':24s} {'numpy (s)':>12s} {'numba (s)':>12s} {'speedup':>9s}")
    for label, perms in workloads:
        t_np = time_backend(kernels.stat_values_numpy, perms, codes, args.repeat)
        if kernels.HAVE_NUMBA:
            t_nb = time_backend(kernels.stat_values_numba, perms, codes, args.repeat)
            print(f"{label:24s} {t_np:12.4f} {t_nb:12.4f} {t_np / t_nb:8.1f}x")
        else:
            print(f"{label:24s} {t_np:12.4f} {'n/a':>12s} {'n/a':>9s}")


if __name__ == "__main__":
    main()
