#!/usr/bin/env python3
"""Time the numba sieve kernels against the pure-numpy fallbacks.

Both implementations are imported directly, so the SERP_NUMBA env flag
does not matter here.  The numba paths are called once before timing to
exclude JIT compilation.

Usage:
    python benchmarks/bench_kernels.py [--mask-limit N] [--class-limit N] [--repeats K]
"""

import argparse
import time
from math import isqrt

import numpy as np

from serp import _kernels
from serp._kernels import prime_mask_numpy


def best_of(repeats, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--mask-limit", type=int, default=10**7)
    parser.add_argument("--class-limit", type=int, default=3 * 10**7)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    rows = []

    # full primality mask
    _kernels._prime_mask_numba(1000)  # compile
    t_np, m_np = best_of(args.repeats, prime_mask_numpy, args.mask_limit)
    t_nb, m_nb = best_of(args.repeats, _kernels._prime_mask_numba, args.mask_limit)
    assert np.array_equal(m_np, m_nb)
    rows.append((f"prime_mask({args.mask_limit:.0e})", t_np, t_nb))

    # segmented class scan (stride = modulus inside each sieved segment)
    limit = args.class_limit
    base = np.flatnonzero(prime_mask_numpy(isqrt(limit))).astype(np.int64)
    seg = _kernels.SEGMENT
    _kernels._class_primes_segmented_numba(11, 20, 10**5, base, seg)  # compile
    t_np, c_np = best_of(
        args.repeats, _kernels._class_primes_segmented_numpy, 11, 20, limit, base, seg
    )
    t_nb, c_nb = best_of(
        args.repeats, _kernels._class_primes_segmented_numba, 11, 20, limit, base, seg
    )
    assert np.array_equal(c_np, c_nb)
    rows.append((f"class_primes(11 mod 20, {limit:.0e})", t_np, t_nb))

    print(f"{'kernel':<34} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for name, t_np, t_nb in rows:
        print(f"{name:<34} {t_np:>9.3f}s {t_nb:>9.3f}s {t_np / t_nb:>7.2f}x")


if __name__ == "__main__":
    main()
