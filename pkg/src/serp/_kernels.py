"""Prime-sieve kernels: numba-jitted loops with a pure-numpy fallback.

The active path is chosen at import from the environment variable
SERP_NUMBA ("0" selects the numpy fallback; anything else, or unset,
uses numba when it is importable).  Both implementations stay
importable so benchmarks/bench_kernels.py can time them side by side.

Full boolean masks are used up to _FULL_MASK_LIMIT; above that,
class_primes switches to a segmented sieve that walks the residue class
with stride = modulus, so memory stays at one segment regardless of the
scan limit.
"""

from __future__ import annotations

import os
from math import isqrt

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SERP_NUMBA", "1") != "0"

SEGMENT = 1 << 20
_FULL_MASK_LIMIT = 10**6

_mask_cache: dict[int, np.ndarray] = {}


def prime_mask_numpy(limit: int) -> np.ndarray:
    """Boolean primality mask over [0, limit], pure numpy slicing."""
    mask = np.ones(limit + 1, dtype=np.bool_)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _prime_mask_numba(limit):  # pragma: no cover - thin jitted twin
        mask = np.ones(limit + 1, dtype=np.bool_)
        mask[0] = False
        mask[1] = False
        p = 2
        while p * p <= limit:
            if mask[p]:
                for q in range(p * p, limit + 1, p):
                    mask[q] = False
            p += 1
        return mask

    @numba.njit(cache=True)
    def _class_primes_segmented_numba(residue, modulus, limit, base, segment):
        out = np.empty(limit // modulus + 2, np.int64)
        n = 0
        seg = np.empty(segment, np.bool_)
        lo = 2
        while lo <= limit:
            hi = min(lo + segment, limit + 1)
            for i in range(hi - lo):
                seg[i] = True
            for bi in range(base.size):
                p = base[bi]
                start = p * p
                if start < lo:
                    start = ((lo + p - 1) // p) * p
                for q in range(start, hi, p):
                    seg[q - lo] = False
            rem = (lo - residue) % modulus
            first = lo if rem == 0 else lo + (modulus - rem)
            for q in range(first, hi, modulus):
                if seg[q - lo]:
                    out[n] = q
                    n += 1
            lo = hi
        return out[:n]


def _class_primes_segmented_numpy(
    residue: int, modulus: int, limit: int, base: np.ndarray, segment: int
) -> np.ndarray:
    chunks = []
    lo = 2
    while lo <= limit:
        hi = min(lo + segment, limit + 1)
        seg = np.ones(hi - lo, dtype=np.bool_)
        for p in base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                seg[start - lo :: p] = False
        first = lo + (residue - lo) % modulus
        members = np.arange(first, hi, modulus, dtype=np.int64)
        if members.size:
            chunks.append(members[seg[members - lo]])
        lo = hi
    if not chunks:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(chunks)


def prime_mask(limit: int) -> np.ndarray:
    """Cached read-only primality mask over [0, limit]."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    cached = _mask_cache.get(limit)
    if cached is not None:
        return cached
    if USE_NUMBA:
        mask = _prime_mask_numba(limit)
    else:
        mask = prime_mask_numpy(limit)
    mask.setflags(write=False)
    if len(_mask_cache) > 8:
        _mask_cache.clear()
    _mask_cache[limit] = mask
    return mask


def class_primes(residue: int, modulus: int, limit: int) -> np.ndarray:
    """Primes p <= limit with p = residue (mod modulus), ascending int64.

    Full-mask slicing below _FULL_MASK_LIMIT, segmented sieve above it.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    residue %= modulus
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if limit <= _FULL_MASK_LIMIT:
        mask = prime_mask(limit)
        first = residue if residue >= 2 else residue + modulus * (
            (2 - residue + modulus - 1) // modulus
        )
        members = np.arange(first, limit + 1, modulus, dtype=np.int64)
        return members[mask[members]]
    base = np.flatnonzero(prime_mask(isqrt(limit))).astype(np.int64)
    if USE_NUMBA:
        return _class_primes_segmented_numba(residue, modulus, limit, base, SEGMENT)
    return _class_primes_segmented_numpy(residue, modulus, limit, base, SEGMENT)
