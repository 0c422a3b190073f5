"""Two-multiple decompositions (B = bP, C = cP).

Every such solution satisfies the kernel identity

    (5b - 1)(5c - 1) = 5*P*delta + 1,   delta | b*c,   A = b*c/delta,

so the search runs over delta and divisor pairs r*s = 5*P*delta + 1 with
r = s = 4 (mod 5), reconstructing b = (r+1)/5, c = (s+1)/5.  The
normalized coordinates split b = g*b', c = g*c' with gcd(b', c') = 1 and
delta = alpha * dprime**2 (alpha squarefree); a row is canonical when
g = alpha*dprime, b' + c' = m*dprime and A = alpha*b'*c', where
m = 5A - P.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from math import gcd, isqrt

from .arith import squarefree_split
from .errors import KernelViolation, WrongResidue
from .solution import Solution, SolutionClass, make_solution


@dataclass(frozen=True)
class Ed2Witness:
    P: int
    delta: int
    b: int
    c: int  # b <= c in search output
    r: int  # 5b - 1
    s: int  # 5c - 1
    A: int  # b*c / delta

    @property
    def B(self) -> int:
        return self.b * self.P

    @property
    def C(self) -> int:
        return self.c * self.P


@dataclass(frozen=True)
class NormalizedEd2:
    g: int
    bprime: int
    cprime: int
    alpha: int
    dprime: int
    m: int  # 5A - P
    canonical: bool


def default_delta_max(P: int) -> int:
    """Tunable search bound ceil(log(P)^3); not a completeness claim."""
    return math.ceil(math.log(P) ** 3)


def ed2_search(P: int, delta_max: int, delta_min: int = 1) -> list[Ed2Witness]:
    """All witnesses with delta_min <= delta <= delta_max.

    Deterministic order: delta ascending, then r ascending.  Pairs with
    b = c are rejected (they repeat a denominator).  The kernel needs
    nothing from P beyond 5 not dividing it, so any such prime is
    accepted; P = 1 (mod 5) is merely the class with no closed form.
    """
    if P % 5 == 0:
        raise WrongResidue(f"ED2 search needs 5 to not divide P, got P = {P}")
    out = []
    for delta in range(max(delta_min, 1), delta_max + 1):
        out.extend(_witnesses_for_delta(P, delta))
    return out


def _witnesses_for_delta(P: int, delta: int) -> list[Ed2Witness]:
    N = 5 * P * delta + 1
    found = []
    for r in range(4, isqrt(N) + 1, 5):
        if N % r:
            continue
        s = N // r
        # r*s = 1 (mod 5) and r = 4 (mod 5) force s = 4 (mod 5).
        if s % 5 != 4:
            raise KernelViolation(f"cofactor {s} escaped the class 4 (mod 5)")
        b, c = (r + 1) // 5, (s + 1) // 5
        if b == c or (b * c) % delta:
            continue
        found.append(Ed2Witness(P, delta, b, c, r, s, b * c // delta))
    return found


def ed2_case_a(P: int, delta: int, S: list[int]) -> Solution | None:
    """First-hit search over an explicit candidate list of divisors r.

    Returns the solution from the first r in S that divides
    N = 5*P*delta + 1 with cofactor s = 4 (mod 5) and delta | b*c, the
    pair swapped if needed so that A <= B < C; None when no r qualifies.
    """
    if P % 5 == 0:
        raise WrongResidue(f"needs 5 to not divide P, got P = {P}")
    N = 5 * P * delta + 1
    for r in S:
        if r < 1 or N % r:
            continue
        s = N // r
        if s % 5 != 4:
            continue
        b = (r + 1) // 5
        c = (s + 1) // 5
        if (b * c) % delta:
            continue
        A = (b * c) // delta
        if not (A <= b * P < c * P):
            b, c = c, b
        if b == c:
            continue  # B < C cannot hold
        return make_solution(P, A, b * P, c * P, SolutionClass.ED2)
    return None


def ed2_reconstruct(w: Ed2Witness) -> Solution:
    """Turn a witness into a verified Solution; KernelViolation if malformed."""
    if not 1 <= w.b < w.c:
        raise KernelViolation(f"need 1 <= b < c, got b = {w.b}, c = {w.c}")
    if w.r != 5 * w.b - 1 or w.s != 5 * w.c - 1:
        raise KernelViolation(f"r, s do not match b, c for {w}")
    if w.r * w.s != 5 * w.P * w.delta + 1:
        raise KernelViolation(f"r*s != 5*P*delta + 1 for {w}")
    if (w.b * w.c) % w.delta or w.b * w.c // w.delta != w.A:
        raise KernelViolation(f"A != b*c/delta for {w}")
    return make_solution(w.P, w.A, w.b * w.P, w.c * w.P, SolutionClass.ED2)


def ed2_normalize(w: Ed2Witness) -> NormalizedEd2:
    """Normalized coordinates of a witness (no validation of w itself)."""
    g = gcd(w.b, w.c)
    bprime, cprime = w.b // g, w.c // g
    alpha, dprime = squarefree_split(w.delta)
    m = 5 * w.A - w.P
    canonical = (
        g == alpha * dprime
        and bprime + cprime == m * dprime
        and w.A == alpha * bprime * cprime
    )
    return NormalizedEd2(g, bprime, cprime, alpha, dprime, m, canonical)


def ed2_backtest(n: NormalizedEd2, P: int) -> bool:
    """Re-validate an assembled row from its normalized coordinates.

    Checks, in order: the 4 (mod 5) congruences of 5b-1 and 5c-1, the
    divisibility delta | b*c, coprimality of (b', c'), the linear
    relation b' + c' = m*dprime, the product relation A*alpha =
    alpha^2*b'*c', integrality and consistency of A = b*c/delta, the
    strict bounds P < 5A < 3P, and b != c.
    """
    b = n.g * n.bprime
    c = n.g * n.cprime
    delta = n.alpha * n.dprime**2
    if b < 1 or c < 1 or delta < 1:
        return False
    if (5 * b - 1) % 5 != 4 or (5 * c - 1) % 5 != 4:
        return False
    if (b * c) % delta:
        return False
    if gcd(n.bprime, n.cprime) != 1:
        return False
    if n.bprime + n.cprime != n.m * n.dprime:
        return False
    if (n.m + P) % 5:
        return False
    A = (n.m + P) // 5
    if A * n.alpha != n.alpha**2 * n.bprime * n.cprime:
        return False
    if b * c // delta != A:
        return False
    if not P < 5 * A < 3 * P:
        return False
    return b != c


def ed2_witness_row(w: Ed2Witness) -> dict:
    """Wire form of a witness plus its normalization, keyed like the
    published tables (b', c' as bprime/cprime, d' as dprime)."""
    n = ed2_normalize(w)
    return {
        "P": w.P,
        "delta": w.delta,
        "b": w.b,
        "c": w.c,
        "r": w.r,
        "s": w.s,
        "A": w.A,
        "g": n.g,
        "bprime": n.bprime,
        "cprime": n.cprime,
        "alpha": n.alpha,
        "dprime": n.dprime,
        "m": n.m,
        "canonical": n.canonical,
    }


def ed2_witness_json(w: Ed2Witness) -> str:
    return json.dumps(ed2_witness_row(w), sort_keys=True, separators=(",", ":"))
