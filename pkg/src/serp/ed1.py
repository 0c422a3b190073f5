"""One-multiple decompositions (C = cP only).

For P = 1 (mod 5) every such solution comes from a quadruple
(gamma, c, u, v) with

    5c - 1 = gamma * P,   gamma = 4 (mod 5),   gcd(gamma, c) = 1,
    u * v = c**2,         u = v = -c (mod gamma),
    u != -c (mod P),      v != -c (mod P),

reconstructed as A = (u+c)/gamma, B = (v+c)/gamma, C = cP.  The defining
kernel identity is (gamma*A - c) * (gamma*B - c) = c**2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from math import gcd

from .arith import factorize
from .errors import KernelViolation, WrongResidue
from .solution import Solution, SolutionClass, make_solution


@dataclass(frozen=True)
class Ed1Witness:
    P: int
    gamma: int
    c: int
    u: int
    v: int  # u <= v

    @property
    def A(self) -> int:
        return (self.u + self.c) // self.gamma

    @property
    def B(self) -> int:
        return (self.v + self.c) // self.gamma

    @property
    def C(self) -> int:
        return self.c * self.P

    def as_dict(self) -> dict:
        return {
            "P": self.P,
            "gamma": self.gamma,
            "c": self.c,
            "u": self.u,
            "v": self.v,
            "A": self.A,
            "B": self.B,
            "C": self.C,
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


def default_gamma_max(P: int) -> int:
    """Tunable search bound 5 * ceil(log(P)^3); not a completeness claim."""
    return 5 * math.ceil(math.log(P) ** 3)


def ed1_candidates(P: int, gamma_max: int) -> list[tuple[int, int]]:
    """All (gamma, c) with gamma = 4 (mod 5), gamma <= gamma_max.

    c = (gamma*P + 1)/5 is integral for every such gamma when
    P = 1 (mod 5), and gcd(gamma, c) = 1 since 5c = 1 (mod gamma).
    """
    if P % 5 != 1:
        raise WrongResidue(f"ED1 search needs P = 1 (mod 5), got P = {P}")
    out = []
    for gamma in range(4, gamma_max + 1, 5):
        c, rem = divmod(gamma * P + 1, 5)
        assert rem == 0 and gcd(gamma, c) == 1
        out.append((gamma, c))
    return out


def ed1_search(P: int, gamma_max: int, gamma_min: int = 4) -> list[Ed1Witness]:
    """All witnesses with gamma_min <= gamma <= gamma_max.

    Deterministic order: gamma ascending, then u ascending.  Divisor
    pairs u*v = c**2 are drawn from the squared factorization of c; the
    pair u = v = c is excluded (it would force A = B).
    """
    out = []
    for gamma, c in ed1_candidates(P, gamma_max):
        if gamma < gamma_min:
            continue
        out.extend(_witnesses_for_candidate(P, gamma, c))
    return out


def _witnesses_for_candidate(P: int, gamma: int, c: int) -> list[Ed1Witness]:
    target = (-c) % gamma
    banned = (-c) % P
    csq = c * c
    found = []
    for u in factorize(c).squared().divisors():
        if u >= c:  # u < v only; u = v = c is degenerate
            break
        if u % gamma != target:
            continue
        v = csq // u
        # v = -c (mod gamma) follows from u*v = c^2 and gcd(gamma, c) = 1,
        # but is checked anyway as a cheap bug trap.
        if v % gamma != target:
            raise KernelViolation(f"v = {v} escaped the class -c (mod {gamma})")
        if u % P == banned or v % P == banned:
            continue
        found.append(Ed1Witness(P, gamma, c, u, v))
    return found


def ed1_reconstruct(w: Ed1Witness) -> Solution:
    """Turn a witness into a verified Solution; KernelViolation if malformed."""
    if 5 * w.c - 1 != w.gamma * w.P:
        raise KernelViolation(f"5c - 1 != gamma*P for {w}")
    if w.u * w.v != w.c * w.c:
        raise KernelViolation(f"u*v != c^2 for {w}")
    if (w.u + w.c) % w.gamma or (w.v + w.c) % w.gamma:
        raise KernelViolation(f"gamma does not divide u+c, v+c for {w}")
    A = (w.u + w.c) // w.gamma
    B = (w.v + w.c) // w.gamma
    if A % w.P == 0 or B % w.P == 0:
        raise KernelViolation(f"P divides A or B for {w}")
    return make_solution(w.P, A, B, w.c * w.P, SolutionClass.ED1)
