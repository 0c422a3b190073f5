"""Residue-class pre-sieving and its density statistics.

For a fixed delta and modulus r = 4 (mod 5) with gcd(r, 5*delta) = 1,
the primes usable by the two-multiple construction lie in one CRT class

    P = 1 (mod 5),   P = -(5*delta)^(-1) (mod r),

of modulus 5r.  Scanning only these classes replaces blind enumeration
of P.  For any prime P in the class, s = (5*P*delta + 1)/r is integral
and s = 4 (mod 5), so b = (r+1)/5, c = (s+1)/5 reconstruct a solution
whenever delta | b*c (always, for delta = 1).

The statistics side counts N(P; R, delta) = #{r <= R admissible with
r | 5*P*delta + 1} per prime, its exact average over primes P <= x with
P = 1 (mod 5), the sum of 1/phi(5r), and the exceptional moduli whose
class contains no prime <= x.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from ._kernels import class_primes, prime_mask
from .arith import euler_phi, mod_inverse, crt_combine
from .errors import BadResidue, DeltaFilterFailed, NotCoprime
from .solution import Solution, SolutionClass, make_solution

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class ProgressionClass:
    delta: int
    r: int
    residue: int
    modulus: int  # = 5r


@dataclass(frozen=True)
class ClassScan:
    """Scan result for one progression class."""

    delta: int
    r: int
    modulus: int
    residue: int
    primes_found: int
    first_prime: int | None
    expected_li: float  # li_estimate(x) / phi(5r), inspection only


@dataclass(frozen=True)
class ScanReport:
    """Aggregate statistics for all admissible r <= R at one (x, delta)."""

    x: int
    R: int
    delta: int
    prime_count: int  # primes <= x with P = 1 (mod 5)
    classes: tuple[ClassScan, ...]
    n_of_p: dict[int, int]
    average: Fraction | None  # None when no qualifying primes exist
    phi_sum: Fraction
    exceptional: tuple[int, ...]

    @property
    def per_r_counts(self) -> dict[int, int]:
        return {c.r: c.primes_found for c in self.classes}

    def as_dict(self) -> dict:
        return {
            "x": self.x,
            "R": self.R,
            "delta": self.delta,
            "prime_count": self.prime_count,
            "average": str(self.average) if self.average is not None else None,
            "phi_sum": str(self.phi_sum),
            "classes": [
                {
                    "delta": c.delta,
                    "r": c.r,
                    "modulus": c.modulus,
                    "residue": c.residue,
                    "primes_found": c.primes_found,
                    "first_prime": c.first_prime,
                    "exceptional": c.primes_found == 0,
                    "expected_li": c.expected_li,
                    "li_deviation": c.primes_found - c.expected_li,
                }
                for c in self.classes
            ],
            "exceptional": list(self.exceptional),
            "n_of_p": {str(p): n for p, n in sorted(self.n_of_p.items())},
        }

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))

    def csv_rows(self) -> list[dict]:
        return [
            {
                "delta": c.delta,
                "r": c.r,
                "modulus": c.modulus,
                "residue": c.residue,
                "primes_found": c.primes_found,
                "first_prime": "" if c.first_prime is None else c.first_prime,
                "exceptional": c.primes_found == 0,
            }
            for c in self.classes
        ]


CSV_FIELDS = ("delta", "r", "modulus", "residue", "primes_found", "first_prime", "exceptional")


def write_scan_csv(rows: list[dict], fileobj) -> None:
    writer = csv.DictWriter(fileobj, fieldnames=list(CSV_FIELDS), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def admissible_moduli(R: int, delta: int) -> list[int]:
    """All r <= R with r = 4 (mod 5) and gcd(r, 5*delta) = 1, ascending."""
    return [r for r in range(4, R + 1, 5) if gcd(r, 5 * delta) == 1]


def build_progression_class(delta: int, r: int) -> ProgressionClass:
    """CRT class {P = 1 (mod 5), P = -(5*delta)^(-1) (mod r)} of modulus 5r."""
    if r % 5 != 4:
        raise BadResidue(f"r = {r} is not 4 (mod 5)")
    if gcd(r, 5 * delta) != 1:
        raise NotCoprime(f"gcd({r}, 5*{delta}) = {gcd(r, 5 * delta)} != 1")
    target = (-mod_inverse(5 * delta, r)) % r
    residue, modulus = crt_combine(1, 5, target, r)
    return ProgressionClass(delta, r, residue, modulus)


def scan_class_primes(cls: ProgressionClass, x: int) -> list[int]:
    """All primes <= x in the class, ascending."""
    return [int(p) for p in class_primes(cls.residue, cls.modulus, x)]


def reconstruct_from_class(P: int, delta: int, r: int) -> Solution:
    """Solution for a prime P lying in the (delta, r) progression class.

    s = (5*P*delta + 1)/r is integral with s = 4 (mod 5) by the class
    congruences; fails only when delta does not divide b*c (impossible
    for delta = 1).
    """
    cls = build_progression_class(delta, r)
    if P % cls.modulus != cls.residue:
        raise ValueError(
            f"P = {P} is not in the class {cls.residue} (mod {cls.modulus})"
        )
    N = 5 * P * delta + 1
    s, rem = divmod(N, r)
    assert rem == 0 and s % 5 == 4
    b, c = (r + 1) // 5, (s + 1) // 5
    if (b * c) % delta:
        raise DeltaFilterFailed(f"delta = {delta} does not divide b*c = {b * c}")
    A = b * c // delta
    lo, hi = min(b, c), max(b, c)
    return make_solution(P, A, lo * P, hi * P, SolutionClass.ED2)


def count_local_params(P: int, R: int, delta: int) -> int:
    """N(P; R, delta): admissible moduli r <= R dividing 5*P*delta + 1."""
    N = 5 * P * delta + 1
    return sum(1 for r in admissible_moduli(R, delta) if N % r == 0)


def li_estimate(x: int) -> float:
    """Integer-quadrature stand-in for Li(x): sum over k in [2, x] of 1/log k."""
    if x < 2:
        return 0.0
    return float(np.sum(1.0 / np.log(np.arange(2, x + 1, dtype=np.float64))))


def _scan_class(delta: int, r: int, x: int, li_x: float) -> ClassScan:
    cls = build_progression_class(delta, r)
    primes = class_primes(cls.residue, cls.modulus, x)
    first = int(primes[0]) if primes.size else None
    return ClassScan(
        delta=delta,
        r=r,
        modulus=cls.modulus,
        residue=cls.residue,
        primes_found=int(primes.size),
        first_prime=first,
        expected_li=li_x / euler_phi(cls.modulus),
    )


def average_local_params(x: int, R: int, delta: int) -> ScanReport:
    """Exact mean of N(P; R, delta) over primes P <= x, P = 1 (mod 5),
    with the per-class scans, per-prime counts, phi-harmonic sum and
    exceptional moduli.  A zero-prime range is flagged by average=None.
    """
    moduli = admissible_moduli(R, delta)
    mask = prime_mask(max(x, 2))
    primes1 = np.flatnonzero(mask)
    primes1 = primes1[primes1 % 5 == 1]
    primes1 = primes1[primes1 <= x]

    if primes1.size and 5 * delta * x + 1 <= _INT64_MAX:
        nvals = 5 * delta * primes1.astype(np.int64) + 1
        totals = np.zeros(primes1.size, dtype=np.int64)
        for r in moduli:
            totals += nvals % r == 0
        n_of_p = {int(p): int(n) for p, n in zip(primes1, totals)}
    else:  # arbitrary-precision fallback for out-of-int64 ranges
        n_of_p = {int(p): count_local_params(int(p), R, delta) for p in primes1}

    li_x = li_estimate(x)
    classes = tuple(_scan_class(delta, r, x, li_x) for r in moduli)
    total = sum(n_of_p.values())
    average = Fraction(total, len(n_of_p)) if n_of_p else None
    phi_sum = sum(
        (Fraction(1, euler_phi(5 * r)) for r in moduli), start=Fraction(0)
    )
    exceptional = tuple(c.r for c in classes if c.primes_found == 0)
    return ScanReport(
        x=x,
        R=R,
        delta=delta,
        prime_count=int(primes1.size),
        classes=classes,
        n_of_p=n_of_p,
        average=average,
        phi_sum=phi_sum,
        exceptional=exceptional,
    )


def exceptional_set(x: int, R: int, delta: int) -> list[int]:
    """Admissible r <= R whose progression class has no prime <= x."""
    out = []
    for r in admissible_moduli(R, delta):
        cls = build_progression_class(delta, r)
        if class_primes(cls.residue, cls.modulus, x).size == 0:
            out.append(r)
    return out


def fit_growth_constant(
    reports: dict[int, ScanReport]
) -> tuple[float, dict[int, float]]:
    """Least-squares slope of mean N(P; R, delta) against log R.

    The slope is a measured constant with residuals, never an asserted
    value; callers report it for inspection.
    """
    import math

    rs = sorted(R for R, rep in reports.items() if rep.average is not None)
    if len(rs) < 2:
        raise ValueError("need at least two R values with a defined mean")
    xs = [math.log(R) for R in rs]
    ys = [float(reports[R].average) for R in rs]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sum(
        (x - xbar) ** 2 for x in xs
    )
    residuals = {
        R: y - (ybar + slope * (x - xbar)) for R, x, y in zip(rs, xs, ys)
    }
    return slope, residuals
