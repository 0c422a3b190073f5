"""Checked conversion formulas between the two witness shapes.

Forward (two-multiple -> one-multiple):

    gamma = (5c - 1)/P,   u = gamma*A - c,   v = gamma*B - c

Reverse (one-multiple -> two-multiple):

    A = (u + c)/gamma,   b = (v + c)/(gamma*P),   delta = b*c/A

Both directions apply the formulas only after checking every
divisibility precondition, then re-verify the target kernel; failures
come back as values, never exceptions.  For kernel-valid two-multiple
witnesses (5b-1)(5c-1) = 1 (mod P), so P never divides 5c - 1 and the
forward direction always fails its precondition; the tests pin that
down rather than hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ed1 import Ed1Witness, ed1_reconstruct
from .ed2 import Ed2Witness, ed2_reconstruct
from .errors import SerpError


@dataclass(frozen=True)
class BridgeResult:
    """Either a mapped witness or the first failed precondition."""

    witness: Ed1Witness | Ed2Witness | None = None
    reason: str | None = None

    @property
    def mapped(self) -> bool:
        return self.witness is not None

    @classmethod
    def ok(cls, witness) -> "BridgeResult":
        return cls(witness=witness)

    @classmethod
    def failed(cls, reason: str) -> "BridgeResult":
        return cls(reason=reason)

    def as_dict(self) -> dict:
        return {"mapped": self.mapped, "reason": self.reason}


def convolve_ed2_to_ed1(w: Ed2Witness) -> BridgeResult:
    """Apply the forward formulas; Mapped only if a full one-multiple
    witness re-verifies."""
    s = 5 * w.c - 1
    if s % w.P:
        return BridgeResult.failed(f"{w.P} does not divide 5c - 1 = {s}")
    gamma = s // w.P
    u = gamma * w.A - w.c
    v = gamma * w.B - w.c
    if u <= 0 or v <= 0:
        return BridgeResult.failed(f"non-positive pair u = {u}, v = {v}")
    if u > v:
        u, v = v, u
    candidate = Ed1Witness(w.P, gamma, w.c, u, v)
    try:
        ed1_reconstruct(candidate)
    except SerpError as exc:
        return BridgeResult.failed(f"target kernel re-verification failed: {exc}")
    return BridgeResult.ok(candidate)


def anticonvolve_ed1_to_ed2(
    q: tuple[int, int, int, int], P: int
) -> BridgeResult:
    """Apply the reverse formulas to a quadruple (gamma, c, u, v);
    Mapped only if a full two-multiple witness re-verifies."""
    gamma, c, u, v = q
    if gamma < 1 or c < 1:
        return BridgeResult.failed(f"need gamma, c >= 1, got ({gamma}, {c})")
    if (u + c) % gamma:
        return BridgeResult.failed(f"{gamma} does not divide u + c = {u + c}")
    A = (u + c) // gamma
    if (v + c) % gamma:
        return BridgeResult.failed(f"{gamma} does not divide v + c = {v + c}")
    if (v + c) % (gamma * P):
        return BridgeResult.failed(f"{P} does not divide (v + c)/gamma = {(v + c) // gamma}")
    b = (v + c) // (gamma * P)
    if A < 1 or b < 1:
        return BridgeResult.failed(f"non-positive A = {A} or b = {b}")
    if (b * c) % A:
        return BridgeResult.failed(f"A = {A} does not divide b*c = {b * c}")
    delta = b * c // A
    lo, hi = min(b, c), max(b, c)
    candidate = Ed2Witness(P, delta, lo, hi, 5 * lo - 1, 5 * hi - 1, A)
    try:
        ed2_reconstruct(candidate)
    except SerpError as exc:
        return BridgeResult.failed(f"target kernel re-verification failed: {exc}")
    return BridgeResult.ok(candidate)
