"""Griesmer bound and optimality classification.

Reports always state which notion of optimality they mean: length-optimal
(length meets the bound exactly) versus distance-optimal (no code of the same
length and dimension can have a larger distance).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf

LENGTH_OPTIMAL = "length-optimal"
DISTANCE_OPTIMAL = "distance-optimal"
NEITHER = "neither"
INFEASIBLE = "infeasible"


def griesmer_sum(k: int, d: int, p) -> int:
    """Minimum possible length of a [*, k, d] code over F_p:
    sum of ceil(d / p^i) for i in 0..k-1."""
    p = gf.check_prime(p)
    if k < 1 or d < 1:
        raise ValueError("griesmer_sum requires k >= 1 and d >= 1")
    total = 0
    q = 1
    for _ in range(k):
        total += -(-d // q)
        q *= p
    return total


@dataclass(frozen=True)
class OptimalityVerdict:
    griesmer_length: int
    gap: int
    classification: str

    def as_dict(self) -> dict:
        return {
            "griesmer_length": self.griesmer_length,
            "gap": self.gap,
            "classification": self.classification,
        }


def classify(n: int, k: int, d: int, p) -> OptimalityVerdict:
    """Grade an [n, k, d] code against the Griesmer bound.

    infeasible: n below the bound (no such code exists);
    length-optimal: n meets the bound exactly;
    distance-optimal: n is above the bound but d+1 would violate it.
    """
    p = gf.check_prime(p)
    if n < 1 or k < 1 or d < 1 or d > n:
        raise ValueError(f"invalid parameter triple [{n},{k},{d}]")
    g = griesmer_sum(k, d, p)
    gap = n - g
    if gap < 0:
        cls = INFEASIBLE
    elif gap == 0:
        cls = LENGTH_OPTIMAL
    elif griesmer_sum(k, d + 1, p) > n:
        cls = DISTANCE_OPTIMAL
    else:
        cls = NEITHER
    return OptimalityVerdict(g, gap, cls)
