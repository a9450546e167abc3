"""Closed-form bounds and threshold checks for star-free colorings of KG(n, k).

Everything is exact integer arithmetic; rational thresholds are compared
cross-multiplied (e.g. n <= 8k/3 as 3n <= 8k, inclusive) so boundary
cases cannot be lost to floating point.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import InputError
from .hilton_milner import hm_bound
from .subsets import binomial

REFINED_LOWER_MIN_K = 81


def recursion_threshold(k: int) -> int:
    """n >= 2k^3 - 2k^2 - 2k + 4 guarantees the two-color recursion step.

    The weaker constant 2k^3 - 2k^2 - 2k + 3 already makes the underlying
    ratio inequality work (see theorem1_ratio_check); the stronger stated
    form is used throughout.
    """
    return 2 * k**3 - 2 * k**2 - 2 * k + 4


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k: int
    chi: int
    star_free_upper: int
    star_free_lower: int
    refined_lower_k81: Optional[int]
    hm_bound: int
    theorem3_applies: bool  # 3n <= 8k: doubling value is exact
    theorem1_applies: bool  # n >= recursion threshold
    exact_value_known: Optional[int]
    conjectured_value: int

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "BoundsReport":
        return cls(**d)


def report(n: int, k: int) -> BoundsReport:
    if not (k >= 2 and n >= 2 * k):
        raise InputError(f"need n >= 2k >= 4, got ({n}, {k})")
    chi = n - 2 * k + 2
    upper = 2 * n - 4 * k + 2
    lower = max(2 * chi - 10, chi)
    refined = max(2 * chi - 8, chi) if k >= REFINED_LOWER_MIN_K else None
    t3 = 3 * n <= 8 * k
    t1 = n >= recursion_threshold(k)
    return BoundsReport(
        n=n,
        k=k,
        chi=chi,
        star_free_upper=upper,
        star_free_lower=lower,
        refined_lower_k81=refined,
        hm_bound=hm_bound(n, k),
        theorem3_applies=t3,
        theorem1_applies=t1,
        exact_value_known=upper if t3 else None,
        conjectured_value=upper,
    )


def sweep(k_max: int = 8, n_max: int = 60) -> list[BoundsReport]:
    out = []
    for k in range(2, k_max + 1):
        for n in range(2 * k, n_max + 1):
            out.append(report(n, k))
    return out


def ineq1_holds(n: int, k: int) -> bool:
    """C(n-1, k-1) - C(n-k-1, k-1) + 2 <= k * C(n-2, k-2)."""
    if k < 3 or n < 2 * k:
        raise InputError(f"inequality stated for k >= 3 and n >= 2k, got ({n}, {k})")
    lhs = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 2
    return lhs <= k * binomial(n - 2, k - 2)


def ineq2_holds(a: int, b: int, k: int) -> bool:
    """a(a-b-2k+1) <= (a - (b+2k-1)/2)^2 <= (a-b)(a-b-1), checked times 4."""
    if k < 2 or a < 2 * k - 2 or not 1 <= b <= 2 * k - 3:
        raise InputError(
            f"stated for a >= 2k-2 and 1 <= b <= 2k-3, got a={a}, b={b}, k={k}"
        )
    mid4 = (2 * a - b - 2 * k + 1) ** 2
    return 4 * a * (a - b - 2 * k + 1) <= mid4 <= 4 * (a - b) * (a - b - 1)


def theorem1_ratio_check(n: int, k: int) -> bool:
    """n(n-1) / (k^2 (k-1)) >= 2(n-2k+1), cross-multiplied.

    The ratio equals C(n,k) / (k * C(n-2,k-2)); above the recursion
    threshold the inequality holds, below it no claim is made and the
    literal evaluation may come out False.
    """
    if k < 3:
        raise InputError(f"stated for k >= 3, got k={k}")
    return n * (n - 1) >= 2 * (n - 2 * k + 1) * k**2 * (k - 1)
