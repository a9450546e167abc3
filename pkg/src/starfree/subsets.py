"""k-subset arithmetic: exact binomials, colexicographic ranking, and the
size-then-colex linear order on subsets of [n].

All arithmetic is exact integer arithmetic; nothing here touches floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InputError


def binomial(a: int, b: int) -> int:
    """C(a, b) for a, b >= 0; returns 0 when b > a.

    Exact for any size (Python integers do not overflow).
    """
    if a < 0 or b < 0:
        raise InputError(f"binomial requires nonnegative arguments, got ({a}, {b})")
    return math.comb(a, b)


@dataclass(frozen=True)
class KSubset:
    """A k-element subset of [n] = {1, ..., n}, elements strictly increasing.

    The ground-set size travels with the subset so that subsets of
    different ground sets are never silently compared or ranked together.
    """

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"ground-set size must be nonnegative, got {self.n}")
        prev = 0
        for e in self.elements:
            if not isinstance(e, int):
                raise InputError(f"subset elements must be integers, got {e!r}")
            if e <= prev:
                raise InputError(
                    f"elements must be strictly increasing in 1..{self.n}, got {self.elements}"
                )
            prev = e
        if prev > self.n:
            raise InputError(f"element {prev} exceeds ground-set size {self.n}")

    @classmethod
    def from_iterable(cls, n: int, elements: Iterable[int]) -> "KSubset":
        elems = tuple(sorted(elements))
        return cls(n, elems)

    @property
    def k(self) -> int:
        return len(self.elements)

    @cached_property
    def mask(self) -> int:
        """Bitmask with bit (e-1) set for each element e."""
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    def text(self) -> str:
        """Canonical textual form: comma-separated ascending elements."""
        return ",".join(str(e) for e in self.elements)

    @classmethod
    def parse(cls, n: int, text: str) -> "KSubset":
        parts = text.split(",")
        try:
            elems = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise InputError(f"cannot parse subset text {text!r}") from exc
        return cls(n, elems)


def elements_to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def mask_to_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def colex_rank(s: KSubset) -> int:
    """Colexicographic rank: sum over positions i (1-based) of C(s_i - 1, i).

    A bijection between k-subsets of [n] and 0..C(n,k)-1.
    """
    return sum(binomial(e - 1, i + 1) for i, e in enumerate(s.elements))


def colex_rank_elements(elements: tuple[int, ...]) -> int:
    """colex_rank on a raw ascending element tuple."""
    return sum(binomial(e - 1, i + 1) for i, e in enumerate(elements))


def colex_unrank(rank: int, n: int, k: int) -> KSubset:
    """Inverse of colex_rank: the k-subset of [n] with the given rank."""
    if k < 0 or n < 0 or k > n:
        raise InputError(f"invalid (n, k) = ({n}, {k})")
    total = binomial(n, k)
    if not 0 <= rank < total:
        raise InputError(f"rank {rank} out of range 0..{total - 1} for C({n},{k})")
    out = []
    r = rank
    hi = n - 1  # candidate c = element - 1, scanned downward
    for i in range(k, 0, -1):
        c = i - 1
        while c + 1 <= hi and binomial(c + 1, i) <= r:
            c += 1
        out.append(c + 1)
        r -= binomial(c, i)
        hi = c - 1
    return KSubset(n, tuple(reversed(out)))


def iter_colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of [n] as ascending tuples, in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k, n + 1):
        for rest in iter_colex_subsets(last - 1, k - 1):
            yield rest + (last,)


def subset_order_key(s: Iterable[int]):
    """Sort key realizing the linear order: smaller size first, colex tie-break."""
    desc = tuple(sorted(set(s), reverse=True))
    return (len(desc), desc)


def subset_order_less(a: Iterable[int], b: Iterable[int]) -> bool:
    """Strict total order on finite integer sets: by size, then colex.

    Colex on equal sizes compares the largest differing element, so
    descending tuples compare lexicographically.
    """
    return subset_order_key(a) < subset_order_key(b)
