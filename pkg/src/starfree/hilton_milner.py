"""Large intersecting families of k-subsets.

An intersecting family is an independent set of KG(n, k).  Above the
Hilton-Milner size bound every intersecting family has a (unique) common
element; max_nonstar_intersecting searches exhaustively for the largest
family with *empty* common intersection and is the desk-scale oracle for
that bound being tight.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, PreconditionError, ResourceLimitError
from .subsets import KSubset, binomial, iter_colex_subsets, elements_to_mask, mask_to_elements

DEFAULT_ORACLE_VERTEX_CAP = 35


def hm_bound(n: int, k: int) -> int:
    """C(n-1, k-1) - C(n-k-1, k-1) + 2: the family size forcing a common element."""
    if not (k >= 2 and n >= 2 * k):
        raise InputError(f"Hilton-Milner bound needs n >= 2k >= 4, got ({n}, {k})")
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 2


@dataclass(frozen=True)
class IntersectingFamily:
    """A family of pairwise-intersecting k-subsets of [n]."""

    n: int
    k: int
    members: tuple[KSubset, ...]

    def __post_init__(self):
        masks = []
        for s in self.members:
            if s.n != self.n or s.k != self.k:
                raise InputError(
                    f"member {s.elements} is not a {self.k}-subset of [{self.n}]"
                )
            masks.append(s.mask)
        for i in range(len(masks)):
            for j in range(i + 1, len(masks)):
                if masks[i] & masks[j] == 0:
                    raise InputError(
                        f"members {self.members[i].elements} and "
                        f"{self.members[j].elements} are disjoint; family not intersecting"
                    )

    @classmethod
    def from_subsets(cls, n: int, k: int, subsets: Iterable[Iterable[int]]) -> "IntersectingFamily":
        return cls(n, k, tuple(KSubset.from_iterable(n, s) for s in subsets))


def common_element(family: IntersectingFamily) -> int:
    """The unique element shared by every member of a large-enough family."""
    bound = hm_bound(family.n, family.k)
    if len(family.members) < bound:
        raise PreconditionError(
            f"family of size {len(family.members)} is below the bound {bound}; "
            "no common element is forced"
        )
    inter = (1 << family.n) - 1
    for s in family.members:
        inter &= s.mask
    if inter == 0 or inter & (inter - 1):
        raise PreconditionError(
            f"common intersection is {mask_to_elements(inter)}, not a singleton; "
            "the family contradicts the Hilton-Milner theorem"
        )
    return inter.bit_length()


@dataclass(frozen=True)
class NonstarSearchResult:
    size: int
    witness: tuple[KSubset, ...]
    nodes: int


def max_nonstar_intersecting(n: int, k: int, *,
                             max_vertex_count: int = DEFAULT_ORACLE_VERTEX_CAP
                             ) -> NonstarSearchResult:
    """Largest intersecting family of k-subsets of [n] with empty common intersection.

    Exhaustive branch-and-bound over independent sets of KG(n, k).  Every
    nonempty family can be relabeled so that one member is {1..k}, so the
    search is rooted there.  Branches die when the size bound cannot beat
    the incumbent or when some element common to the current family occurs
    in every remaining candidate (the family could then never shed it).
    """
    if not (k >= 2 and n >= 2 * k):
        raise InputError(f"oracle needs n >= 2k >= 4, got ({n}, {k})")
    count = binomial(n, k)
    if count > max_vertex_count:
        raise ResourceLimitError(
            f"C({n},{k}) = {count} vertices exceeds the oracle cap {max_vertex_count}"
        )
    masks = [elements_to_mask(s) for s in iter_colex_subsets(n, k)]
    seed = masks[0]  # {1..k} has colex rank 0
    cands = [m for m in masks[1:] if m & seed]
    best_size = 0
    best_witness: tuple[int, ...] = ()
    nodes = 0

    def extend(chosen: list[int], common: int, cand: list[int]) -> None:
        nonlocal best_size, best_witness, nodes
        nodes += 1
        size = len(chosen)
        if common == 0 and size > best_size:
            best_size = size
            best_witness = tuple(chosen)
        if size + len(cand) <= best_size:
            return
        if common:
            stuck = common
            for m in cand:
                stuck &= m
                if not stuck:
                    break
            if stuck:
                return
        for idx, m in enumerate(cand):
            if size + len(cand) - idx <= best_size:
                break
            chosen.append(m)
            extend(chosen, common & m, [m2 for m2 in cand[idx + 1:] if m2 & m])
            chosen.pop()

    extend([seed], seed, cands)
    witness = tuple(KSubset.from_iterable(n, mask_to_elements(m)) for m in best_witness)
    return NonstarSearchResult(best_size, witness, nodes)
