"""Explicit colorings of Kneser graphs and transforms between consecutive n.

ladder_coloring is the partition by minimum element: A gets color 2i-1
when min(A) = i <= n-2k+1, and the k-subsets of the top 2k-1 elements
share the final color 2n-4k+2.  double_coloring doubles a proper coloring
into a local one by spreading colors onto odd values.  extend/reduce walk
a star-free coloring up and down between KG(n-1, k) and KG(n, k), trading
exactly two colors each way.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import Coloring, verify_local, verify_proper, verify_star_free
from .errors import (
    CascadeViolationError,
    InputError,
    InternalConsistencyError,
    PreconditionError,
)
from .graphs import KneserGraph
from .hilton_milner import IntersectingFamily, common_element, hm_bound
from .subsets import binomial, iter_colex_subsets


def ladder_coloring(n: int, k: int) -> Coloring:
    """The minimum-element partition of KG(n, k) with value 2n-4k+2."""
    if not (k >= 1 and n >= 2 * k):
        raise InputError(f"need n >= 2k >= 2, got ({n}, {k})")
    t = 2 * n - 4 * k + 2
    cut = n - 2 * k + 1
    colors = []
    for subset in iter_colex_subsets(n, k):
        m = subset[0]
        colors.append(2 * m - 1 if m <= cut else t)
    return Coloring(binomial(n, k), t, tuple(colors))


def double_coloring(g, c: Coloring) -> Coloring:
    """Map color i to 2i-1; a proper coloring becomes a local one.

    Distinct odd colors differ by at least 2, so no two used colors are
    consecutive and neither forbidden pattern can occur.
    """
    bad = verify_proper(g, c)
    if bad is not None:
        raise InputError(f"input is not proper: {bad.describe()}", violation=bad)
    doubled = Coloring(c.n_vertices, 2 * c.t - 1, tuple(2 * x - 1 for x in c.colors))
    check = verify_local(g, doubled)
    if check is not None:
        raise InternalConsistencyError(f"doubled coloring failed: {check.describe()}")
    return doubled


def extend_coloring(g: KneserGraph, c: Coloring) -> tuple[KneserGraph, Coloring]:
    """Extend a star-free coloring of KG(n, k) to KG(n+1, k) with range t+2.

    Vertices avoiding the new element n+1 keep their colors (they occupy
    exactly the first C(n, k) colex ranks of the larger graph); vertices
    containing n+1 form an independent set and all receive color t+2,
    leaving t+1 as an unused buffer.  The output is re-verified.
    """
    bad = verify_star_free(g, c)
    if bad is not None:
        raise InputError(f"input is not star-free: {bad.describe()}", violation=bad)
    big = KneserGraph(g.n + 1, g.k)
    new_color = c.t + 2
    colors = c.colors + (new_color,) * (big.n_vertices - g.n_vertices)
    extended = Coloring(big.n_vertices, c.t + 2, colors)
    check = verify_star_free(big, extended)
    if check is not None:
        raise InternalConsistencyError(f"extension failed: {check.describe()}")
    return big, extended


@dataclass(frozen=True)
class CascadeReport:
    """Outcome of checking that classes j-1 and j+1 stick to the common element."""

    color: int
    common: int
    ok: bool
    offender: Optional[int]  # vertex index, when ok is False
    offender_color: Optional[int]


def check_cascade(g: KneserGraph, c: Coloring, j: int) -> CascadeReport:
    """Verify every vertex colored j-1 or j+1 contains the common element of class j."""
    if not 1 <= j <= c.t:
        raise InputError(f"color {j} outside declared range 1..{c.t}")
    class_j = [v for v in range(g.n_vertices) if c.colors[v] == j]
    if not class_j:
        raise PreconditionError(f"color class {j} is empty")
    inter = (1 << g.n) - 1
    for v in class_j:
        inter &= g.masks[v]
    if inter == 0 or inter & (inter - 1):
        raise PreconditionError(
            f"class {j} has no singleton common intersection (mask {inter:b})"
        )
    i = inter.bit_length()
    bit = 1 << (i - 1)
    for color in (j - 1, j + 1):
        if not 1 <= color <= c.t:
            continue
        for v in range(g.n_vertices):
            if c.colors[v] == color and not g.masks[v] & bit:
                return CascadeReport(j, i, False, v, color)
    return CascadeReport(j, i, True, None, None)


@dataclass(frozen=True)
class ReduceResult:
    graph: KneserGraph
    coloring: Coloring
    common_element: int
    swapped: tuple[int, int]  # ground-set relabeling applied (i <-> n)


def reduce_coloring(g: KneserGraph, c: Coloring, j: int, *,
                    verify_input: bool = True) -> ReduceResult:
    """Collapse a big color class of KG(n, k) down to a coloring of KG(n-1, k).

    Requires class j to have at least hm_bound(n, k) members, which forces
    a unique common element i.  After relabeling the ground set so that
    i becomes n, every vertex colored j-1, j or j+1 contains n and drops
    out; the rest keep their color if <= j-2 and lose 2 if >= j+2.
    """
    n, k = g.n, g.k
    if n - 1 < 2 * k:
        raise InputError(f"KG({n - 1},{k}) is not defined; need n >= 2k+1 to reduce")
    if verify_input:
        bad = verify_star_free(g, c)
        if bad is not None:
            raise InputError(f"input is not star-free: {bad.describe()}", violation=bad)
    class_j = [v for v in range(g.n_vertices) if c.colors[v] == j]
    bound = hm_bound(n, k)
    if len(class_j) < bound:
        raise PreconditionError(
            f"class {j} has {len(class_j)} members, below the bound {bound}"
        )
    family = IntersectingFamily(n, k, tuple(g.vertex_subset(v) for v in class_j))
    i = common_element(family)
    cascade = check_cascade(g, c, j)
    if not cascade.ok:
        raise CascadeViolationError(
            f"vertex {cascade.offender} has color {cascade.offender_color} but avoids "
            f"element {i}; the input is not star-free (or not a minimum coloring)",
            offender=(cascade.offender, cascade.offender_color),
        )
    swap = {i: n, n: i}
    small = KneserGraph(n - 1, k)
    colors = []
    for subset in iter_colex_subsets(n - 1, k):
        original = tuple(sorted(swap.get(e, e) for e in subset))
        x = c.colors[g.index_of(original)]
        if x in (j - 1, j, j + 1):
            raise CascadeViolationError(
                f"vertex {original} colored {x} survives the collapse despite the "
                "cascade check; input inconsistent",
                offender=(g.index_of(original), x),
            )
        colors.append(x if x <= j - 2 else x - 2)
    reduced = Coloring(small.n_vertices, c.t - 2, tuple(colors))
    check = verify_star_free(small, reduced)
    if check is not None:
        raise InternalConsistencyError(f"reduction failed: {check.describe()}")
    return ReduceResult(small, reduced, i, (i, n))
