"""Kneser graphs KG(n, k) and small generic graphs.

Vertices of KG(n, k) are the k-subsets of [n] indexed by colex rank
(0-based); two vertices are adjacent exactly when the subsets are
disjoint.  Indexing by colex rank keeps files, solver branching and
reports reproducible across runs.
"""
from __future__ import annotations

from bisect import bisect_left
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, ResourceLimitError
from .subsets import (
    KSubset,
    binomial,
    elements_to_mask,
    iter_colex_subsets,
)

DEFAULT_MAX_VERTICES = 10**6


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted neighbor lists."""

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]]):
        if n_vertices < 0:
            raise InputError(f"vertex count must be nonnegative, got {n_vertices}")
        self.n_vertices = n_vertices
        adj: list[set[int]] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise InputError(f"edge ({u}, {v}) out of range for {n_vertices} vertices")
            if u == v:
                raise InputError(f"loop at vertex {u} not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self.n_edges = sum(len(s) for s in adj) // 2
        self._adj_masks: list[int] | None = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        nbrs = self._adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n_vertices):
            for v in self._adj[u]:
                if v > u:
                    yield (u, v)

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks, built once on demand."""
        if self._adj_masks is None:
            masks = []
            for v in range(self.n_vertices):
                m = 0
                for u in self._adj[v]:
                    m |= 1 << u
                masks.append(m)
            self._adj_masks = masks
        return self._adj_masks


class KneserGraph:
    """KG(n, k): k-subsets of [n], adjacency = disjointness.

    Supports the same query surface as Graph.  With precompute=False only
    the subset masks are stored and neighborhoods are generated on demand,
    which keeps large sweeps cheap on memory.
    """

    def __init__(self, n: int, k: int, *, max_vertices: int = DEFAULT_MAX_VERTICES,
                 precompute: bool = True):
        if not (k >= 1 and n >= 2 * k):
            raise InputError(f"KG(n, k) requires n >= 2k >= 2, got (n, k) = ({n}, {k})")
        count = binomial(n, k)
        if count > max_vertices:
            raise ResourceLimitError(
                f"KG({n},{k}) has C({n},{k}) = {count} vertices, over the cap {max_vertices}"
            )
        self.n = n
        self.k = k
        self.n_vertices = count
        self.subsets: tuple[tuple[int, ...], ...] = tuple(iter_colex_subsets(n, k))
        self.masks: tuple[int, ...] = tuple(elements_to_mask(s) for s in self.subsets)
        self._rank_of_mask = {m: i for i, m in enumerate(self.masks)}
        self._degree = binomial(n - k, k)
        self.n_edges = count * self._degree // 2
        self._adj: tuple[tuple[int, ...], ...] | None = None
        self._adj_masks: list[int] | None = None
        if precompute:
            self._adj = tuple(
                tuple(sorted(self._neighbor_ranks(v))) for v in range(count)
            )

    def _neighbor_ranks(self, v: int) -> Iterator[int]:
        mask = self.masks[v]
        rest = [e for e in range(1, self.n + 1) if not (mask >> (e - 1)) & 1]
        for comb in combinations(rest, self.k):
            yield self._rank_of_mask[elements_to_mask(comb)]

    def vertex_subset(self, v: int) -> KSubset:
        return KSubset(self.n, self.subsets[v])

    def index_of(self, elements: Iterable[int]) -> int:
        """Colex rank of the vertex with the given elements."""
        mask = elements_to_mask(elements)
        try:
            return self._rank_of_mask[mask]
        except KeyError:
            raise InputError(f"{tuple(elements)} is not a vertex of KG({self.n},{self.k})")

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._adj is not None:
            return self._adj[v]
        return tuple(sorted(self._neighbor_ranks(v)))

    def degree(self, v: int) -> int:
        return self._degree

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and (self.masks[u] & self.masks[v]) == 0

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n_vertices):
            for v in self.neighbors(u):
                if v > u:
                    yield (u, v)

    def adjacency_masks(self) -> list[int]:
        if self._adj_masks is None:
            masks = []
            for v in range(self.n_vertices):
                m = 0
                for u in self.neighbors(v):
                    m |= 1 << u
                masks.append(m)
            self._adj_masks = masks
        return self._adj_masks


def build_kneser(n: int, k: int, *, max_vertices: int = DEFAULT_MAX_VERTICES,
                 precompute: bool = True) -> KneserGraph:
    """Construct KG(n, k); errors out when C(n, k) exceeds the vertex cap."""
    return KneserGraph(n, k, max_vertices=max_vertices, precompute=precompute)


def induced_subgraph(g: KneserGraph, ground: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph of KG(n, k) induced by all k-subsets of ``ground``.

    Returns (graph, vertex_map) where vertex_map[i] is the rank in g of
    the i-th vertex of the subgraph.  Fewer than k ground elements give
    the empty graph.
    """
    elems = sorted(set(ground))
    for e in elems:
        if not 1 <= e <= g.n:
            raise InputError(f"ground element {e} outside 1..{g.n}")
    if len(elems) < g.k:
        return Graph(0, []), []
    vertex_map = sorted(g.index_of(c) for c in combinations(elems, g.k))
    local = {v: i for i, v in enumerate(vertex_map)}
    edges = []
    for i, v in enumerate(vertex_map):
        mask = g.masks[v]
        rest = [e for e in elems if not (mask >> (e - 1)) & 1]
        for comb in combinations(rest, g.k):
            w = g.index_of(comb)
            j = local[w]
            if j > i:
                edges.append((i, j))
    return Graph(len(vertex_map), edges), vertex_map


def export_dimacs(g) -> str:
    """DIMACS edge format, 1-based vertex ids, edge lines sorted."""
    lines = [f"p edge {g.n_vertices} {g.n_edges}"]
    for u, v in sorted(g.edges()):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format produced by export_dimacs (comments allowed)."""
    n = None
    declared_edges = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"line {lineno}: bad problem line {line!r}")
            n, declared_edges = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: bad edge line {line!r}")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise InputError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise InputError("missing problem line")
    g = Graph(n, edges)
    if declared_edges is not None and g.n_edges != declared_edges:
        raise InputError(f"declared {declared_edges} edges, found {g.n_edges}")
    return g


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K(1, leaves) with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [])
