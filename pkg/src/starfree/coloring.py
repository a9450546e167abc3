"""Colorings and their verification.

Three nested conditions on a coloring c:

  proper     no edge uv with c(u) = c(v)
  star-free  proper, and no path u-v-w whose colors are exactly two
             consecutive values {a, a+1} (equivalently: no vertex v with
             two distinct neighbors of equal color at distance 1 from c(v))
  local      star-free, and no triangle colored with exactly three
             consecutive values {a, a+1, a+2}

Verifiers return None on success or the first Violation in a fixed scan
order (ascending vertex index, then ascending neighbor index), so failing
inputs always produce the same certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InputError
from .subsets import colex_rank_elements, iter_colex_subsets


@dataclass(frozen=True)
class Violation:
    """Certificate for a failed verification.

    kind is one of "edge", "star", "triangle".  vertices lists 2 or 3
    vertex indices forming the claimed configuration: an edge (u, v), a
    path (u, v, w) with center v, or a triangle (u, v, w).
    """

    kind: str
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def describe(self) -> str:
        vs = ",".join(str(v) for v in self.vertices)
        cs = ",".join(str(c) for c in self.colors)
        return f"{self.kind} violation at vertices ({vs}) with colors ({cs})"


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in 1..t; colors need not exhaust 1..t."""

    n_vertices: int
    t: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.t < 1:
            raise InputError(f"declared range t must be >= 1, got {self.t}")
        if len(self.colors) != self.n_vertices:
            raise InputError(
                f"coloring covers {len(self.colors)} vertices, graph has {self.n_vertices}"
            )
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.t:
                raise InputError(f"vertex {v} has color {c} outside 1..{self.t}")

    def value(self) -> int:
        """Largest color actually used (0 for the empty graph)."""
        return max(self.colors, default=0)


def coloring_value(c: Coloring) -> int:
    return c.value()


def shift_colors(c: Coloring, offset: int) -> Coloring:
    """Add a constant to every color (and to the declared range)."""
    if offset < 0 and any(col + offset < 1 for col in c.colors):
        raise InputError(f"shift by {offset} would push colors below 1")
    return Coloring(c.n_vertices, c.t + offset, tuple(col + offset for col in c.colors))


def _check_compat(g, c: Coloring) -> None:
    if g.n_vertices != c.n_vertices:
        raise InputError(
            f"graph has {g.n_vertices} vertices, coloring covers {c.n_vertices}"
        )


def verify_proper(g, c: Coloring) -> Optional[Violation]:
    _check_compat(g, c)
    col = c.colors
    for u in range(g.n_vertices):
        cu = col[u]
        for v in g.neighbors(u):
            if v > u and col[v] == cu:
                return Violation("edge", (u, v), (cu, col[v]))
    return None


def verify_star_free(g, c: Coloring) -> Optional[Violation]:
    bad = verify_proper(g, c)
    if bad is not None:
        return bad
    col = c.colors
    for v in range(g.n_vertices):
        cv = col[v]
        first_with: dict[int, int] = {}
        for w in g.neighbors(v):
            cw = col[w]
            if abs(cw - cv) == 1 and cw in first_with:
                u = first_with[cw]
                return Violation("star", (u, v, w), (col[u], cv, cw))
            first_with.setdefault(cw, w)
    return None


def verify_local(g, c: Coloring) -> Optional[Violation]:
    bad = verify_star_free(g, c)
    if bad is not None:
        return bad
    col = c.colors
    for u in range(g.n_vertices):
        for v in g.neighbors(u):
            if v <= u:
                continue
            for w in g.neighbors(u):
                if w <= v or not g.adjacent(v, w):
                    continue
                a, b, d = sorted((col[u], col[v], col[w]))
                if a + 1 == b and b + 1 == d:
                    return Violation("triangle", (u, v, w), (col[u], col[v], col[w]))
    return None


VERIFIERS = {
    "proper": verify_proper,
    "star-free": verify_star_free,
    "local": verify_local,
}


# ---------------------------------------------------------------------------
# Coloring file format.
#
#   line 1:   KNESER <n> <k> <t>    or    GRAPH <N> <t>
#   then one line per vertex:  "<subset-text> <color>"  (KNESER case, e.g.
#   "1,3 2") or "<vertex-index> <color>" (GRAPH case, 0-based index).
#   Lines starting with '#' are comments.  Every vertex exactly once.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColoringFile:
    kind: str  # "KNESER" or "GRAPH"
    n: int  # ground-set size (KNESER) or vertex count (GRAPH)
    k: Optional[int]
    coloring: Coloring


def coloring_to_text(c: Coloring, *, kneser: Optional[tuple[int, int]] = None,
                     comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        for ln in comment.splitlines():
            lines.append(f"# {ln}")
    if kneser is not None:
        n, k = kneser
        lines.append(f"KNESER {n} {k} {c.t}")
        for rank, subset in enumerate(iter_colex_subsets(n, k)):
            lines.append(f"{','.join(map(str, subset))} {c.colors[rank]}")
    else:
        lines.append(f"GRAPH {c.n_vertices} {c.t}")
        for v in range(c.n_vertices):
            lines.append(f"{v} {c.colors[v]}")
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_coloring_text(text: str) -> ColoringFile:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise InputError("empty coloring file")
    parts = header.split()
    if parts[0] == "KNESER" and len(parts) == 4:
        n, k, t = (int(p) for p in parts[1:])
        from .subsets import binomial  # local import to avoid cycle at module load

        count = binomial(n, k)
        kind = "KNESER"
    elif parts[0] == "GRAPH" and len(parts) == 3:
        n, t = int(parts[1]), int(parts[2])
        k = None
        count = n
        kind = "GRAPH"
    else:
        raise InputError(f"line {lineno}: bad header {header!r}")
    assignment: list[Optional[int]] = [None] * count
    for lineno, line in lines:
        try:
            token, color_text = line.split()
            color = int(color_text)
        except ValueError:
            raise InputError(f"line {lineno}: expected '<vertex> <color>', got {line!r}")
        if kind == "KNESER":
            elems = tuple(int(p) for p in token.split(","))
            if len(elems) != k or len(set(elems)) != k or any(not 1 <= e <= n for e in elems):
                raise InputError(f"line {lineno}: {token!r} is not a {k}-subset of [{n}]")
            v = colex_rank_elements(tuple(sorted(elems)))
        else:
            v = int(token)
            if not 0 <= v < count:
                raise InputError(f"line {lineno}: vertex {v} out of range 0..{count - 1}")
        if assignment[v] is not None:
            raise InputError(f"line {lineno}: vertex {token!r} assigned twice")
        assignment[v] = color
    missing = sum(1 for c in assignment if c is None)
    if missing:
        raise InputError(f"{missing} of {count} vertices have no color")
    return ColoringFile(kind, n, k, Coloring(count, t, tuple(assignment)))  # type: ignore[arg-type]
