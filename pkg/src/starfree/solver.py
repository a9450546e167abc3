"""Exact decision and optimization for proper, star-free and local colorings.

decide(g, t, mode) runs a deterministic backtracking search over a fixed
vertex order (descending degree, ties by index).  A color a is rejected
at vertex v when

  (i)   some neighbor of v already has color a,
  (ii)  two colored neighbors of v share a color at distance 1 from a
        (v would become the center of a forbidden path),
  (iii) some colored neighbor u with |c(u) - a| = 1 already has another
        neighbor colored a (u would become the center), or
  (iv)  in local mode, coloring v with a completes a triangle whose three
        colors are consecutive.

Only the color reflection a -> t+1-a is a guaranteed symmetry of the
star-free constraint (arbitrary permutations reorder consecutive pairs),
so the first branched vertex is restricted to colors 1..ceil(t/2).
Exhaustion of this restricted tree is still a proof of UNSAT.

The search is single-threaded and deterministic: the witness returned is
the first solution in the fixed search order, and node counts are
reproducible.  A node budget turns the answer into UNKNOWN (never UNSAT).
"""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .coloring import VERIFIERS, Coloring
from .errors import InputError, InternalConsistencyError
from .graphs import KneserGraph

MODES = ("proper", "star-free", "local")
DEFAULT_NODE_BUDGET = 10**9

SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class DecideResult:
    status: str  # SAT | UNSAT | UNKNOWN
    witness: Optional[Coloring]
    stats: SearchStats


class _BudgetExceeded(Exception):
    pass


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")


def decide(g, t: int, mode: str, *, node_budget: int = DEFAULT_NODE_BUDGET,
           break_reflection: bool = True) -> DecideResult:
    """Find a verifier-passing coloring with range t, or prove none exists."""
    _check_mode(mode)
    if t < 1:
        raise InputError(f"t must be >= 1, got {t}")
    start = time.perf_counter()
    n = g.n_vertices
    if n == 0:
        return DecideResult(SAT, Coloring(0, t, ()), SearchStats(0, 0.0))

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    adj = [g.neighbors(v) for v in range(n)]
    adj_masks = g.adjacency_masks() if mode == "local" else None
    color = [0] * n
    # cnt[v][a] = colored neighbors of v with color a; padded at 0 and t+1
    cnt = [[0] * (t + 2) for _ in range(n)]
    star = mode != "proper"
    local = mode == "local"
    stats = SearchStats()
    budget = node_budget

    def feasible(v: int, a: int) -> bool:
        cnt_v = cnt[v]
        if cnt_v[a]:
            return False
        if star:
            if cnt_v[a - 1] >= 2 or cnt_v[a + 1] >= 2:
                return False
            for u in adj[v]:
                cu = color[u]
                if cu and (cu == a - 1 or cu == a + 1) and cnt[u][a]:
                    return False
        if local:
            mask_u = adj_masks
            for u in adj[v]:
                cu = color[u]
                if not cu:
                    continue
                d = cu - a
                if d == 1 or d == -1:
                    thirds = (min(cu, a) - 1, max(cu, a) + 1)
                elif d == 2 or d == -2:
                    thirds = ((cu + a) // 2,)
                else:
                    continue
                um = mask_u[u]
                for b in thirds:
                    if b < 1 or b > t:
                        continue
                    for w in adj[v]:
                        if color[w] == b and (um >> w) & 1:
                            return False
        return True

    def assign(v: int, a: int) -> None:
        color[v] = a
        for u in adj[v]:
            cnt[u][a] += 1

    def unassign(v: int, a: int) -> None:
        color[v] = 0
        for u in adj[v]:
            cnt[u][a] -= 1

    def search(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        top = (t + 1) // 2 if (pos == 0 and break_reflection) else t
        for a in range(1, top + 1):
            stats.nodes += 1
            if stats.nodes > budget:
                raise _BudgetExceeded
            if feasible(v, a):
                assign(v, a)
                if search(pos + 1):
                    return True
                unassign(v, a)
        return False

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 200))
    try:
        found = search(0)
    except _BudgetExceeded:
        stats.seconds = time.perf_counter() - start
        return DecideResult(UNKNOWN, None, stats)
    finally:
        sys.setrecursionlimit(old_limit)
    stats.seconds = time.perf_counter() - start
    if not found:
        return DecideResult(UNSAT, None, stats)
    witness = Coloring(n, t, tuple(color))
    check = VERIFIERS[mode](g, witness)
    if check is not None:
        raise InternalConsistencyError(f"search produced a bad witness: {check.describe()}")
    return DecideResult(SAT, witness, stats)


@dataclass
class SolveResult:
    mode: str
    status: str  # OPTIMAL | UNKNOWN
    optimum: Optional[int]
    witness: Optional[Coloring]
    lower: int
    upper: int
    interval: tuple[int, int]  # bracketing interval for the optimum
    total_nodes: int = 0
    total_seconds: float = 0.0
    per_t: list[tuple[int, str, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "status": self.status,
            "optimum": self.optimum,
            "witness": list(self.witness.colors) if self.witness else None,
            "witness_t": self.witness.t if self.witness else None,
            "lower": self.lower,
            "upper": self.upper,
            "interval": list(self.interval),
            "total_nodes": self.total_nodes,
            "total_seconds": self.total_seconds,
            "per_t": [list(row) for row in self.per_t],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SolveResult":
        witness = None
        if d["witness"] is not None:
            colors = tuple(d["witness"])
            witness = Coloring(len(colors), d["witness_t"], colors)
        return cls(
            mode=d["mode"],
            status=d["status"],
            optimum=d["optimum"],
            witness=witness,
            lower=d["lower"],
            upper=d["upper"],
            interval=tuple(d["interval"]),
            total_nodes=d["total_nodes"],
            total_seconds=d["total_seconds"],
            per_t=[tuple(row) for row in d["per_t"]],
        )


def kneser_default_bounds(n: int, k: int, mode: str) -> tuple[int, int]:
    """Seed bounds for KG(n, k): chromatic number below, ladder value above.

    For star-free and local modes the lower seed is max(chi, 2*chi - 10);
    that bound does not apply to plain proper coloring, whose optimum is
    the chromatic number n - 2k + 2 itself.
    """
    chi = n - 2 * k + 2
    upper = 2 * n - 4 * k + 2
    if mode == "proper":
        return chi, upper
    return max(chi, 2 * chi - 10), upper


def optimize(g, mode: str, *, lower: Optional[int] = None, upper: Optional[int] = None,
             node_budget: int = DEFAULT_NODE_BUDGET,
             verify_floor: bool = True) -> SolveResult:
    """Smallest t admitting a mode-valid coloring, by upward scan with decide.

    A SAT answer at the seeded lower bound is re-proved by descending until
    UNSAT (unless verify_floor is off), so the reported optimum never leans
    on the seed's correctness.
    """
    _check_mode(mode)
    if lower is None or upper is None:
        if isinstance(g, KneserGraph):
            lo, hi = kneser_default_bounds(g.n, g.k, mode)
        else:
            lo, hi = 1, max(1, 2 * g.n_vertices - 1)
        lower = lo if lower is None else lower
        upper = hi if upper is None else upper
    if lower < 1 or lower > upper:
        raise InputError(f"need 1 <= lower <= upper, got [{lower}, {upper}]")

    per_t: list[tuple[int, str, int]] = []
    total_nodes = 0
    total_seconds = 0.0

    def run(t: int) -> DecideResult:
        nonlocal total_nodes, total_seconds
        res = decide(g, t, mode, node_budget=node_budget)
        per_t.append((t, res.status, res.stats.nodes))
        total_nodes += res.stats.nodes
        total_seconds += res.stats.seconds
        return res

    optimum = None
    witness = None
    for t in range(lower, upper + 1):
        res = run(t)
        if res.status == UNKNOWN:
            return SolveResult(mode, UNKNOWN, None, None, lower, upper,
                               (t, upper), total_nodes, total_seconds, per_t)
        if res.status == SAT:
            optimum, witness = t, res.witness
            break
    if optimum is None:
        raise InputError(
            f"no {mode} coloring with range up to {upper}; the given upper bound is wrong"
        )
    if verify_floor:
        while optimum > 1:
            res = run(optimum - 1)
            if res.status == UNKNOWN:
                return SolveResult(mode, UNKNOWN, None, None, lower, upper,
                                   (1, optimum), total_nodes, total_seconds, per_t)
            if res.status == UNSAT:
                break
            optimum, witness = optimum - 1, res.witness
    return SolveResult(mode, "OPTIMAL", optimum, witness, lower, upper,
                       (optimum, optimum), total_nodes, total_seconds, per_t)
