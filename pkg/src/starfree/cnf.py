"""DIMACS CNF export of the coloring constraints, plus a brute-force
satisfiability oracle for cross-checking the search on tiny instances.

Variable x_{v,a} (vertex v gets color a) is numbered v*t + a for v in
0..N-1 and a in 1..t.  Per vertex there is one at-least-one clause; all
remaining clauses are purely negative, so at-most-one clauses are not
needed: projecting any model to one chosen true color per vertex cannot
re-violate a negative clause the full model satisfied.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .coloring import Coloring
from .errors import InputError, ResourceLimitError
from .solver import MODES

BRUTE_FORCE_VAR_CAP = 26


def cnf_var(v: int, a: int, t: int) -> int:
    return v * t + a


def cnf_clauses(g, t: int, mode: str) -> tuple[int, list[tuple[int, ...]]]:
    """(variable count, clause list) in the fixed deterministic order."""
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")
    if t < 1:
        raise InputError(f"t must be >= 1, got {t}")
    n = g.n_vertices
    clauses: list[tuple[int, ...]] = []
    for v in range(n):
        clauses.append(tuple(cnf_var(v, a, t) for a in range(1, t + 1)))
    for u, v in sorted(g.edges()):
        for a in range(1, t + 1):
            clauses.append((-cnf_var(u, a, t), -cnf_var(v, a, t)))
    if mode in ("star-free", "local"):
        for v in range(n):
            nbrs = g.neighbors(v)
            for i in range(len(nbrs)):
                for j in range(i + 1, len(nbrs)):
                    u, w = nbrs[i], nbrs[j]
                    for a in range(1, t + 1):
                        for b in (a - 1, a + 1):
                            if 1 <= b <= t:
                                clauses.append((
                                    -cnf_var(u, a, t),
                                    -cnf_var(w, a, t),
                                    -cnf_var(v, b, t),
                                ))
    if mode == "local":
        for u in range(n):
            for v in g.neighbors(u):
                if v <= u:
                    continue
                for w in g.neighbors(u):
                    if w <= v or not g.adjacent(v, w):
                        continue
                    for a in range(1, t - 1):
                        trio = (a, a + 1, a + 2)
                        for c1, c2, c3 in _permutations3(trio):
                            clauses.append((
                                -cnf_var(u, c1, t),
                                -cnf_var(v, c2, t),
                                -cnf_var(w, c3, t),
                            ))
    return n * t, clauses


def _permutations3(trio: tuple[int, int, int]):
    a, b, c = trio
    return ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a))


def export_cnf(g, t: int, mode: str) -> str:
    nvars, clauses = cnf_clauses(g, t, mode)
    lines = [f"p cnf {nvars} {len(clauses)}"]
    for clause in clauses:
        lines.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_cnf(text: str) -> tuple[int, list[tuple[int, ...]]]:
    nvars = None
    declared = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"line {lineno}: bad header {line!r}")
            nvars, declared = int(parts[2]), int(parts[3])
            continue
        lits = [int(x) for x in line.split()]
        if not lits or lits[-1] != 0:
            raise InputError(f"line {lineno}: clause must end with 0")
        clauses.append(tuple(lits[:-1]))
    if nvars is None:
        raise InputError("missing p cnf header")
    if declared is not None and declared != len(clauses):
        raise InputError(f"declared {declared} clauses, found {len(clauses)}")
    return nvars, clauses


def decode_model(n_vertices: int, t: int, true_vars: Iterable[int]) -> Coloring:
    """Project a model to a coloring: smallest true color per vertex."""
    true_set = set(true_vars)
    colors = []
    for v in range(n_vertices):
        chosen = None
        for a in range(1, t + 1):
            if cnf_var(v, a, t) in true_set:
                chosen = a
                break
        if chosen is None:
            raise InputError(f"model assigns no color to vertex {v}")
        colors.append(chosen)
    return Coloring(n_vertices, t, tuple(colors))


def sat_brute_force(nvars: int, clauses: list[tuple[int, ...]]) -> Optional[int]:
    """Exhaustive satisfiability over all 2^nvars assignments.

    Assignments are indexed 0..2^nvars-1 with bit i holding the value of
    variable i+1; each variable's truth table over all indices is one big
    integer, so a clause's violation set is a few bigint ANDs.  Returns a
    satisfying assignment index, or None if unsatisfiable.
    """
    if nvars > BRUTE_FORCE_VAR_CAP:
        raise ResourceLimitError(
            f"{nvars} variables exceeds the brute-force cap {BRUTE_FORCE_VAR_CAP}"
        )
    space = 1 << nvars
    full = (1 << space) - 1
    patterns: dict[int, int] = {}

    def pattern(i: int) -> int:
        # bits of assignment indices where 0-based variable i is true
        p = patterns.get(i)
        if p is None:
            block = 1 << i
            period = ((1 << block) - 1) << block
            p = period * (full // ((1 << (2 * block)) - 1))
            patterns[i] = p
        return p

    bad = 0
    for clause in clauses:
        viol = full
        for lit in clause:
            i = abs(lit) - 1
            viol &= pattern(i) if lit < 0 else (full ^ pattern(i))
            if not viol:
                break
        bad |= viol
        if bad == full:
            return None
    good = full ^ bad
    if not good:
        return None
    low = good & -good
    return low.bit_length() - 1


def true_vars_of_assignment(assignment: int, nvars: int) -> set[int]:
    return {i + 1 for i in range(nvars) if (assignment >> i) & 1}
