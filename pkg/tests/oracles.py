"""Independent brute-force oracles the tests check the package against.

These deliberately share no code with the implementations they audit:
factorial binomials, direct colex enumeration, the set-based definition
of a local coloring, naive path/triangle pattern scans, and exhaustive
coloring enumeration.
"""
from itertools import combinations, product


def factorial_binomial(a, b):
    if b > a:
        return 0
    fact = lambda x: 1 if x <= 1 else x * fact(x - 1)
    return fact(a) // (fact(b) * fact(a - b))


def colex_sorted_subsets(n, k):
    """All k-subsets of [n] sorted by the colex comparison (largest element last)."""
    subs = [tuple(sorted(c)) for c in combinations(range(1, n + 1), k)]
    return sorted(subs, key=lambda s: tuple(reversed(s)))


def local_coloring_ok_by_definition(g, colors):
    """For every S with 2 <= |S| <= 3 some pair differs by at least |E(G[S])|."""
    n = g.n_vertices
    for size in (2, 3):
        for S in combinations(range(n), size):
            m_s = sum(1 for u, v in combinations(S, 2) if g.adjacent(u, v))
            if m_s == 0:
                continue
            if not any(abs(colors[u] - colors[v]) >= m_s for u, v in combinations(S, 2)):
                return False
    return True


def proper_ok_naive(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges())


def star_free_ok_naive(g, colors):
    """Enumerate every path u-v-w and test for exactly two consecutive values."""
    if not proper_ok_naive(g, colors):
        return False
    for v in range(g.n_vertices):
        for u, w in combinations(g.neighbors(v), 2):
            used = {colors[u], colors[v], colors[w]}
            if len(used) == 2 and max(used) - min(used) == 1:
                return False
    return True


def local_ok_naive(g, colors):
    if not star_free_ok_naive(g, colors):
        return False
    for u, v, w in combinations(range(g.n_vertices), 3):
        if g.adjacent(u, v) and g.adjacent(v, w) and g.adjacent(u, w):
            used = sorted({colors[u], colors[v], colors[w]})
            if len(used) == 3 and used[2] - used[0] == 2:
                return False
    return True


def exists_coloring_brute(g, t, check):
    """Does any map V -> 1..t pass the given check?  Exhaustive."""
    for assignment in product(range(1, t + 1), repeat=g.n_vertices):
        if check(g, assignment):
            return True
    return False


def brute_existence_all_modes(g, t):
    """(proper, star-free, local) existence flags by one exhaustive scan."""
    found_proper = found_star = found_local = False
    for assignment in product(range(1, t + 1), repeat=g.n_vertices):
        if not proper_ok_naive(g, assignment):
            continue
        found_proper = True
        if not star_free_ok_naive(g, assignment):
            continue
        found_star = True
        if local_ok_naive(g, assignment):
            found_local = True
            return True, True, True
    return found_proper, found_star, found_local


def violation_is_genuine(g, coloring, violation):
    """Does the cited configuration exist in g and show the claimed colors?"""
    vs = violation.vertices
    cols = tuple(coloring.colors[v] for v in vs)
    if cols != violation.colors:
        return False
    if violation.kind == "edge":
        u, v = vs
        return g.adjacent(u, v) and cols[0] == cols[1]
    if violation.kind == "star":
        u, v, w = vs
        return (
            u != w
            and g.adjacent(u, v)
            and g.adjacent(v, w)
            and cols[0] == cols[2]
            and abs(cols[0] - cols[1]) == 1
        )
    if violation.kind == "triangle":
        u, v, w = vs
        used = sorted(cols)
        return (
            g.adjacent(u, v) and g.adjacent(v, w) and g.adjacent(u, w)
            and len(set(used)) == 3 and used[2] - used[0] == 2
            and used[1] - used[0] == 1
        )
    return False
