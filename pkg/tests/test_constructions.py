import random

import pytest

from starfree import (
    CascadeViolationError,
    Coloring,
    InputError,
    PreconditionError,
    build_kneser,
    check_cascade,
    coloring_value,
    double_coloring,
    extend_coloring,
    hm_bound,
    ladder_coloring,
    reduce_coloring,
    verify_local,
    verify_star_free,
)
from starfree.graphs import Graph, path_graph
from starfree.solver import decide


def test_ladder_examples_52():
    c = ladder_coloring(5, 2)
    g = build_kneser(5, 2)
    by_subset = {g.subsets[v]: c.colors[v] for v in range(10)}
    assert all(by_subset[s] == 1 for s in by_subset if s[0] == 1)
    assert all(by_subset[s] == 3 for s in by_subset if s[0] == 2)
    assert all(by_subset[s] == 4 for s in by_subset if s[0] >= 3)
    assert c.t == 4 and coloring_value(c) == 4


def test_ladder_small_ranges():
    assert ladder_coloring(4, 2).t == 2
    c = ladder_coloring(6, 2)
    assert sorted(set(c.colors)) == [1, 3, 5, 6]
    assert c.t == 6
    assert verify_local(build_kneser(6, 2), c) is None


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_ladder_is_local_with_exact_value(k):
    for n in range(2 * k, 13):
        c = ladder_coloring(n, k)
        target = 2 * n - 4 * k + 2
        assert c.t == target and coloring_value(c) == target
        assert verify_local(build_kneser(n, k), c) is None


def test_double_p3():
    g = path_graph(3)
    doubled = double_coloring(g, Coloring(3, 2, (1, 2, 1)))
    assert doubled.colors == (1, 3, 1) and doubled.t == 3
    assert verify_local(g, doubled) is None


def test_double_two_coloring_uses_one_three():
    g = path_graph(4)
    doubled = double_coloring(g, Coloring(4, 2, (1, 2, 1, 2)))
    assert set(doubled.colors) <= {1, 3}


def test_double_rejects_improper():
    g = path_graph(2)
    with pytest.raises(InputError) as exc:
        double_coloring(g, Coloring(2, 2, (2, 2)))
    assert exc.value.violation is not None


def test_double_petersen_three_coloring():
    g = build_kneser(5, 2)
    res = decide(g, 3, "proper")
    assert res.status == "SAT"
    doubled = double_coloring(g, res.witness)
    assert verify_local(g, doubled) is None
    assert coloring_value(doubled) <= 5


def greedy_proper_coloring(g, order):
    colors = [0] * g.n_vertices
    for v in order:
        used = {colors[u] for u in g.neighbors(v) if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(g.n_vertices, max(colors), tuple(colors))


def test_double_random_proper_colorings_are_local():
    rng = random.Random(42)
    graphs = []
    for _ in range(50):
        n = rng.randrange(2, 13)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        graphs.append(Graph(n, edges))
    checked = 0
    while checked < 200:
        g = graphs[checked % len(graphs)]
        order = list(range(g.n_vertices))
        rng.shuffle(order)
        c = greedy_proper_coloring(g, order)
        doubled = double_coloring(g, c)
        assert verify_local(g, doubled) is None
        assert doubled.t == 2 * c.t - 1
        checked += 1


def test_extend_optimal_kg42():
    g4 = build_kneser(4, 2)
    res = decide(g4, 2, "star-free")
    assert res.status == "SAT"
    g5, extended = extend_coloring(g4, res.witness)
    assert (g5.n, g5.k) == (5, 2)
    assert extended.t == 4
    assert verify_star_free(g5, extended) is None
    # the buffer color 3 is unused
    assert 3 not in extended.colors


def test_extend_twice_raises_range_by_four():
    g4 = build_kneser(4, 2)
    c = ladder_coloring(4, 2)
    g5, c5 = extend_coloring(g4, c)
    g6, c6 = extend_coloring(g5, c5)
    assert c6.t == c.t + 4
    assert verify_star_free(g6, c6) is None


def test_extend_rejects_non_star_free():
    g = build_kneser(4, 2)
    bad = Coloring(6, 2, (1, 2, 2, 2, 2, 1))
    assert verify_star_free(g, bad) is not None
    with pytest.raises(InputError):
        extend_coloring(g, bad)


def test_extend_preserves_star_free_on_ladders():
    for n, k in [(4, 2), (5, 2), (6, 3)]:
        g = build_kneser(n, k)
        c = ladder_coloring(n, k)
        big, extended = extend_coloring(g, c)
        assert verify_star_free(big, extended) is None
        assert coloring_value(extended) == coloring_value(c) + 2


def test_reduce_undoes_extend():
    g4 = build_kneser(4, 2)
    res = decide(g4, 2, "star-free")
    g5, extended = extend_coloring(g4, res.witness)
    # the new class (color 4, all pairs containing 5) has size 4 = hm_bound(5,2)
    assert sum(1 for c in extended.colors if c == 4) == hm_bound(5, 2)
    back = reduce_coloring(g5, extended, 4)
    assert back.common_element == 5
    assert back.coloring == res.witness
    assert back.swapped == (5, 5)


def test_reduce_interior_class_of_ladder():
    g = build_kneser(6, 2)
    c = ladder_coloring(6, 2)
    result = reduce_coloring(g, c, 3)  # class {min = 2}, size 4 = bound
    assert result.common_element == 2
    assert result.coloring.t == 4
    assert verify_star_free(result.graph, result.coloring) is None
    # classes j-1 = 2 and j+1 = 4 were empty, so only colors >= 5 shifted
    assert sorted(set(result.coloring.colors)) == [1, 3, 4]


def test_reduce_class_too_small():
    g = build_kneser(6, 2)
    c = ladder_coloring(6, 2)
    # class 5 = {min = 3} has 3 members < bound 4
    with pytest.raises(PreconditionError):
        reduce_coloring(g, c, 5)


def test_reduce_requires_room():
    g = build_kneser(4, 2)
    with pytest.raises(InputError):
        reduce_coloring(g, ladder_coloring(4, 2), 1)


def test_check_cascade_ladder_kg62():
    g = build_kneser(6, 2)
    c = ladder_coloring(6, 2)
    rep = check_cascade(g, c, 1)
    assert rep.ok and rep.common == 1


def test_check_cascade_vacuous_interior():
    g = build_kneser(6, 2)
    c = ladder_coloring(6, 2)
    rep = check_cascade(g, c, 3)  # neighbors classes 2 and 4 are empty
    assert rep.ok and rep.common == 2


def test_check_cascade_detects_planted_violation():
    g = build_kneser(6, 2)
    # class 2 = every pair containing 1 (common element 1, size 5 >= bound 4);
    # color 3 given to {2,3}, which avoids 1 -> cascade must fail
    colors = []
    for v in range(g.n_vertices):
        s = g.subsets[v]
        if 1 in s:
            colors.append(2)
        elif s == (2, 3):
            colors.append(3)
        else:
            colors.append(5)
    c = Coloring(g.n_vertices, 5, tuple(colors))
    rep = check_cascade(g, c, 2)
    assert not rep.ok
    assert g.subsets[rep.offender] == (2, 3) and rep.offender_color == 3
    with pytest.raises(CascadeViolationError):
        reduce_coloring(g, c, 2, verify_input=False)


def test_check_cascade_preconditions():
    g = build_kneser(6, 2)
    c = ladder_coloring(6, 2)
    with pytest.raises(PreconditionError):
        check_cascade(g, c, 2)  # empty class
    with pytest.raises(InputError):
        check_cascade(g, c, 9)  # out of range
