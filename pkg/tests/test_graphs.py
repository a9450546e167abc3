from itertools import combinations

import pytest

from starfree import (
    InputError,
    KneserGraph,
    ResourceLimitError,
    binomial,
    build_kneser,
    export_dimacs,
    induced_subgraph,
    parse_dimacs,
)
from starfree.graphs import Graph, cycle_graph, empty_graph, path_graph, star_graph


def brute_force_disjoint_pairs(g):
    return sum(
        1 for u, v in combinations(range(g.n_vertices), 2)
        if g.masks[u] & g.masks[v] == 0
    )


def test_kg42_is_perfect_matching():
    g = build_kneser(4, 2)
    assert g.n_vertices == 6
    assert g.n_edges == 3
    assert g.n_edges == brute_force_disjoint_pairs(g)
    assert all(g.degree(v) == 1 for v in range(6))
    for v in range(6):
        (w,) = g.neighbors(v)
        assert g.masks[v] ^ g.masks[w] == (1 << 4) - 1  # complements


def test_kg52_is_petersen():
    g = build_kneser(5, 2)
    assert g.n_vertices == 10
    assert g.n_edges == 15
    assert all(g.degree(v) == binomial(3, 2) for v in range(10))
    assert g.n_edges == brute_force_disjoint_pairs(g)


def test_kg52_girth_five():
    g = build_kneser(5, 2)
    for u, v, w in combinations(range(10), 3):
        assert not (g.adjacent(u, v) and g.adjacent(v, w) and g.adjacent(u, w))
    for quad in combinations(range(10), 4):
        for a, b, c, d in [
            (quad[0], quad[1], quad[2], quad[3]),
            (quad[0], quad[1], quad[3], quad[2]),
            (quad[0], quad[2], quad[1], quad[3]),
        ]:
            assert not (
                g.adjacent(a, b) and g.adjacent(b, c)
                and g.adjacent(c, d) and g.adjacent(d, a)
            )


def test_complement_graph_kg_2k_k():
    for k in (1, 2, 3):
        g = build_kneser(2 * k, k)
        assert all(g.degree(v) == 1 for v in range(g.n_vertices))


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 3)])
def test_edge_count_formula(n, k):
    g = build_kneser(n, k)
    assert g.n_edges == binomial(n, k) * binomial(n - k, k) // 2


def test_kneser_domain_validation():
    with pytest.raises(InputError):
        build_kneser(3, 2)
    with pytest.raises(InputError):
        build_kneser(2, 0)


def test_vertex_cap():
    with pytest.raises(ResourceLimitError) as exc:
        build_kneser(30, 10, max_vertices=1000)
    assert str(binomial(30, 10)) in str(exc.value)


def test_query_only_mode_agrees():
    eager = build_kneser(6, 2)
    lazy = build_kneser(6, 2, precompute=False)
    for v in range(eager.n_vertices):
        assert eager.neighbors(v) == lazy.neighbors(v)
    assert sorted(eager.edges()) == sorted(lazy.edges())


def test_index_subset_round_trip():
    g = build_kneser(7, 3)
    for v in range(g.n_vertices):
        assert g.index_of(g.subsets[v]) == v
    with pytest.raises(InputError):
        g.index_of((1, 2))  # wrong cardinality


def test_induced_subgraph_small_ground():
    g = build_kneser(5, 2)
    sub, vmap = induced_subgraph(g, {1, 2, 3})
    assert sub.n_vertices == 3
    assert sub.n_edges == 0
    assert len(vmap) == 3


def test_induced_subgraph_is_smaller_kneser():
    g = build_kneser(5, 2)
    sub, vmap = induced_subgraph(g, {1, 2, 3, 4})
    small = build_kneser(4, 2)
    # subsets of [4] have the same colex ranks inside KG(5,2)
    assert vmap == list(range(6))
    assert sorted(sub.edges()) == sorted(small.edges())


def test_induced_subgraph_identity():
    g = build_kneser(6, 3)
    sub, vmap = induced_subgraph(g, range(1, 7))
    assert vmap == list(range(g.n_vertices))
    assert sorted(sub.edges()) == sorted(g.edges())


def test_induced_subgraph_below_k_is_empty():
    g = build_kneser(6, 3)
    sub, vmap = induced_subgraph(g, {1, 2})
    assert sub.n_vertices == 0
    assert vmap == []


def test_dimacs_header_and_round_trip():
    g = build_kneser(4, 2)
    text = export_dimacs(g)
    assert text.splitlines()[0] == "p edge 6 3"
    back = parse_dimacs(text)
    assert back.n_vertices == g.n_vertices
    assert sorted(back.edges()) == sorted(g.edges())


def test_dimacs_empty_graph():
    text = export_dimacs(empty_graph(3))
    assert text == "p edge 3 0\n"
    back = parse_dimacs(text)
    assert back.n_vertices == 3 and back.n_edges == 0


def test_dimacs_rejects_garbage():
    with pytest.raises(InputError):
        parse_dimacs("e 1 2\n")
    with pytest.raises(InputError):
        parse_dimacs("p edge 3 5\ne 1 2\n")


def test_generic_graph_validation():
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    g = Graph(4, [(0, 1), (1, 0), (2, 3)])  # duplicate edge collapses
    assert g.n_edges == 2


def test_fixture_shapes():
    assert path_graph(4).n_edges == 3
    assert cycle_graph(5).n_edges == 5
    assert star_graph(3).degree(0) == 3
    assert empty_graph(2).n_edges == 0
    masks = path_graph(3).adjacency_masks()
    assert masks == [0b010, 0b101, 0b010]
