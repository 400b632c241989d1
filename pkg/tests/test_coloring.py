import pytest

from oracles import brute_chromatic, brute_clique_number, has_triangle

from chibound.coloring import (
    chi_local,
    chromatic_number,
    clique_number,
    is_k_colorable,
    is_vertex_critical,
    minimal_subset_with_chi,
)
from chibound.errors import ColoringBudgetExceeded
from chibound.generators import (
    complete_graph,
    cycle_graph,
    grotzsch,
    kneser,
    mycielski_tower,
    path_graph,
    petersen,
    random_graph,
    star_graph,
)
from chibound.graphs import Graph, distance


def corpus(count, sizes=(5, 6, 7, 8, 9), ps=("0.2", "0.4", "0.6", "0.8")):
    for i in range(count):
        yield random_graph(sizes[i % len(sizes)], ps[(i // len(sizes)) % len(ps)], 5000 + i)


def test_chromatic_basics():
    assert chromatic_number(Graph(0)) == (0, None)
    chi, w = chromatic_number(Graph(4))
    assert chi == 1 and w.check(Graph(4))
    assert chromatic_number(cycle_graph(5))[0] == 3
    assert chromatic_number(complete_graph(6))[0] == 6
    assert chromatic_number(petersen())[0] == 3


def test_grotzsch_chi_four():
    g = grotzsch()
    assert brute_chromatic(g) == 4
    chi, w = chromatic_number(g)
    assert chi == 4 and w.check(g) and w.color_count == 4


def test_is_k_colorable():
    assert is_k_colorable(complete_graph(4), 3) is None
    w = is_k_colorable(cycle_graph(6), 2)
    assert w is not None and w.check(cycle_graph(6))
    assert is_k_colorable(grotzsch(), 3) is None
    with pytest.raises(ValueError):
        is_k_colorable(cycle_graph(5), 0)


def test_chi_witness_is_optimal_and_proper():
    for g in corpus(60):
        chi, w = chromatic_number(g)
        if chi:
            assert w.check(g)
            assert max(w.colors) == chi
            assert is_k_colorable(g, chi) is not None
            if chi > 1:
                assert is_k_colorable(g, chi - 1) is None


def test_clique_number():
    assert clique_number(Graph(0)) == (0, ())
    tri_free = kneser(5, 2)
    omega, witness = clique_number(tri_free)
    assert omega == 2 and not has_triangle(tri_free)
    assert clique_number(complete_graph(5))[0] == 5
    for g in corpus(40):
        omega, clique = clique_number(g)
        assert omega == brute_clique_number(g)
        assert all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :])


def test_chi_at_least_omega_and_perfect_cases():
    for g in corpus(30):
        assert chromatic_number(g)[0] >= clique_number(g)[0]
    for g in (path_graph(7), cycle_graph(6), complete_graph(5)):
        assert chromatic_number(g)[0] == clique_number(g)[0]


def test_chi_local():
    assert chi_local(Graph(0), 1) == 0
    assert chi_local(Graph(0), 5) == 0
    assert chi_local(cycle_graph(5), 2) == 3
    for g in (star_graph(4), cycle_graph(5), petersen(), grotzsch(), mycielski_tower(3)):
        assert chi_local(g, 1) == 2  # triangle-free with an edge
    with pytest.raises(ValueError):
        chi_local(cycle_graph(5), 0)


def test_chi_local_monotone_and_bounded():
    for g in list(corpus(12)) + [petersen()]:
        chi = chromatic_number(g)[0]
        prev = 0
        for k in range(1, 4):
            cur = chi_local(g, k)
            assert prev <= cur <= chi
            prev = cur


def test_chi_local_reaches_chi_at_diameter():
    for g in (cycle_graph(7), petersen(), grotzsch()):
        diam = max(distance(g, u, v) for u in range(g.n) for v in range(g.n))
        assert chi_local(g, diam) == chromatic_number(g)[0]


def test_minimal_subset_with_chi():
    k5 = complete_graph(5)
    out = minimal_subset_with_chi(k5, range(5), 3)
    assert len(out) == 3
    c5 = cycle_graph(5)
    assert minimal_subset_with_chi(c5, range(5), 3) == frozenset(range(5))
    g11 = grotzsch()
    assert minimal_subset_with_chi(g11, range(11), 4) == frozenset(range(11))
    with pytest.raises(ValueError):
        minimal_subset_with_chi(c5, range(5), 4)


def test_minimal_subset_postcheck():
    from chibound.graphs import induced_subgraph

    for g in corpus(15):
        chi = chromatic_number(g)[0]
        if chi < 2:
            continue
        t = max(2, chi - 1)
        s = minimal_subset_with_chi(g, range(g.n), t)
        sub, _ = induced_subgraph(g, s)
        assert chromatic_number(sub)[0] >= t
        for v in s:
            smaller, _ = induced_subgraph(g, s - {v})
            assert chromatic_number(smaller)[0] < t


def test_vertex_critical():
    assert is_vertex_critical(cycle_graph(5))
    c5_plus = Graph(6, cycle_graph(5).edges())
    assert not is_vertex_critical(c5_plus)
    assert is_vertex_critical(grotzsch())


def test_agrees_with_brute_force_small():
    for g in corpus(150, sizes=(4, 5, 6, 7)):
        assert chromatic_number(g)[0] == brute_chromatic(g)


def test_budget_raises_with_bounds():
    g = mycielski_tower(3)
    with pytest.raises(ColoringBudgetExceeded):
        chromatic_number(g, node_budget=3)


def test_backends_agree():
    from chibound._kernels import pykernels

    try:
        from chibound._kernels import _ckernels
    except ImportError:
        pytest.skip("compiled kernels unavailable")
    for i, g in enumerate(corpus(60)):
        adj = list(g.adjacency_masks())
        assert pykernels.greedy_clique(g.n, adj) == _ckernels.greedy_clique(g.n, adj)
        assert pykernels.max_clique(g.n, adj) == _ckernels.max_clique(g.n, adj)
        for k in range(1, 5):
            assert pykernels.k_color(g.n, adj, k) == _ckernels.k_color(g.n, adj, k)
