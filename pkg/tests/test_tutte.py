
import networkx as nx
import pytest
import sympy

from graphzeta.enumerate import enumerate_connected_graphs
from graphzeta.graph import Graph, GraphError, complete_graph, cycle_graph, path_graph, wedge_sum
from graphzeta.jacobian import spanning_tree_count
from graphzeta.poly import BivariatePolynomial
from graphzeta.tutte import TutteCache, tutte_by_subsets, tutte_polynomial

from conftest import random_connected

x, y = sympy.symbols("x y")


def _networkx_tutte(g):
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    expr = sympy.Poly(sympy.expand(nx.tutte_polynomial(h)), x, y)
    return BivariatePolynomial({k: int(c) for k, c in expr.as_dict().items()})


def _forests(g):
    edges = list(g.edges)
    count = 0
    for mask in range(1 << len(edges)):
        h = nx.Graph()
        h.add_nodes_from(range(g.vertex_count))
        h.add_edges_from(e for i, e in enumerate(edges) if mask >> i & 1)
        count += nx.is_forest(h)
    return count


def test_small_known():
    assert tutte_polynomial(complete_graph(3)).to_text() == "y + x + x^2"
    assert tutte_polynomial(path_graph(4)).to_text() == "x^3"
    assert tutte_polynomial(cycle_graph(4)).to_text() == "y + x + x^2 + x^3"
    # K4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    assert tutte_polynomial(complete_graph(4)) == BivariatePolynomial.from_text(
        "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3")
    assert tutte_polynomial(Graph(1, [])) == 1


def test_multigraph_loops_and_bundles():
    assert tutte_polynomial(Graph(2, [(0, 1)] * 3)).to_text() == "y + y^2 + x"
    assert tutte_polynomial(Graph(1, [(0, 0), (0, 0)])).to_text() == "y^2"
    g = Graph(3, [(0, 1), (0, 1), (1, 2), (0, 2), (2, 2)])
    assert tutte_polynomial(g) == tutte_by_subsets(g)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_subset_oracle_exhaustive(n):
    for g in enumerate_connected_graphs(n):
        assert tutte_polynomial(g, cache=None) == tutte_by_subsets(g)


def test_networkx_oracle(rng):
    for _ in range(15):
        g = random_connected(rng, rng.randint(4, 7), 0.5)
        assert tutte_polynomial(g) == _networkx_tutte(g)


def test_strategy_and_cache_independence(rng):
    for _ in range(15):
        g = random_connected(rng, rng.randint(5, 9), 0.5)
        ref = tutte_polynomial(g, cache=TutteCache())
        assert tutte_polynomial(g, strategy="min_degree", cache=None) == ref
        assert tutte_polynomial(g, strategy="random", seed=rng.randrange(99), cache=None) == ref
        perm = list(range(g.vertex_count))
        rng.shuffle(perm)
        assert tutte_polynomial(g.relabel(perm)) == ref


def test_evaluations(rng):
    for _ in range(20):
        g = random_connected(rng, rng.randint(3, 9), 0.5)
        t = tutte_polynomial(g)
        m, n = g.edge_count, g.vertex_count
        assert t.evaluate(1, 1) == spanning_tree_count(g)
        assert t.evaluate(2, 2) == 2**m
        if m <= 14:
            assert t.evaluate(2, 1) == _forests(g)
        assert t.degree(0) == n - 1
        assert t.degree(1) == m - n + 1


def test_wedge_multiplicative():
    a, b = complete_graph(4), cycle_graph(5)
    assert tutte_polynomial(wedge_sum(a, 1, b, 3)) == tutte_polynomial(a) * tutte_polynomial(b)


def test_cache_bounded():
    cache = TutteCache(max_entries=5)
    tutte_polynomial(complete_graph(7), cache=cache)
    assert len(cache) <= 5
    assert tutte_polynomial(complete_graph(7), cache=cache) == tutte_polynomial(complete_graph(7), cache=None)


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        tutte_polynomial(Graph(2, []))
