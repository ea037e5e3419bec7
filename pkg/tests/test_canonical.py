import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphzeta.canonical import canonical_form, canonical_key, canonical_labeling
from graphzeta.graph import Graph, GraphError, complete_graph, cycle_graph, parse_graph6

from test_graph import simple_graphs


def _nx(g):
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=80)
@given(simple_graphs(max_n=9), st.randoms(use_true_random=False))
def test_key_invariant_under_relabeling(g, r):
    perm = list(range(g.vertex_count))
    r.shuffle(perm)
    assert canonical_key(g.relabel(perm)) == canonical_key(g)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_labeling_is_a_permutation():
    g = parse_graph6("FqKzw")
    perm = canonical_labeling(g)
    assert sorted(perm) == list(range(g.vertex_count))


def test_key_agrees_with_networkx_isomorphism():
    rng = random.Random(7)
    graphs = []
    for _ in range(120):
        n = rng.randint(4, 7)
        graphs.append(Graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.45]))
    for a, b in itertools.combinations(graphs, 2):
        if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
            continue
        assert (canonical_key(a) == canonical_key(b)) == nx.is_isomorphic(_nx(a), _nx(b))


def test_regular_graphs_distinguished():
    # 3-prism and K_{3,3}: both 3-regular on 6 vertices, refinement alone cannot split them
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    k33 = Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert canonical_key(prism) != canonical_key(k33)
    c6 = cycle_graph(6)
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(c6) != canonical_key(two_triangles)


def test_multigraph_keys():
    a = Graph(3, [(0, 1), (0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (1, 2), (0, 1)])
    c = Graph(3, [(0, 1), (1, 2), (1, 2), (1, 2)])
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(a) != canonical_key(c)


def test_size_limit():
    with pytest.raises(GraphError):
        canonical_key(complete_graph(13))
    assert canonical_key(complete_graph(13), max_vertices=13)
