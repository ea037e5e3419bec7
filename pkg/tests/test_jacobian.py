from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from graphzeta.enumerate import enumerate_connected_graphs
from graphzeta.graph import Graph, GraphError, complete_graph, cycle_graph, path_graph, wedge_sum
from graphzeta.jacobian import (
    AbelianGroup,
    duality_pairing,
    jacobian_group,
    jacobian_presentation,
    laplacian,
    pair_divisors,
    pairing_automorphism_count,
    reduced_laplacian,
    spanning_tree_count,
)

from conftest import random_connected
from test_linalg import _determinantal_factors


def test_group_normalization():
    assert AbelianGroup.from_orders([42, 7]).invariant_factors == (7, 42)
    assert AbelianGroup.from_orders([4, 6]).invariant_factors == (2, 12)
    assert AbelianGroup.from_orders([5, 25]) != AbelianGroup.from_orders([125])
    assert AbelianGroup.from_orders([2, 3]) == AbelianGroup((6,))
    assert AbelianGroup.from_orders([1, 1]) == AbelianGroup(())
    with pytest.raises(ValueError):
        AbelianGroup((4, 6))
    g = AbelianGroup.from_orders([5, 25])
    assert str(g) == "Z/5 x Z/25"
    assert AbelianGroup.parse(str(g)) == g
    assert str(AbelianGroup(())) == "0" and AbelianGroup.parse("0").order == 1


def test_known_jacobians():
    assert jacobian_group(complete_graph(3)).invariant_factors == (3,)
    assert jacobian_group(cycle_graph(7)).invariant_factors == (7,)
    assert jacobian_group(path_graph(5)).invariant_factors == ()
    # Jac(K_n) = (Z/n)^(n-2)
    assert jacobian_group(complete_graph(5)).invariant_factors == (5, 5, 5)
    # wedge sums take direct products
    w = wedge_sum(cycle_graph(4), 0, cycle_graph(6), 0)
    assert jacobian_group(w) == AbelianGroup.from_orders([4, 6])


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        jacobian_group(Graph(3, [(0, 1)]))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_against_determinantal_divisors(n):
    for g in enumerate_connected_graphs(n):
        ref = [d for d in _determinantal_factors(reduced_laplacian(g)) if d > 1]
        assert list(jacobian_group(g).invariant_factors) == ref


def test_order_equals_spanning_trees_networkx(rng):
    for _ in range(40):
        g = random_connected(rng, rng.randint(3, 10))
        h = nx.Graph(list(g.edges))
        trees = round(nx.number_of_spanning_trees(h))
        assert spanning_tree_count(g) == trees
        assert jacobian_group(g).order == trees


def test_presentation_coordinates(rng):
    for _ in range(25):
        g = random_connected(rng, rng.randint(3, 8))
        pres = jacobian_presentation(g)
        n = g.vertex_count
        lap = laplacian(g)
        # principal divisors have coordinate zero
        for row in lap:
            assert pres.coordinates(row) == tuple(0 for _ in pres.factors)
        # generator i has coordinates e_i
        for i, gen in enumerate(pres.generators):
            assert sum(gen) == 0
            expect = tuple(1 if j == i else 0 for j in range(len(pres.factors)))
            assert pres.coordinates(gen) == expect
        # the vertex classes generate the whole group
        seen = {tuple(0 for _ in pres.factors)}
        gens = pres.vertex_coordinates(0)
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for a in gens:
                    y = tuple((xi + ai) % d for xi, ai, d in zip(x, a, pres.factors))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        assert len(seen) == pres.group.order
        assert n == len(gens)


def test_pairing_triangle():
    k3 = complete_graph(3)
    gamma = [-1, 1, 0]
    assert pair_divisors(k3, gamma, gamma) == Fraction(2, 3)
    assert pair_divisors(k3, gamma, [-2, 2, 0]) == Fraction(1, 3)
    form = duality_pairing(k3)
    assert form.gram == ((Fraction(2, 3),),)
    assert pairing_automorphism_count(jacobian_group(k3), form) == 2


def test_pairing_automorphisms_small():
    two_cycle = Graph(2, [(0, 1), (0, 1)])
    form = duality_pairing(two_cycle)
    assert form.factors == (2,)
    assert pairing_automorphism_count(jacobian_group(two_cycle), form) == 1
    tree = path_graph(3)
    assert pairing_automorphism_count(jacobian_group(tree), duality_pairing(tree)) == 1
    # Z/2 x Z/2 with a diagonal form: only the identity and the swap preserve it
    c4 = cycle_graph(4)
    w = wedge_sum(Graph(2, [(0, 1), (0, 1)]), 0, Graph(2, [(0, 1), (0, 1)]), 0)
    f = duality_pairing(w)
    assert f.factors == (2, 2)
    assert pairing_automorphism_count(jacobian_group(w), f) == 2
    assert pairing_automorphism_count(jacobian_group(c4), duality_pairing(c4)) == 2


def _pinv_pairing(g, d1, d2):
    lp = np.linalg.pinv(np.array(laplacian(g), dtype=float))
    return float(np.array(d1) @ lp @ np.array(d2)) % 1.0


def test_pairing_matches_pseudoinverse(rng):
    for _ in range(30):
        g = random_connected(rng, rng.randint(3, 8))
        n = g.vertex_count
        d1 = [rng.randint(-3, 3) for _ in range(n)]
        d2 = [rng.randint(-3, 3) for _ in range(n)]
        d1[0] -= sum(d1)
        d2[0] -= sum(d2)
        ours = float(pair_divisors(g, d1, d2))
        ref = _pinv_pairing(g, d1, d2)
        assert min(abs(ours - ref), 1 - abs(ours - ref)) < 1e-8


def test_pairing_form_properties(rng):
    for _ in range(20):
        g = random_connected(rng, rng.randint(4, 8))
        pres = jacobian_presentation(g)
        form = duality_pairing(g, pres)
        fs = form.factors
        k = len(fs)
        for i in range(k):
            for j in range(k):
                assert form.gram[i][j] == form.gram[j][i]
                assert (form.gram[i][j] * fs[i]) % 1 == 0
        # nondegenerate: only 0 pairs trivially with every generator
        if pres.group.order <= 400:
            from itertools import product

            for x in product(*(range(d) for d in fs)):
                if any(x):
                    assert any(form.pair(x, [1 if t == j else 0 for t in range(k)]) for j in range(k))
