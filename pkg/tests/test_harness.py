import random

import pytest

from graphzeta.enumerate import enumerate_connected_graphs
from graphzeta.graph import Graph, complete_graph, cycle_graph, path_graph, to_graph6
from graphzeta.harness import ConsistencyError, compute_invariants, search_pairs
from graphzeta.jacobian import jacobian_group
from graphzeta.tutte import tutte_polynomial
from graphzeta.zeta import zeta_function


def _corpus(n):
    return [(to_graph6(g), g) for g in enumerate_connected_graphs(n)]


def test_report_fields():
    r = compute_invariants(complete_graph(4))
    data = r.to_json()
    assert data["id"] == "C~"
    assert data["jacobian"] == [4, 4] and data["jacobian_text"] == "Z/4 x Z/4"
    assert data["spanning_trees"] == "16"
    assert data["zeta"]["J"] == "16"
    # K4 is not hyperelliptic: no degree-2 class moves
    assert data["flags"] == {"cyclic": False, "has_degree2_h2": False}
    assert "graph: C~" in r.to_text()


def test_degree2_flag():
    assert compute_invariants(path_graph(4)).flags["has_degree2_h2"] is False
    assert compute_invariants(cycle_graph(5)).flags["has_degree2_h2"] is True
    # genus 2 graphs: hyperelliptic ones have a g^1_2; theta graph K4 - e does
    k4e = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert compute_invariants(k4e).flags["has_degree2_h2"] is True


def test_partial_report():
    r = compute_invariants(cycle_graph(4), "c4", tutte=False, zeta=False)
    assert r.tutte is None and r.zeta is None
    assert r.to_json()["zeta"] is None


def test_consistency_violation(monkeypatch):
    import graphzeta.harness as h

    monkeypatch.setattr(h, "spanning_tree_count", lambda g: 999)
    with pytest.raises(ConsistencyError) as info:
        compute_invariants(complete_graph(3))
    assert info.value.diagnostics["spanning_trees"] == 999


def test_search_against_naive_pairs():
    corpus = _corpus(6)
    recs = search_pairs(corpus, ["jacobian"], ["tutte"])
    naive = set()
    graphs = dict(corpus)
    ids = sorted(graphs)
    jac = {i: jacobian_group(graphs[i]) for i in ids}
    tut = {i: tutte_polynomial(graphs[i]) for i in ids}
    for x in range(len(ids)):
        for y in range(x + 1, len(ids)):
            a, b = ids[x], ids[y]
            if jac[a] == jac[b] and tut[a] != tut[b]:
                naive.add((a, b))
    assert {(r.first, r.second) for r in recs} == naive
    assert naive


def test_search_zeta_tutte_consistency():
    corpus = _corpus(6)
    recs = search_pairs(corpus, ["tutte"], ["zeta"])
    for r in recs:
        g1, g2 = dict(corpus)[r.first], dict(corpus)[r.second]
        assert zeta_function(g1) != zeta_function(g2)


def test_search_order_independent():
    corpus = _corpus(6)
    shuffled = list(corpus)
    random.Random(3).shuffle(shuffled)
    args = (["zeta", "jacobian"], ["tutte"])
    assert search_pairs(corpus, *args) == search_pairs(shuffled, *args)


def test_search_parallel_matches_serial():
    corpus = _corpus(6)
    args = (["tutte"], ["zeta"])
    assert search_pairs(corpus, *args, jobs=2) == search_pairs(corpus, *args, jobs=1)


def test_compute_many_parallel():
    from graphzeta.harness import compute_many

    corpus = _corpus(5)
    serial = [r.to_json() for r in compute_many(corpus, jobs=1)]
    assert [r.to_json() for r in compute_many(corpus, jobs=2)] == serial
    assert [r["id"] for r in serial] == [gid for gid, _ in corpus]


def test_search_argument_errors():
    with pytest.raises(ValueError):
        search_pairs([], ["tutte"], ["tutte"])
    with pytest.raises(ValueError):
        search_pairs([], [], ["tutte"])
    with pytest.raises(ValueError):
        search_pairs([], ["tutte"], [])
    with pytest.raises(ValueError):
        search_pairs([], ["colour"], [])


def test_frozen_nine_vertex_pairs():
    # derived from a full 9-vertex run, rechecked with networkx Tutte and sympy SNF
    from pathlib import Path
    from graphzeta.graph import parse_graph6
    path = Path(__file__).resolve().parent.parent / "data" / "census9_pairs.txt"
    rows = [line.split() for line in path.read_text().splitlines() if not line.startswith("#")]
    assert len(rows) == 119
    assert len({s for r in rows for s in r[:2]}) == 98
    tuttes = set()
    for a, b, ja, jb in rows:
        ga, gb = parse_graph6(a), parse_graph6(b)
        assert ga.vertex_count == gb.vertex_count == 9
        ta = tutte_polynomial(ga)
        assert ta == tutte_polynomial(gb)
        assert str(jacobian_group(ga)).replace(" ", "") == ja
        assert str(jacobian_group(gb)).replace(" ", "") == jb
        assert ja != jb
        tuttes.add(ta)
    assert len(tuttes) == 33
