import json
import random
from pathlib import Path

import pytest

from graphzeta.canonical import canonical_key
from graphzeta.graph import Graph, complete_graph, cycle_graph, is_connected, path_graph
from graphzeta.jacobian import jacobian_group
from graphzeta.rotor import (
    Rotor,
    RotorError,
    RotorGluing,
    load_rotor_spec,
    random_gluing,
    random_rotor,
    rotor_pair,
    rotor_problems,
    rotor_spec_from_json,
    validate_rotor,
)
from graphzeta.tutte import tutte_polynomial

DATA = Path(__file__).resolve().parent.parent / "data"


def _star3():
    # K_{1,3}: centre 3 fixed, leaves rotated
    return Rotor(Graph(4, [(0, 3), (1, 3), (2, 3)]), (1, 2, 0, 3), 3, 0)


def test_validation():
    assert validate_rotor(_star3())
    c6 = cycle_graph(6)
    assert validate_rotor(Rotor(c6, (2, 3, 4, 5, 0, 1), 3, 0))
    assert "order 6 unsupported" in rotor_problems(Rotor(c6, (1, 2, 3, 4, 5, 0), 6, 0))[0]
    # not an automorphism of a path
    assert any("edges" in p for p in rotor_problems(Rotor(path_graph(3), (1, 2, 0), 3, 0)))
    # fixed vertex has a trivial orbit
    assert any("orbit" in p for p in rotor_problems(Rotor(_star3().graph, (1, 2, 0, 3), 3, 3)))
    # theta of order 2 claimed to be order 4
    assert rotor_problems(Rotor(cycle_graph(4), (1, 0, 3, 2), 4, 0))
    assert "not a permutation" in rotor_problems(Rotor(cycle_graph(3), (0, 0, 1), 3, 0))[0]


def test_gluing_layout():
    base = path_graph(3)
    a, b = rotor_pair(_star3(), RotorGluing(base, (0, 1, 2)))
    assert a.vertex_count == b.vertex_count == 4
    assert a.edge_count == b.edge_count == 5


def test_gluing_errors():
    with pytest.raises(RotorError, match="injective"):
        rotor_pair(_star3(), RotorGluing(path_graph(3), (0, 0, 1)))
    with pytest.raises(RotorError, match="parallel"):
        rotor_pair(Rotor(cycle_graph(3), (1, 2, 0), 3, 0), RotorGluing(complete_graph(3), (0, 1, 2)))
    with pytest.raises(RotorError, match="needs 3"):
        rotor_pair(_star3(), RotorGluing(path_graph(3), (0, 1)))


def test_spec_file_pair():
    rotor, glue = load_rotor_spec(DATA / "rotor_order3.json")
    a, b = rotor_pair(rotor, glue)
    assert tutte_polynomial(a) == tutte_polynomial(b)
    assert canonical_key(a) != canonical_key(b)
    assert str(jacobian_group(a)) == "Z/14 x Z/5208"
    assert str(jacobian_group(b)) == "Z/2 x Z/36456"


def test_spec_dict_attachment():
    data = json.loads((DATA / "rotor_order3.json").read_text())
    rotor, glue = rotor_spec_from_json(data)
    orbit = rotor.orbit()
    data["attachment"] = {str(v): m for v, m in zip(orbit, glue.attachment)}
    assert rotor_spec_from_json(data)[1] == glue
    with pytest.raises(RotorError):
        rotor_spec_from_json({"rotor": {}})


@pytest.mark.parametrize("order", [3, 4, 5])
def test_random_rotors_are_valid(order):
    rng = random.Random(order)
    for _ in range(10):
        r = random_rotor(rng, order, orbits=2, fixed=rng.randint(0, 1), edge_orbits=rng.randint(1, 3))
        assert validate_rotor(r), rotor_problems(r)


def test_random_pairs_share_tutte():
    rng = random.Random(11)
    done = 0
    while done < 6:
        k = rng.choice([3, 4, 5])
        r = random_rotor(rng, k, orbits=2, fixed=1, edge_orbits=2)
        base = Graph(k, [(i, j) for j in range(k) for i in range(j) if rng.random() < 0.6])
        if not is_connected(base):
            continue
        try:
            a, b = rotor_pair(r, random_gluing(rng, r, base))
        except RotorError:
            continue
        assert tutte_polynomial(a) == tutte_polynomial(b)
        done += 1
