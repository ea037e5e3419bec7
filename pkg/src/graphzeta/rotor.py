"""
Tutte's rotor construction.

A rotor of order ``k`` is a graph ``R`` with an automorphism ``theta`` of
order ``k`` and a vertex ``v`` whose orbit ``v, theta v, ..., theta^(k-1) v``
has ``k`` distinct elements.  Gluing the orbit into a base graph ``S`` in the
given order and in the reversed order (``theta^i v -> m(theta^(k-i) v)``)
gives two graphs with the same Tutte polynomial when ``k <= 5``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph, GraphError, is_connected

__all__ = [
    "Rotor",
    "RotorGluing",
    "RotorError",
    "SUPPORTED_ORDERS",
    "validate_rotor",
    "rotor_problems",
    "rotor_pair",
    "load_rotor_spec",
    "rotor_spec_from_json",
    "random_rotor",
    "random_gluing",
]

SUPPORTED_ORDERS = (3, 4, 5)


class RotorError(GraphError):
    pass


@dataclass(frozen=True)
class Rotor:
    graph: Graph
    theta: tuple[int, ...]
    order: int
    vertex: int

    def orbit(self) -> list[int]:
        """``[v, theta v, ..., theta^(k-1) v]``."""
        out = [self.vertex]
        for _ in range(self.order - 1):
            out.append(self.theta[out[-1]])
        return out


@dataclass(frozen=True)
class RotorGluing:
    """``attachment[i]`` is the base vertex that ``theta^i v`` is glued to in the first graph."""

    base: Graph
    attachment: tuple[int, ...]


def rotor_problems(r: Rotor) -> list[str]:
    """Reasons ``r`` is not a valid rotor (empty when it is)."""
    problems = []
    n = r.graph.vertex_count
    k = r.order
    if k not in SUPPORTED_ORDERS:
        problems.append(f"order {k} unsupported (only {SUPPORTED_ORDERS})")
    if sorted(r.theta) != list(range(n)):
        problems.append("theta is not a permutation of the rotor's vertices")
        return problems
    if not 0 <= r.vertex < n:
        problems.append("marked vertex out of range")
        return problems
    mult = r.graph.multiplicities()
    image = Graph(n, [(r.theta[a], r.theta[b]) for a, b in r.graph.edges]).multiplicities()
    if image != mult:
        problems.append("theta does not map edges to edges")
    power = list(range(n))
    for _ in range(max(k, 1)):
        power = [r.theta[x] for x in power]
    if power != list(range(n)):
        problems.append(f"theta^{k} is not the identity")
    orbit = r.orbit() if k >= 1 else []
    if len(set(orbit)) != k:
        problems.append("orbit of the marked vertex has repeated vertices")
    return problems


def validate_rotor(r: Rotor) -> bool:
    return not rotor_problems(r)


def _glue(r: Rotor, base: Graph, targets: Sequence[int]) -> Graph:
    orbit = r.orbit()
    where = dict(zip(orbit, targets))
    nb = base.vertex_count
    label = {}
    nxt = nb
    for v in range(r.graph.vertex_count):
        if v in where:
            label[v] = where[v]
        else:
            label[v] = nxt
            nxt += 1
    edges = list(base.edges) + [(label[a], label[b]) for a, b in r.graph.edges]
    return Graph(nxt, edges)


def rotor_pair(r: Rotor, glue: RotorGluing) -> tuple[Graph, Graph]:
    """The two gluings: ``theta^i v -> m_i`` and ``theta^i v -> m_{(k - i) mod k}``."""
    problems = rotor_problems(r)
    if problems:
        raise RotorError("invalid rotor: " + "; ".join(problems))
    k = r.order
    m = list(glue.attachment)
    if len(m) != k:
        raise RotorError(f"attachment map needs {k} entries, got {len(m)}")
    if len(set(m)) != k or not all(0 <= x < glue.base.vertex_count for x in m):
        raise RotorError("attachment map must be injective into the base vertices")
    first = _glue(r, glue.base, m)
    second = _glue(r, glue.base, [m[(k - i) % k] for i in range(k)])
    for g in (first, second):
        if not g.is_simple:
            raise RotorError("gluing creates parallel edges or loops")
        if not is_connected(g):
            raise RotorError("glued graph is disconnected")
    return first, second


def _edges(obj) -> list[tuple[int, int]]:
    return [(int(a), int(b)) for a, b in obj]


def _graph_from(obj: Mapping) -> Graph:
    edges = _edges(obj["edges"])
    n = obj.get("n")
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(int(n), edges)


def rotor_spec_from_json(data: Mapping) -> tuple[Rotor, RotorGluing]:
    """Build a rotor and gluing from a JSON object.

    Expected keys: ``rotor`` (``edges``, optional ``n``, ``theta``, ``order``,
    ``vertex``), ``base`` (``edges``, optional ``n``) and ``attachment``,
    either a list indexed by ``i`` (image of ``theta^i v``) or an object
    mapping rotor vertices to base vertices.
    """
    try:
        rd = data["rotor"]
        rgraph = _graph_from(rd)
        rotor = Rotor(rgraph, tuple(int(x) for x in rd["theta"]), int(rd["order"]), int(rd["vertex"]))
        base = _graph_from(data["base"])
        att = data["attachment"]
    except (KeyError, TypeError, ValueError) as exc:
        raise RotorError(f"malformed rotor spec: {exc}") from None
    if isinstance(att, Mapping):
        if rotor_problems(rotor):
            raise RotorError("invalid rotor: " + "; ".join(rotor_problems(rotor)))
        try:
            att = [int(att[str(v)]) if str(v) in att else int(att[v]) for v in rotor.orbit()]
        except KeyError as exc:
            raise RotorError(f"attachment map misses orbit vertex {exc}") from None
    return rotor, RotorGluing(base, tuple(int(x) for x in att))


def load_rotor_spec(path) -> tuple[Rotor, RotorGluing]:
    with open(path) as fh:
        return rotor_spec_from_json(json.load(fh))


def random_rotor(rng: random.Random, order: int, orbits: int = 2, fixed: int = 0,
                 edge_orbits: int = 3) -> Rotor:
    """Random rotor with ``orbits`` free orbits of size ``order`` plus ``fixed`` fixed vertices.

    Vertex ``i * order + j`` is the ``j``-th element of orbit ``i``; fixed
    vertices come last.  Edges are added a whole theta-orbit at a time, so
    theta is an automorphism by construction.
    """
    k = order
    n = orbits * k + fixed
    theta = [0] * n
    for i in range(orbits):
        for j in range(k):
            theta[i * k + j] = i * k + (j + 1) % k
    for f in range(orbits * k, n):
        theta[f] = f
    edges = set()
    for _ in range(edge_orbits):
        a, b = rng.sample(range(n), 2)
        x, y = a, b
        for _ in range(k):
            edges.add((min(x, y), max(x, y)))
            x, y = theta[x], theta[y]
    # keep the graph connected enough to be interesting: tie each orbit to the first one
    for i in range(1, orbits):
        x, y = 0, i * k + rng.randrange(k)
        for _ in range(k):
            edges.add((min(x, y), max(x, y)))
            x, y = theta[x], theta[y]
    for f in range(orbits * k, n):
        x = rng.randrange(k)
        for _ in range(k):
            edges.add((min(x, f), max(x, f)))
            x = theta[x]
    edges = {e for e in edges if e[0] != e[1]}
    vertex = rng.randrange(orbits) * k
    return Rotor(Graph(n, sorted(edges)), tuple(theta), k, vertex)


def random_gluing(rng: random.Random, rotor: Rotor, base: Graph) -> RotorGluing:
    return RotorGluing(base, tuple(rng.sample(range(base.vertex_count), rotor.order)))
