"""Isomorphism-class enumeration of small simple graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .canonical import adjacency_certificate
from .graph import Graph, GraphError, is_connected, to_graph6

__all__ = [
    "MAX_BUILTIN_VERTICES",
    "enumerate_graphs",
    "enumerate_connected_graphs",
    "extend_by_vertex",
    "brute_force_classes",
]

MAX_BUILTIN_VERTICES = 7


def _sort_key(g: Graph):
    return (g.edge_count, to_graph6(g))


def extend_by_vertex(graphs: Iterable[Graph]) -> list[Graph]:
    """All isomorphism classes obtained by adding one vertex to each input graph.

    When ``graphs`` holds one representative of every class on ``n``
    vertices, the result holds one representative of every class on ``n + 1``
    vertices, since deleting any vertex lands in the input list.
    Representatives are returned in canonical labelling, sorted by
    ``(edge count, graph6)``.
    """
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        n = g.vertex_count
        for k in range(n + 1):
            for nbrs in combinations(range(n), k):
                h = Graph(n + 1, list(g.edges) + [(v, n) for v in nbrs])
                cert, inv = adjacency_certificate(h.adjacency())
                if cert not in seen:
                    perm = [0] * (n + 1)
                    for pos, v in enumerate(inv):
                        perm[v] = pos
                    seen[cert] = h.relabel(perm)
    return sorted(seen.values(), key=_sort_key)


def enumerate_graphs(n: int, max_vertices: int = MAX_BUILTIN_VERTICES) -> list[Graph]:
    """One representative per isomorphism class of simple graphs on ``n`` vertices."""
    if n < 0:
        raise GraphError("n must be non-negative")
    if n > max_vertices:
        raise GraphError(
            f"built-in enumeration stops at {max_vertices} vertices; supply a graph6 corpus "
            f"file instead (e.g. `geng -c {n} > graphs{n}c.g6`)")
    graphs = [Graph(0)]
    for _ in range(n):
        graphs = extend_by_vertex(graphs)
    return graphs


def enumerate_connected_graphs(n: int, max_vertices: int = MAX_BUILTIN_VERTICES) -> Iterator[Graph]:
    """One representative per isomorphism class of connected simple graphs on ``n`` vertices."""
    for g in enumerate_graphs(n, max_vertices):
        if is_connected(g):
            yield g


def brute_force_classes(n: int, connected_only: bool = True) -> list[Graph]:
    """Quotient of all ``2**(n choose 2)`` labelled graphs by isomorphism.

    Independent of :func:`extend_by_vertex`; each class is keyed by the
    lexicographically smallest edge list over all vertex permutations.
    Only practical for ``n <= 5``.
    """
    from itertools import permutations

    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    classes = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, edges)
        if connected_only and not is_connected(g):
            continue
        key = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in perms)
        classes.setdefault(key, g)
    return list(classes.values())
