"""
Canonical labelling of small multigraphs by colour refinement plus
individualisation, with automorphism pruning.

The certificate of a graph is the upper triangle (diagonal included) of its
multiplicity matrix under the lexicographically smallest labelling reachable
from the refinement tree.  Two graphs get the same certificate exactly when
they are isomorphic.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError

__all__ = [
    "canonical_key",
    "canonical_labeling",
    "canonical_form",
    "adjacency_certificate",
    "DEFAULT_MAX_VERTICES",
    "SEARCH_MAX_VERTICES",
]

DEFAULT_MAX_VERTICES = 12
SEARCH_MAX_VERTICES = 11


def _refine(colors: list[int], adj: Sequence[dict[int, int]]) -> list[int]:
    n = len(colors)
    ncolors = max(colors) + 1 if n else 0
    while True:
        sigs = []
        for v in range(n):
            cv = colors[v]
            sigs.append((cv, tuple(sorted([(colors[u], m) for u, m in adj[v].items() if u != v]))))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ranks) == ncolors:
            return colors
        colors = [ranks[s] for s in sigs]
        ncolors = len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    return [x + 1 if (x > c or (x == c and u != v)) else x for u, x in enumerate(colors)]


def _orbits(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for a, b in enumerate(perm):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, adj: Sequence[dict[int, int]]):
        self.adj = adj
        self.n = len(adj)
        self.best_cert: bytes | None = None
        self.best_inv: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def certificate(self, inv: list[int]) -> bytes:
        adj = self.adj
        n = self.n
        vals = []
        for i in range(n):
            row = adj[inv[i]]
            for j in range(i, n):
                vals.append(row.get(inv[j], 0))
        if vals and max(vals) > 255:
            # multiplicities this large never occur in practice; keep the key exact anyway
            return b"\xff" + ",".join(map(str, vals)).encode()
        return bytes(vals)

    def run(self, colors: list[int], path: list[int]) -> None:
        colors = _refine(colors, self.adj)
        n = self.n
        if max(colors) == n - 1:
            inv = [0] * n
            for v, c in enumerate(colors):
                inv[c] = v
            cert = self.certificate(inv)
            if self.best_cert is None or cert < self.best_cert:
                self.best_cert, self.best_inv = cert, inv
            elif cert == self.best_cert:
                # leaf labelling composed with the best one's inverse is an automorphism
                best_inv = self.best_inv
                aut = [0] * n
                for pos, v in enumerate(inv):
                    aut[v] = best_inv[pos]
                self.automorphisms.append(aut)
            return

        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]

        explored: list[int] = []
        for v in cell:
            if explored:
                fixing = [a for a in self.automorphisms if all(a[p] == p for p in path)]
                if fixing:
                    orb = _orbits(n, fixing)
                    if any(orb[v] == orb[w] for w in explored):
                        continue
            self.run(_individualize(colors, v), path + [v])
            explored.append(v)


def _initial_colors(adj: Sequence[dict[int, int]]) -> list[int]:
    inv = [(row.get(v, 0), sum(m for u, m in row.items() if u != v)) for v, row in enumerate(adj)]
    ranks = {s: i for i, s in enumerate(sorted(set(inv)))}
    return [ranks[s] for s in inv]


def adjacency_certificate(adj: Sequence[dict[int, int]]) -> tuple[bytes, list[int]]:
    """Certificate and canonical order (position -> vertex) of a multigraph.

    ``adj[v]`` maps neighbours to multiplicities; ``adj[v][v]`` counts loops
    at ``v``.
    """
    n = len(adj)
    if n == 0:
        return b"", []
    search = _Search(adj)
    search.run(_initial_colors(adj), [])
    return search.best_cert, search.best_inv


def canonical_labeling(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is the canonical form."""
    if g.vertex_count > max_vertices:
        raise GraphError(f"canonical labelling limited to {max_vertices} vertices")
    _, inv = adjacency_certificate(g.adjacency())
    perm = [0] * g.vertex_count
    for pos, v in enumerate(inv):
        perm[v] = pos
    return perm


def canonical_form(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    return g.relabel(canonical_labeling(g, max_vertices))


def canonical_key(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bytes:
    """Isomorphism-complete key: equal for two graphs iff they are isomorphic."""
    n = g.vertex_count
    if n > max_vertices:
        raise GraphError(f"canonical key limited to {max_vertices} vertices (got {n})")
    cert, _ = adjacency_certificate(g.adjacency())
    return bytes([n]) + cert
