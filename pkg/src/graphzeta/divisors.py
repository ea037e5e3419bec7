"""
Divisors on graphs: q-reduction by Dhar's burning algorithm, Baker-Norine
rank, and enumeration of reduced representatives.

A divisor is any sequence of integers indexed by the vertices; functions
return tuples.  The base vertex ``q`` defaults to 0 everywhere.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .graph import Graph

__all__ = [
    "degree",
    "canonical_divisor",
    "q_reduce",
    "is_q_reduced",
    "is_effective_class",
    "linear_equiv",
    "rank_h",
    "rank_r",
    "RankCalculator",
    "rank_by_definition",
    "enumerate_qreduced",
    "superstables",
]


def degree(d: Sequence[int]) -> int:
    return sum(d)


def canonical_divisor(g: Graph) -> tuple[int, ...]:
    """``K(v) = deg(v) - 2``."""
    return tuple(x - 2 for x in g.degrees())


def _nbrs(g: Graph) -> list[list[tuple[int, int]]]:
    return [[(u, m) for u, m in row.items() if u != v] for v, row in enumerate(g.adjacency())]


def _make_nonnegative(g: Graph, nbrs, d: list[int], q: int) -> list[int]:
    # Borrow along BFS layers from the deepest one up: borrowing the set of
    # vertices at distance >= k only moves chips between layers k and k-1.
    n = g.vertex_count
    dist = [-1] * n
    dist[q] = 0
    queue = deque([q])
    while queue:
        v = queue.popleft()
        for u, _ in nbrs[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    if min(dist) < 0:
        raise ValueError("graph must be connected")
    depth = max(dist)
    for k in range(depth, 0, -1):
        layer = [v for v in range(n) if dist[v] == k]
        times = 0
        for v in layer:
            if d[v] < 0:
                inward = sum(m for u, m in nbrs[v] if dist[u] < k)
                times = max(times, (-d[v] + inward - 1) // inward)
        if times:
            for v in layer:
                for u, m in nbrs[v]:
                    if dist[u] < k:
                        d[v] += times * m
                        d[u] -= times * m
    return d


def _unburnt(nbrs, d: Sequence[int], q: int) -> list[int]:
    """Dhar's burning algorithm: vertices left unburnt when the fire starts at ``q``."""
    n = len(nbrs)
    burnt = [False] * n
    burnt[q] = True
    heat = [0] * n  # burnt edges incident to each vertex
    stack = [q]
    while stack:
        v = stack.pop()
        for u, m in nbrs[v]:
            if not burnt[u]:
                heat[u] += m
                if heat[u] > d[u]:
                    burnt[u] = True
                    stack.append(u)
    return [v for v in range(n) if not burnt[v]]


def q_reduce(g: Graph, d: Sequence[int], q: int = 0) -> tuple[int, ...]:
    """The unique ``q``-reduced divisor linearly equivalent to ``d``."""
    nbrs = _nbrs(g)
    d = _make_nonnegative(g, nbrs, list(d), q)
    while True:
        unburnt = _unburnt(nbrs, d, q)
        if not unburnt:
            return tuple(d)
        inside = set(unburnt)
        out = {v: sum(m for u, m in nbrs[v] if u not in inside) for v in unburnt}
        # fire the unburnt set as many times as stays legal in one go
        times = min(d[v] // out[v] for v in unburnt if out[v])
        for v in unburnt:
            for u, m in nbrs[v]:
                if u not in inside:
                    d[v] -= times * m
                    d[u] += times * m


def is_q_reduced(g: Graph, d: Sequence[int], q: int = 0) -> bool:
    if any(x < 0 for v, x in enumerate(d) if v != q):
        return False
    return not _unburnt(_nbrs(g), d, q)


def is_effective_class(g: Graph, d: Sequence[int], q: int = 0) -> bool:
    return q_reduce(g, d, q)[q] >= 0


def linear_equiv(g: Graph, d1: Sequence[int], d2: Sequence[int], q: int = 0) -> bool:
    if degree(d1) != degree(d2):
        return False
    return q_reduce(g, d1, q) == q_reduce(g, d2, q)


class RankCalculator:
    """Baker-Norine rank on a fixed connected graph, memoized on q-reduced forms.

    ``r(D) = -1`` when the class of ``D`` is not effective, and otherwise
    ``r(D) = 1 + min_v r(D - v)``.  Degrees above ``g - 1`` go through
    Riemann-Roch, ``r(D) = r(K - D) + deg D - g + 1``, unless
    ``use_riemann_roch`` is off.  ``degree_bounds=False`` also drops the
    closed forms below degree 0 and above ``2g - 2``, so the recursion
    alone decides (slow; for checking).
    """

    def __init__(self, g: Graph, q: int = 0, use_riemann_roch: bool = True, degree_bounds: bool = True):
        g.require_connected()
        self.graph = g
        self.q = q
        self.genus = g.edge_count - g.vertex_count + 1
        self.canonical = canonical_divisor(g)
        self.use_riemann_roch = use_riemann_roch
        self.degree_bounds = degree_bounds
        self._memo: dict[tuple[int, ...], int] = {}

    def r(self, d: Sequence[int]) -> int:
        deg = sum(d)
        g = self.genus
        if self.degree_bounds:
            if deg < 0:
                return -1
            if deg > 2 * g - 2:
                return deg - g
        red = q_reduce(self.graph, d, self.q)
        if red[self.q] < 0:
            return -1
        memo = self._memo
        if red in memo:
            return memo[red]
        if self.use_riemann_roch and deg > g - 1:
            val = self.r([k - x for k, x in zip(self.canonical, red)]) + deg - g + 1
        else:
            best = None
            lowered = list(red)
            for v in range(len(red)):
                lowered[v] -= 1
                sub = self.r(lowered)
                lowered[v] += 1
                if best is None or sub < best:
                    best = sub
                if best < 0:
                    break
            val = 1 + best
        memo[red] = val
        return val

    def h(self, d: Sequence[int]) -> int:
        return self.r(d) + 1


def rank_r(g: Graph, d: Sequence[int], q: int = 0) -> int:
    """Baker-Norine rank ``r(D)``."""
    return RankCalculator(g, q).r(d)


def rank_h(g: Graph, d: Sequence[int], q: int = 0) -> int:
    """``h(D) = r(D) + 1``."""
    return RankCalculator(g, q).h(d)


def rank_by_definition(g: Graph, d: Sequence[int], q: int = 0) -> int:
    """Rank straight from the definition: the largest ``k`` such that ``D - E``
    is equivalent to an effective divisor for every effective ``E`` of degree
    ``k``.  Exponential; meant as an oracle on small graphs.
    """
    n = g.vertex_count
    if not is_effective_class(g, d, q):
        return -1
    k = 0
    while True:
        for combo in combinations_with_replacement(range(n), k + 1):
            e = list(d)
            for v in combo:
                e[v] -= 1
            if not is_effective_class(g, e, q):
                return k
        k += 1


def superstables(g: Graph, q: int = 0) -> list[tuple[int, ...]]:
    """Superstable configurations (reduced divisors with zero at ``q``).

    They form a down-closed set, so a search upward from zero finds them
    all; there are exactly as many as spanning trees.
    """
    g.require_connected()
    nbrs = _nbrs(g)
    n = g.vertex_count
    start = tuple([0] * n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for v in range(n):
                if v == q:
                    continue
                up = list(c)
                up[v] += 1
                t = tuple(up)
                if t not in seen and not _unburnt(nbrs, t, q):
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen)


def enumerate_qreduced(g: Graph, q: int = 0, deg: int = 0) -> Iterator[tuple[int, ...]]:
    """One ``q``-reduced representative of each divisor class of degree ``deg``."""
    for c in superstables(g, q):
        d = list(c)
        d[q] = deg - sum(c)
        yield tuple(d)
