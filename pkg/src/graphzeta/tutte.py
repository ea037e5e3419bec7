"""
Tutte polynomial by deletion-contraction on multigraphs.

Loops are peeled off as factors of ``y``, the graph is split into blocks
(the polynomial is multiplicative over 2-connected components), a block that
is a single bundle of ``k`` parallel edges contributes ``x + y + ... + y^(k-1)``,
and any other block is split on a whole parallel class ``e`` of size ``k``:

    T(B) = T(B - e) + (1 + y + ... + y^(k-1)) T(B / e)

Block results are memoized on their canonical certificate.
"""

from __future__ import annotations

import random
from typing import Callable

from .canonical import DEFAULT_MAX_VERTICES, adjacency_certificate
from .graph import Graph, GraphError, is_connected
from .poly import BivariatePolynomial

__all__ = [
    "TutteCache",
    "tutte_polynomial",
    "tutte_evaluate",
    "tutte_by_subsets",
    "default_cache",
]

Poly = dict  # (i, j) -> int
Adj = dict  # vertex -> {neighbour: multiplicity}, no loops


class TutteCache:
    """Memo table keyed by block certificates; cleared wholesale when full."""

    def __init__(self, max_entries: int = 200_000, max_vertices: int = DEFAULT_MAX_VERTICES):
        self.max_entries = max_entries
        self.max_vertices = max_vertices
        self._table: dict[bytes, Poly] = {}
        self.hits = 0
        self.misses = 0
        self.resets = 0

    def get(self, key: bytes):
        val = self._table.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key: bytes, val: Poly) -> None:
        if len(self._table) >= self.max_entries:
            self._table.clear()
            self.resets += 1
        self._table[key] = val

    def __len__(self) -> int:
        return len(self._table)

    def clear(self) -> None:
        self._table.clear()


default_cache = TutteCache()


def _mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return out


def _add_into(acc: Poly, b: Poly) -> None:
    for k, c in b.items():
        acc[k] = acc.get(k, 0) + c


def _y_series(k: int) -> Poly:
    return {(0, j): 1 for j in range(k)}


def _bundle(k: int) -> Poly:
    p = {(1, 0): 1}
    for j in range(1, k):
        p[(0, j)] = 1
    return p


def _blocks(adj: Adj) -> list[list[tuple]]:
    """Edge sets (as vertex pairs) of the 2-connected components."""
    disc: dict = {}
    low: dict = {}
    stack: list[tuple] = []
    out: list[list[tuple]] = []
    counter = [0]

    def visit(v, parent):
        disc[v] = low[v] = counter[0]
        counter[0] += 1
        for u in adj[v]:
            if u == parent:
                continue
            if u not in disc:
                stack.append((v, u))
                visit(u, v)
                low[v] = min(low[v], low[u])
                if low[u] >= disc[v]:
                    comp = []
                    while True:
                        e = stack.pop()
                        comp.append(e)
                        if e == (v, u):
                            break
                    out.append(comp)
            elif disc[u] < disc[v]:
                stack.append((v, u))
                low[v] = min(low[v], disc[u])

    for v in adj:
        if v not in disc:
            visit(v, None)
    return out


class _Engine:
    def __init__(self, cache: TutteCache | None, choose: Callable):
        self.cache = cache
        self.choose = choose

    def connected(self, adj: Adj) -> Poly:
        if len(adj) <= 1:
            return {(0, 0): 1}
        result: Poly = {(0, 0): 1}
        for comp in _blocks(adj):
            verts = {v for e in comp for v in e}
            if len(verts) == 2:
                a, b = verts
                result = _mul(result, _bundle(adj[a][b]))
            else:
                sub = {v: {u: m for u, m in adj[v].items() if u in verts} for v in verts}
                result = _mul(result, self.block(sub))
        return result

    def block(self, adj: Adj) -> Poly:
        cache = self.cache
        key = None
        if cache is not None and len(adj) <= cache.max_vertices:
            verts = sorted(adj)
            index = {v: i for i, v in enumerate(verts)}
            rows = [{index[u]: m for u, m in adj[v].items()} for v in verts]
            key, _ = adjacency_certificate(rows)
            key = bytes([len(verts)]) + key
            hit = cache.get(key)
            if hit is not None:
                return hit

        a, b = self.choose(adj)
        k = adj[a][b]

        deleted = {v: dict(nb) for v, nb in adj.items()}
        del deleted[a][b]
        del deleted[b][a]
        result = self.connected(deleted)

        contracted = {v: dict(nb) for v, nb in adj.items() if v != b}
        del contracted[a][b]
        for u, m in adj[b].items():
            if u == a:
                continue
            contracted[a][u] = contracted[a].get(u, 0) + m
            row = contracted[u]
            del row[b]
            row[a] = row.get(a, 0) + m
        _add_into(result, _mul(_y_series(k), self.connected(contracted)))
        result = {kk: c for kk, c in result.items() if c}

        if key is not None:
            cache.put(key, result)
        return result


def _choose_max_degree(adj: Adj):
    deg = {v: sum(nb.values()) for v, nb in adj.items()}
    a = max(adj, key=lambda v: (deg[v], -_label(v)))
    b = max(adj[a], key=lambda u: (deg[u], -_label(u)))
    return a, b


def _label(v) -> int:
    return v if isinstance(v, int) else 0


def _choose_min_degree(adj: Adj):
    deg = {v: sum(nb.values()) for v, nb in adj.items()}
    a = min(adj, key=lambda v: (deg[v], _label(v)))
    b = min(adj[a], key=lambda u: (deg[u], _label(u)))
    return a, b


def _chooser(strategy: str, seed: int | None):
    if strategy == "max_degree":
        return _choose_max_degree
    if strategy == "min_degree":
        return _choose_min_degree
    if strategy == "random":
        rng = random.Random(seed)

        def choose(adj):
            a = rng.choice(sorted(adj))
            return a, rng.choice(sorted(adj[a]))
        return choose
    raise ValueError(f"unknown edge-selection strategy {strategy!r}")


_DEFAULT = object()


def tutte_polynomial(g: Graph, strategy: str = "max_degree", cache=_DEFAULT,
                     seed: int | None = None) -> BivariatePolynomial:
    """Tutte polynomial ``T_G(x, y)`` of a connected multigraph.

    ``cache`` defaults to a module-wide :class:`TutteCache`; pass ``None``
    to disable memoization or a fresh cache to isolate a computation.
    ``strategy`` picks the edge to split on (``"max_degree"``,
    ``"min_degree"`` or ``"random"`` with ``seed``); the result does not
    depend on it.
    """
    if not is_connected(g):
        raise GraphError("Tutte polynomial requires a connected graph")
    if cache is _DEFAULT:
        cache = default_cache
    loops = 0
    adj: Adj = {v: {} for v in range(g.vertex_count)}
    for a, b in g.edges:
        if a == b:
            loops += 1
            continue
        adj[a][b] = adj[a].get(b, 0) + 1
        adj[b][a] = adj[b].get(a, 0) + 1
    engine = _Engine(cache, _chooser(strategy, seed))
    poly = engine.connected(adj)
    if loops:
        poly = {(i, j + loops): c for (i, j), c in poly.items()}
    return BivariatePolynomial(poly, ("x", "y"))


def tutte_evaluate(p: BivariatePolynomial, x: int, y: int) -> int:
    return p.evaluate(x, y)


def tutte_by_subsets(g: Graph) -> BivariatePolynomial:
    """Corank-nullity expansion ``sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))``.

    Visits all ``2^m`` edge subsets; an independent check for small graphs.
    """
    n = g.vertex_count
    edges = list(g.edges)
    m = len(edges)

    def rank(mask: int) -> int:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in range(m):
            if mask >> i & 1:
                a, b = edges[i]
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    r += 1
        return r

    full = rank((1 << m) - 1)
    xm1 = BivariatePolynomial({(1, 0): 1, (0, 0): -1})
    ym1 = BivariatePolynomial({(0, 1): 1, (0, 0): -1})
    tally: dict[tuple[int, int], int] = {}
    for mask in range(1 << m):
        r = rank(mask)
        key = (full - r, bin(mask).count("1") - r)
        tally[key] = tally.get(key, 0) + 1
    total = BivariatePolynomial({})
    for (a, b), c in tally.items():
        total = total + c * (xm1 ** a) * (ym1 ** b)
    return total
