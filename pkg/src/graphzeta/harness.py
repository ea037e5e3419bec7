"""
Per-graph invariant reports and corpus-wide searches for invariant collisions.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, is_connected, parse_graph6, to_graph6
from .jacobian import AbelianGroup, jacobian_group, spanning_tree_count
from .poly import BivariatePolynomial
from .tutte import tutte_polynomial
from .zeta import ZetaFunction, numerator_f, verify_functional_equation, zeta_function

__all__ = [
    "ConsistencyError",
    "InvariantReport",
    "CollisionRecord",
    "compute_invariants",
    "compute_many",
    "search_pairs",
    "SEARCH_KEYS",
]

log = logging.getLogger(__name__)

SEARCH_KEYS = ("tutte", "zeta", "jacobian")


class ConsistencyError(RuntimeError):
    """Two routes to the same number disagreed."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(message)
        self.diagnostics = diagnostics

    def __reduce__(self):
        return type(self), (str(self), self.diagnostics)


@dataclass
class InvariantReport:
    graph_id: str
    vertices: int
    edges: int
    genus: int
    jacobian: AbelianGroup
    spanning_trees: int
    tutte: BivariatePolynomial | None
    zeta: ZetaFunction | None
    flags: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "id": self.graph_id,
            "vertices": self.vertices,
            "edges": self.edges,
            "genus": self.genus,
            "jacobian": list(self.jacobian.invariant_factors),
            "jacobian_text": str(self.jacobian),
            "spanning_trees": str(self.spanning_trees),
            "tutte": self.tutte.to_text() if self.tutte is not None else None,
            "zeta": self.zeta.to_json() if self.zeta is not None else None,
            "zeta_text": self.zeta.to_text() if self.zeta is not None else None,
            "flags": dict(self.flags),
        }
        return out

    def to_text(self) -> str:
        lines = [
            f"graph: {self.graph_id}",
            f"  vertices={self.vertices} edges={self.edges} genus={self.genus}",
            f"  jacobian: {self.jacobian}",
            f"  spanning trees: {self.spanning_trees}",
        ]
        if self.tutte is not None:
            lines.append(f"  tutte: {self.tutte}")
        if self.zeta is not None:
            lines.append(f"  zeta: {self.zeta}")
        lines.append("  flags: " + ", ".join(f"{k}={v}" for k, v in sorted(self.flags.items())))
        return "\n".join(lines)


def _has_degree2_h2(genus: int, zeta: ZetaFunction | None) -> bool | None:
    if genus == 0:
        return False
    if genus == 1:
        return True  # every degree-2 class has h = 2 when g = 1
    if zeta is None or zeta.census is None:
        return None
    return zeta.census.count(2, 2) > 0


def compute_invariants(g: Graph, graph_id: str | None = None, tutte: bool = True,
                       zeta: bool = True) -> InvariantReport:
    """Full report for one connected simple graph, cross-checked.

    Raises :class:`ConsistencyError` when the spanning-tree count, the
    Jacobian order, ``T(1, 1)`` and the zeta constant ``J`` disagree.
    """
    g.require_simple()
    g.require_connected()
    if graph_id is None:
        graph_id = to_graph6(g)
    jac = jacobian_group(g)
    trees = spanning_tree_count(g)
    t = tutte_polynomial(g) if tutte else None
    z = zeta_function(g) if zeta else None
    genus = g.edge_count - g.vertex_count + 1

    checks = {"spanning_trees": trees, "jacobian_order": jac.order}
    if t is not None:
        checks["tutte_1_1"] = t.evaluate(1, 1)
    if z is not None:
        checks["zeta_J"] = z.J
        try:
            f = numerator_f(z)
            checks["f_1_u"] = f.substitute_first(1).get(0, 0)
        except Exception as exc:  # numerator_f raises on a broken census
            raise ConsistencyError(str(exc), {"graph": graph_id, **checks}) from exc
        if not verify_functional_equation(z):
            raise ConsistencyError("functional equation fails", {"graph": graph_id, **checks})
    if len(set(checks.values())) != 1:
        raise ConsistencyError("invariants disagree on |Jac(G)|", {"graph": graph_id, **checks})

    flags = {
        "cyclic": jac.is_cyclic,
        "has_degree2_h2": _has_degree2_h2(genus, z),
    }
    return InvariantReport(graph_id, g.vertex_count, g.edge_count, genus, jac, trees, t, z, flags)


def _invariants_job(args):
    g6, gid, tutte, zeta = args
    return compute_invariants(parse_graph6(g6), gid, tutte=tutte, zeta=zeta)


def compute_many(items: Iterable[tuple[str, Graph]], tutte: bool = True, zeta: bool = True,
                 jobs: int = 1) -> Iterable[InvariantReport]:
    """Reports for ``(id, graph)`` pairs, in input order; ``jobs > 1`` shards over processes."""
    if jobs <= 1:
        for gid, g in items:
            yield compute_invariants(g, gid, tutte=tutte, zeta=zeta)
        return
    with ProcessPoolExecutor(jobs) as pool:
        work = ((to_graph6(g), gid, tutte, zeta) for gid, g in items)
        yield from pool.map(_invariants_job, work, chunksize=8)


# ---------------------------------------------------------------------------
# collision search

@dataclass(frozen=True, order=True)
class CollisionRecord:
    first: str
    second: str
    matched: tuple[str, ...]
    differed: tuple[str, ...]
    details: tuple[tuple[str, str, str], ...] = ()

    def to_json(self) -> dict:
        return {
            "pair": [self.first, self.second],
            "match": list(self.matched),
            "differ": list(self.differed),
            "values": {k: [a, b] for k, a, b in self.details},
        }

    def to_text(self) -> str:
        vals = "; ".join(f"{k}: {a} | {b}" for k, a, b in self.details)
        return (f"{self.first} {self.second} match={','.join(self.matched)} "
                f"differ={','.join(self.differed)} {vals}")


def _fingerprint(key: str, g: Graph) -> str:
    if key == "tutte":
        return tutte_polynomial(g).to_text()
    if key == "zeta":
        return zeta_function(g).fingerprint()
    if key == "jacobian":
        return str(jacobian_group(g))
    raise ValueError(key)


def _fingerprint_g6(args):
    key, g6 = args
    return _fingerprint(key, parse_graph6(g6))


class _Table:
    """Fingerprints computed on demand, optionally fanned out over processes."""

    def __init__(self, graphs: dict[str, Graph], jobs: int):
        self.graphs = graphs
        self.jobs = jobs
        self.values: dict[tuple[str, str], str] = {}

    def ensure(self, key: str, ids: Iterable[str]) -> None:
        todo = [i for i in ids if (key, i) not in self.values]
        if not todo:
            return
        if self.jobs > 1 and len(todo) > 50 and key != "jacobian":
            chunk = max(1, len(todo) // (4 * self.jobs))
            with ProcessPoolExecutor(self.jobs) as pool:
                args = [(key, to_graph6(self.graphs[i])) for i in todo]
                results = list(pool.map(_fingerprint_g6, args, chunksize=chunk))
        else:
            results = [_fingerprint(key, self.graphs[i]) for i in todo]
        for i, v in zip(todo, results):
            self.values[(key, i)] = v

    def get(self, key: str, gid: str) -> str:
        if (key, gid) not in self.values:
            self.ensure(key, [gid])
        return self.values[(key, gid)]


def _refine(groups: list[list[str]], keyfn) -> list[list[str]]:
    out = []
    for grp in groups:
        sub = defaultdict(list)
        for gid in grp:
            sub[keyfn(gid)].append(gid)
        out.extend(v for v in sub.values() if len(v) > 1)
    return out


def search_pairs(corpus: Iterable[tuple[str, Graph]], match_on: Sequence[str],
                 differ_on: Sequence[str], jobs: int = 1) -> list[CollisionRecord]:
    """All pairs agreeing on every ``match_on`` invariant and differing on every ``differ_on`` one.

    Cheap necessary conditions prune the corpus before any polynomial is
    computed: equal Tutte polynomials force equal vertex, edge and
    spanning-tree counts, and equal zeta functions force equal genus and
    Jacobian order.  Output is sorted and independent of corpus order.
    """
    match_on = tuple(dict.fromkeys(match_on))
    differ_on = tuple(dict.fromkeys(differ_on))
    for k in match_on + differ_on:
        if k not in SEARCH_KEYS:
            raise ValueError(f"unknown invariant {k!r}; choose from {SEARCH_KEYS}")
    if set(match_on) & set(differ_on):
        raise ValueError("an invariant cannot be both matched and differed")
    if not match_on or not differ_on:
        raise ValueError("need at least one invariant to match on and one to differ on")

    graphs: dict[str, Graph] = {}
    for gid, g in corpus:
        if not is_connected(g):
            log.warning("skipping disconnected graph %s", gid)
            continue
        graphs.setdefault(gid, g)
    table = _Table(graphs, jobs)
    ids = sorted(graphs)

    trees = {gid: spanning_tree_count(graphs[gid]) for gid in ids}

    def coarse(gid):
        g = graphs[gid]
        key = [trees[gid]]
        if "tutte" in match_on:
            key += [g.vertex_count, g.edge_count]
        if "zeta" in match_on:
            key.append(g.edge_count - g.vertex_count + 1)
        return tuple(key)

    groups = _refine([ids], coarse)

    def prune(groups):
        if "jacobian" in differ_on:
            table.ensure("jacobian", [i for grp in groups for i in grp])
            groups = [grp for grp in groups if len({table.get("jacobian", i) for i in grp}) > 1]
        return groups

    groups = prune(groups)
    for key in ("jacobian", "zeta", "tutte"):
        if key in match_on:
            table.ensure(key, [i for grp in groups for i in grp])
            groups = prune(_refine(groups, lambda gid: table.get(key, gid)))

    records = []
    for grp in groups:
        for a, b in combinations(sorted(grp), 2):
            if all(table.get(k, a) != table.get(k, b) for k in differ_on):
                details = tuple((k, table.get(k, a), table.get(k, b)) for k in match_on + differ_on)
                records.append(CollisionRecord(a, b, match_on, differ_on, details))
    return sorted(records)
