"""
Rank census and the two-variable zeta function of a graph.

Every class of degree ``d > 2g - 2`` has ``h = d - g + 1``, so the zeta
function splits into a polynomial part plus the fixed tail
``J t^g / ((1 - t)(1 - tu))``, whose expansion is
``J * sum_{d >= g} (1 + u + ... + u^(d-g)) t^d``.  We store it as the triple
``(P, J, g)`` with ``P`` the finite difference between the class sum and
that tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph
from .jacobian import jacobian_presentation
from .divisors import RankCalculator, enumerate_qreduced
from .poly import BivariatePolynomial, geometric_u

__all__ = [
    "RankCensus",
    "ZetaFunction",
    "ZetaConsistencyError",
    "rank_census",
    "zeta_function",
    "zeta_from_census",
    "numerator_f",
    "verify_functional_equation",
    "zeta_equal",
    "zeta_series",
]

TU = ("t", "u")


class ZetaConsistencyError(RuntimeError):
    """An internal identity (``f(1, u) = J``) failed; points to a census bug."""


@dataclass(frozen=True)
class RankCensus:
    """Counts ``N(d, h)`` of divisor classes of degree ``d`` with ``h(D) = h >= 1``,
    for ``0 <= d <= 2g - 2``.  Pairs that do not occur are absent."""

    genus: int
    order: int
    counts: dict = field(default_factory=dict)

    def count(self, d: int, h: int) -> int:
        """``N(d, h)``, with ``h = 0`` meaning the non-effective classes."""
        if h == 0:
            return self.order - sum(c for (dd, _), c in self.counts.items() if dd == d)
        return self.counts.get((d, h), 0)

    def degrees(self) -> range:
        return range(0, 2 * self.genus - 1)


def _census_group(g: Graph, q: int, use_riemann_roch: bool) -> RankCensus:
    """Census by dynamic programming over Jac(G) in Smith coordinates.

    In degree ``d`` the class of ``D`` is identified with ``[D - d q]``; then
    ``r_d[c] = -1`` if no ``r_{d-1}[c - e_v]`` is non-negative and
    ``1 + min_v r_{d-1}[c - e_v]`` otherwise, with ``e_v = [v - q]``.
    """
    pres = jacobian_presentation(g)
    genus = g.edge_count - g.vertex_count + 1
    order = pres.group.order
    counts: dict[tuple[int, int], int] = {}
    if genus < 1:
        return RankCensus(genus, order, counts)

    shape = pres.factors or (1,)
    shifts = [c or (0,) for c in pres.vertex_coordinates(q)]
    axes = tuple(range(len(shape)))
    top = 2 * genus - 2
    last = min(genus - 1, top) if use_riemann_roch else top

    full: dict[int, dict[int, int]] = {}
    r = np.full(shape, -1, dtype=np.int32)
    r[(0,) * len(shape)] = 0
    for d in range(0, last + 1):
        if d:
            lo = hi = None
            for s in shifts:
                rolled = np.roll(r, s, axis=axes)
                if lo is None:
                    lo, hi = rolled.copy(), rolled.copy()
                else:
                    np.minimum(lo, rolled, out=lo)
                    np.maximum(hi, rolled, out=hi)
            r = np.where(hi >= 0, lo + 1, -1).astype(np.int32)
        vals, cnts = np.unique(r, return_counts=True)
        full[d] = {int(v) + 1: int(c) for v, c in zip(vals, cnts)}

    for d in range(last + 1, top + 1):
        # h(D) = h(K - D) + d - g + 1 with deg(K - D) = 2g - 2 - d
        shift = d - genus + 1
        full[d] = {h + shift: c for h, c in full[top - d].items()}

    for d, row in full.items():
        for h, c in row.items():
            if h >= 1:
                counts[(d, h)] = c
    return RankCensus(genus, order, counts)


def _census_reduction(g: Graph, q: int, use_riemann_roch: bool) -> RankCensus:
    calc = RankCalculator(g, q, use_riemann_roch=use_riemann_roch)
    genus = calc.genus
    reps = list(enumerate_qreduced(g, q, 0))
    counts: dict[tuple[int, int], int] = {}
    for d in range(0, 2 * genus - 1):
        for rep in reps:
            rep = list(rep)
            rep[q] += d
            h = calc.h(rep)
            if h >= 1:
                counts[(d, h)] = counts.get((d, h), 0) + 1
    return RankCensus(genus, len(reps), counts)


def rank_census(g: Graph, q: int = 0, method: str = "group", use_riemann_roch: bool = True) -> RankCensus:
    """Number of divisor classes of each degree ``0..2g-2`` and each ``h >= 1``.

    ``method="group"`` runs a vectorized recursion on Jacobian coordinates;
    ``method="reduction"`` ranks one q-reduced representative per class.
    Both agree; the first is much faster on larger graphs.
    """
    g.require_connected()
    if method == "group":
        return _census_group(g, q, use_riemann_roch)
    if method == "reduction":
        return _census_reduction(g, q, use_riemann_roch)
    raise ValueError(f"unknown census method {method!r}")


@dataclass(frozen=True)
class ZetaFunction:
    """``Z = P(t, u) + J t^g / ((1 - t)(1 - tu))``."""

    P: BivariatePolynomial
    J: int
    g: int
    census: RankCensus | None = field(default=None, compare=False, repr=False)

    def to_text(self) -> str:
        tail = f"{self.J}t^{self.g}" if self.g > 1 else (f"{self.J}t" if self.g == 1 else f"{self.J}")
        head = "" if self.P.is_zero() else f"{self.P.to_text()} + "
        return f"{head}{tail}/((1-t)(1-tu))"

    __str__ = to_text

    def to_json(self) -> dict:
        return {"P": self.P.to_json(), "J": str(self.J), "g": self.g}

    @classmethod
    def from_json(cls, data: dict) -> "ZetaFunction":
        return cls(BivariatePolynomial.from_json(data["P"], TU), int(data["J"]), int(data["g"]))

    def fingerprint(self) -> str:
        return f"{self.P.to_text()}|{self.J}|{self.g}"


def zeta_from_census(census: RankCensus) -> ZetaFunction:
    genus, order = census.genus, census.order
    P = BivariatePolynomial({}, TU)
    for (d, h), n in census.counts.items():
        P = P + n * geometric_u(h, d)
    for d in range(genus, 2 * genus - 1):
        P = P - order * geometric_u(d - genus + 1, d)
    return ZetaFunction(P, order, genus, census)


def zeta_function(g: Graph, q: int = 0, method: str = "group") -> ZetaFunction:
    return zeta_from_census(rank_census(g, q, method=method))


def numerator_f(z: ZetaFunction) -> BivariatePolynomial:
    """``f = P (1 - t)(1 - tu) + J t^g``, so that ``Z = f / ((1 - t)(1 - tu))``.

    Raises :class:`ZetaConsistencyError` unless ``f(1, u) = J`` identically.
    """
    one_minus_t = BivariatePolynomial({(0, 0): 1, (1, 0): -1}, TU)
    one_minus_tu = BivariatePolynomial({(0, 0): 1, (1, 1): -1}, TU)
    f = z.P * one_minus_t * one_minus_tu + BivariatePolynomial({(z.g, 0): z.J}, TU)
    at_one = f.substitute_first(1)
    if at_one != ({0: z.J} if z.J else {}):
        raise ZetaConsistencyError(f"f(1, u) = {at_one}, expected the constant {z.J}")
    return f


def verify_functional_equation(z: ZetaFunction | RankCensus) -> bool:
    """Check ``Z(1/(ut), u) = (ut^2)^(1-g) Z(t, u)`` through the census.

    Substituting ``t -> 1/(ut)`` pairs degree ``d`` with ``2g - 2 - d`` and
    leaves the tail ``J t^g / ((1-t)(1-tu))`` invariant up to the stated
    factor, so the equation holds iff the finite part is symmetric:
    ``N(d, h) = N(2g - 2 - d, h - d + g - 1)`` for every degree in
    ``0..2g-2``, counting non-effective classes as ``h = 0``.
    """
    census = z.census if isinstance(z, ZetaFunction) else z
    if census is None:
        raise ValueError("zeta function carries no census")
    genus = census.genus
    top = 2 * genus - 2
    if top < 0:
        return True
    for d in range(0, top + 1):
        shift = d - genus + 1
        hs = {h for (dd, h) in census.counts if dd in (d, top - d)}
        hs |= {h + shift for (dd, h) in census.counts if dd == top - d}
        hs.add(0)
        hs.add(shift)
        for h in hs:
            if h < 0:
                continue
            mirror = h - shift
            lhs = census.count(d, h)
            rhs = census.count(top - d, mirror) if mirror >= 0 else 0
            if lhs != rhs:
                return False
    return True


def zeta_equal(a: ZetaFunction, b: ZetaFunction) -> bool:
    return a.P == b.P and a.J == b.J and a.g == b.g


def zeta_series(z: ZetaFunction, max_degree: int) -> BivariatePolynomial:
    """Expansion of ``Z`` truncated to ``t``-degree ``<= max_degree``."""
    total = BivariatePolynomial({k: c for k, c in z.P.coefficients.items() if k[0] <= max_degree}, TU)
    for d in range(z.g, max_degree + 1):
        total = total + z.J * geometric_u(d - z.g + 1, d)
    return total
