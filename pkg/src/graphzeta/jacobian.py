"""
Laplacians, Jacobian groups, spanning-tree counts and the duality pairing.

The Jacobian of a connected graph is the torsion part of the cokernel of its
Laplacian.  Its structure comes from the Smith normal form, and the left
transform of that decomposition gives explicit divisors generating each
cyclic factor, which is what the pairing and the rank census work with.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Iterable, Sequence

from .graph import Graph, GraphError
from .linalg import determinant, smith_decomposition, smith_normal_form, solve_rational

__all__ = [
    "AbelianGroup",
    "JacobianPresentation",
    "PairingForm",
    "laplacian",
    "reduced_laplacian",
    "jacobian_group",
    "jacobian_presentation",
    "spanning_tree_count",
    "groups_isomorphic",
    "is_cyclic",
    "duality_pairing",
    "pair_divisors",
    "pairing_automorphism_count",
]


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """Finite abelian group ``Z/d1 x Z/d2 x ...`` with ``1 < d1 | d2 | ...``."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = self.invariant_factors
        if any(d < 2 for d in fs) or any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"{fs} is not an invariant-factor sequence")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Normalize a product of cyclic groups of the given orders.

        >>> AbelianGroup.from_orders([42, 7])
        AbelianGroup(invariant_factors=(7, 42))
        """
        orders = [int(d) for d in orders]
        if any(d < 1 for d in orders):
            raise ValueError("cyclic orders must be positive")
        if not orders:
            return cls(())
        diag = [[orders[i] if i == j else 0 for j in range(len(orders))] for i in range(len(orders))]
        fs = smith_normal_form(diag).invariant_factors
        return cls(tuple(d for d in fs if d > 1))

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        text = text.strip()
        if text in ("0", "", "1", "trivial"):
            return cls(())
        orders = []
        for part in text.replace("×", "x").split("x"):
            part = part.strip()
            if not part.startswith("Z/"):
                raise ValueError(f"cannot parse group factor {part!r}")
            orders.append(int(part[2:]))
        return cls.from_orders(orders)


def groups_isomorphic(a: AbelianGroup, b: AbelianGroup) -> bool:
    return a.invariant_factors == b.invariant_factors


def is_cyclic(s: AbelianGroup) -> bool:
    return s.is_cyclic


def laplacian(g: Graph) -> list[list[int]]:
    """Degree matrix minus adjacency matrix; loops are ignored."""
    n = g.vertex_count
    m = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        if a == b:
            continue
        m[a][a] += 1
        m[b][b] += 1
        m[a][b] -= 1
        m[b][a] -= 1
    return m


def reduced_laplacian(g: Graph, q: int = 0) -> list[list[int]]:
    lap = laplacian(g)
    return [[x for j, x in enumerate(row) if j != q] for i, row in enumerate(lap) if i != q]


def spanning_tree_count(g: Graph, q: int = 0) -> int:
    """Number of spanning trees, as the determinant of the reduced Laplacian."""
    g.require_connected()
    return determinant(reduced_laplacian(g, q))


@dataclass(frozen=True)
class JacobianPresentation:
    """Explicit coordinates on Jac(G).

    ``generators[i]`` is a degree-zero divisor whose class generates the
    ``Z/factors[i]`` summand, and ``coordinates`` sends any divisor of degree
    zero to its tuple in ``Z/d1 x Z/d2 x ...``.
    """

    graph: Graph
    group: AbelianGroup
    generators: tuple[tuple[int, ...], ...]
    coordinate_rows: tuple[tuple[int, ...], ...]

    @property
    def factors(self) -> tuple[int, ...]:
        return self.group.invariant_factors

    def coordinates(self, divisor: Sequence[int]) -> tuple[int, ...]:
        return tuple(
            sum(c * x for c, x in zip(row, divisor)) % d
            for row, d in zip(self.coordinate_rows, self.factors)
        )

    def vertex_coordinates(self, q: int = 0) -> list[tuple[int, ...]]:
        """Coordinates of the classes ``[v - q]`` for every vertex ``v``."""
        n = self.graph.vertex_count
        out = []
        for v in range(n):
            e = [0] * n
            e[v] += 1
            e[q] -= 1
            out.append(self.coordinates(e))
        return out


def jacobian_presentation(g: Graph) -> JacobianPresentation:
    g.require_connected()
    dec = smith_decomposition(laplacian(g))
    idx = [i for i, d in enumerate(dec.factors) if d > 1]
    n = g.vertex_count
    gens = tuple(tuple(dec.left_inverse[r][i] for r in range(n)) for i in idx)
    rows = tuple(tuple(dec.left[i]) for i in idx)
    return JacobianPresentation(g, AbelianGroup(tuple(dec.factors[i] for i in idx)), gens, rows)


def jacobian_group(g: Graph) -> AbelianGroup:
    """Invariant factors of Jac(G); the trivial group is ``AbelianGroup(())``."""
    g.require_connected()
    fs = smith_normal_form(laplacian(g)).invariant_factors
    return AbelianGroup(tuple(d for d in fs if d > 1))


@dataclass(frozen=True)
class PairingForm:
    """Gram matrix of the duality pairing on the generators of a presentation.

    Entries are exact rationals in ``[0, 1)`` standing for classes in Q/Z.
    """

    factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]

    def pair(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """Pairing of two elements given by coordinates."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                for j, yj in enumerate(y):
                    if yj:
                        total += xi * yj * row[j]
        return total % 1


def pair_divisors(g: Graph, d1: Sequence[int], d2: Sequence[int], lap=None) -> Fraction:
    """Pairing of the classes of two degree-zero divisors, as a rational in ``[0, 1)``."""
    if lap is None:
        lap = laplacian(g)
    x = solve_rational(lap, list(d2))
    if x is None:
        raise GraphError("divisor is not of degree zero")
    shift = sum(x, Fraction(0)) / len(x)
    return sum((a * (xi - shift) for a, xi in zip(d1, x)), Fraction(0)) % 1


def duality_pairing(g: Graph, presentation: JacobianPresentation | None = None) -> PairingForm:
    """The pairing ``<[D], [D']> = D^T x mod 1`` with ``L x = D'``, on Jacobian generators."""
    pres = presentation or jacobian_presentation(g)
    lap = laplacian(g)
    gens = pres.generators
    gram = []
    for i, a in enumerate(gens):
        gram.append(tuple(pair_divisors(g, a, b, lap) for b in gens))
    return PairingForm(pres.factors, gens, tuple(gram))


def pairing_automorphism_count(s: AbelianGroup, p: PairingForm, bound: int = 10**4) -> int:
    """Number of automorphisms of ``s`` preserving the pairing ``p``.

    Brute force over the images of the generators; only for ``|s| <= bound``.
    """
    if s.order > bound:
        raise ValueError(f"group order {s.order} exceeds the bound {bound}")
    fs = s.invariant_factors
    if tuple(p.factors) != fs:
        raise ValueError("pairing and group have different invariant factors")
    r = len(fs)
    if r == 0:
        return 1
    elements = list(product(*(range(d) for d in fs)))

    def killed_by(d: int, e) -> bool:
        return all((d * x) % m == 0 for x, m in zip(e, fs))

    candidates = [[e for e in elements if killed_by(d, e)] for d in fs]
    order = s.order

    def generated_order(images) -> int:
        seen = {tuple([0] * r)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for a in images:
                    y = tuple((xi + ai) % m for xi, ai, m in zip(x, a, fs))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)

    count = 0

    def extend(images: list) -> None:
        nonlocal count
        i = len(images)
        if i == r:
            if generated_order(images) == order:
                count += 1
            return
        for a in candidates[i]:
            if all(p.pair(a, images[j]) == p.gram[i][j] for j in range(i)) and p.pair(a, a) == p.gram[i][i]:
                images.append(a)
                extend(images)
                images.pop()

    extend([])
    return count
