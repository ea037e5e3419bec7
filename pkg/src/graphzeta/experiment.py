"""Jacobians of random graphs: cyclicity rates and pairing-weighted frequencies."""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, is_connected, parse_graph6
from .jacobian import (
    duality_pairing,
    jacobian_group,
    jacobian_presentation,
    pairing_automorphism_count,
)

__all__ = ["RandomModel", "ExperimentResult", "parse_model", "random_graph_experiment"]


@dataclass(frozen=True)
class RandomModel:
    """``gnp`` (Erdos-Renyi, conditioned on connectivity by rejection) or ``fixed``."""

    kind: str
    p: float = 0.5
    graph6: str | None = None

    @property
    def name(self) -> str:
        if self.kind == "gnp":
            return f"gnp:{self.p}"
        return f"fixed:{self.graph6}"

    def sample(self, n: int, rng: random.Random) -> tuple[Graph, int]:
        """A connected sample and the number of rejected draws."""
        if self.kind == "fixed":
            return parse_graph6(self.graph6), 0
        rejected = 0
        while True:
            edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < self.p]
            g = Graph(n, edges)
            if is_connected(g):
                return g, rejected
            rejected += 1


def parse_model(spec: str) -> RandomModel:
    """``"gnp:0.5"`` or ``"fixed:<graph6>"``."""
    kind, _, arg = spec.partition(":")
    if kind == "gnp":
        p = float(arg) if arg else 0.5
        if not 0 < p <= 1:
            raise ValueError(f"edge probability must lie in (0, 1], got {p}")
        return RandomModel("gnp", p)
    if kind == "fixed":
        g = parse_graph6(arg)
        if not is_connected(g):
            raise ValueError("fixed model graph must be connected")
        return RandomModel("fixed", graph6=arg)
    raise ValueError(f"unknown random model {spec!r}")


@dataclass
class ExperimentResult:
    vertices: int
    trials: int
    seed: int
    model: str
    cyclic: int
    rejected: int
    structures: Counter = field(default_factory=Counter)
    # structure -> Counter of automorphism counts of the pairing, over samples
    pairing_automorphisms: dict = field(default_factory=dict)

    @property
    def cyclic_fraction(self) -> float:
        return self.cyclic / self.trials

    def heuristic_weight(self, structure: str, aut: int) -> Fraction:
        """``1 / (|G| |Aut(G, <,>)|)`` for a group given as text."""
        order = 1
        if structure != "0":
            for part in structure.split(" x "):
                order *= int(part[2:])
        return Fraction(1, order * aut)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "trials": self.trials,
            "seed": self.seed,
            "model": self.model,
            "cyclic": self.cyclic,
            "cyclic_fraction": self.cyclic_fraction,
            "rejected_disconnected": self.rejected,
            "structures": dict(sorted(self.structures.items(), key=lambda kv: (-kv[1], kv[0]))),
            "pairing_automorphisms": {
                s: {str(a): c for a, c in sorted(cnt.items())}
                for s, cnt in sorted(self.pairing_automorphisms.items())
            },
        }


def random_graph_experiment(n: int, trials: int, seed: int, model: str | RandomModel = "gnp:0.5",
                            pairing: bool = False, pairing_bound: int = 10**4) -> ExperimentResult:
    """Sample ``trials`` connected graphs and tabulate their Jacobians.

    With ``pairing=True``, groups of order at most ``pairing_bound`` also get
    the number of automorphisms preserving their duality pairing, which
    enters the weight ``1 / (|G| |Aut(G, <,>)|)``.  Deterministic in ``seed``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if n < 1:
        raise ValueError("need at least one vertex")
    if isinstance(model, str):
        model = parse_model(model)
    rng = random.Random(seed)
    structures: Counter = Counter()
    auts: dict = defaultdict(Counter)
    cyclic = rejected = 0
    for _ in range(trials):
        g, rej = model.sample(n, rng)
        rejected += rej
        if pairing:
            pres = jacobian_presentation(g)
            jac = pres.group
        else:
            jac = jacobian_group(g)
        structures[str(jac)] += 1
        cyclic += jac.is_cyclic
        if pairing and jac.order <= pairing_bound:
            form = duality_pairing(g, pres)
            auts[str(jac)][pairing_automorphism_count(jac, form, pairing_bound)] += 1
    return ExperimentResult(n, trials, seed, model.name, cyclic, rejected, structures, dict(auts))
