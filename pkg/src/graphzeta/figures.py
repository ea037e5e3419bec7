"""
Report files: delimited tables plus matplotlib figures written next to them.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = [
    "get_figure",
    "write_csv",
    "write_invariants_table",
    "write_collisions_table",
    "write_experiment_table",
    "write_census_table",
    "plot_group_distribution",
    "plot_rank_census",
    "plot_collisions",
]


def get_figure(width=7, height=None):
    golden_ratio = (math.sqrt(5) - 1.0) / 2.0
    if not height:
        height = width * golden_ratio
    fig, ax = plt.subplots(figsize=(width, height), facecolor="w")
    ax.tick_params(labelsize=9)
    return fig, ax


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence], delimiter: str = ",") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter=delimiter)
        w.writerow(header)
        for row in rows:
            w.writerow(row)
    return path


def write_invariants_table(reports, path) -> Path:
    header = ["id", "vertices", "edges", "genus", "jacobian", "spanning_trees", "cyclic",
              "has_degree2_h2", "tutte", "zeta"]
    rows = (
        [r.graph_id, r.vertices, r.edges, r.genus, str(r.jacobian), r.spanning_trees,
         r.flags.get("cyclic"), r.flags.get("has_degree2_h2"),
         r.tutte.to_text() if r.tutte is not None else "",
         r.zeta.to_text() if r.zeta is not None else ""]
        for r in reports
    )
    return write_csv(path, header, rows)


def write_collisions_table(records, path) -> Path:
    keys = []
    for rec in records:
        for k, _, _ in rec.details:
            if k not in keys:
                keys.append(k)
    header = ["first", "second", "match", "differ"] + [f"{k}_{s}" for k in keys for s in ("first", "second")]
    rows = []
    for rec in records:
        vals = {k: (a, b) for k, a, b in rec.details}
        row = [rec.first, rec.second, "+".join(rec.matched), "+".join(rec.differed)]
        for k in keys:
            row.extend(vals.get(k, ("", "")))
        rows.append(row)
    return write_csv(path, header, rows)


def write_experiment_table(result, path) -> Path:
    rows = []
    for s, c in sorted(result.structures.items(), key=lambda kv: (-kv[1], kv[0])):
        auts = result.pairing_automorphisms.get(s, {})
        rows.append([s, c, c / result.trials, " ".join(f"{a}:{k}" for a, k in sorted(auts.items()))])
    return write_csv(path, ["structure", "count", "fraction", "pairing_automorphisms"], rows)


def write_census_table(census, path) -> Path:
    rows = [[d, h, census.counts[(d, h)]] for d, h in sorted(census.counts)]
    return write_csv(path, ["degree", "h", "classes"], rows)


def plot_group_distribution(result, path, top: int = 15) -> Path:
    """Bar chart of the most frequent Jacobian structures by rank (number of factors)."""
    by_rank: dict[int, int] = {}
    for s, c in result.structures.items():
        r = 0 if s == "0" else s.count("x") + 1
        by_rank[r] = by_rank.get(r, 0) + c
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4), facecolor="w")
    ranks = sorted(by_rank)
    ax1.bar([str(r) for r in ranks], [by_rank[r] / result.trials for r in ranks], color="0.35")
    ax1.set_xlabel("number of invariant factors")
    ax1.set_ylabel("fraction of samples")
    ax1.set_title(f"cyclic fraction {result.cyclic_fraction:.3f}  (n={result.vertices}, {result.model})",
                  fontsize=10)
    items = sorted(result.structures.items(), key=lambda kv: (-kv[1], kv[0]))[:top]
    ax2.barh([s for s, _ in items][::-1], [c for _, c in items][::-1], color="0.55")
    ax2.set_xlabel("samples")
    ax2.tick_params(labelsize=7)
    ax2.set_title(f"most frequent structures (of {result.trials})", fontsize=10)
    return _save(fig, path)


def plot_rank_census(census, path, title: str = "") -> Path:
    """Heatmap of ``N(d, h)`` over degree and ``h``."""
    top = max(2 * census.genus - 2, 0)
    hmax = max((h for _, h in census.counts), default=1)
    grid = [[0] * (top + 1) for _ in range(hmax + 1)]
    for d in range(top + 1):
        for h in range(hmax + 1):
            grid[h][d] = census.count(d, h)
    fig, ax = get_figure(7)
    im = ax.imshow(grid, origin="lower", aspect="auto", cmap="Greys")
    for d in range(top + 1):
        for h in range(hmax + 1):
            if grid[h][d]:
                ax.text(d, h, str(grid[h][d]), ha="center", va="center", fontsize=7,
                        color="white" if grid[h][d] > census.order / 2 else "black")
    ax.set_xlabel("degree d")
    ax.set_ylabel("h(D)")
    ax.set_title(title or f"divisor classes by degree and rank (g={census.genus}, |Jac|={census.order})",
                 fontsize=10)
    fig.colorbar(im, ax=ax)
    return _save(fig, path)


def plot_collisions(records, path) -> Path:
    """Number of collision pairs per matched-invariant value group size."""
    fig, ax = get_figure(6)
    counts: dict[str, int] = {}
    for rec in records:
        counts[rec.first] = counts.get(rec.first, 0) + 1
        counts[rec.second] = counts.get(rec.second, 0) + 1
    hist: dict[int, int] = {}
    for c in counts.values():
        hist[c] = hist.get(c, 0) + 1
    xs = sorted(hist)
    ax.bar([str(x) for x in xs], [hist[x] for x in xs], color="0.4")
    ax.set_xlabel("pairs a graph takes part in")
    ax.set_ylabel("graphs")
    ax.set_title(f"{len(records)} pairs over {len(counts)} graphs", fontsize=10)
    return _save(fig, path)
