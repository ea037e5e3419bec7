"""
Exact integer/rational linear algebra on lists of Python ints.

Matrices are plain ``list[list[int]]`` in row-major order; nothing here
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "SmithForm",
    "SmithDecomposition",
    "smith_normal_form",
    "smith_decomposition",
    "determinant",
    "solve_rational",
    "mat_mul",
    "identity",
]

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """Diagonal of a Smith normal form: ``d1 | d2 | ...`` followed by zeros."""

    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d)


@dataclass(frozen=True)
class SmithDecomposition:
    """``left @ m @ right == diag(factors)`` with ``left``, ``right`` unimodular.

    ``left_inverse`` is kept as well: its columns are the images of the
    standard basis of the cokernel.
    """

    factors: tuple[int, ...]
    left: IntMatrix
    left_inverse: IntMatrix
    right: IntMatrix


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _check_rectangular(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    return rows, cols


def smith_decomposition(m: Sequence[Sequence[int]], track: bool = True) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivots on the smallest nonzero entry of the remaining block, clears its
    row and column by Euclidean steps and repairs divisibility by adding a
    row into the pivot row.  With ``track=False`` the transform matrices are
    left empty.
    """
    rows, cols = _check_rectangular(m)
    a = [list(map(int, r)) for r in m]
    L = identity(rows) if track else []
    Li = identity(rows) if track else []
    R = identity(cols) if track else []

    # each elementary operation is mirrored on L (rows), Li (columns, inverse op) and R (columns)
    def row_add(dst: int, src: int, k: int) -> None:
        # row_dst += k * row_src
        if not k:
            return
        ad, as_ = a[dst], a[src]
        for j in range(t, cols):
            if as_[j]:
                ad[j] += k * as_[j]
        if track:
            ld, ls = L[dst], L[src]
            for j in range(rows):
                ld[j] += k * ls[j]
            for row in Li:
                row[src] -= k * row[dst]

    def col_add(dst: int, src: int, k: int) -> None:
        # col_dst += k * col_src
        if not k:
            return
        for i in range(t, rows):
            r = a[i]
            if r[src]:
                r[dst] += k * r[src]
        if track:
            for row in R:
                row[dst] += k * row[src]

    def row_swap(i: int, j: int) -> None:
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        if track:
            L[i], L[j] = L[j], L[i]
            for row in Li:
                row[i], row[j] = row[j], row[i]

    def col_swap(i: int, j: int) -> None:
        if i == j:
            return
        for r in a:
            r[i], r[j] = r[j], r[i]
        if track:
            for row in R:
                row[i], row[j] = row[j], row[i]

    def row_neg(i: int) -> None:
        a[i] = [-x for x in a[i]]
        if track:
            L[i] = [-x for x in L[i]]
            for row in Li:
                row[i] = -row[i]

    factors = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        row_swap(t, i)
        col_swap(t, j)
        while True:
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    row_add(i, t, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    col_add(j, t, -(a[t][j] // p))
            # a leftover remainder is smaller than |p|: promote it to pivot and repeat
            cand = None
            for i in range(t + 1, rows):
                if a[i][t] and (cand is None or abs(a[i][t]) < cand[0]):
                    cand = (abs(a[i][t]), "r", i)
            for j in range(t + 1, cols):
                if a[t][j] and (cand is None or abs(a[t][j]) < cand[0]):
                    cand = (abs(a[t][j]), "c", j)
            if cand is not None:
                if cand[1] == "r":
                    row_swap(t, cand[2])
                else:
                    col_swap(t, cand[2])
                continue
            bad = None
            for i in range(t + 1, rows):
                if any(x % p for x in a[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if a[t][t] < 0:
            row_neg(t)
        factors.append(a[t][t])
        t += 1
    factors.extend([0] * (min(rows, cols) - len(factors)))
    return SmithDecomposition(tuple(factors), L, Li, R)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithForm:
    """Invariant factors of ``m`` (length ``min(rows, cols)``, zeros last).

    >>> smith_normal_form([[2, 0], [0, 3]]).invariant_factors
    (1, 6)
    """
    return SmithForm(smith_decomposition(m, track=False).factors)


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, cols = _check_rectangular(m)
    if n != cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def solve_rational(m: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Some exact solution of ``m x = b``, or ``None`` if the system is inconsistent.

    Free variables are set to zero.
    """
    rows, cols = _check_rectangular(m)
    if len(b) != rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {rows}")
    aug = [[Fraction(x) for x in r] + [Fraction(bi)] for r, bi in zip(m, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pr = aug[r]
        inv = 1 / pr[c]
        aug[r] = pr = [x * inv for x in pr]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], pr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(aug[i][cols] for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x
