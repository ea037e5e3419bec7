"""Exact bivariate integer polynomials with named variables."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = ["BivariatePolynomial", "geometric_u"]

_TERM = re.compile(r"^(\d*)((?:[A-Za-z](?:\^\d+)?)*)$")
_FACTOR = re.compile(r"([A-Za-z])(?:\^(\d+))?")


class BivariatePolynomial:
    """Polynomial in two named variables with arbitrary-precision integer coefficients.

    Stored as a mapping ``(i, j) -> c`` with no zero coefficients; the
    exponents refer to ``variables[0]`` and ``variables[1]``.

    >>> x, y = BivariatePolynomial.variable("x"), BivariatePolynomial.variable("y")
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
    """

    __slots__ = ("_coeffs", "_vars", "_hash")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable = (), variables=("x", "y")):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = (((i, j), c) for i, j, c in coeffs)
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = int(c)
            if c:
                key = (int(i), int(j))
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._coeffs = clean
        self._vars = tuple(variables)
        self._hash = None

    @classmethod
    def constant(cls, c: int, variables=("x", "y")) -> "BivariatePolynomial":
        return cls({(0, 0): c}, variables)

    @classmethod
    def variable(cls, name: str, variables=None) -> "BivariatePolynomial":
        if variables is None:
            variables = (name, "y") if name != "y" else ("x", "y")
        idx = variables.index(name)
        return cls({(1, 0) if idx == 0 else (0, 1): 1}, variables)

    @property
    def variables(self) -> tuple[str, str]:
        return self._vars

    @property
    def coefficients(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    def coefficient(self, i: int, j: int) -> int:
        return self._coeffs.get((i, j), 0)

    def terms(self) -> list[tuple[int, int, int]]:
        """``(i, j, c)`` triples sorted by exponents."""
        return [(i, j, c) for (i, j), c in sorted(self._coeffs.items())]

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self, var: int = 0) -> int:
        """Degree in the first (``var=0``) or second variable; -1 for zero."""
        return max((k[var] for k in self._coeffs), default=-1)

    def _check(self, other: "BivariatePolynomial") -> None:
        if self._vars != other._vars:
            raise ValueError(f"variable mismatch: {self._vars} vs {other._vars}")

    def _coerce(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            return BivariatePolynomial.constant(other, self._vars)
        if isinstance(other, BivariatePolynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self._coeffs.items()}, self._vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out, self._vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BivariatePolynomial.constant(1, self._vars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other, self._vars)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._vars == other._vars and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._coeffs.items())))
        return self._hash

    def evaluate(self, a, b):
        """Substitute ``a`` for the first variable and ``b`` for the second."""
        return sum(c * a**i * b**j for (i, j), c in self._coeffs.items())

    __call__ = evaluate

    def substitute_first(self, a) -> dict[int, object]:
        """Set the first variable to ``a``; returns ``{j: coefficient}`` in the second."""
        out: dict[int, object] = {}
        for (i, j), c in self._coeffs.items():
            out[j] = out.get(j, 0) + c * a**i
        return {j: c for j, c in out.items() if c}

    def rename(self, variables) -> "BivariatePolynomial":
        return BivariatePolynomial(self._coeffs, variables)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.to_text()!r}, variables={self._vars})"

    def to_text(self) -> str:
        """Terms sorted by (first exponent, second exponent), e.g. ``1 + 6t + 16t^2 + 6t^3u``."""
        if not self._coeffs:
            return "0"
        a, b = self._vars
        parts = []
        for i, j, c in self.terms():
            mono = ""
            if i:
                mono += a + (f"^{i}" if i > 1 else "")
            if j:
                mono += b + (f"^{j}" if j > 1 else "")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else f"{mag}{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    @classmethod
    def from_text(cls, text: str, variables=("x", "y")) -> "BivariatePolynomial":
        """Parse sums of monomials like ``x^7 + 4x^6 + x^5y - 2xy^3``.

        Products are written by juxtaposition; ``*`` and whitespace are ignored.
        """
        s = text.replace("*", "").replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty polynomial text")
        tokens = re.findall(r"[+-]+|[^+-]+", s)
        coeffs: dict[tuple[int, int], int] = {}
        sign = 1
        for tok in tokens:
            if set(tok) <= {"+", "-"}:
                sign = -1 if tok.count("-") % 2 else 1
                continue
            m = _TERM.match(tok)
            if not m:
                raise ValueError(f"cannot parse term {tok!r}")
            num, mono = m.groups()
            c = int(num) if num else 1
            if not num and not mono:
                raise ValueError(f"cannot parse term {tok!r}")
            i = j = 0
            for var, exp in _FACTOR.findall(mono):
                e = int(exp) if exp else 1
                if var == variables[0]:
                    i += e
                elif var == variables[1]:
                    j += e
                else:
                    raise ValueError(f"unknown variable {var!r} (expected {variables})")
            coeffs[(i, j)] = coeffs.get((i, j), 0) + sign * c
            sign = 1
        return cls(coeffs, variables)

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for i, j, c in self.terms()]

    @classmethod
    def from_json(cls, data, variables=("x", "y")) -> "BivariatePolynomial":
        return cls(((int(i), int(j), int(c)) for i, j, c in data), variables)


def geometric_u(h: int, shift_t: int = 0, variables=("t", "u")) -> BivariatePolynomial:
    """``(1 + u + ... + u^(h-1)) * t^shift_t``; zero for ``h <= 0``."""
    return BivariatePolynomial({(shift_t, k): 1 for k in range(max(h, 0))}, variables)
