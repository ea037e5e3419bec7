"""
Finite undirected multigraphs, graph6 and edge-list I/O, and the structural
operations used throughout the package (deletion, contraction, wedge sums).

Vertices are the integers ``0 .. n-1``.  A :class:`Graph` stores its edges as a
sorted tuple of ``(a, b)`` pairs with ``a <= b``; repeated pairs are parallel
edges and ``(a, a)`` is a loop.  Loops and parallel edges only arise
internally (contraction); everything read from the outside must be simple.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "GraphError",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "to_edge_list",
    "read_graph6_file",
    "genus",
    "is_connected",
    "delete_edge",
    "contract_edge",
    "wedge_sum",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
]

GRAPH6_MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised when a graph violates a precondition (connectivity, simplicity, ...)."""


class GraphFormatError(ValueError):
    """Raised when a serialized graph cannot be parsed.

    ``offset`` is the 0-based byte offset of the offending character, or
    ``None`` when the problem is not tied to a single position.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


class Graph:
    """Immutable undirected multigraph on vertices ``0 .. vertex_count - 1``.

    Equality and hashing use ``(vertex_count, edge multiset)``; the order in
    which edges were supplied is irrelevant.
    """

    __slots__ = ("_n", "_edges", "_adj", "_hash")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        normed = []
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise GraphError(f"edge {(a, b)} has an endpoint outside [0, {vertex_count})")
            normed.append(_norm(a, b))
        normed.sort()
        self._n = vertex_count
        self._edges = tuple(normed)
        self._adj = None
        self._hash = None

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self._n}, {list(self._edges)!r})"

    def multiplicities(self) -> Counter:
        """Counter mapping each normalized edge ``(a, b)`` to its multiplicity."""
        return Counter(self._edges)

    @property
    def is_simple(self) -> bool:
        edges = self._edges
        for i, (a, b) in enumerate(edges):
            if a == b or (i and edges[i - 1] == (a, b)):
                return False
        return True

    def adjacency(self) -> list[dict[int, int]]:
        """Per-vertex ``{neighbour: multiplicity}`` maps.  Loops are stored on the vertex itself."""
        if self._adj is None:
            adj: list[dict[int, int]] = [{} for _ in range(self._n)]
            for a, b in self._edges:
                adj[a][b] = adj[a].get(b, 0) + 1
                if a != b:
                    adj[b][a] = adj[b].get(a, 0) + 1
            self._adj = adj
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return sorted(u for u in self.adjacency()[v] if u != v)

    def degree(self, v: int) -> int:
        """Number of non-loop edge ends at ``v``."""
        return sum(m for u, m in self.adjacency()[v].items() if u != v)

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self._n)]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency()[a]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self._n, ((perm[a], perm[b]) for a, b in self._edges))

    def require_simple(self) -> None:
        if not self.is_simple:
            raise GraphError("graph must be simple (no loops or parallel edges)")

    def require_connected(self) -> None:
        if not is_connected(self):
            raise GraphError("graph must be connected")


# ---------------------------------------------------------------------------
# graph6

def to_graph6(g: Graph) -> str:
    """Encode a simple graph on at most 62 vertices in graph6 format."""
    n = g.vertex_count
    if n > GRAPH6_MAX_VERTICES:
        raise GraphError(f"graph6 long form (n > {GRAPH6_MAX_VERTICES}) is not supported")
    g.require_simple()
    adj = g.adjacency()
    bits = [1 if i in adj[j] else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k:k + 6]:
            val = (val << 1) | bit
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (a trailing newline is tolerated).

    >>> parse_graph6("Bw").edges
    ((0, 1), (0, 2), (1, 2))
    """
    text = line.rstrip("\r\n")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    if not text:
        raise GraphFormatError("empty graph6 string", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside printable range 63..126", base + i)
    n = ord(text[0]) - 63
    if n == 63:
        raise GraphFormatError("graph6 long form (n > 62) is not supported", base)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(text) != expected:
        off = base + min(len(text), expected)
        raise GraphFormatError(
            f"length header says {n} vertices, needing {expected} bytes, got {len(text)}", off)
    vals = [ord(ch) - 63 for ch in text[1:]]
    pad = len(vals) * 6 - nbits
    if pad and vals[-1] & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", base + len(text) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (vals[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_file(path) -> Iterator[tuple[int, str, Graph | GraphFormatError]]:
    """Yield ``(line_number, raw_line, graph_or_error)`` for each non-blank line."""
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        for lineno, raw in enumerate(fh, 1):
            s = raw.strip()
            if not s or s.startswith("#"):
                continue
            try:
                yield lineno, s, parse_graph6(s)
            except GraphFormatError as exc:
                yield lineno, s, exc


# ---------------------------------------------------------------------------
# edge-list text

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"a b"``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            rows.append((lineno, s.split()))
    if not rows:
        raise GraphFormatError("empty edge list")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'") from None
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, parts in rows[1:]:
        try:
            a, b = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected 'a b'") from None
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range [0, {n})")
        edges.append((a, b))
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structure

def is_connected(g: Graph) -> bool:
    n = g.vertex_count
    if n == 0:
        return False
    adj = g.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == n


def genus(g: Graph) -> int:
    """Cycle rank ``m - n + 1`` of a connected graph."""
    g.require_connected()
    return g.edge_count - g.vertex_count + 1


def _find_edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    key = _norm(int(e[0]), int(e[1]))
    if key not in g.multiplicities():
        raise GraphError(f"edge {key} is not present")
    return key


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Remove one copy of ``e``."""
    key = _find_edge(g, e)
    edges = list(g.edges)
    edges.remove(key)
    return Graph(g.vertex_count, edges)


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Contract one copy of the non-loop edge ``e``.

    The endpoints merge into the smaller index; vertices above the larger
    index shift down by one.  Remaining parallel copies of ``e`` become loops.
    """
    a, b = _find_edge(g, e)
    if a == b:
        raise GraphError("cannot contract a loop")

    def f(v: int) -> int:
        if v == b:
            return a
        return v - 1 if v > b else v

    edges = list(g.edges)
    edges.remove((a, b))
    return Graph(g.vertex_count - 1, ((f(x), f(y)) for x, y in edges))


def wedge_sum(g: Graph, v: int, h: Graph, w: int) -> Graph:
    """One-point union of ``g`` and ``h`` identifying ``v`` in ``g`` with ``w`` in ``h``.

    Vertices of ``g`` keep their labels; the vertices of ``h`` other than
    ``w`` follow in order.
    """
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v} out of range for the first graph")
    if not 0 <= w < h.vertex_count:
        raise GraphError(f"vertex {w} out of range for the second graph")
    base = g.vertex_count

    def f(u: int) -> int:
        if u == w:
            return v
        return base + (u if u < w else u - 1)

    edges = list(g.edges) + [(f(a), f(b)) for a, b in h.edges]
    return Graph(base + h.vertex_count - 1, edges)


# ---------------------------------------------------------------------------
# small constructors, handy in tests and examples

def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for j in range(n) for i in range(j)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
