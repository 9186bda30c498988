"""Bit-matrix graphs, graph6 interchange, and stock graph constructions.

Vertices are 0-indexed integers. A graph of order n keeps one int per
vertex; bit v of row u is set iff uv is an edge. Vertex sets throughout the
package are plain int bitmasks over the same indexing, so set algebra is
word algebra (union ``|``, intersection ``&``, complement against
``g.vertex_mask``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .limits import ORDER_MAX


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Vertices of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as a symmetric adjacency bit-matrix."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= ORDER_MAX:
            raise ValueError(f"order must be in 1..{ORDER_MAX}, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match order")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits at or above the order")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in bits(self.rows[u]):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.rows[u]):
                if u < v:
                    yield (u, v)

    def is_full(self, v: int) -> bool:
        """A full vertex is adjacent to every other vertex."""
        return self.rows[v] == self.vertex_mask ^ (1 << v)

    # -- derived graphs ----------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under the permutation ``perm`` (perm[old] = new)."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation of the vertices")
        rows = [0] * self.n
        for u in range(self.n):
            for v in bits(self.rows[u]):
                rows[p[u]] |= 1 << p[v]
        return Graph(self.n, tuple(rows))

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced by the vertices of ``mask``, relabeled to 0..k-1."""
        keep = list(bits(mask & self.vertex_mask))
        if not keep:
            raise ValueError("induced subgraph must keep at least one vertex")
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in bits(self.rows[v] & mask):
                rows[index[v]] |= 1 << index[u]
        return Graph(len(keep), tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced(self.vertex_mask ^ (1 << v))


@dataclass(frozen=True)
class DegreeStats:
    """Minimum/maximum degree plus the set of full vertices."""

    min_degree: int
    max_degree: int
    full_vertices: int  # bitmask

    @property
    def full_count(self) -> int:
        return self.full_vertices.bit_count()


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees()
    full = mask_of(v for v in range(g.n) if degs[v] == g.n - 1)
    return DegreeStats(min(degs), max(degs), full)


# ---------------------------------------------------------------------------
# graph6 interchange
# ---------------------------------------------------------------------------
#
# One graph per ASCII line: first byte order+63, then the upper triangle
# x(0,1), x(0,2), x(1,2), x(0,3), ... packed column-major, 6 bits per byte
# (most significant first), each byte +63, padding bits zero.


class Graph6Error(ValueError):
    """Raised for any malformed graph6 record."""


def _pair_sequence(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield (i, j)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 record of order 1..32."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 record")
    data = s.encode("ascii", errors="strict") if s.isascii() else None
    if data is None:
        raise Graph6Error("graph6 record contains non-ASCII bytes")
    head = data[0]
    if head == 126:
        raise Graph6Error("order above 32 is not supported")
    n = head - 63
    if n < 1:
        raise Graph6Error(f"order byte out of range: {head}")
    if n > ORDER_MAX:
        raise Graph6Error(f"order {n} above the supported maximum {ORDER_MAX}")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(data) - 1 < need:
        raise Graph6Error(f"record too short: {len(data) - 1} body bytes, expected {need}")
    if len(data) - 1 > need:
        raise Graph6Error(f"trailing garbage after {need} body bytes")
    rows = [0] * n
    pairs = _pair_sequence(n)
    k = 0
    for b in data[1:]:
        if not 63 <= b <= 126:
            raise Graph6Error(f"body byte out of range: {b}")
        group = b - 63
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if k < npairs:
                if bit:
                    i, j = next(pairs)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                else:
                    next(pairs)
            elif bit:
                raise Graph6Error("nonzero padding bits")
            k += 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode a graph of order <= 32 as a graph6 record."""
    out = [g.n + 63]
    group = 0
    filled = 0
    for i, j in _pair_sequence(g.n):
        group = (group << 1) | ((g.rows[i] >> j) & 1)
        filled += 1
        if filled == 6:
            out.append(group + 63)
            group = 0
            filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


def read_graph6_file(path: str) -> Iterator[Graph]:
    """Parse every nonblank line of a graph6 file."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc


# ---------------------------------------------------------------------------
# Stock constructions
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("order must be positive")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("order must be positive")
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need order >= 3")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("order must be positive")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides must be positive")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; the right operand is relabeled above the left."""
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every cross edge."""
    u = union(g, h)
    left = (1 << g.n) - 1
    right = u.vertex_mask ^ left
    rows = [
        (row | right) if v < g.n else (row | left)
        for v, row in enumerate(u.rows)
    ]
    return Graph(u.n, tuple(rows))


def corona_k3_k1() -> Graph:
    """Triangle with one pendant vertex attached to each triangle vertex."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


# ---------------------------------------------------------------------------
# Named-graph expressions
# ---------------------------------------------------------------------------
#
# Grammar: K(n), Kbar(n), C(n) with n>=3, P(n), Kbip(a,b), union(s,t),
# join(s,t), corona_k3_k1.


class NamedGraphError(ValueError):
    """Raised for unparsable or invalid named-graph expressions."""


def _tokenize(expr: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(expr):
        c = expr[i]
        if c.isspace():
            i += 1
        elif c in "(),":
            tokens.append(c)
            i += 1
        elif c.isalnum() or c == "_":
            j = i
            while j < len(expr) and (expr[j].isalnum() or expr[j] == "_"):
                j += 1
            tokens.append(expr[i:j])
            i = j
        else:
            raise NamedGraphError(f"unexpected character {c!r} in expression")
    return tokens


class _NamedParser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise NamedGraphError("unexpected end of expression")
        if expected is not None and tok != expected:
            raise NamedGraphError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse_int(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise NamedGraphError(f"expected an integer, got {tok!r}")
        return int(tok)

    def parse_graph(self) -> Graph:
        name = self.take()
        if name == "corona_k3_k1":
            return corona_k3_k1()
        self.take("(")
        if name == "K":
            g = complete(self._positive_int("K"))
        elif name == "Kbar":
            g = empty_graph(self._positive_int("Kbar"))
        elif name == "C":
            k = self._positive_int("C")
            if k < 3:
                raise NamedGraphError("C(n) needs n >= 3")
            g = cycle(k)
        elif name == "P":
            g = path(self._positive_int("P"))
        elif name == "Kbip":
            a = self._positive_int("Kbip")
            self.take(",")
            b = self._positive_int("Kbip")
            g = complete_bipartite(a, b)
        elif name == "union":
            left = self.parse_graph()
            self.take(",")
            g = union(left, self.parse_graph())
        elif name == "join":
            left = self.parse_graph()
            self.take(",")
            g = join(left, self.parse_graph())
        else:
            raise NamedGraphError(f"unknown graph name {name!r}")
        self.take(")")
        return g

    def _positive_int(self, name: str) -> int:
        k = self.parse_int()
        if k < 1:
            raise NamedGraphError(f"{name} needs a positive order")
        return k


def build_named(expr: str) -> Graph:
    """Build a stock graph from an expression like ``join(Kbar(2), K(3))``."""
    parser = _NamedParser(_tokenize(expr))
    g = parser.parse_graph()
    if parser.peek() is not None:
        raise NamedGraphError(f"trailing tokens after expression: {parser.peek()!r}")
    return g
