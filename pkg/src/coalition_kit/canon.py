"""Canonical forms, isomorphism, and exhaustive enumeration of small graphs.

A canonical code is an order byte followed by the packed upper triangle of
the canonically relabeled adjacency matrix; two graphs of order <= 16 get
equal codes iff they are isomorphic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from ._backend import IS_COMPILED, canonical_code, sweep_codes
from .graphs import Graph
from .limits import CANON_MAX, ENUM_MAX


def canonical_form(g: Graph) -> bytes:
    """Canonical code of ``g`` (order <= 16)."""
    return canonical_code(g.n, g.rows)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via canonical-code equality (order <= 16)."""
    if g.n != h.n:
        return False
    if g.n > CANON_MAX:
        raise ValueError(f"isomorphism supports order 1..{CANON_MAX}, got {g.n}")
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def graph_from_code(code: bytes) -> Graph:
    """Rebuild the graph a canonical code describes."""
    if not code:
        raise ValueError("empty code")
    n = code[0]
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code[1 + (k >> 3)] & (0x80 >> (k & 7)):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def _extend_codes(parent_codes: tuple[bytes, ...], n: int) -> list[bytes]:
    # Every order-n class contains a vertex whose deletion is an order-(n-1)
    # class, so extending each parent by every neighborhood mask is complete.
    seen: set[bytes] = set()
    for code in parent_codes:
        parent = graph_from_code(code)
        rows = list(parent.rows) + [0]
        for mask in range(1 << (n - 1)):
            cand = list(rows)
            cand[n - 1] = mask
            for v in range(n - 1):
                if (mask >> v) & 1:
                    cand[v] |= 1 << (n - 1)
            seen.add(canonical_code(n, cand))
    return sorted(seen)


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[bytes, ...]:
    if n == 1:
        return (canonical_code(1, (0,)),)
    if IS_COMPILED:
        return tuple(sweep_codes(n))
    return tuple(_extend_codes(_codes(n - 1), n))


def enumerate_graphs(
    n: int, predicate: Callable[[Graph], bool] | None = None
) -> Iterator[Graph]:
    """One representative per isomorphism class of order n (n <= 7 built in).

    The optional predicate filters the stream; representatives come out in
    canonical-code order, so runs are deterministic.
    """
    if not 1 <= n <= ENUM_MAX:
        raise ValueError(
            f"built-in enumeration supports order 1..{ENUM_MAX}; "
            "larger orders must arrive via graph6 files"
        )
    for code in _codes(n):
        g = graph_from_code(code)
        if predicate is None or predicate(g):
            yield g


def class_count(n: int) -> int:
    """Number of isomorphism classes of order n (n <= 7)."""
    if not 1 <= n <= ENUM_MAX:
        raise ValueError(f"built-in enumeration supports order 1..{ENUM_MAX}")
    return len(_codes(n))
