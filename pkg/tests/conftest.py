"""Shared strategies and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: the
isomorphism oracle searches permutations, the partition oracle enumerates
set partitions with a from-scratch validity predicate, and the canonical
oracle minimizes over all permutations.
"""

from __future__ import annotations

from itertools import permutations

from hypothesis import strategies as st

from coalition_kit.graphs import Graph


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


@st.composite
def graph_with_permutation(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation-search oracle, independent of canonical labeling."""
    if g.n != h.n:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    g_edges = set(g.edges())
    h_edges = set(h.edges())
    if len(g_edges) != len(h_edges):
        return False
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in h_edges for u, v in g_edges):
            return True
    return False


def all_set_partitions(items: list):
    """Every set partition of ``items`` as a list of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in all_set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1 :]
        yield [[first]] + smaller


def oracle_coalition_number(g: Graph) -> int:
    """Exhaustive maximum over all set partitions, with a from-scratch
    validity predicate built on neighbor sets."""
    closed = [set([v]) | {u for u in range(g.n) if g.has_edge(u, v)} for v in range(g.n)]
    everything = set(range(g.n))

    def dominates(block):
        covered = set()
        for v in block:
            covered |= closed[v]
        return covered == everything

    best = 0
    for blocks in all_set_partitions(list(range(g.n))):
        ok = True
        for i, block in enumerate(blocks):
            if dominates(block):
                if len(block) != 1:
                    ok = False
                    break
                continue
            if not any(
                j != i and not dominates(other) and dominates(block + other)
                for j, other in enumerate(blocks)
            ):
                ok = False
                break
        if ok:
            best = max(best, len(blocks))
    return best


def oracle_min_perm_code(g: Graph) -> tuple:
    """Canonical form by minimizing over every permutation (small n only)."""
    best = None
    for perm in permutations(range(g.n)):
        code = tuple(
            1 if g.has_edge(perm[i], perm[j]) else 0
            for i in range(g.n)
            for j in range(i + 1, g.n)
        )
        if best is None or code < best:
            best = code
    return (g.n, best)
