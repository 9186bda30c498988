"""Dominating sets, coalitions, coalition partitions, and the exact
maximum-partition search.

A set D dominates when every vertex is in D or adjacent to it, i.e.
N[D] = V. Two disjoint nonempty sets form a coalition when neither
dominates but their union does. A coalition partition is a vertex
partition whose parts are one-vertex dominating sets or coalition partners
of another part; the coalition number is the largest part count over all
such partitions. The all-singletons partition plays a special role: a
graph admitting it as a coalition partition is a singleton-partition
graph, and that holds exactly when the coalition number equals the order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, mask_of
from .limits import CNUM_MAX


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S]: the set S together with every neighbor of a member."""
    if s & ~g.vertex_mask:
        raise ValueError("vertex set has bits outside the graph")
    out = s
    for v in bits(s):
        out |= g.rows[v]
    return out


def is_dominating(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.vertex_mask


def forms_coalition(g: Graph, a: int, b: int) -> bool:
    """Neither side dominates, the union does."""
    if not a or not b:
        raise ValueError("coalition sides must be nonempty")
    if a & b:
        raise ValueError("coalition sides must be disjoint")
    return (
        not is_dominating(g, a)
        and not is_dominating(g, b)
        and is_dominating(g, a | b)
    )


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Ordered partition of the vertices into nonempty disjoint parts."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = 0
        for part in self.parts:
            if part == 0:
                raise ValueError("empty part")
            if part & seen:
                raise ValueError("overlapping parts")
            seen |= part
        if seen != (1 << self.n) - 1:
            raise ValueError("parts do not cover the vertex set")

    @property
    def k(self) -> int:
        return len(self.parts)

    @staticmethod
    def from_blocks(n: int, blocks: list[list[int]]) -> "Partition":
        return Partition(n, tuple(mask_of(b) for b in blocks))


def singleton_partition(g: Graph) -> Partition:
    """The all-singletons partition of V."""
    return Partition(g.n, tuple(1 << v for v in range(g.n)))


@dataclass(frozen=True)
class PartVerdict:
    index: int
    status: str  # "singleton-dominating" | "coalition" | "invalid"
    partner: int | None = None  # least valid partner part index
    reason: str | None = None


@dataclass(frozen=True)
class PartitionVerdict:
    valid: bool
    per_part: tuple[PartVerdict, ...]


def is_coalition_partition(g: Graph, p: Partition) -> PartitionVerdict:
    """Judge every part: one-vertex dominating set, coalition partner, or invalid."""
    if p.n != g.n:
        raise ValueError("partition order does not match the graph")
    dominating = [is_dominating(g, part) for part in p.parts]
    verdicts: list[PartVerdict] = []
    for i, part in enumerate(p.parts):
        if dominating[i]:
            if part.bit_count() == 1:
                verdicts.append(PartVerdict(i, "singleton-dominating"))
            else:
                verdicts.append(
                    PartVerdict(i, "invalid", reason="dominating part with more than one vertex")
                )
            continue
        partner = None
        for j, other in enumerate(p.parts):
            if j != i and not dominating[j] and is_dominating(g, part | other):
                partner = j
                break
        if partner is None:
            verdicts.append(PartVerdict(i, "invalid", reason="no coalition partner"))
        else:
            verdicts.append(PartVerdict(i, "coalition", partner=partner))
    return PartitionVerdict(all(v.status != "invalid" for v in verdicts), tuple(verdicts))


# ---------------------------------------------------------------------------
# Singleton-partition check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpVerdict:
    """Whether the all-singletons partition is a coalition partition.

    For a non-full vertex v, a partner is a non-full u with N[u] and N[v]
    covering V; full vertices stand alone as one-vertex dominating sets.
    """

    is_sp: bool
    full_vertices: int
    partner: dict[int, int]
    blocking_vertex: int | None


def sp_check(g: Graph) -> SpVerdict:
    vmask = g.vertex_mask
    closed = [g.rows[v] | (1 << v) for v in range(g.n)]
    full = mask_of(v for v in range(g.n) if closed[v] == vmask)
    partner: dict[int, int] = {}
    for v in range(g.n):
        if (full >> v) & 1:
            continue
        for u in range(g.n):
            if u != v and not (full >> u) & 1 and closed[u] | closed[v] == vmask:
                partner[v] = u
                break
        else:
            return SpVerdict(False, full, {}, v)
    return SpVerdict(True, full, partner, None)


# ---------------------------------------------------------------------------
# Exact coalition number
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoalitionNumberResult:
    value: int
    witness: Partition | None


def coalition_number_exact(g: Graph) -> CoalitionNumberResult:
    """Maximum part count over all coalition partitions, by exhaustive search.

    The all-singletons fast path answers order-many parts immediately;
    otherwise every set partition is enumerated in restricted-growth order,
    pruning branches that cannot beat the incumbent. Graphs admitting no
    coalition partition at all report value 0 with no witness.
    """
    if g.n > CNUM_MAX:
        raise ValueError(f"exact search supports order 1..{CNUM_MAX}, got {g.n}")
    sp = sp_check(g)
    if sp.is_sp:
        return CoalitionNumberResult(g.n, singleton_partition(g))

    best = 0
    best_blocks: tuple[int, ...] | None = None
    blocks: list[int] = []

    def search(v: int) -> None:
        nonlocal best, best_blocks
        if len(blocks) + (g.n - v) <= best:
            return
        if v == g.n:
            p = Partition(g.n, tuple(blocks))
            if is_coalition_partition(g, p).valid:
                best = len(blocks)
                best_blocks = tuple(blocks)
            return
        blocks.append(1 << v)
        search(v + 1)
        blocks.pop()
        for i in range(len(blocks)):
            blocks[i] |= 1 << v
            search(v + 1)
            blocks[i] &= ~(1 << v)

    search(0)
    if best_blocks is None:
        return CoalitionNumberResult(0, None)
    return CoalitionNumberResult(best, Partition(g.n, best_blocks))
