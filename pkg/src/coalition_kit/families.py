"""Constructive graph families: recognizers, witness validators, generators.

Four families matter here. Two characterize which graphs admit the
all-singletons coalition partition when no vertex is adjacent to everything:
one for minimum degree 1 (a degree-1 vertex x with neighbor y, a hub w
joined to the remaining vertices P and Q, P-vertices joined to everything
outside {x, y}), and a three-branch family for minimum degree 2 (a degree-2
vertex x with neighbors y, z and role sets L1/R1/R2/L2/W classifying the
rest by adjacency to y and z). The other two families contain the
singleton-coalition graphs of members of the first two.

Recognizers search role assignments deterministically (ascending vertex
order, first hit wins) and return a witness; validators re-check a witness
against the defining conditions and report violations; generators build
seeded members, with free edge choices drawn from the seed, and always
re-recognize what they built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, bits, degree_stats, mask_of


class GenerationError(ValueError):
    """A generator could not realize the requested parameters."""


def _is_clique(g: Graph, mask: int) -> bool:
    return all(g.rows[v] & mask == mask ^ (1 << v) for v in bits(mask))


def _is_independent(g: Graph, mask: int) -> bool:
    return all(g.rows[v] & mask == 0 for v in bits(mask))


def _covers(row: int, mask: int) -> bool:
    return row & mask == mask


# ---------------------------------------------------------------------------
# Minimum degree 1, no full vertex
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class F1Witness:
    x: int
    y: int
    w: int
    p_set: int
    q_set: int


def recognize_f1(g: Graph) -> F1Witness | None:
    """Role search: x of degree 1, y its neighbor, w adjacent to all of the
    rest; P collects the rest-vertices adjacent to every other rest-vertex,
    Q the remainder. First witness in (x, w) order."""
    vmask = g.vertex_mask
    for x in range(g.n):
        if g.degree(x) != 1:
            continue
        y = g.rows[x].bit_length() - 1
        for w in range(g.n):
            if w == x or w == y:
                continue
            pq = vmask ^ (1 << x) ^ (1 << y) ^ (1 << w)
            if pq == 0 or g.rows[w] != pq:
                continue
            p = mask_of(v for v in bits(pq) if _covers(g.rows[v], pq ^ (1 << v)))
            q = pq ^ p
            if q:
                if q.bit_count() < 2:
                    continue
                if not _covers(g.rows[y], q):
                    continue
                # no vertex full inside the induced subgraph on Q
                if any(g.rows[v] & q == q ^ (1 << v) for v in bits(q)):
                    continue
            return F1Witness(x, y, w, p, q)
    return None


def f1_violations(g: Graph, wit: F1Witness) -> list[str]:
    out = []
    roles = (1 << wit.x) | (1 << wit.y) | (1 << wit.w)
    if (1 << wit.x) & ((1 << wit.y) | (1 << wit.w)) or wit.y == wit.w:
        out.append("x, y, w not distinct")
    if (wit.p_set | wit.q_set) & roles or wit.p_set & wit.q_set:
        out.append("role sets overlap")
    if roles | wit.p_set | wit.q_set != g.vertex_mask:
        out.append("roles do not cover the vertex set")
    if g.rows[wit.x] != 1 << wit.y:
        out.append("x is not a degree-1 vertex with neighbor y")
    pq = wit.p_set | wit.q_set
    if pq == 0:
        out.append("P and Q both empty")
    if g.rows[wit.w] != pq:
        out.append("w is not adjacent to exactly P and Q")
    for v in bits(wit.p_set):
        if not _covers(g.rows[v], pq ^ (1 << v)):
            out.append(f"P-vertex {v} misses part of P or Q")
    if wit.q_set:
        if wit.q_set.bit_count() < 2:
            out.append("Q nonempty but smaller than 2")
        if not _covers(g.rows[wit.y], wit.q_set):
            out.append("y misses part of Q")
        if any(g.rows[v] & wit.q_set == wit.q_set ^ (1 << v) for v in bits(wit.q_set)):
            out.append("induced subgraph on Q has a full vertex")
    if degree_stats(g).full_count:
        out.append("graph has a full vertex")
    return out


@dataclass(frozen=True)
class H1Witness:
    x1: int
    y1: int
    w1: int
    p1_set: int
    q1_set: int


def recognize_h1(g: Graph) -> H1Witness | None:
    """Bipartite role search over ordered non-adjacent pairs (x1, y1): y1
    adjacent to exactly the other side B1, B1 independent, x1 adjacent to a
    nonempty part of B1; Q1 is the rest of B1 (empty or of size >= 2)."""
    vmask = g.vertex_mask
    for x1 in range(g.n):
        for y1 in range(g.n):
            if y1 == x1 or g.has_edge(x1, y1):
                continue
            b1 = vmask ^ (1 << x1) ^ (1 << y1)
            if b1.bit_count() < 2 or g.rows[y1] != b1:
                continue
            if not _is_independent(g, b1):
                continue
            nx1 = g.rows[x1]
            if nx1 == 0:
                continue
            q1 = b1 & ~nx1
            if q1 and q1.bit_count() < 2:
                continue
            w1 = (nx1 & -nx1).bit_length() - 1
            return H1Witness(x1, y1, w1, nx1 ^ (1 << w1), q1)
    return None


def h1_violations(g: Graph, wit: H1Witness) -> list[str]:
    out = []
    b1 = wit.p1_set | (1 << wit.w1) | wit.q1_set
    if g.has_edge(wit.x1, wit.y1):
        out.append("x1 and y1 adjacent")
    if ((1 << wit.x1) | (1 << wit.y1)) | b1 != g.vertex_mask:
        out.append("roles do not cover the vertex set")
    if (1 << wit.x1) & b1 or (1 << wit.y1) & b1:
        out.append("x1 or y1 inside B1")
    if g.rows[wit.y1] != b1:
        out.append("y1 not adjacent to exactly B1")
    if g.rows[wit.x1] != wit.p1_set | (1 << wit.w1):
        out.append("x1 not adjacent to exactly P1 and w1")
    if not _is_independent(g, b1):
        out.append("B1 not independent")
    if (wit.p1_set | wit.q1_set) == 0:
        out.append("P1 and Q1 both empty")
    if wit.q1_set and wit.q1_set.bit_count() < 2:
        out.append("Q1 nonempty but smaller than 2")
    return out


# ---------------------------------------------------------------------------
# Minimum degree 2, no full vertex
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class F2Witness:
    subfamily: int
    x: int
    y: int
    z: int
    l1: int = 0
    r1: int = 0
    r2: int = 0
    l2: int = 0
    w_set: int = 0


def _f2_try(g: Graph, x: int, y: int, z: int, sub: int) -> F2Witness | None:
    vmask = g.vertex_mask
    vx = vmask ^ (1 << x) ^ (1 << y) ^ (1 << z)
    yz = g.has_edge(y, z)
    if sub == 1:
        if yz or vx == 0:
            return None
        if _covers(g.rows[y], vx) and _covers(g.rows[z], vx):
            return F2Witness(1, x, y, z, r1=vx)
        return None
    if sub == 2:
        if yz or not _covers(g.rows[y], vx):
            return None
        r1 = vx & g.rows[z]
        l1 = vx & ~g.rows[z]
        if l1 == 0 or r1 == 0 or not _is_clique(g, l1):
            return None
        return F2Witness(2, x, y, z, l1=l1, r1=r1)
    # subfamily 3: classify the rest by adjacency to y and z
    l1 = vx & g.rows[y] & ~g.rows[z]
    r1 = vx & g.rows[y] & g.rows[z]
    r2 = vx & g.rows[z] & ~g.rows[y]
    l2 = vx & ~g.rows[y] & ~g.rows[z]
    # the case analysis yields {x,y} and {x,z} non-dominating, i.e.
    # R2|L2 and L1|L2 nonempty; requiring L1 and R2 themselves nonempty
    # would miss members whose only off-side vertices sit in L2
    if (l1 | l2) == 0 or (r2 | l2) == 0:
        return None
    # maximal hub set: vertices seeing all of the rest; any valid W sits
    # inside it and every condition is monotone in W
    wstar = mask_of(v for v in bits(vx) if _covers(g.rows[v] | (1 << v), vx))
    if wstar == 0 or l2 & ~wstar:
        return None
    for r in bits(r1):
        if not (_covers(g.rows[r], l1) or _covers(g.rows[r], r2)):
            return None
    if not yz:
        if not (_is_clique(g, l1) and _is_clique(g, r2)):
            return None
    else:
        for v in bits(l1):
            if not (_covers(g.rows[v], l1 ^ (1 << v)) or _covers(g.rows[v], r2)):
                return None
        for v in bits(r2):
            if not (_covers(g.rows[v], r2 ^ (1 << v)) or _covers(g.rows[v], l1)):
                return None
    return F2Witness(3, x, y, z, l1=l1, r1=r1, r2=r2, l2=l2, w_set=wstar)


def recognize_f2(g: Graph) -> F2Witness | None:
    """Role search for the minimum-degree-2 family: x ascending over degree-2
    vertices, its neighbor pair in both orders, subfamilies tried 1, 2, 3."""
    stats = degree_stats(g)
    if stats.min_degree != 2 or stats.full_count:
        return None
    for x in range(g.n):
        if g.degree(x) != 2:
            continue
        a, b = list(bits(g.rows[x]))
        for y, z in ((a, b), (b, a)):
            for sub in (1, 2, 3):
                wit = _f2_try(g, x, y, z, sub)
                if wit is not None:
                    return wit
    return None


def f2_violations(g: Graph, wit: F2Witness) -> list[str]:
    out = []
    stats = degree_stats(g)
    if stats.min_degree != 2:
        out.append("minimum degree is not 2")
    if stats.full_count:
        out.append("graph has a full vertex")
    if g.rows[wit.x] != (1 << wit.y) | (1 << wit.z):
        out.append("x not adjacent to exactly y and z")
    if _f2_try(g, wit.x, wit.y, wit.z, wit.subfamily) is None:
        out.append(f"subfamily-{wit.subfamily} conditions fail for the given roles")
    return out


@dataclass(frozen=True)
class H2Witness:
    subfamily: int
    x: int
    y: int
    z: int
    l1: int = 0
    r1: int = 0
    r2: int = 0
    w_set: int = 0


def _h2_sub1(g: Graph) -> H2Witness | None:
    vmask = g.vertex_mask
    for x in range(g.n):
        for y in range(g.n):
            if y == x or not g.has_edge(x, y):
                continue
            for z in range(y + 1, g.n):
                if z == x or not g.has_edge(x, z) or not g.has_edge(y, z):
                    continue
                r1 = vmask ^ (1 << x) ^ (1 << y) ^ (1 << z)
                if r1 == 0 or not _is_independent(g, r1):
                    continue
                if all(_covers(g.rows[v], (1 << y) | (1 << z)) for v in bits(r1)):
                    return H2Witness(1, x, y, z, r1=r1)
    return None


def _h2_sub2(g: Graph) -> H2Witness | None:
    vmask = g.vertex_mask
    for y in range(g.n):
        for x in bits(g.rows[y]):
            for z in bits(g.rows[y]):
                if z == x or g.has_edge(x, z):
                    continue
                vx = vmask ^ (1 << x) ^ (1 << y) ^ (1 << z)
                r1 = vx & g.rows[y]
                l1 = vx & ~g.rows[y]
                if r1 == 0 or l1 == 0:
                    continue
                if not _is_independent(g, l1 | r1):
                    continue
                if not _covers(g.rows[z], l1):
                    continue
                allowed = (1 << x) | (1 << z)
                if any(g.rows[v] & ~allowed for v in bits(l1)):
                    continue
                return H2Witness(2, x, y, z, l1=l1, r1=r1)
    return None


def _h2_sub3(g: Graph) -> H2Witness | None:
    vmask = g.vertex_mask
    for x in range(g.n):
        w = g.rows[x]
        if w == 0:
            continue  # x' needs at least the hub neighbors
        outside = vmask ^ (1 << x) ^ w
        for y in bits(outside):
            for z in bits(outside):
                if z <= y:
                    continue
                rest = outside ^ (1 << y) ^ (1 << z)
                if not _is_independent(g, w | rest):
                    continue
                if any(g.rows[v] & ((1 << y) | (1 << z)) == 0 for v in bits(rest)):
                    continue
                return H2Witness(
                    3,
                    x,
                    y,
                    z,
                    w_set=w,
                    l1=rest & g.rows[y] & ~g.rows[z],
                    r1=rest & g.rows[y] & g.rows[z],
                    r2=rest & g.rows[z] & ~g.rows[y],
                )
    return None


def recognize_h2(g: Graph, subfamily: int | None = None) -> H2Witness | None:
    """Role search for singleton-coalition images of the degree-2 family.

    Subfamily 1: a triangle x'y'z' with the independent rest joined to both
    y' and z' (x'-edges free). Subfamily 2: a path x'y'z' with independent
    sides split by adjacency to y'. Subfamily 3: x' adjacent to exactly an
    independent hub set, every other outside vertex adjacent to y' or z'.
    Tried in that order unless ``subfamily`` pins one.
    """
    searchers = {1: _h2_sub1, 2: _h2_sub2, 3: _h2_sub3}
    order = (subfamily,) if subfamily else (1, 2, 3)
    for sub in order:
        wit = searchers[sub](g)
        if wit is not None:
            return wit
    return None


def h2_violations(g: Graph, wit: H2Witness) -> list[str]:
    out = []
    vmask = g.vertex_mask
    roles = (1 << wit.x) | (1 << wit.y) | (1 << wit.z)
    if wit.subfamily == 1:
        if not (g.has_edge(wit.x, wit.y) and g.has_edge(wit.x, wit.z) and g.has_edge(wit.y, wit.z)):
            out.append("x'y'z' is not a triangle")
        r1 = vmask ^ roles
        if wit.r1 != r1 or r1 == 0:
            out.append("R1' must be the nonempty rest of the vertex set")
        if not _is_independent(g, r1):
            out.append("R1' not independent")
        if any(not _covers(g.rows[v], (1 << wit.y) | (1 << wit.z)) for v in bits(r1)):
            out.append("some R1' vertex misses y' or z'")
    elif wit.subfamily == 2:
        if not (g.has_edge(wit.x, wit.y) and g.has_edge(wit.y, wit.z)):
            out.append("missing x'y' or y'z' edge")
        if g.has_edge(wit.x, wit.z):
            out.append("x'z' edge present")
        if wit.l1 == 0 or wit.r1 == 0:
            out.append("L1' and R1' must both be nonempty")
        if not _is_independent(g, wit.l1 | wit.r1):
            out.append("L1' union R1' not independent")
        if not _covers(g.rows[wit.y], wit.r1) or g.rows[wit.y] & wit.l1:
            out.append("y' adjacency to the sides is wrong")
        if not _covers(g.rows[wit.z], wit.l1):
            out.append("z' misses part of L1'")
        allowed = (1 << wit.x) | (1 << wit.z)
        if any(g.rows[v] & ~allowed for v in bits(wit.l1)):
            out.append("some L1' vertex has neighbors outside {x', z'}")
    else:
        if wit.w_set == 0:
            out.append("W' empty")
        if g.rows[wit.x] != wit.w_set:
            out.append("x' not adjacent to exactly W'")
        rest = wit.l1 | wit.r1 | wit.r2
        if not _is_independent(g, wit.w_set | rest):
            out.append("outside set not independent")
        if any(g.rows[v] & ((1 << wit.y) | (1 << wit.z)) == 0 for v in bits(rest)):
            out.append("some outside vertex misses both y' and z'")
        if roles | wit.w_set | rest != vmask:
            out.append("roles do not cover the vertex set")
    return out


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    family: str
    sizes: dict[str, int]
    seed: int

    def __str__(self) -> str:
        parts = [f"{k}={v}" for k, v in self.sizes.items()]
        parts.append(f"seed={self.seed}")
        return f"{self.family}:{','.join(parts)}"

    def __hash__(self) -> int:  # sizes dict is never mutated after parse
        return hash((self.family, tuple(sorted(self.sizes.items())), self.seed))


_FAMILY_KEYS = {
    "f1": {"P", "Q"},
    "h1": {"P1", "Q1"},
    "f2.1": {"R1"},
    "f2.2": {"L1", "R1"},
    "f2.3": {"L1", "R1", "R2", "L2", "W"},
    "h2.1": {"R1"},
    "h2.2": {"L1", "R1"},
    "h2.3": {"L1", "R1", "R2", "W"},
}


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``family:key=value,...`` with an optional ``seed=<int>`` entry."""
    head, sep, body = text.partition(":")
    family = head.strip().lower()
    if family not in _FAMILY_KEYS:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(_FAMILY_KEYS)}")
    sizes: dict[str, int] = {}
    seed = 0
    if sep:
        for item in body.split(","):
            item = item.strip()
            if not item:
                continue
            key, eq, value = item.partition("=")
            if not eq or not value.strip().lstrip("-").isdigit():
                raise ValueError(f"bad size entry {item!r}")
            key = key.strip()
            if key.lower() == "seed":
                seed = int(value)
            elif key in _FAMILY_KEYS[family]:
                sizes[key] = int(value)
            else:
                raise ValueError(f"unknown key {key!r} for family {family}")
    return FamilySpec(family, sizes, seed)


def _rng_subset(rng: random.Random, items: list, prob: float = 0.5) -> list:
    return [it for it in items if rng.random() < prob]


def _generate_f1(p: int, q: int, seed: int) -> Graph:
    if p < 0 or q < 0 or (q != 0 and q < 2) or p + q < 1:
        raise GenerationError("need P >= 0, Q = 0 or Q >= 2, and P + Q >= 1")
    rng = random.Random(seed)
    x, y, w = 0, 1, 2
    pv = list(range(3, 3 + p))
    qv = list(range(3 + p, 3 + p + q))
    n = 3 + p + q
    edges = {(x, y)}
    for v in pv + qv:
        edges.add((w, v))
    for i, u in enumerate(pv):
        for v in pv[i + 1 :]:
            edges.add((u, v))
        for v in qv:
            edges.add((u, v))
    for v in qv:
        edges.add((y, v))
    for v in _rng_subset(rng, pv):
        edges.add((y, v))
    # free edges inside Q, repaired so the induced subgraph on Q stays
    # free of full vertices
    q_edges = {
        (u, v) for i, u in enumerate(qv) for v in qv[i + 1 :] if rng.random() < 0.5
    }
    def q_deg(v):
        return sum(1 for e in q_edges if v in e)
    for _ in range(64):
        full_q = [v for v in qv if q_deg(v) == q - 1]
        if not full_q:
            break
        v = full_q[0]
        incident = sorted(e for e in q_edges if v in e)
        q_edges.remove(incident[rng.randrange(len(incident))])
    edges |= q_edges
    return Graph.from_edges(n, sorted(edges))


def _generate_h1(p1: int, q1: int, seed: int) -> Graph:
    if p1 < 0 or q1 < 0 or (q1 != 0 and q1 < 2) or p1 + q1 < 1:
        raise GenerationError("need P1 >= 0, Q1 = 0 or Q1 >= 2, and P1 + Q1 >= 1")
    x1, y1, w1 = 0, 1, 2
    pv = list(range(3, 3 + p1))
    qv = list(range(3 + p1, 3 + p1 + q1))
    edges = [(y1, v) for v in [w1] + pv + qv]
    edges += [(x1, v) for v in [w1] + pv]
    return Graph.from_edges(3 + p1 + q1, edges)


def _generate_f2_1(r1: int, seed: int) -> Graph:
    if r1 < 1:
        raise GenerationError("need R1 >= 1")
    rng = random.Random(seed)
    x, y, z = 0, 1, 2
    rv = list(range(3, 3 + r1))
    edges = [(x, y), (x, z)] + [(y, v) for v in rv] + [(z, v) for v in rv]
    edges += [
        (u, v) for i, u in enumerate(rv) for v in rv[i + 1 :] if rng.random() < 0.5
    ]
    return Graph.from_edges(3 + r1, edges)


def _generate_f2_2(l1: int, r1: int, seed: int) -> Graph:
    if l1 < 1 or r1 < 1:
        raise GenerationError("need L1 >= 1 and R1 >= 1")
    rng = random.Random(seed)
    x, y, z = 0, 1, 2
    lv = list(range(3, 3 + l1))
    rv = list(range(3 + l1, 3 + l1 + r1))
    edges = {(x, y), (x, z)}
    edges |= {(y, v) for v in lv + rv}
    edges |= {(z, v) for v in rv}
    edges |= {(u, v) for i, u in enumerate(lv) for v in lv[i + 1 :]}
    edges |= {(u, v) for i, u in enumerate(rv) for v in rv[i + 1 :] if rng.random() < 0.5}
    edges |= {(u, v) for u in lv for v in rv if rng.random() < 0.4}
    if l1 == 1:
        # the lone L1 vertex needs a second neighbor to keep minimum degree 2
        u = lv[0]
        if not any(u in e and (e[0] in rv or e[1] in rv) for e in edges):
            edges.add((u, rv[rng.randrange(r1)]))
    return Graph.from_edges(3 + l1 + r1, sorted(edges))


def _generate_f2_3(l1: int, r1: int, r2: int, l2: int, w0: int, seed: int) -> Graph:
    if l1 < 1 or r2 < 1 or r1 < 0 or l2 < 0 or w0 < 0:
        raise GenerationError("need L1 >= 1, R2 >= 1, and nonnegative R1, L2, W")
    rng = random.Random(seed)
    x, y, z = 0, 1, 2
    cursor = 3
    lv = list(range(cursor, cursor + l1)); cursor += l1
    rv1 = list(range(cursor, cursor + r1)); cursor += r1
    rv2 = list(range(cursor, cursor + r2)); cursor += r2
    l2v = list(range(cursor, cursor + l2)); cursor += l2
    w0v = list(range(cursor, cursor + w0)); cursor += w0
    n = cursor
    vx = lv + rv1 + rv2 + l2v + w0v
    # the hub set W: all of L2, the dedicated vertices, plus a seeded
    # overlap with the classified sets; it must end up nonempty
    overlap = _rng_subset(rng, lv + rv1 + rv2, 0.3)
    wv = set(l2v) | set(w0v) | set(overlap)
    if not wv:
        wv = {(lv + rv1 + rv2)[rng.randrange(l1 + r1 + r2)]}
    yz = rng.random() < 0.5
    edges = {(x, y), (x, z)}
    if yz:
        edges.add((y, z))
    edges |= {(y, v) for v in lv + rv1}
    edges |= {(z, v) for v in rv1 + rv2}
    for u in wv:
        for v in vx:
            if u != v:
                edges.add((min(u, v), max(u, v)))
    def saturate(u, targets):
        for v in targets:
            if v != u:
                edges.add((min(u, v), max(u, v)))
    for u in rv1:
        saturate(u, lv if rng.random() < 0.5 else rv2)
    if not yz:
        for i, u in enumerate(lv):
            saturate(u, lv[i + 1 :])
        for i, u in enumerate(rv2):
            saturate(u, rv2[i + 1 :])
    else:
        for u in lv:
            saturate(u, lv if rng.random() < 0.5 else rv2)
        for u in rv2:
            saturate(u, rv2 if rng.random() < 0.5 else lv)
    # seeded extras among the classified vertices are always safe
    for i, u in enumerate(vx):
        for v in vx[i + 1 :]:
            if rng.random() < 0.15:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def _generate_h2_1(r1: int, seed: int) -> Graph:
    if r1 < 1:
        raise GenerationError("need R1 >= 1")
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    rv = list(range(3, 3 + r1))
    edges += [(1, v) for v in rv] + [(2, v) for v in rv]
    edges += [(0, v) for v in _rng_subset(rng, rv)]
    return Graph.from_edges(3 + r1, edges)


def _generate_h2_2(l1: int, r1: int, seed: int) -> Graph:
    if l1 < 1 or r1 < 1:
        raise GenerationError("need L1 >= 1 and R1 >= 1")
    rng = random.Random(seed)
    x, y, z = 0, 1, 2
    lv = list(range(3, 3 + l1))
    rv = list(range(3 + l1, 3 + l1 + r1))
    edges = [(x, y), (y, z)]
    edges += [(z, v) for v in lv]
    edges += [(y, v) for v in rv]
    edges += [(x, v) for v in _rng_subset(rng, lv)]
    edges += [(x, v) for v in _rng_subset(rng, rv)]
    edges += [(z, v) for v in _rng_subset(rng, rv)]
    return Graph.from_edges(3 + l1 + r1, edges)


def _generate_h2_3(l1: int, r1: int, r2: int, w: int, seed: int) -> Graph:
    if w < 1 or min(l1, r1, r2) < 0:
        raise GenerationError("need W >= 1 and nonnegative L1, R1, R2")
    rng = random.Random(seed)
    x, y, z = 0, 1, 2
    cursor = 3
    lv = list(range(cursor, cursor + l1)); cursor += l1
    rv1 = list(range(cursor, cursor + r1)); cursor += r1
    rv2 = list(range(cursor, cursor + r2)); cursor += r2
    wv = list(range(cursor, cursor + w)); cursor += w
    edges = [(x, v) for v in wv]
    edges += [(y, v) for v in lv + rv1]
    edges += [(z, v) for v in rv1 + rv2]
    if rng.random() < 0.5:
        edges.append((y, z))
    edges += [(y, v) for v in _rng_subset(rng, wv)]
    edges += [(z, v) for v in _rng_subset(rng, wv)]
    return Graph.from_edges(cursor, edges)


_RECOGNIZERS = {
    "f1": recognize_f1,
    "h1": recognize_h1,
    "f2.1": recognize_f2,
    "f2.2": recognize_f2,
    "f2.3": recognize_f2,
    "h2.1": lambda g: recognize_h2(g, 1),
    "h2.2": lambda g: recognize_h2(g, 2),
    "h2.3": lambda g: recognize_h2(g, 3),
}


def generate_family(spec: FamilySpec | str) -> Graph:
    """Build a seeded family member; the result always re-recognizes."""
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    s = spec.sizes
    builders = {
        "f1": lambda: _generate_f1(s.get("P", 0), s.get("Q", 0), spec.seed),
        "h1": lambda: _generate_h1(s.get("P1", 0), s.get("Q1", 0), spec.seed),
        "f2.1": lambda: _generate_f2_1(s.get("R1", 0), spec.seed),
        "f2.2": lambda: _generate_f2_2(s.get("L1", 0), s.get("R1", 0), spec.seed),
        "f2.3": lambda: _generate_f2_3(
            s.get("L1", 0), s.get("R1", 0), s.get("R2", 0), s.get("L2", 0), s.get("W", 0), spec.seed
        ),
        "h2.1": lambda: _generate_h2_1(s.get("R1", 0), spec.seed),
        "h2.2": lambda: _generate_h2_2(s.get("L1", 0), s.get("R1", 0), spec.seed),
        "h2.3": lambda: _generate_h2_3(
            s.get("L1", 0), s.get("R1", 0), s.get("R2", 0), s.get("W", 0), spec.seed
        ),
    }
    g = builders[spec.family]()
    if _RECOGNIZERS[spec.family](g) is None:
        raise GenerationError(f"generated graph failed recognition for {spec}")
    return g
