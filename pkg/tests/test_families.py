"""Family recognizers, witness validators, and seeded generators."""

from __future__ import annotations

import pytest

from coalition_kit import are_isomorphic
from coalition_kit.canon import enumerate_graphs
from coalition_kit.coalition_graph import sc_graph
from coalition_kit.domination import sp_check
from coalition_kit.families import (
    GenerationError,
    f1_violations,
    f2_violations,
    generate_family,
    h1_violations,
    h2_violations,
    parse_family_spec,
    recognize_f1,
    recognize_f2,
    recognize_h1,
    recognize_h2,
)
from coalition_kit.graphs import (
    complete,
    complete_bipartite,
    cycle,
    degree_stats,
    empty_graph,
    path,
    union,
)


def test_f1_path_witness():
    wit = recognize_f1(path(4))
    assert wit is not None
    assert (wit.x, wit.y, wit.w) == (0, 1, 3)
    assert wit.p_set == 0b0100 and wit.q_set == 0
    assert f1_violations(path(4), wit) == []


def test_f1_examples():
    assert recognize_f1(union(complete(2), complete(4))) is not None
    assert recognize_f1(complete_bipartite(1, 3)) is None  # center is full
    assert recognize_f1(complete(2)) is None


def test_h1_examples():
    wit = recognize_h1(cycle(4))
    assert wit is not None and wit.q1_set == 0
    assert h1_violations(cycle(4), wit) == []
    assert recognize_h1(complete_bipartite(2, 4)) is not None
    assert recognize_h1(complete(3)) is None


def test_f2_cycle_roles():
    wit = recognize_f2(cycle(4))
    assert wit is not None and wit.subfamily == 1
    assert wit.r1.bit_count() == 1

    wit = recognize_f2(cycle(5))
    assert wit is not None and wit.subfamily == 3
    assert wit.w_set.bit_count() == 2
    assert wit.l1.bit_count() == 1 and wit.r2.bit_count() == 1

    wit = recognize_f2(cycle(6))
    assert wit is not None and wit.subfamily == 3

    assert recognize_f2(cycle(7)) is None
    assert recognize_f2(complete(3)) is None


def test_f2_accepts_the_hub_only_side():
    # singleton-partition graph whose off-side vertices all sit in the hub
    # set; the strict per-side nonemptiness would wrongly reject it
    from coalition_kit.graphs import Graph

    g = Graph.from_edges(
        6, [(0, 4), (0, 5), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)]
    )
    assert sp_check(g).is_sp
    wit = recognize_f2(g)
    assert wit is not None and wit.subfamily == 3
    assert f2_violations(g, wit) == []


@pytest.mark.parametrize("n", [6, 7, 8, 9, 10])
def test_hub_only_shape_at_every_order(n):
    # order-n generalization of the shape above: a degree-2 vertex with its
    # two branch vertices joined to the whole far side, plus one hub vertex
    # adjacent to all of the far side
    from coalition_kit.graphs import Graph

    edges = [(0, 1), (0, 2)]
    for r in range(4, n):
        edges += [(1, r), (2, r), (3, r)]
    g = Graph.from_edges(n, edges)
    assert degree_stats(g).min_degree == 2 and degree_stats(g).full_count == 0
    assert sp_check(g).is_sp
    wit = recognize_f2(g)
    assert wit is not None and f2_violations(g, wit) == []


def test_h2_examples():
    wit = recognize_h2(complete(4))
    assert wit is not None and wit.subfamily == 1
    assert h2_violations(complete(4), wit) == []

    wit = recognize_h2(cycle(5))
    assert wit is not None and wit.subfamily == 3

    assert recognize_h2(empty_graph(3)) is None


def test_h2_subfamily_pinning():
    bridged = parse_family_spec("h2.3:W=2,seed=0")
    g = generate_family(bridged)
    assert recognize_h2(g, 3) is not None
    assert recognize_h2(complete(4), 1) is not None
    assert recognize_h2(complete(4), 2) is None


@pytest.mark.parametrize(
    "spec",
    [
        "f1:P=1,Q=0,seed=%d",
        "f1:P=0,Q=2,seed=%d",
        "f1:P=2,Q=3,seed=%d",
        "h1:P1=3,Q1=0,seed=%d",
        "h1:P1=1,Q1=2,seed=%d",
        "f2.1:R1=3,seed=%d",
        "f2.2:L1=1,R1=2,seed=%d",
        "f2.2:L1=2,R1=2,seed=%d",
        "f2.3:L1=1,R2=1,seed=%d",
        "f2.3:L1=1,R1=1,R2=1,L2=1,W=1,seed=%d",
        "h2.1:R1=3,seed=%d",
        "h2.2:L1=2,R1=2,seed=%d",
        "h2.3:L1=1,R1=1,R2=1,W=2,seed=%d",
    ],
)
def test_generator_recognizer_closure(spec):
    for seed in range(25):
        generate_family(spec % seed)  # raises GenerationError on failure


def test_generated_witnesses_validate():
    g = generate_family("f1:P=2,Q=2,seed=7")
    assert f1_violations(g, recognize_f1(g)) == []
    g = generate_family("h1:P1=2,Q1=2,seed=7")
    assert h1_violations(g, recognize_h1(g)) == []
    g = generate_family("f2.3:L1=2,R1=1,R2=1,W=1,seed=7")
    assert f2_violations(g, recognize_f2(g)) == []
    g = generate_family("h2.3:L1=1,R1=1,R2=1,W=2,seed=7")
    assert h2_violations(g, recognize_h2(g)) == []


def test_generator_boundary_shapes():
    # two-vertex second side with no interior edge is the bipartite K_{2,3}
    hits = set()
    for seed in range(20):
        g = generate_family(f"f2.1:R1=2,seed={seed}")
        if are_isomorphic(g, complete_bipartite(2, 3)):
            hits.add("plain")
        else:
            hits.add("with-edge")
    assert hits == {"plain", "with-edge"}

    # a single P-vertex with no extra edge toward y gives the 4-path
    assert any(
        are_isomorphic(generate_family(f"f1:P=1,Q=0,seed={seed}"), path(4))
        for seed in range(20)
    )

    # no free choices at all: the bipartite image family shape
    g = generate_family("h1:P1=3,Q1=0,seed=0")
    assert are_isomorphic(g, complete_bipartite(2, 4))


def test_q_pair_stays_edgeless():
    # a two-vertex Q can take no interior edge at all
    for seed in range(10):
        g = generate_family(f"f1:P=0,Q=2,seed={seed}")
        wit = recognize_f1(g)
        assert wit is not None
        q = wit.q_set
        vs = [v for v in range(g.n) if (q >> v) & 1]
        assert not g.has_edge(vs[0], vs[1])


def test_generator_parameter_errors():
    with pytest.raises(GenerationError):
        generate_family("f1:P=0,Q=1,seed=0")
    with pytest.raises(GenerationError):
        generate_family("f1:P=0,Q=0,seed=0")
    with pytest.raises(GenerationError):
        generate_family("f2.2:L1=0,R1=2,seed=0")
    with pytest.raises(GenerationError):
        generate_family("h2.3:W=0,seed=0")


def test_spec_parsing():
    spec = parse_family_spec("f2.3:L1=1,R1=0,R2=1,L2=0,W=2,seed=11")
    assert spec.family == "f2.3" and spec.seed == 11
    assert spec.sizes == {"L1": 1, "R1": 0, "R2": 1, "L2": 0, "W": 2}
    assert str(spec).startswith("f2.3:")
    with pytest.raises(ValueError):
        parse_family_spec("f9:P=1")
    with pytest.raises(ValueError):
        parse_family_spec("f1:P=x")
    with pytest.raises(ValueError):
        parse_family_spec("f1:R1=2")


def _classes(n_max, pred):
    for n in range(2, n_max + 1):
        yield from enumerate_graphs(n, pred)


def test_degree_one_family_matches_sp_exhaustively():
    checked = 0
    for g in _classes(
        6, lambda g: degree_stats(g).min_degree == 1 and degree_stats(g).full_count == 0
    ):
        assert (recognize_f1(g) is not None) == sp_check(g).is_sp
        checked += 1
    assert checked > 0


def test_degree_two_family_matches_sp_exhaustively():
    for g in _classes(
        6, lambda g: degree_stats(g).min_degree == 2 and degree_stats(g).full_count == 0
    ):
        assert (recognize_f2(g) is not None) == sp_check(g).is_sp


def test_images_land_in_the_image_families():
    for g in _classes(
        6, lambda g: degree_stats(g).min_degree == 1 and degree_stats(g).full_count == 0
    ):
        if sp_check(g).is_sp:
            assert recognize_h1(sc_graph(g)) is not None
    for g in _classes(
        6, lambda g: degree_stats(g).min_degree == 2 and degree_stats(g).full_count == 0
    ):
        if sp_check(g).is_sp:
            assert recognize_h2(sc_graph(g)) is not None
