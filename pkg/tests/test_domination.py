"""Domination, coalitions, partitions, and the exact coalition number."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import graphs, oracle_coalition_number
from coalition_kit.domination import (
    Partition,
    closed_neighborhood,
    coalition_number_exact,
    forms_coalition,
    is_coalition_partition,
    is_dominating,
    singleton_partition,
    sp_check,
)
from coalition_kit.graphs import (
    complete,
    cycle,
    degree_stats,
    empty_graph,
    mask_of,
    path,
    union,
)


def test_closed_neighborhood():
    assert closed_neighborhood(cycle(4), 0) == 0
    assert closed_neighborhood(complete(3), 0b001) == 0b111
    assert closed_neighborhood(cycle(4), 0b0001) == mask_of([3, 0, 1])
    with pytest.raises(ValueError):
        closed_neighborhood(complete(3), 1 << 5)


def test_is_dominating():
    assert is_dominating(complete(3), 0b001)
    assert not is_dominating(cycle(4), 0b0001)
    assert is_dominating(cycle(4), 0b0011)


def test_forms_coalition():
    assert forms_coalition(cycle(4), 0b0001, 0b0010)
    assert not forms_coalition(complete(3), 0b001, 0b010)
    # antipodal pair of the hexagon: the union covers everything
    assert forms_coalition(cycle(6), 1 << 0, 1 << 3)
    with pytest.raises(ValueError):
        forms_coalition(cycle(4), 0, 0b0010)
    with pytest.raises(ValueError):
        forms_coalition(cycle(4), 0b0011, 0b0010)


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=7))
def test_coalition_is_symmetric(g):
    a, b = 1 << 0, 1 << (g.n - 1)
    assert forms_coalition(g, a, b) == forms_coalition(g, b, a)


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=7))
def test_full_vertex_singleton_never_in_coalition(g):
    stats = degree_stats(g)
    for v in range(g.n):
        if (stats.full_vertices >> v) & 1:
            for u in range(g.n):
                if u != v:
                    assert not forms_coalition(g, 1 << v, 1 << u)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(3, (0b011, 0b010))  # overlap
    with pytest.raises(ValueError):
        Partition(3, (0b001,))  # gap
    with pytest.raises(ValueError):
        Partition(3, (0b111, 0))  # empty part


def test_is_coalition_partition_examples():
    c4 = cycle(4)
    verdict = is_coalition_partition(c4, singleton_partition(c4))
    assert verdict.valid
    assert all(v.status == "coalition" for v in verdict.per_part)

    k3 = complete(3)
    verdict = is_coalition_partition(k3, singleton_partition(k3))
    assert verdict.valid
    assert all(v.status == "singleton-dominating" for v in verdict.per_part)

    k3bar = empty_graph(3)
    verdict = is_coalition_partition(k3bar, singleton_partition(k3bar))
    assert not verdict.valid
    assert all(v.status == "invalid" for v in verdict.per_part)

    # a dominating part of size two is invalid even though it dominates
    verdict = is_coalition_partition(complete(3), Partition(3, (0b011, 0b100)))
    assert not verdict.valid


def test_singleton_partition():
    assert singleton_partition(complete(1)).parts == (1,)
    assert singleton_partition(cycle(4)).k == 4
    assert singleton_partition(path(3)).parts == (1, 2, 4)


def test_sp_check_examples():
    assert sp_check(cycle(5)).is_sp
    assert not sp_check(cycle(7)).is_sp
    assert sp_check(union(complete(1), complete(5))).is_sp
    verdict = sp_check(cycle(7))
    assert verdict.blocking_vertex == 0
    assert verdict.partner == {}


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_sp_partner_witnesses_validate(g):
    verdict = sp_check(g)
    if not verdict.is_sp:
        v = verdict.blocking_vertex
        assert v is not None and not g.is_full(v)
        return
    for v, u in verdict.partner.items():
        assert not is_dominating(g, 1 << v)
        assert not is_dominating(g, 1 << u)
        assert is_dominating(g, (1 << v) | (1 << u))


def test_coalition_number_examples():
    assert coalition_number_exact(cycle(6)).value == 6
    assert coalition_number_exact(path(4)).value == 4
    assert coalition_number_exact(empty_graph(3)).value == 2
    # oracle confirmation for the frozen values
    assert oracle_coalition_number(path(4)) == 4
    assert oracle_coalition_number(empty_graph(3)) == 2


def test_coalition_number_witness_validates():
    result = coalition_number_exact(empty_graph(3))
    assert result.witness is not None
    assert result.witness.k == 2
    assert is_coalition_partition(empty_graph(3), result.witness).valid


@settings(max_examples=60)
@given(graphs(max_n=5))
def test_coalition_number_matches_oracle(g):
    assert coalition_number_exact(g).value == oracle_coalition_number(g)


def test_coalition_number_cap():
    with pytest.raises(ValueError):
        coalition_number_exact(empty_graph(10))


def test_single_vertex():
    g = complete(1)
    assert sp_check(g).is_sp
    assert coalition_number_exact(g).value == 1


def test_deleting_the_single_full_vertex_preserves_sp():
    from coalition_kit.canon import enumerate_graphs

    checked = 0
    for n in range(2, 7):
        for g in enumerate_graphs(n, lambda g: degree_stats(g).full_count == 1):
            if sp_check(g).is_sp:
                f = degree_stats(g).full_vertices.bit_length() - 1
                assert sp_check(g.delete_vertex(f)).is_sp
                checked += 1
    assert checked > 0
