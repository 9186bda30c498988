"""Pure and compiled kernels must emit byte-identical codes."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import graphs
from coalition_kit import kernel as pure

fast = pytest.importorskip("coalition_kit._fastkernel")


@settings(max_examples=400)
@given(graphs(max_n=12))
def test_codes_agree(g):
    assert pure.canonical_code(g.n, g.rows) == fast.canonical_code(g.n, g.rows)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sweeps_agree(n):
    assert pure.sweep_codes(n) == fast.sweep_codes(n)


def test_compiled_flag():
    assert fast.IS_COMPILED and not pure.IS_COMPILED
