"""Compiled kernel vs pure-Python reference: identical results everywhere."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bei import _purepy

compiled = pytest.importorskip("bei._core")

KERNEL_FUNCS = [
    "blocks",
    "cut_counts",
    "toughness_scan",
    "max_cut_surplus",
    "minimal_prime_masks",
    "kappa_bruteforce",
    "max_cliques",
    "mcs_order",
    "has_chordless_cycle",
]


def _adj_from_mask(n, mask):
    return _purepy.adj_from_edge_mask(n, mask)


def _compare_all(adj):
    for name in KERNEL_FUNCS:
        pure = getattr(_purepy, name)(adj)
        fast = getattr(compiled, name)(adj)
        assert pure == fast, f"{name} diverged on adj={adj}"
    surplus = _purepy.max_cut_surplus(adj)
    assert _purepy.top_masks(adj, surplus) == compiled.top_masks(adj, surplus)
    for removed in range(1 << len(adj)):
        assert _purepy.ncomponents(adj, removed) == compiled.ncomponents(adj, removed)
    if _purepy.ncomponents(adj, 0) == 1:
        assert _purepy.kappa_flow(adj) == compiled.kappa_flow(adj)
    assert _purepy.structure_selfcheck(adj) == compiled.structure_selfcheck(adj)
    order = compiled.mcs_order(adj)
    rev = list(reversed(order))
    assert _purepy.peo_ok(adj, rev) == compiled.peo_ok(adj, rev)


def test_exhaustive_small():
    for n in range(1, 5):
        for mask in range(1 << (n * (n - 1) // 2)):
            _compare_all(_adj_from_mask(n, mask))


@given(st.integers(min_value=1, max_value=9), st.randoms())
@settings(max_examples=150, deadline=None)
def test_random_graphs(n, rnd):
    mask = rnd.getrandbits(n * (n - 1) // 2)
    _compare_all(_adj_from_mask(n, mask))


@given(st.integers(min_value=1, max_value=12), st.randoms())
@settings(max_examples=50, deadline=None)
def test_edge_mask_and_enumeration(n, rnd):
    mask = rnd.getrandbits(n * (n - 1) // 2)
    assert _purepy.adj_from_edge_mask(n, mask) == compiled.adj_from_edge_mask(n, mask)
    assert _purepy.edge_pairs(n) == compiled.edge_pairs(n)


def test_connected_enumeration_matches():
    for n in range(1, 6):
        assert _purepy.connected_graph_masks(n) == compiled.connected_graph_masks(n)
