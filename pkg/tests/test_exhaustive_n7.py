"""Module-level properties at their full stated size (n = 7), read off the
session survey where possible.  The heavier independent-oracle sweeps carry
the slow marker."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

import bei.invariants as inv
from bei._kernel import kernel
from bei.connectivity import is_t_tough
from bei.graphs import is_chordal
from bei.survey import F_COMPLETE, F_EQUIDIM, F_T1_TOUGH, F_WITNESS_OK

from conftest import all_graphs


def _flags(sv):
    return np.frombuffer(sv.flags, dtype=np.uint16)


def _col(sv, name):
    return np.frombuffer(getattr(sv, name), dtype=np.int8).astype(np.int64)


def test_krull_equals_max_prime_dimension(surveys7):
    for n, sv in surveys7.items():
        assert (n + _col(sv, "surplus") == _col(sv, "max_prime_dim")).all()


def test_toughness_witnesses_valid(surveys7):
    for sv in surveys7.values():
        assert ((_flags(sv) & F_WITNESS_OK) != 0).all()


def test_equidimensional_toughness_window(surveys7):
    # equidimensional non-complete graphs have toughness in [1/2, 1)
    for sv in surveys7.values():
        f = _flags(sv)
        sel = ((f & F_EQUIDIM) != 0) & ((f & F_COMPLETE) == 0)
        num, den = _col(sv, "tough_num"), _col(sv, "tough_den")
        ok = (den <= 2 * num) & (num < den)
        assert ok[sel].all()


def test_one_tough_equidimensional_implies_complete(surveys7):
    for sv in surveys7.values():
        f = _flags(sv)
        sel = ((f & F_T1_TOUGH) != 0) & ((f & F_EQUIDIM) != 0)
        assert (((f & F_COMPLETE) != 0)[sel]).all()


@pytest.mark.slow
def test_chordality_oracle_n7():
    for G in all_graphs(7):
        assert is_chordal(G) == (not kernel.has_chordless_cycle(G.adj))


@pytest.mark.slow
def test_toughness_boundary_n7(surveys7):
    sv = surveys7[7]
    eps = Fraction(1, 7 * 8)
    for row in range(len(sv)):
        tau = sv.toughness_fraction(row)
        if tau is None:
            continue
        G = sv.graph(row)
        assert is_t_tough(G, tau)
        assert not is_t_tough(G, tau + eps)


@pytest.mark.slow
def test_multiplicity_additivity_n7():
    from bei.verify import top_prime_multiplicities

    for G in all_graphs(7):
        hs, hk = top_prime_multiplicities(G)
        assert inv.hilbert_samuel(G) == hs
        assert inv.hilbert_kunz(G) == hk


@pytest.mark.slow
def test_screener_exclusivity_disconnected_n7():
    for G in all_graphs(7):
        if kernel.ncomponents(G.adj, 0) == 1:
            continue  # connected graphs are covered by the survey flags
        v = inv.cm_screen(G)  # raises on a dual firing
        assert not (v.certifications and v.violations)
