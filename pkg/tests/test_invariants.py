from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

import bei.invariants as inv
from bei.graphs import Graph
from bei.invariants import CertRule, ViolationRule, cm_screen
from bei.verify import (
    check_minimal_primes_oracle,
    containment_minimal_masks,
    top_prime_multiplicities,
    two_component_graphs,
)

from conftest import (
    all_graphs,
    complete_bipartite,
    complete_graph,
    connected_graphs,
    cycle_graph,
    disjoint_union,
    glued_triangles,
    path_graph,
    star_graph,
)


class TestPrimeDimension:
    def test_empty_cut_connected(self):
        for G in (path_graph(4), cycle_graph(5), complete_graph(3)):
            assert inv.prime_dimension(G) == G.n + 1

    def test_path_middle(self):
        assert inv.prime_dimension(path_graph(3), [1]) == 4

    def test_everything_removed(self):
        assert inv.prime_dimension(complete_graph(4), [0, 1, 2, 3]) == 0


class TestCutSurplus:
    def test_examples(self):
        assert inv.max_cut_surplus(cycle_graph(4)) == 1
        assert inv.max_cut_surplus(star_graph(3)) == 2
        for n in range(2, 8):
            assert inv.max_cut_surplus(complete_graph(n)) == 1

    def test_top_profiles_path3(self):
        tops = inv.top_cut_profiles(path_graph(3))
        assert [sorted(p.separator) for p in tops] == [[], [1]]
        assert all(p.surplus == 1 for p in tops)

    def test_top_profiles_c4(self):
        tops = inv.top_cut_profiles(cycle_graph(4))
        assert [sorted(p.separator) for p in tops] == [[]]

    def test_top_profiles_k23(self):
        tops = inv.top_cut_profiles(complete_bipartite(2, 3))
        assert [sorted(p.separator) for p in tops] == [[], [0, 1]]

    def test_profile_consistency(self):
        from bei.graphs import component_count

        for G in (path_graph(5), star_graph(4), cycle_graph(6)):
            for p in inv.top_cut_profiles(G):
                assert p.ncomponents == component_count(G, p.separator)
                assert p.surplus == p.ncomponents - len(p.separator)


class TestMinimalPrimes:
    def test_complete_graph_prime(self):
        for n in range(1, 7):
            primes = inv.minimal_primes(complete_graph(n))
            assert len(primes) == 1
            assert primes[0].separator == frozenset()
            assert primes[0].dimension == n + 1

    def test_c4(self):
        primes = inv.minimal_primes(cycle_graph(4))
        assert [(sorted(p.separator), p.dimension) for p in primes] == [
            ([], 5),
            ([0, 2], 4),
            ([1, 3], 4),
        ]

    def test_k23(self):
        primes = inv.minimal_primes(complete_bipartite(2, 3))
        assert [(sorted(p.separator), p.dimension) for p in primes] == [
            ([], 6),
            ([0, 1], 6),
            ([2, 3, 4], 4),
        ]

    def test_blocks_are_components(self):
        from bei.graphs import components

        G = complete_bipartite(2, 3)
        for p in inv.minimal_primes(G):
            assert p.blocks == components(G, p.separator)
            assert p.dimension == G.n + len(p.blocks) - len(p.separator)

    def test_containment_oracle_small(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                local = [
                    sum(1 << v for v in p.separator) for p in inv.minimal_primes(G)
                ]
                assert local == containment_minimal_masks(G)

    @pytest.mark.slow
    def test_containment_oracle_n6(self):
        result = check_minimal_primes_oracle(6)
        assert result.ok, result.failures


class TestDimension:
    def test_examples(self):
        assert inv.krull_dimension(path_graph(4)) == 5
        assert inv.krull_dimension(star_graph(3)) == 6
        assert inv.krull_dimension(complete_graph(6)) == 7

    def test_equals_max_prime_dimension_small(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                assert inv.krull_dimension(G) == max(
                    p.dimension for p in inv.minimal_primes(G)
                )

    def test_equidimensional(self):
        assert inv.is_equidimensional(complete_graph(5))
        assert not inv.is_equidimensional(cycle_graph(4))
        assert inv.is_equidimensional(path_graph(3))


class TestMultiplicities:
    def test_hilbert_samuel_examples(self):
        assert inv.hilbert_samuel(path_graph(3)) == 4
        assert inv.hilbert_samuel(path_graph(4)) == 8
        assert inv.hilbert_samuel(star_graph(3)) == 1

    def test_complete_fixtures(self):
        for n in range(1, 11):
            G = complete_graph(n)
            assert inv.hilbert_samuel(G) == n
            assert inv.hilbert_kunz(G) == Fraction(n, 2) + Fraction(
                n, factorial(n + 1)
            )

    def test_hilbert_kunz_examples(self):
        assert inv.hilbert_kunz(complete_graph(3)) == Fraction(13, 8)
        assert inv.hilbert_kunz(cycle_graph(4)) == Fraction(61, 30)
        assert inv.hilbert_kunz(path_graph(4)) == Fraction(47, 10)
        assert inv.hilbert_kunz(Graph(1)) == 1
        assert inv.hilbert_kunz(complete_graph(5)) == Fraction(361, 144)

    def test_report_consistency(self):
        G = path_graph(4)
        rep = inv.multiplicities(G)
        assert rep.hilbert_samuel == inv.hilbert_samuel(G)
        assert rep.hilbert_kunz == inv.hilbert_kunz(G)
        assert rep.max_cut_surplus == inv.max_cut_surplus(G)
        assert [sorted(s) for s in rep.top_separators] == [[], [1], [2]]

    def test_additivity_small(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                hs, hk = top_prime_multiplicities(G)
                assert inv.hilbert_samuel(G) == hs
                assert inv.hilbert_kunz(G) == hk

    def test_multiplicativity_small(self):
        for G, g1, g2 in two_component_graphs(5):
            assert inv.hilbert_samuel(G) == inv.hilbert_samuel(g1) * inv.hilbert_samuel(g2)
            assert inv.hilbert_kunz(G) == inv.hilbert_kunz(g1) * inv.hilbert_kunz(g2)

    def test_disconnected_example(self):
        G = disjoint_union(complete_graph(2), complete_graph(2))
        assert inv.hilbert_samuel(G) == 4

    def test_complete_bipartite_against_formula(self):
        # the top-surplus formula is authoritative for complete bipartite
        # graphs; K_{2,2} = C_4 and K_{2,3} evaluated from first principles
        assert inv.hilbert_kunz(complete_bipartite(2, 2)) == Fraction(61, 30)
        k23 = complete_bipartite(2, 3)
        tops = inv.top_cut_profiles(k23)
        assert [sorted(p.separator) for p in tops] == [[], [0, 1]]
        # blocks: one 5-block for S empty, three singletons for the 2-side
        expected = (Fraction(5, 2) + Fraction(5, 720)) + 1
        assert inv.hilbert_kunz(k23) == expected


class TestJointDimension:
    def test_examples(self):
        assert inv.joint_dim_with_empty(cycle_graph(4), [0, 2]) == 3
        assert inv.joint_dim_with_empty(complete_bipartite(2, 3), [2, 3, 4]) == 3
        assert inv.joint_dim_with_empty(path_graph(3), [1]) == 3

    def test_rejects_non_minimal(self):
        with pytest.raises(ValueError):
            inv.joint_dim_with_empty(path_graph(4), [0])
        with pytest.raises(ValueError):
            inv.joint_dim_with_empty(path_graph(4), [])
        with pytest.raises(ValueError):
            inv.joint_dim_with_empty(
                disjoint_union(path_graph(2), path_graph(2)), [0]
            )


class TestBounds:
    def test_dim_bounds_examples(self):
        assert inv.dim_bounds_from_toughness(star_graph(3)) == (6, 6)
        assert inv.dim_bounds_from_toughness(path_graph(4)) == (5, Fraction(11, 2))
        assert inv.dim_bounds_from_toughness(path_graph(3)) == (4, 4)

    def test_dim_bounds_hypotheses(self):
        with pytest.raises(ValueError):
            inv.dim_bounds_from_toughness(complete_graph(4))
        with pytest.raises(ValueError):
            inv.dim_bounds_from_toughness(cycle_graph(5))  # toughness 1

    def test_toughness_bounds_examples(self):
        lower, upper = inv.toughness_bounds_from_dimension(star_graph(3))
        assert (lower, upper) == (Fraction(1, 3), Fraction(5, 3))
        lower, upper = inv.toughness_bounds_from_dimension(path_graph(5))
        assert lower == Fraction(1, 2)
        lower, upper = inv.toughness_bounds_from_dimension(cycle_graph(5))
        assert lower == Fraction(1, 2) and upper is None

    def test_depth_pd_bounds(self):
        assert inv.depth_upper_bound(cycle_graph(6)) == 6
        assert inv.pd_lower_bound(cycle_graph(6)) == 6
        assert inv.depth_upper_bound(path_graph(5)) == 6
        assert inv.pd_lower_bound(path_graph(5)) == 4
        assert inv.depth_upper_bound(complete_bipartite(2, 3)) == 5
        assert inv.pd_lower_bound(complete_bipartite(2, 3)) == 5

    def test_depth_pd_hypotheses(self):
        with pytest.raises(ValueError):
            inv.depth_upper_bound(complete_graph(4))
        with pytest.raises(ValueError):
            inv.pd_lower_bound(disjoint_union(path_graph(2), path_graph(2)))


class TestOneTough:
    def test_examples(self):
        assert inv.one_tough_via_primes(cycle_graph(4))
        assert not inv.one_tough_via_primes(path_graph(4))
        assert inv.one_tough_via_primes(complete_graph(4))

    def test_equivalence_small(self):
        from bei.connectivity import is_t_tough

        for n in range(1, 7):
            for G in connected_graphs(n):
                assert inv.one_tough_via_primes(G) == is_t_tough(G, 1)


class TestStructureDetectors:
    def test_paths_detector(self):
        assert inv.is_disjoint_union_of_paths(disjoint_union(path_graph(3), path_graph(2)))
        assert not inv.is_disjoint_union_of_paths(cycle_graph(4))
        assert not inv.is_disjoint_union_of_paths(star_graph(3))
        assert inv.is_disjoint_union_of_paths(Graph(1))

    def test_chordal_cm_sufficient(self):
        assert inv.chordal_cm_sufficient(glued_triangles())
        assert not inv.chordal_cm_sufficient(star_graph(3))
        assert not inv.chordal_cm_sufficient(cycle_graph(5))


class TestScreen:
    def test_complete(self):
        v = cm_screen(complete_graph(7))
        assert v.status == inv.CM_CERTIFIED
        assert v.reason == CertRule.COMPLETE
        assert v.toughness.is_infinite and v.kappa == 6

    def test_cycle5(self):
        v = cm_screen(cycle_graph(5))
        assert v.status == inv.NOT_CM_CERTIFIED
        assert {
            ViolationRule.TWO_VERTEX_CONNECTED,
            ViolationRule.ONE_TOUGH_NON_COMPLETE,
            ViolationRule.TOUGHNESS_NOT_HALF,
        } <= set(v.violations)

    def test_path6(self):
        v = cm_screen(path_graph(6))
        assert v.status == inv.CM_CERTIFIED
        assert v.reason == CertRule.DISJOINT_PATHS_CI

    def test_star(self):
        v = cm_screen(star_graph(3))
        assert v.status == inv.NOT_CM_CERTIFIED
        assert set(v.violations) == {
            ViolationRule.TOUGHNESS_NOT_HALF,
            ViolationRule.NOT_EQUIDIMENSIONAL,
        }

    def test_glued_triangles_certified(self):
        v = cm_screen(glued_triangles())
        assert v.status == inv.CM_CERTIFIED
        assert v.reason == CertRule.CHORDAL_CLIQUES

    def test_single_vertex(self):
        v = cm_screen(Graph(1))
        assert v.status == inv.CM_CERTIFIED
        assert v.reason == CertRule.COMPLETE
        assert v.dimension == 2
        assert inv.hilbert_samuel(Graph(1)) == 1

    def test_disconnected_componentwise(self):
        # complete component plus path component: certified via the clique rule
        G = disjoint_union(complete_graph(4), path_graph(2))
        v = cm_screen(G)
        assert v.status == inv.CM_CERTIFIED
        assert v.toughness is None and v.kappa is None
        # a bad component poisons the union
        H = disjoint_union(path_graph(3), cycle_graph(5))
        w = cm_screen(H)
        assert w.status == inv.NOT_CM_CERTIFIED
        assert ViolationRule.TWO_VERTEX_CONNECTED in w.violations

    def test_exclusivity_exhaustive_small(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                v = cm_screen(G)  # raises on contradiction
                assert (v.status == inv.CM_CERTIFIED) == bool(v.certifications)
                assert (v.status == inv.NOT_CM_CERTIFIED) == (
                    bool(v.violations) and not v.certifications
                )
