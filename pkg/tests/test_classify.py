"""Classifier tests: the taxonomy tags, consistent cycles, orientations,
bi-transitivity, s-arc transitivity."""

import pytest

from tetraforge import classify, derived, families, symmetry
from tetraforge.classify import (
    BI_TRANSITIVE, DART_TRANSITIVE, HALF_ARC_TRANSITIVE, LR, NONE,
    SEMISYMMETRIC, TAGS, UNCLASSIFIED, bi_transitive_check, classify as run,
    consistent_cycles, is_worthy, s_arc_transitive,
    semitransitive_orientation, two_orbit_decomposition)
from tetraforge.errors import ParameterError
from tetraforge.graphs import build_graph
from tetraforge.lr import barrel, check_suitable_lr, rows_and_columns


def k5():
    return families.circulant(5, (1, 2))


class TestTags:
    def test_wreath_dart_transitive(self):
        r = run(families.wreath(6, 2))
        assert r.tag == DART_TRANSITIVE
        assert r.dart_orbits == 1
        assert r.edge_transitive and r.vertex_transitive

    def test_sdd_k5_semisymmetric(self):
        r = run(derived.sdd(k5()))
        assert r.n == 20
        assert r.tag == SEMISYMMETRIC
        assert r.bipartite
        assert not r.worthy
        assert r.vertex_orbits == 2 and r.edge_orbits == 1

    def test_spidergraph_half_arc_transitive(self):
        g, _ = families.spidergraph(3, 9, 2)
        r = run(g)
        assert r.tag == HALF_ARC_TRANSITIVE
        assert (r.vertex_orbits, r.edge_orbits, r.dart_orbits) == (1, 1, 2)
        assert r.semitransitive_orientation is not None
        assert r.semitransitive_orientation.is_balanced(2)

    def test_rows_and_columns_lr(self):
        r = run(rows_and_columns(3, 3).base)
        assert r.tag == LR
        assert r.vertex_orbits == 1 and r.edge_orbits == 2

    def test_barrel_lr(self):
        assert run(barrel(6, 5, 2).base).tag == LR

    def test_two_orbit_but_unsuitable_is_none(self):
        # both jump classes of C9(1,2) are cycles, yet no suitable
        # structure arises
        r = run(families.circulant(9, (1, 2)))
        assert r.tag == NONE
        assert r.edge_orbits == 2

    def test_disconnected_rejected(self):
        g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        with pytest.raises(ParameterError):
            run(g)

    def test_budget_exhaustion_is_unclassified(self):
        r = run(families.wreath(6, 2), node_budget=1)
        assert r.tag == UNCLASSIFIED
        assert r.aut_order is None
        assert r.bipartite is True

    def test_every_tag_is_known(self):
        corpus = [
            families.wreath(5, 2),
            k5(),
            derived.sdd(k5()),
            families.spidergraph(3, 9, 2)[0],
            rows_and_columns(3, 3).base,
            families.circulant(9, (1, 2)),
            families.circulant(10, (1, 4)),
        ]
        for g in corpus:
            r = run(g, with_cycles=False)
            assert r.tag in TAGS
            assert r.tag not in (BI_TRANSITIVE, UNCLASSIFIED)

    def test_orbit_stabilizer_consistency(self):
        for g in (families.wreath(5, 2), derived.sdd(k5()),
                  families.spidergraph(3, 9, 2)[0]):
            r = run(g, with_cycles=False)
            G = symmetry.automorphism_group(g)
            orbit = next(o for o in G.vertex_orbits() if 0 in o)
            assert r.vertex_stabilizer_order * len(orbit) == r.aut_order


class TestConsistentCycles:
    def test_wreath_7(self):
        cc = consistent_cycles(families.wreath(7, 2))
        assert cc.count == 3
        assert cc.lengths == (4, 7, 14)
        assert cc.complete

    def test_wreath_6(self):
        cc = consistent_cycles(families.wreath(6, 2))
        assert cc.count == 3
        assert cc.lengths == (4, 6, 12)

    def test_k5(self):
        cc = consistent_cycles(k5())
        assert cc.count == 3
        assert cc.lengths == (3, 4, 5)

    def test_half_arc_transitive_has_two(self):
        g, _ = families.spidergraph(3, 9, 2)
        cc = consistent_cycles(g)
        assert cc.count == 2
        assert cc.lengths == (6, 9)

    def test_dart_transitive_always_three(self):
        for g in (families.wreath(5, 2), families.circulant(10, (1, 3)),
                  families.praeger_xu(5, 2)):
            assert consistent_cycles(g).count == 3

    def test_representatives_are_cycles(self):
        g = families.wreath(7, 2)
        for rep in consistent_cycles(g).representatives:
            assert len(set(rep)) == len(rep) >= 3
            for i, v in enumerate(rep):
                assert g.has_edge(v, rep[(i + 1) % len(rep)])

    def test_needs_vertex_transitivity(self):
        with pytest.raises(ParameterError):
            consistent_cycles(derived.sdd(k5()))

    def test_report_carries_cycles(self):
        r = run(families.wreath(7, 2))
        assert r.consistent_cycles is not None
        assert r.consistent_cycles.lengths == (4, 7, 14)


class TestSemitransitiveOrientation:
    def test_spider_3_7_2_exists(self):
        # dart-transitive, yet an index-8 subgroup preserves the spiral
        g, _ = families.spidergraph(3, 7, 2)
        o = semitransitive_orientation(g)
        assert o is not None
        assert o.is_balanced(2)
        assert o.underlying_graph() == g

    def test_hat_orientation_matches_report(self):
        g, _ = families.spidergraph(3, 9, 2)
        o = semitransitive_orientation(g)
        r = run(g, with_cycles=False)
        assert o == r.semitransitive_orientation

    def test_semisymmetric_has_none(self):
        assert semitransitive_orientation(derived.sdd(k5())) is None

    def test_k5_has_none(self):
        # the balanced orientations of K5 keep only the rotation
        assert semitransitive_orientation(k5()) is None

    def test_deterministic(self):
        g, _ = families.spidergraph(3, 7, 2)
        assert semitransitive_orientation(g) == semitransitive_orientation(g)


class TestBiTransitive:
    def test_sdd_k5(self):
        assert bi_transitive_check(derived.sdd(k5())) is True

    def test_hexagon(self):
        assert bi_transitive_check(families.circulant(6, (1,))) is True

    def test_path_end_edges_differ(self):
        p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert bi_transitive_check(p4) is False

    def test_non_bipartite(self):
        assert bi_transitive_check(k5()) is False


class TestSArcTransitive:
    def test_k5_levels(self):
        g = k5()
        assert s_arc_transitive(g, 0)
        assert s_arc_transitive(g, 1)
        assert s_arc_transitive(g, 2)
        assert not s_arc_transitive(g, 3)

    def test_cycle_all_levels(self):
        c6 = families.circulant(6, (1,))
        assert all(s_arc_transitive(c6, s) for s in range(4))

    def test_negative_rejected(self):
        with pytest.raises(ParameterError):
            s_arc_transitive(k5(), -1)


class TestWorthy:
    def test_wreath_unworthy(self):
        assert not is_worthy(families.wreath(5, 2))

    def test_k5_worthy(self):
        assert is_worthy(k5())

    def test_sdd_unworthy(self):
        assert not is_worthy(derived.sdd(k5()))


class TestTwoOrbitDecomposition:
    def test_reproduces_suitable_structure(self):
        base = rows_and_columns(3, 3).base
        cd = two_orbit_decomposition(base)
        assert cd is not None
        assert check_suitable_lr(cd).suitable

    def test_circulant_classes_are_cycles(self):
        cd = two_orbit_decomposition(families.circulant(9, (1, 2)))
        assert cd is not None
        assert not check_suitable_lr(cd).suitable

    def test_single_orbit_rejected(self):
        with pytest.raises(ParameterError):
            two_orbit_decomposition(families.wreath(6, 2))
