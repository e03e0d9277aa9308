import numpy as np
import pytest

from tetraforge import (
    BudgetExceededError,
    ParameterError,
    analyze,
    are_isomorphic,
    automorphism_group,
    build_graph,
    canonical_form,
    extend_to_automorphism,
    is_unworthy,
    isomorphism,
)
from tetraforge.graphs import relabel
from oracles import brute_aut_count, brute_automorphisms, brute_isomorphic


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gnp(n, p, seed):
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return build_graph(n, edges)


PETERSEN = build_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)])

CUBE = build_graph(8, [(a, b) for a in range(8) for b in range(a + 1, 8)
                       if bin(a ^ b).count("1") == 1])


class TestAutomorphismOrder:
    def test_classics(self):
        assert automorphism_group(complete(5)).order() == 120
        assert automorphism_group(cycle(6)).order() == 12
        assert automorphism_group(PETERSEN).order() == 120
        assert automorphism_group(complete_bipartite(3, 3)).order() == 72
        assert automorphism_group(complete_bipartite(4, 4)).order() == 1152
        assert automorphism_group(CUBE).order() == 48

    def test_path_is_nearly_rigid(self):
        path = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert automorphism_group(path).order() == 2

    def test_group_against_brute_force(self):
        # every graph in the seeded corpus, order and full element set
        for n in (4, 5, 6, 7):
            for p in (0.3, 0.5, 0.7):
                g = gnp(n, p, 20260816 + n * 100 + int(p * 10))
                expected = brute_automorphisms(g)
                group = automorphism_group(g)
                assert group.order() == len(expected)
                got = {tuple(el.images) for el in group.elements()}
                assert got == set(expected)

    def test_order_against_brute_force_n8(self):
        for p in (0.3, 0.5, 0.7):
            g = gnp(8, p, 20260816 + 800 + int(p * 10))
            assert automorphism_group(g).order() == brute_aut_count(g)

    def test_frozen_oracle_counts(self):
        # brute-force counts for n = 9, 10 recorded from tests/oracles.py
        frozen = {
            (9, 0.3): 1, (9, 0.5): 1, (9, 0.7): 1,
            (10, 0.3): 1, (10, 0.5): 1, (10, 0.7): 1,
        }
        for (n, p), expected in frozen.items():
            g = gnp(n, p, 20260816 + n * 100 + int(p * 10))
            assert automorphism_group(g).order() == expected

    def test_frozen_composite_counts(self):
        c4c5 = build_graph(9, [(0, 1), (1, 2), (2, 3), (3, 0)]
                           + [(4 + i, 4 + (i + 1) % 5) for i in range(5)])
        assert automorphism_group(c4c5).order() == 80
        k33k3 = build_graph(9, [(i, 3 + j) for i in range(3)
                                for j in range(3)]
                            + [(6, 7), (7, 8), (8, 6)])
        assert automorphism_group(k33k3).order() == 432

    def test_generators_are_automorphisms(self):
        g = PETERSEN
        for p in automorphism_group(g).generators:
            for u, v in g.edges:
                assert g.has_edge(p.act(u), p.act(v))


class TestCanonicalForm:
    def test_invariant_under_relabeling(self):
        rng = np.random.default_rng(20260816)
        for g in [PETERSEN, CUBE, cycle(9), complete_bipartite(3, 4),
                  gnp(12, 0.4, 7), gnp(30, 0.15, 8)]:
            base = canonical_form(g).certificate
            for _ in range(3):
                perm = list(rng.permutation(g.n))
                assert canonical_form(relabel(g, perm)).certificate == base

    def test_distinguishes_same_degree_sequence(self):
        two_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0),
                                        (3, 4), (4, 5), (5, 3)])
        assert canonical_form(cycle(6)).certificate \
            != canonical_form(two_triangles).certificate

    def test_hash64_fits_64_bits(self):
        h = canonical_form(PETERSEN).hash64
        assert 0 <= h < 2 ** 64

    def test_labeling_produces_certificate(self):
        c = canonical_form(PETERSEN)
        moved = relabel(PETERSEN, list(c.labeling.images))
        assert canonical_form(moved).certificate == c.certificate

    def test_colored_certificates_differ(self):
        g = cycle(6)
        plain = canonical_form(g).certificate
        colored = canonical_form(g, colors=[0, 1, 0, 1, 0, 1]).certificate
        assert plain != colored

    def test_color_values_are_normalized(self):
        g = cycle(6)
        a = canonical_form(g, colors=[5, 9, 5, 9, 5, 9]).certificate
        b = canonical_form(g, colors=[0, 1, 0, 1, 0, 1]).certificate
        assert a == b

    def test_color_length_checked(self):
        with pytest.raises(ParameterError):
            canonical_form(cycle(4), colors=[0, 1])


class TestIsomorphism:
    def test_shuffled_copies(self):
        rng = np.random.default_rng(20260816)
        for n in (6, 7, 8):
            g = gnp(n, 0.5, int(rng.integers(1 << 30)))
            h = relabel(g, list(rng.permutation(n)))
            assert are_isomorphic(g, h)
            m = isomorphism(g, h)
            for u, v in g.edges:
                assert h.has_edge(m.act(u), m.act(v))

    def test_against_brute_force(self):
        gs = [gnp(7, 0.5, s) for s in range(40, 48)]
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                assert are_isomorphic(gs[i], gs[j]) \
                    == brute_isomorphic(gs[i], gs[j])

    def test_nonisomorphic_same_invariants(self):
        two_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0),
                                        (3, 4), (4, 5), (5, 3)])
        assert not are_isomorphic(cycle(6), two_triangles)
        assert isomorphism(cycle(6), two_triangles) is None

    def test_different_sizes(self):
        assert not are_isomorphic(cycle(5), cycle(6))

    def test_colored_isomorphism(self):
        g = cycle(4)
        assert are_isomorphic(g, g, colors1=[0, 1, 0, 1],
                              colors2=[1, 0, 1, 0])
        assert not are_isomorphic(g, g, colors1=[0, 1, 0, 1],
                                  colors2=[0, 0, 1, 1])


class TestColoredGroups:
    def test_alternating_colors_halve_dihedral(self):
        g = cycle(6)
        grp = automorphism_group(g, colors=[0, 1, 0, 1, 0, 1])
        assert grp.order() == 6
        for p in grp.generators:
            for v in range(6):
                assert v % 2 == p.act(v) % 2

    def test_singleton_color_fixes_vertex(self):
        grp = automorphism_group(cycle(8), colors=[1, 0, 0, 0, 0, 0, 0, 0])
        assert grp.order() == 2  # the reflection through vertex 0


class TestExtendToAutomorphism:
    def test_edge_to_edge_on_petersen(self):
        got = extend_to_automorphism(PETERSEN, [0, 1], [5, 7])
        assert got is not None
        assert got.act(0) == 5 and got.act(1) == 7

    def test_edge_to_non_edge_fails(self):
        assert extend_to_automorphism(PETERSEN, [0, 1], [0, 2]) is None

    def test_respects_base_colors(self):
        g = cycle(6)
        assert extend_to_automorphism(g, [0], [2],
                                      colors=[0, 1, 0, 1, 0, 1]) is not None
        assert extend_to_automorphism(g, [0], [3],
                                      colors=[0, 1, 0, 1, 0, 1]) is None

    def test_conflicting_pins(self):
        g = cycle(6)
        assert extend_to_automorphism(g, [0, 0], [1, 2]) is None
        assert extend_to_automorphism(g, [0, 1], [2, 2]) is None
        got = extend_to_automorphism(g, [0, 0], [2, 2])
        assert got is not None and got.act(0) == 2

    def test_exhaustive_against_group(self):
        g = cycle(5)
        els = automorphism_group(g).elements()
        for a in range(5):
            for b in range(5):
                got = extend_to_automorphism(g, [0, 1], [a, b])
                exists = any(p.act(0) == a and p.act(1) == b for p in els)
                assert (got is not None) == exists


class TestEdgeCases:
    def test_empty_graph(self):
        g = build_graph(0, [])
        assert automorphism_group(g).order() == 1
        assert canonical_form(g).certificate == canonical_form(g).certificate

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert automorphism_group(g).order() == 1

    def test_edgeless(self):
        g = build_graph(5, [])
        assert automorphism_group(g).order() == 120

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            automorphism_group(cycle(12), node_budget=2)

    def test_analyze_bundles_both(self):
        an = analyze(PETERSEN)
        assert an.group.order() == 120
        assert an.canonical.certificate == canonical_form(PETERSEN).certificate


def wreath(n):
    """Cycle of n doubled vertices: (i, a) ~ (i+1, b)."""
    return build_graph(2 * n, [(2 * i + a, 2 * ((i + 1) % n) + b)
                               for i in range(n)
                               for a in range(2) for b in range(2)])


class TestTwinCollapse:
    # graphs with duplicate neighborhoods take the quotient-lift path

    def test_wreath_group_order(self):
        for n in (5, 6, 9):
            assert automorphism_group(wreath(n)).order() == 2 ** n * 2 * n

    def test_wreath_against_brute_force(self):
        g = wreath(4)  # 8 vertices, order 2^4 * 8 = 128
        assert automorphism_group(g).order() == brute_aut_count(g)

    def test_octahedron(self):
        octa = build_graph(6, [(i, j) for i in range(6)
                               for j in range(i + 1, 6)
                               if (i, j) not in [(0, 3), (1, 4), (2, 5)]])
        assert automorphism_group(octa).order() == brute_aut_count(octa) == 48

    def test_generators_are_automorphisms(self):
        g = wreath(5)
        for p in automorphism_group(g).generators:
            for u, v in g.edges:
                assert g.has_edge(p.act(u), p.act(v))

    def test_certificate_invariant_under_relabeling(self):
        rng = np.random.default_rng(20260816)
        g = wreath(7)
        base = canonical_form(g).certificate
        for _ in range(4):
            h = relabel(g, list(rng.permutation(g.n)))
            assert canonical_form(h).certificate == base

    def test_twin_vs_plain_certificates_distinguish(self):
        assert not are_isomorphic(wreath(4), CUBE)
        assert not are_isomorphic(build_graph(4, []), cycle(4))

    def test_edgeless(self):
        assert automorphism_group(build_graph(6, [])).order() == 720

    def test_colored_twins_respect_colors(self):
        g = build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])  # K22
        assert automorphism_group(g).order() == 8
        grp = automorphism_group(g, colors=[0, 1, 2, 2])
        assert grp.order() == 2

    def test_orbits_from_lifted_generators(self):
        g = wreath(6)
        grp = automorphism_group(g)
        assert grp.is_transitive()
        assert len(grp.dart_orbits(g.darts())) == 1

    def test_nested_collapse(self):
        # doubling the wreath graph merges each twin pair into a class of
        # four interchangeable vertices, quotient C3: order 3! * (4!)^3
        inner = wreath(3)
        outer = build_graph(
            2 * inner.n,
            [(2 * u + a, 2 * v + b) for u, v in inner.edges
             for a in range(2) for b in range(2)])
        grp = automorphism_group(outer)
        assert grp.order() == 6 * 24 ** 3
        for p in grp.generators:
            for u, v in outer.edges:
                assert outer.has_edge(p.act(u), p.act(v))


class TestUnworthy:
    def test_duplicate_neighborhoods(self):
        found, pair = is_unworthy(cycle(4))
        assert found and set(pair) in ({0, 2}, {1, 3})
        assert is_unworthy(complete_bipartite(4, 4))[0]

    def test_worthy(self):
        assert not is_unworthy(PETERSEN)[0]
        assert not is_unworthy(cycle(5))[0]
