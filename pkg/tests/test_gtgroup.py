"""Normal-form group arithmetic, coset graphs, PPM, covering maps."""

import random

import pytest

from tetraforge.errors import ParameterError, UNKNOWN
from tetraforge.families import praeger_xu, toroidal
from tetraforge.graphs import (build_graph, girth, is_connected,
                               is_regular_of_valence)
from tetraforge.gtgroup import (CosetGraphSpec, coset_graph, covering_map,
                                gt_elements, gt_generators, gt_identity,
                                gt_inverse, gt_multiply, gt_order,
                                is_double_cover, ppm)
from tetraforge.symmetry import are_isomorphic


def closure(gens, multiply, identity):
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                f = multiply(e, g)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return seen


def conj(x, g):
    return gt_multiply(gt_multiply(gt_inverse(g), x), g)


class TestGtArithmetic:
    @pytest.mark.parametrize("t,eps", [(2, 0), (2, 1), (3, 0), (3, 1)])
    def test_defining_relations(self, t, eps):
        gens = gt_generators(t, eps)
        ident = gt_identity(t, eps)
        z, a, b = gens["z"], gens["a"], gens["b"]
        xs = [gens[f"x{i}"] for i in range(2 * t)]
        for x in xs:
            assert gt_multiply(x, x) == ident
        assert gt_multiply(z, z) == ident
        assert gt_multiply(b, b) == ident
        ab = gt_multiply(a, b)
        assert gt_multiply(ab, ab) == ident
        apow = ident
        for _ in range(2 * t):
            apow = gt_multiply(apow, a)
        assert gt_multiply(z, apow) == ident if eps else apow == ident
        for i, x in enumerate(xs):
            assert conj(x, z) == x
            assert conj(x, a) == xs[(i + 1) % (2 * t)]
            assert conj(x, b) == xs[(t - 1 - i) % (2 * t)]
            for j, y in enumerate(xs):
                comm = gt_multiply(gt_multiply(gt_inverse(x), gt_inverse(y)),
                                   gt_multiply(x, y))
                assert comm == (z if abs(i - j) == t else ident)

    def test_central_commutator_pair(self):
        gens = gt_generators(2, 0)
        x0, x2, z = gens["x0"], gens["x2"], gens["z"]
        assert gt_multiply(x2, x0) == gt_multiply(gt_multiply(x0, x2), z)
        assert gt_multiply(x0, x2) != gt_multiply(x2, x0)

    def test_identity_neutral(self):
        ident = gt_identity(2, 1)
        for e in gt_elements(2, 1)[:40]:
            assert gt_multiply(ident, e) == e
            assert gt_multiply(e, ident) == e

    @pytest.mark.parametrize("t,eps", [(2, 0), (2, 1), (3, 0), (3, 1)])
    def test_associative(self, t, eps):
        rng = random.Random(20260816 + 10 * t + eps)
        elems = gt_elements(t, eps)
        for _ in range(250):
            p, q, r = (rng.choice(elems) for _ in range(3))
            assert gt_multiply(gt_multiply(p, q), r) == \
                gt_multiply(p, gt_multiply(q, r))

    @pytest.mark.parametrize("t,eps", [(2, 0), (2, 1), (3, 0)])
    def test_closure_matches_order(self, t, eps):
        gens = list(gt_generators(t, eps).values())
        group = closure(gens, gt_multiply, gt_identity(t, eps))
        assert len(group) == gt_order(t)
        assert len(gt_elements(t, eps)) == gt_order(t)

    def test_inverse(self):
        rng = random.Random(7)
        elems = gt_elements(2, 1)
        ident = gt_identity(2, 1)
        for _ in range(30):
            p = rng.choice(elems)
            assert gt_multiply(p, gt_inverse(p)) == ident

    def test_mismatched_groups(self):
        with pytest.raises(ParameterError):
            gt_multiply(gt_identity(2, 0), gt_identity(3, 0))
        with pytest.raises(ParameterError):
            gt_multiply(gt_identity(2, 0), gt_identity(2, 1))


class TestCosetGraph:
    def test_cyclic_doubled(self, caplog):
        spec = CosetGraphSpec(list(range(6)), lambda x, y: (x + y) % 6,
                              lambda e: e in (0, 3), 1)
        import logging
        with caplog.at_level(logging.WARNING, logger="tetraforge.gtgroup"):
            g = coset_graph(spec)
        assert g.n == 3 and g.num_edges == 3
        assert any("collapsed" in r.message for r in caplog.records)

    def test_symmetric_group(self):
        elems = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1),
                 (2, 1, 0)]

        def mul(p, q):
            return tuple(q[p[i]] for i in range(3))

        spec = CosetGraphSpec(elems, mul,
                              lambda e: e in ((0, 1, 2), (1, 0, 2)),
                              (1, 2, 0))
        g = coset_graph(spec)
        assert g.n == 3 and is_connected(g)

    def test_connector_in_subgroup(self):
        spec = CosetGraphSpec(list(range(6)), lambda x, y: (x + y) % 6,
                              lambda e: e in (0, 3), 3)
        with pytest.raises(ParameterError):
            coset_graph(spec)


class TestPPM:
    def test_counts(self):
        for t, eps in [(2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (4, 1)]:
            g = ppm(t, eps)
            assert g.n == t * 2 ** (t + 2)
            assert is_regular_of_valence(g, 4)

    @pytest.mark.parametrize("t,eps", [(2, 0), (2, 1), (3, 1)])
    def test_subgroup_predicate_matches_closure(self, t, eps):
        # the membership shortcut used by ppm() must agree with the
        # brute-force closure of <x_0 .. x_{t-1}, b>
        gens = gt_generators(t, eps)
        hgens = [gens[f"x{i}"] for i in range(t)] + [gens["b"]]
        sub = closure(hgens, gt_multiply, gt_identity(t, eps))
        assert len(sub) == 2 ** (t + 1)
        highmask = ((1 << (2 * t)) - 1) ^ ((1 << t) - 1)
        predicted = {e for e in gt_elements(t, eps)
                     if e.ak == 0 and e.zeta == 0 and not e.v & highmask}
        assert sub == predicted

    def test_px_identity(self):
        assert are_isomorphic(ppm(2, 0), praeger_xu(4, 3))

    def test_girths(self):
        assert girth(ppm(2, 0)) == 4
        assert girth(ppm(3, 0)) == 6
        # computed value of the faithful construction; the exhaustively
        # verified group table leaves no wiggle room here
        assert girth(ppm(2, 1)) == 6
        assert girth(ppm(3, 1)) == 8
        assert girth(ppm(4, 0)) == 8

    def test_double_cover_of_px(self):
        res = is_double_cover(ppm(2, 1), praeger_xu(4, 2))
        assert res is not UNKNOWN and res is not None

    def test_domain(self):
        with pytest.raises(ParameterError):
            ppm(1, 0)
        with pytest.raises(ParameterError):
            ppm(7, 0)
        with pytest.raises(ParameterError):
            ppm(3, 2)


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestCoveringMap:
    def test_cycle_wrap(self):
        phi = covering_map(cycle(6), cycle(3), 2)
        assert phi is not None and phi is not UNKNOWN
        assert sorted(phi) == [0, 0, 1, 1, 2, 2]

    def test_toroidal_double_cover(self):
        res = is_double_cover(toroidal("rot", 5, 1), toroidal("rot", 3, 2))
        assert res is not None and res is not UNKNOWN

    def test_absence_by_size(self):
        assert covering_map(cycle(8), cycle(3), 2) is None

    def test_absence_exhaustive(self):
        disjoint = build_graph(10, [(i, (i + 1) % 4) for i in range(4)]
                               + [(4 + i, 4 + (i + 1) % 6) for i in range(6)])
        assert covering_map(disjoint, cycle(5), 2) is None

    def test_budget_unknown(self):
        res = is_double_cover(ppm(2, 1), praeger_xu(4, 2), node_budget=3)
        assert res is UNKNOWN

    def test_projection_is_local_bijection(self):
        cover, base = ppm(2, 1), praeger_xu(4, 2)
        phi = is_double_cover(cover, base)
        for u in range(cover.n):
            images = sorted(phi[w] for w in cover.neighbors(u))
            assert images == sorted(base.neighbors(phi[u]))
