import numpy as np
import pytest

from tetraforge import BudgetExceededError, ParameterError, Perm, PermGroup
from oracles import brute_closure


def S(n):
    """Symmetric group on n points."""
    gens = [Perm.from_cycles(n, [tuple(range(n))]),
            Perm.from_cycles(n, [(0, 1)])]
    return PermGroup(gens, degree=n)


def dihedral(n):
    rot = Perm.from_cycles(n, [tuple(range(n))])
    refl = Perm([(-v) % n for v in range(n)])
    return PermGroup([rot, refl], degree=n)


class TestPerm:
    def test_right_action_composition(self):
        # (v)(p*q) applies p first, then q
        p = Perm([1, 2, 0])
        q = Perm([0, 2, 1])
        assert (p * q).act(0) == q.act(p.act(0)) == 2
        assert (p * q).images == tuple(q.act(p.act(v)) for v in range(3))

    def test_inverse(self):
        p = Perm([2, 0, 3, 1])
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()

    def test_from_cycles_and_back(self):
        p = Perm.from_cycles(6, [(0, 1, 2), (4, 5)])
        assert p.images == (1, 2, 0, 3, 5, 4)
        assert p.cycles() == [(0, 1, 2), (4, 5)]
        assert p.cycle_string() == "(0 1 2)(4 5)"
        assert Perm.identity(4).cycle_string() == "()"

    def test_order(self):
        assert Perm.from_cycles(6, [(0, 1, 2), (4, 5)]).order() == 6
        assert Perm.identity(5).order() == 1

    def test_rejects_non_bijection(self):
        with pytest.raises(ParameterError):
            Perm([0, 0, 1])
        with pytest.raises(ParameterError):
            Perm([0, 1, 3])

    def test_call_and_hash(self):
        p = Perm([1, 0])
        assert p(0) == 1
        assert hash(p) == hash(Perm([1, 0]))
        assert p == Perm([1, 0])
        assert p != Perm.identity(2)


class TestGroupOrder:
    def test_symmetric(self):
        assert S(4).order() == 24
        assert S(6).order() == 720

    def test_dihedral(self):
        assert dihedral(6).order() == 12
        assert dihedral(9).order() == 18

    def test_cyclic(self):
        g = PermGroup([Perm.from_cycles(7, [tuple(range(7))])], degree=7)
        assert g.order() == 7

    def test_trivial(self):
        assert PermGroup([], degree=5).order() == 1
        assert PermGroup([Perm.identity(3)], degree=3).order() == 1

    def test_against_closure_oracle(self):
        rng = np.random.default_rng(20260816)
        for _ in range(8):
            n = int(rng.integers(4, 8))
            gens = [Perm(rng.permutation(n)) for _ in range(2)]
            expected = brute_closure([g.images for g in gens])
            assert PermGroup(gens, degree=n).order() == expected

    def test_klein_four(self):
        a = Perm.from_cycles(4, [(0, 1), (2, 3)])
        b = Perm.from_cycles(4, [(0, 2), (1, 3)])
        assert PermGroup([a, b], degree=4).order() == 4


class TestMembership:
    def test_contains(self):
        g = S(5)
        assert g.contains(Perm.from_cycles(5, [(0, 4, 2)]))
        a4 = PermGroup([Perm.from_cycles(4, [(0, 1, 2)]),
                        Perm.from_cycles(4, [(1, 2, 3)])], degree=4)
        assert a4.order() == 12
        assert not a4.contains(Perm.from_cycles(4, [(0, 1)]))
        assert a4.contains(Perm.from_cycles(4, [(0, 1), (2, 3)]))

    def test_elements(self):
        els = S(4).elements()
        assert len(els) == 24
        assert len(set(els)) == 24
        # spot-check closure
        assert els[3] * els[17] in set(els)

    def test_elements_budget(self):
        with pytest.raises(BudgetExceededError):
            S(8).elements(limit=1000)


class TestOrbits:
    def test_vertex_orbits(self):
        g = dihedral(5)
        assert g.vertex_orbits() == [tuple(range(5))]
        fix0 = PermGroup([Perm([0, 2, 1, 4, 3])], degree=5)
        assert fix0.vertex_orbits() == [(0,), (1, 2), (3, 4)]

    def test_is_transitive(self):
        assert dihedral(8).is_transitive()
        assert not PermGroup([Perm([0, 2, 1])], degree=3).is_transitive()

    def test_edge_and_dart_orbits(self):
        rot = PermGroup([Perm.from_cycles(4, [(0, 1, 2, 3)])], degree=4)
        edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
        assert len(rot.edge_orbits(edges)) == 1
        darts = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
        # pure rotation: the two dart directions stay separate
        assert len(rot.dart_orbits(darts)) == 2
        assert len(dihedral(4).dart_orbits(darts)) == 1


class TestStabilizer:
    def test_point_stabilizer_chain(self):
        g = S(5)
        assert g.point_stabilizer([0]).order() == 24
        assert g.point_stabilizer([0, 1]).order() == 6
        assert g.point_stabilizer([0, 1, 2]).order() == 2

    def test_stabilizer_fixes_points(self):
        g = dihedral(7)
        st = g.point_stabilizer([0])
        assert st.order() == 2
        for p in st.generators:
            assert p.act(0) == 0


class TestTransporter:
    def test_found_and_verified(self):
        g = dihedral(6)
        t = g.transporter([0, 1], [3, 4])
        assert t is not None
        assert t.act(0) == 3 and t.act(1) == 4

    def test_reflection_target(self):
        g = dihedral(6)
        t = g.transporter([0, 1], [0, 5])
        assert t is not None
        assert t.act(0) == 0 and t.act(1) == 5

    def test_absent(self):
        rot = PermGroup([Perm.from_cycles(6, [tuple(range(6))])], degree=6)
        assert rot.transporter([0, 1], [0, 5]) is None

    def test_absent_outside_orbit(self):
        fix0 = PermGroup([Perm([0, 2, 3, 1])], degree=4)
        assert fix0.transporter([0], [1]) is None

    def test_exhaustive_small(self):
        g = dihedral(5)
        els = g.elements()
        for a in range(5):
            for b in range(5):
                found = g.transporter([0, 1], [a, b])
                exists = any(p.act(0) == a and p.act(1) == b for p in els)
                assert (found is not None) == exists
                if found is not None:
                    assert found.act(0) == a and found.act(1) == b

    def test_length_mismatch(self):
        with pytest.raises(ParameterError):
            dihedral(4).transporter([0], [1, 2])
