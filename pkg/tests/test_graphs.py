import numpy as np
import pytest

from tetraforge import (
    Graph,
    GraphFormatError,
    Orientation,
    ParameterError,
    build_graph,
    decode_g6,
    encode_g6,
    read_g6_file,
    write_g6_file,
)
from tetraforge.graphs import (
    bfs_distances,
    bipartition,
    connected_component,
    diameter,
    edge_id,
    girth,
    is_connected,
    is_regular_of_valence,
    relabel,
)


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


PETERSEN = build_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)])


class TestGraphBasics:
    def test_edges_sorted_and_deduped(self):
        g = build_graph(4, [(2, 1), (1, 2), (0, 3), (3, 0), (0, 1)])
        assert g.edges == ((0, 1), (0, 3), (1, 2))
        assert g.num_edges == 3

    def test_neighbors_sorted(self):
        g = build_graph(5, [(2, 4), (2, 0), (2, 3), (2, 1)])
        assert g.neighbors(2) == (0, 1, 3, 4)
        assert g.degree(2) == 4
        assert g.degree(0) == 1

    def test_loop_rejected(self):
        with pytest.raises(ParameterError):
            Graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ParameterError):
            Graph(3, [(0, 3)])
        with pytest.raises(ParameterError):
            Graph(3, [(-1, 2)])

    def test_has_edge(self):
        g = cycle(5)
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)

    def test_equality_is_structural(self):
        assert cycle(6) == build_graph(6, [(5, 0), (0, 1), (1, 2), (2, 3),
                                           (3, 4), (4, 5)])
        assert cycle(6) != cycle(7)
        assert hash(cycle(6)) == hash(cycle(6))

    def test_darts(self):
        g = build_graph(3, [(0, 1)])
        assert sorted(g.darts()) == [(0, 1), (1, 0)]

    def test_csr_matches_neighbors(self):
        g = PETERSEN
        indptr, indices = g.csr()
        for v in range(g.n):
            assert tuple(indices[indptr[v]:indptr[v + 1]]) == g.neighbors(v)

    def test_edge_id_orders_endpoints(self):
        assert edge_id(5, 2) == (2, 5)
        assert edge_id(2, 5) == (2, 5)

    def test_relabel(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        h = relabel(g, [2, 0, 1])
        assert h.edges == ((0, 1), (0, 2))

    def test_regularity(self):
        assert is_regular_of_valence(cycle(5), 2)
        assert not is_regular_of_valence(cycle(5), 4)
        assert is_regular_of_valence(complete(5), 4)


class TestPredicates:
    def test_bipartition_even_cycle(self):
        parts = bipartition(cycle(6))
        assert parts is not None
        assert sorted(map(len, parts)) == [3, 3]
        side = {v: i for i, part in enumerate(parts) for v in part}
        for u, v in cycle(6).edges:
            assert side[u] != side[v]

    def test_bipartition_odd_cycle(self):
        assert bipartition(cycle(5)) is None

    def test_bipartition_disconnected(self):
        g = build_graph(5, [(0, 1), (2, 3), (3, 4), (4, 2)])
        assert bipartition(g) is None  # triangle component

    def test_connectivity(self):
        assert is_connected(cycle(7))
        g = build_graph(6, [(0, 1), (1, 2), (3, 4)])
        assert not is_connected(g)
        comp, mapping = connected_component(g, 4)
        assert comp.n == 2 and comp.edges == ((0, 1),)
        assert set(mapping) == {3, 4}

    def test_bfs_distances(self):
        d = bfs_distances(cycle(6), 0)
        assert d == [0, 1, 2, 3, 2, 1]

    def test_girth(self):
        assert girth(complete(4)) == 3
        assert girth(cycle(5)) == 5
        assert girth(PETERSEN) == 5
        assert girth(build_graph(4, [(0, 1), (1, 2), (2, 3)])) is None
        two_cycles = build_graph(10, [(i, (i + 1) % 4) for i in range(4)]
                                 + [(4 + i, 4 + (i + 1) % 6) for i in range(6)])
        assert girth(two_cycles) == 4

    def test_diameter(self):
        assert diameter(cycle(6)) == 3
        assert diameter(PETERSEN) == 2
        assert diameter(build_graph(4, [(0, 1), (2, 3)])) is None


class TestOrientation:
    def test_base_mode_requires_exact_cover(self):
        g = cycle(4)
        o = Orientation([(0, 1), (1, 2), (2, 3), (3, 0)], base=g)
        assert o.out_neighbors(0) == (1,)
        assert o.in_neighbors(0) == (3,)
        with pytest.raises(ParameterError):
            Orientation([(0, 1), (1, 0), (2, 3), (3, 0)], base=g)
        with pytest.raises(ParameterError):
            Orientation([(0, 1), (1, 2), (2, 3)], base=g)

    def test_reverse(self):
        o = Orientation([(0, 1), (1, 2)], n=3)
        r = o.reverse()
        assert r.darts == ((1, 0), (2, 1))
        assert r.reverse() == o

    def test_standalone_allows_parallel_darts(self):
        o = Orientation([(0, 1), (0, 1)], n=2)
        assert o.out_degree(0) == 2

    def test_balanced(self):
        doubled = [(i, (i + 1) % 4) for i in range(4)] \
            + [(i, (i - 1) % 4) for i in range(4)]
        o = Orientation(doubled, n=4)
        assert o.is_balanced(2)
        assert not Orientation([(0, 1), (1, 2), (2, 3), (3, 0)],
                               n=4).is_balanced(2)

    def test_underlying_graph(self):
        o = Orientation([(0, 1), (1, 2), (2, 0)], n=3)
        assert o.underlying_graph() == cycle(3)


class TestGraph6:
    def test_k5_known_string(self):
        assert encode_g6(complete(5)) == "D~{"
        assert decode_g6("D~{") == complete(5)

    def test_header_accepted(self):
        assert decode_g6(">>graph6<<D~{") == complete(5)

    def test_roundtrip_random(self):
        rng = np.random.default_rng(20260816)
        for n in (1, 2, 5, 9, 20, 40, 62, 63, 70):
            edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < 0.4]
            g = build_graph(n, edges)
            assert decode_g6(encode_g6(g)) == g

    def test_empty_graph(self):
        g = build_graph(0, [])
        assert decode_g6(encode_g6(g)) == g

    def test_bad_byte_reports_offset(self):
        with pytest.raises(GraphFormatError) as ei:
            decode_g6("D~\x01")
        assert ei.value.offset == 2

    def test_truncated(self):
        with pytest.raises(GraphFormatError):
            decode_g6("D~")

    def test_trailing_garbage(self):
        with pytest.raises(GraphFormatError):
            decode_g6("D~{~")

    def test_file_roundtrip(self, tmp_path):
        graphs = [complete(5), cycle(6), PETERSEN]
        path = tmp_path / "corpus.g6"
        write_g6_file(path, graphs)
        assert read_g6_file(path) == graphs
