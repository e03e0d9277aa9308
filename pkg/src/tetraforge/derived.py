"""Operators that build one tetravalent graph from another graph.

Covers subdivision and smoothing, the doubled-vertex subdivision (SDD),
the line / dart / capping / three-arc operators on cubic graphs, partial
line graphs of cycle decompositions, the separated box product of 2-in
2-out digraphs, and the base-graph connection-graph gluings (BGCG).
"""

import logging
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError, DegenerateGraphError, ParameterError
from .graphs import (Graph, Orientation, build_graph, edge_id,
                     is_regular_of_valence)
from .symmetry import automorphism_group

logger = logging.getLogger("tetraforge.derived")

RED = "red"
GREEN = "green"


# -- subdivision and smoothing -------------------------------------------

def subdivision(g: Graph) -> Graph:
    """Insert a midpoint vertex on every edge.

    Midpoint of edge j gets index g.n + j.
    """
    out = []
    for j, (u, v) in enumerate(g.edges):
        out.append((u, g.n + j))
        out.append((v, g.n + j))
    return build_graph(g.n + g.num_edges, out)


def smooth(g: Graph) -> Graph:
    """Suppress degree-2 vertices, joining their neighbors across.

    Maximal chains of degree-2 vertices collapse to single edges between
    their anchor endpoints (anchor = vertex of degree != 2).  A component
    that is a bare cycle has no anchors; an even one of length >= 6
    contracts alternate vertices, anything else cannot be smoothed to a
    simple graph.
    """
    keep = [v for v in range(g.n) if g.degree(v) != 2]
    new_edges: list[tuple[int, int]] = []
    seen_darts: set[tuple[int, int]] = set()
    suppressed: set[int] = set()

    for a in keep:
        for w in g.neighbors(a):
            if (a, w) in seen_darts:
                continue
            seen_darts.add((a, w))
            prev, cur = a, w
            while g.degree(cur) == 2:
                suppressed.add(cur)
                n1, n2 = g.neighbors(cur)
                prev, cur = cur, (n2 if n1 == prev else n1)
            seen_darts.add((cur, prev))
            if a == cur:
                raise DegenerateGraphError("smoothing creates a loop")
            new_edges.append(edge_id(a, cur))

    # bare cycles: all degree 2, never reached from any anchor
    for v in range(g.n):
        if g.degree(v) != 2 or v in suppressed:
            continue
        cyc = [v]
        suppressed.add(v)
        prev, cur = v, g.neighbors(v)[0]
        while cur != v:
            cyc.append(cur)
            suppressed.add(cur)
            n1, n2 = g.neighbors(cur)
            prev, cur = cur, (n2 if n1 == prev else n1)
        if len(cyc) % 2 or len(cyc) < 6:
            raise DegenerateGraphError(
                f"cannot smooth a bare {len(cyc)}-cycle")
        half = cyc[::2]
        keep.extend(half)
        for i in range(len(half)):
            new_edges.append(edge_id(half[i], half[(i + 1) % len(half)]))

    if len(new_edges) != len(set(new_edges)):
        raise DegenerateGraphError("smoothing creates parallel edges")
    keep.sort()
    renum = {v: i for i, v in enumerate(keep)}
    return build_graph(len(keep),
                       [(renum[u], renum[v]) for u, v in new_edges])


# -- SDD ------------------------------------------------------------------

def sdd(g: Graph) -> Graph:
    """Bipartite graph with a white vertex per edge and two black
    vertices per vertex; each white joins all four blacks over its
    endpoints.

    Blacks are 2v and 2v+1, whites follow at 2n + edge index.
    """
    if not is_regular_of_valence(g, 4):
        raise ParameterError("sdd input must be tetravalent")
    out = []
    for j, (u, v) in enumerate(g.edges):
        w = 2 * g.n + j
        out += [(w, 2 * u), (w, 2 * u + 1), (w, 2 * v), (w, 2 * v + 1)]
    return build_graph(2 * g.n + g.num_edges, out)


# -- operators on cubic graphs ---------------------------------------------

def line_graph(g: Graph) -> Graph:
    """Vertices are edges of g; edges join edges sharing a vertex."""
    eid = {e: i for i, e in enumerate(g.edges)}
    out = []
    for v in range(g.n):
        inc = sorted(eid[edge_id(v, w)] for w in g.neighbors(v))
        out.extend(combinations(inc, 2))
    return build_graph(g.num_edges, out)


def dart_graph(g: Graph) -> Graph:
    """Vertices are darts of g; (a,b) meets (b,c) for every c != a."""
    if not is_regular_of_valence(g, 3):
        logger.warning("dart_graph input is not cubic; "
                       "output will not be tetravalent")
    darts = g.darts()
    idx = {d: i for i, d in enumerate(darts)}
    out = []
    for i, (a, b) in enumerate(darts):
        for c in g.neighbors(b):
            if c != a:
                out.append((i, idx[(b, c)]))
    return build_graph(len(darts), out)


def hill_capping(g: Graph) -> Graph:
    """Vertices are unordered symbol pairs {a_i, b_j} over edges {a,b};
    {a_i, b_j} joins {b_j, c_{1-i}} for c a neighbor of b other than a.

    The pair is unordered: the bit kept belongs to the shared symbol, the
    bit flipped to the one being replaced.  4|E| vertices, 4-regular.
    """
    if not is_regular_of_valence(g, 3):
        raise ParameterError("hill_capping input must be cubic")
    eid = {e: i for i, e in enumerate(g.edges)}

    def vid(a, i, b, j):
        if a > b:
            a, i, b, j = b, j, a, i
        return 4 * eid[(a, b)] + 2 * i + j

    out = []
    for a, b in g.edges:
        for i in (0, 1):
            for j in (0, 1):
                u = vid(a, i, b, j)
                for c in g.neighbors(b):
                    if c != a:
                        out.append((u, vid(b, j, c, 1 - i)))
                for c in g.neighbors(a):
                    if c != b:
                        out.append((u, vid(a, i, c, 1 - j)))
    return build_graph(4 * g.num_edges, out)


def three_arc_graph(g: Graph) -> Graph:
    """Vertices are darts; (a,b) meets (c,d) when walking b,a,c,d never
    repeats a vertex two steps apart (a 3-arc starting back at b)."""
    if not is_regular_of_valence(g, 3):
        raise ParameterError("three_arc_graph input must be cubic")
    darts = g.darts()
    idx = {d: i for i, d in enumerate(darts)}
    out = []
    for i, (a, b) in enumerate(darts):
        for c in g.neighbors(a):
            if c == b:
                continue
            for d in g.neighbors(c):
                if d != a:
                    out.append((i, idx[(c, d)]))
    return build_graph(len(darts), out)


# -- partial line graph ----------------------------------------------------

def partial_line_graph(cd) -> Graph:
    """Join edges of the base that meet at a vertex but lie on different
    cycles of the decomposition.  Vertices are base edges, in base edge
    order; output is tetravalent whenever the base is."""
    g = cd.base
    eid = {e: i for i, e in enumerate(g.edges)}
    owner: dict[tuple[int, int], int] = {}
    for ci, cyc in enumerate(cd.cycles):
        m = len(cyc)
        for pos in range(m):
            e = edge_id(cyc[pos], cyc[(pos + 1) % m])
            if e not in eid:
                raise ParameterError(f"cycle {ci} uses a non-edge {e}")
            if e in owner:
                raise ParameterError(f"edge {e} lies on two cycles")
            owner[e] = ci
    if len(owner) != g.num_edges:
        raise ParameterError("cycles do not cover the edge set")
    out = []
    for v in range(g.n):
        byc: dict[int, list[int]] = {}
        for w in g.neighbors(v):
            e = edge_id(v, w)
            byc.setdefault(owner[e], []).append(eid[e])
        if len(byc) != 2:
            raise ParameterError(f"vertex {v} is not on exactly two cycles")
        es1, es2 = byc.values()
        out.extend((e, f) for e in es1 for f in es2)
    return build_graph(g.num_edges, out)


# -- separated box product --------------------------------------------------

def dcyc(n: int) -> Orientation:
    """The n-cycle with each edge replaced by opposite darts."""
    if n < 3:
        raise ParameterError("dcyc needs n >= 3")
    ds = []
    for i in range(n):
        ds.append((i, (i + 1) % n))
        ds.append(((i + 1) % n, i))
    return Orientation(ds, n=n)


def sep_box_product(d1: Orientation, d2: Orientation) -> Graph:
    """Graph on V1 x V2 x Z2: horizontal edges (a,x,0)-(b,x,1) for darts
    a->b of d1, vertical edges (b,x,1)-(b,y,0) for darts x->y of d2."""
    if not d1.is_balanced(2) or not d2.is_balanced(2):
        raise ParameterError("separated box product needs "
                             "2-in 2-out digraphs")
    n2 = d2.n

    def vid(a, x, s):
        return (a * n2 + x) * 2 + s

    out = []
    for a, b in d1.darts:
        for x in range(n2):
            out.append((vid(a, x, 0), vid(b, x, 1)))
    for x, y in d2.darts:
        for b in range(d1.n):
            out.append((vid(b, x, 1), vid(b, y, 0)))
    if len(set(out)) != len(out):
        # repeated darts in a factor collapse to single edges
        logger.warning("separated box product of non-simple factors: "
                       "%d parallel edges collapsed",
                       len(out) - len(set(out)))
    return build_graph(d1.n * n2 * 2, out)


# -- BGCG -------------------------------------------------------------------

@dataclass(frozen=True)
class EdgePairing:
    """A fixed-point-free involution on the edge ids of a base graph."""

    base: Graph
    kappa: tuple[int, ...]

    def __post_init__(self):
        ne = self.base.num_edges
        if len(self.kappa) != ne:
            raise ParameterError("pairing must cover every edge")
        for e, f in enumerate(self.kappa):
            if not 0 <= f < ne:
                raise ParameterError(f"pair target {f} out of range")
            if f == e:
                raise ParameterError(f"edge {e} paired with itself")
            if self.kappa[f] != e:
                raise ParameterError("pairing is not an involution")

    def pairs(self) -> list[tuple[int, int]]:
        return [(e, f) for e, f in enumerate(self.kappa) if e < f]


@dataclass(frozen=True)
class TwoColoring:
    """A red/green label per edge id."""

    assignment: tuple[str, ...]

    def __post_init__(self):
        for c in self.assignment:
            if c not in (RED, GREEN):
                raise ParameterError(f"bad edge color {c!r}")


def _bstar_edges(base: Graph, copy: int, nb: int, white_of) -> list:
    out = []
    for e, (u, v) in enumerate(base.edges):
        w = white_of(copy, e)
        out.append((copy * nb + u, w))
        out.append((copy * nb + v, w))
    return out


def bgcg(base: Graph, pairing: EdgePairing, connection,
         coloring: TwoColoring = None, primed: bool = False) -> Graph:
    """Glue copies of the subdivided base along the pairing.

    connection is "K1", "K2", or an int k >= 3 for the k-cycle.  Cycle
    connections need a coloring in which every pair meets both colors;
    the primed variant additionally needs k even.
    """
    if pairing.base != base:
        raise ParameterError("pairing belongs to a different base graph")
    if not is_regular_of_valence(base, 4):
        raise ParameterError("bgcg base must be tetravalent")
    nb, ne = base.n, base.num_edges
    kappa = pairing.kappa
    is_cycle = isinstance(connection, int)
    if not is_cycle and connection not in ("K1", "K2"):
        raise ParameterError(f"unknown connection {connection!r}")
    if is_cycle and connection < 3:
        raise ParameterError("cycle connection needs k >= 3")
    if is_cycle and coloring is None:
        raise ParameterError("cycle connection requires a coloring")
    if not is_cycle and coloring is not None:
        raise ParameterError("coloring only applies to cycle connections")
    if primed and not is_cycle:
        raise ParameterError("primed variant needs a cycle connection")
    if primed and connection % 2:
        raise ParameterError("primed variant needs k even")

    pair_index = {}
    for q, (e, f) in enumerate(pairing.pairs()):
        pair_index[e] = q
        pair_index[f] = q
    npairs = ne // 2

    if connection == "K1":
        def white_of(_copy, e):
            return nb + pair_index[e]
        out = _bstar_edges(base, 0, nb, white_of)
        if len(set(out)) != len(out):
            raise DegenerateGraphError(
                "pairing glues two edges at a shared endpoint")
        return build_graph(nb + npairs, out)

    if connection == "K2":
        # white_0(e) is identified with white_1(kappa(e)); index the merged
        # vertex by the copy-0 edge id
        def white_of(copy, e):
            return 2 * nb + (e if copy == 0 else kappa[e])
        out = _bstar_edges(base, 0, nb, white_of)
        out += _bstar_edges(base, 1, nb, white_of)
        return build_graph(2 * nb + ne, out)

    k = connection
    colors = coloring.assignment
    if len(colors) != ne:
        raise ParameterError("coloring must cover every edge")
    for e, f in pairing.pairs():
        if colors[e] == colors[f]:
            raise ParameterError(
                f"pair ({e},{f}) does not meet both colors")

    if not primed:
        # green edge of pair p in copy i merges with the red edge of the
        # same pair in copy i+1
        def white_of(copy, e):
            i = copy if colors[e] == GREEN else (copy - 1) % k
            return k * nb + i * npairs + pair_index[e]
    else:
        # greens merge across (even, even+1), reds across (odd, odd+1)
        def white_of(copy, e):
            if colors[e] == GREEN:
                i = copy if copy % 2 == 0 else (copy - 1) % k
            else:
                i = copy if copy % 2 == 1 else (copy - 1) % k
            return k * nb + i * npairs + pair_index[e]

    out = []
    for c in range(k):
        out += _bstar_edges(base, c, nb, white_of)
    return build_graph(k * (nb + npairs), out)


def pairing_is_dart_transitive(pairing: EdgePairing,
                               node_budget: int = 10_000_000) -> bool:
    """Whether the subgroup of Aut(base) preserving the pairing is
    transitive on darts.

    The pairing is encoded as a gadget: a midpoint per edge plus a hub
    per pair, colored by role; automorphisms of the gadget restrict to
    exactly the pairing-preserving symmetries of the base.
    """
    g = pairing.base
    nb, ne = g.n, g.num_edges
    if ne == 0:
        return True
    out = []
    for j, (u, v) in enumerate(g.edges):
        out += [(u, nb + j), (v, nb + j)]
    for q, (e, f) in enumerate(pairing.pairs()):
        hub = nb + ne + q
        out += [(nb + e, hub), (nb + f, hub)]
    aux = build_graph(nb + ne + ne // 2, out)
    colors = [0] * nb + [1] * ne + [2] * (ne // 2)
    grp = automorphism_group(aux, colors=colors, node_budget=node_budget)
    gens = [[p.act(v) for v in range(nb)] for p in grp.generators]

    darts = g.darts()
    start = darts[0]
    seen = {start}
    stack = [start]
    while stack:
        u, v = stack.pop()
        for im in gens:
            d = (im[u], im[v])
            if d not in seen:
                seen.add(d)
                stack.append(d)
    return len(seen) == len(darts)


def find_dart_transitive_pairings(g: Graph, limit: int = None,
                                  node_budget: int = 200_000):
    """Exhaustive search for edge pairings whose preserving subgroup is
    dart-transitive.

    Any such pairing has all its pairs inside a single Aut(g)-orbit of
    edge 2-sets (the preserving subgroup is edge-transitive and maps
    pairs to pairs), so the search fixes that orbit first and backtracks
    within it.  Raises on budget exhaustion; use limit to stop early.
    """
    ne = g.num_edges
    if ne == 0 or ne % 2:
        return []
    grp = automorphism_group(g)
    darts = g.darts()
    if len(grp.dart_orbits(darts)) != 1:
        return []

    eid = {ed: i for i, ed in enumerate(g.edges)}

    def img(arr, e):
        u, v = g.edges[e]
        return eid[edge_id(int(arr[u]), int(arr[v]))]

    all_pairs = [(e, f) for e in range(ne) for f in range(e + 1, ne)]
    orbit_of = {}
    for oi, orb in enumerate(grp.orbits_on(
            all_pairs, lambda arr, pr: tuple(sorted((img(arr, pr[0]),
                                                     img(arr, pr[1])))))):
        for pr in orb:
            orbit_of[pr] = oi

    found = []
    nodes = 0
    types_of_first = sorted({orbit_of[(0, f)] for f in range(1, ne)})

    def dfs(kappa, target_type):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError("pairing search budget exhausted")
        if limit is not None and len(found) >= limit:
            return
        try:
            e = kappa.index(-1)
        except ValueError:
            p = EdgePairing(g, tuple(kappa))
            if pairing_is_dart_transitive(p):
                found.append(p)
            return
        for f in range(e + 1, ne):
            if kappa[f] != -1 or orbit_of[(e, f)] != target_type:
                continue
            kappa[e], kappa[f] = f, e
            dfs(kappa, target_type)
            kappa[e] = kappa[f] = -1

    for t in types_of_first:
        dfs([-1] * ne, t)
        if limit is not None and len(found) >= limit:
            break
    return found
