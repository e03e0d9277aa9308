"""Cycle decompositions and LR structures.

A cycle decomposition splits the edges of a graph into cycles so that
each vertex carries degree/2 of them (two, in the tetravalent case).
When the cycles are 2-colored so that the two cycles through any vertex
disagree, the structure may qualify as a suitable LR structure; the
partial line graph of a suitable structure is semisymmetric.  This
module holds the decomposition type, the suitability checker, and the
constructions that feed it: barrels, cycle-structure doubles, stacks of
pancakes, rows-and-columns, Cayley and affine families, bicirculants,
and alternating cycles of a semitransitive orientation.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional, Sequence

from .derived import partial_line_graph
from .errors import (UNKNOWN, BudgetExceededError, DegenerateGraphError,
                     ParameterError)
from .graphs import (Graph, Orientation, build_graph, edge_id, is_connected,
                     is_regular_of_valence)
from .perms import Perm, PermGroup
from .symmetry import DEFAULT_NODE_BUDGET, automorphism_group

logger = logging.getLogger("tetraforge.lr")

RED = "red"
GREEN = "green"


@dataclass(frozen=True)
class CycleDecomposition:
    """Partition of the edges of ``base`` into cycles.

    Each cycle is a tuple of distinct vertices read cyclically.  Every
    edge must land in exactly one cycle and every vertex must carry
    degree/2 cycle passes.  ``coloring`` (optional) gives each cycle
    "red" or "green"; the two cycles through a vertex must then differ.
    """

    base: Graph
    cycles: tuple
    coloring: Optional[tuple] = None

    def __post_init__(self):
        cycles = tuple(tuple(int(v) for v in c) for c in self.cycles)
        object.__setattr__(self, "cycles", cycles)
        eset = set(self.base.edges)
        owner = {}
        incident = defaultdict(list)
        for ci, cyc in enumerate(cycles):
            if len(cyc) < 3:
                raise ParameterError(f"cycle {ci} has fewer than 3 vertices")
            if len(set(cyc)) != len(cyc):
                raise ParameterError(f"cycle {ci} repeats a vertex")
            for t, u in enumerate(cyc):
                e = edge_id(u, cyc[(t + 1) % len(cyc)])
                if e not in eset:
                    raise ParameterError(f"cycle {ci} uses the non-edge {e}")
                if e in owner:
                    raise ParameterError(f"edge {e} lies on two cycles")
                owner[e] = ci
                incident[u].append(ci)
        if len(owner) != self.base.num_edges:
            raise ParameterError("cycles do not cover every edge")
        for v in range(self.base.n):
            if 2 * len(incident[v]) != self.base.degree(v):
                raise ParameterError(
                    f"vertex {v} lies on {len(incident[v])} cycles, "
                    f"expected degree/2")
        if self.coloring is not None:
            coloring = tuple(self.coloring)
            object.__setattr__(self, "coloring", coloring)
            if len(coloring) != len(cycles):
                raise ParameterError("one color per cycle required")
            if not set(coloring) <= {RED, GREEN}:
                raise ParameterError("colors must be 'red' or 'green'")
            for v in range(self.base.n):
                cols = [coloring[ci] for ci in incident[v]]
                if len(cols) == 2 and cols[0] == cols[1]:
                    raise ParameterError(
                        f"both cycles through vertex {v} are {cols[0]}")
        object.__setattr__(self, "_owner", owner)
        object.__setattr__(self, "_incident",
                           {v: tuple(incident[v]) for v in incident})

    def cycle_of_edge(self, u: int, v: int) -> int:
        return self._owner[edge_id(u, v)]

    def cycles_at(self, v: int) -> tuple:
        return self._incident.get(v, ())

    def edge_color(self, u: int, v: int) -> str:
        if self.coloring is None:
            raise ParameterError("decomposition is not colored")
        return self.coloring[self._owner[edge_id(u, v)]]

    def uncolored(self) -> "CycleDecomposition":
        if self.coloring is None:
            return self
        return CycleDecomposition(self.base, self.cycles)


@dataclass(frozen=True)
class LRVerdict:
    """Outcome of the four-part suitability check.

    Condition flags are True/False or None when a budgeted group search
    could not decide.  ``suitable`` is True exactly when all four flags
    are True.  Failing conditions carry a witness where one exists:
    ``missing_swapper`` is a (vertex, cycle index) pair, and
    ``alternating_quad`` is the vertex tuple of an offending 4-cycle.
    """

    suitable: bool
    vertex_transitive: Optional[bool]
    swappers: Optional[bool]
    no_color_swap: Optional[bool]
    no_alternating_quad: Optional[bool]
    missing_swapper: Optional[tuple] = None
    alternating_quad: Optional[tuple] = None


def _partition_group(cd: CycleDecomposition, use_colors: bool,
                     node_budget: int) -> PermGroup:
    """Symmetries of the base preserving the cycle partition.

    Gadget: one white vertex per edge, joined to the edge's endpoints
    and to the midpoints of the neighbouring edges on its own cycle.
    Whites are determined by their black pair, so the restriction to the
    blacks is faithful and the gadget order transfers.
    """
    base = cd.base
    n, edges = base.n, base.edges
    eidx = {e: j for j, e in enumerate(edges)}
    gedges = []
    for j, (u, v) in enumerate(edges):
        gedges.append((u, n + j))
        gedges.append((v, n + j))
    for cyc in cd.cycles:
        ids = [eidx[edge_id(cyc[t], cyc[(t + 1) % len(cyc)])]
               for t in range(len(cyc))]
        for t in range(len(ids)):
            gedges.append((n + ids[t], n + ids[(t + 1) % len(ids)]))
    if use_colors:
        code = {RED: 1, GREEN: 2}
        ecol = [code[cd.coloring[cd._owner[e]]] for e in edges]
    else:
        ecol = [1] * len(edges)
    gadget = build_graph(n + len(edges), gedges)
    grp = automorphism_group(gadget, colors=[0] * n + ecol,
                             node_budget=node_budget)
    gens = [Perm(g.a[:n]) for g in grp.generators]
    return PermGroup(gens, n, known_order=grp.order())


def decomposition_aut(cd: CycleDecomposition,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> PermGroup:
    """Subgroup of Aut(base) mapping cycles to cycles, color-preserving
    when the decomposition is colored."""
    return _partition_group(cd, cd.coloring is not None, node_budget)


def _cycle_index(cd: CycleDecomposition, C) -> int:
    if isinstance(C, int):
        if not 0 <= C < len(cd.cycles):
            raise ParameterError(f"no cycle {C}")
        return C
    want = frozenset(edge_id(C[t], C[(t + 1) % len(C)]) for t in range(len(C)))
    for ci, cyc in enumerate(cd.cycles):
        have = frozenset(edge_id(cyc[t], cyc[(t + 1) % len(cyc)])
                         for t in range(len(cyc)))
        if have == want:
            return ci
    raise ParameterError("no such cycle in the decomposition")


def _swapper_in(grp: PermGroup, cd: CycleDecomposition, ci: int, v: int,
                budget: Optional[int]):
    cyc = cd.cycles[ci]
    pair = cd.cycles_at(v)
    if len(pair) != 2:
        raise ParameterError(f"vertex {v} does not lie on two cycles")
    other = pair[0] if pair[1] == ci else pair[1]
    k = cyc.index(v)
    rot = cyc[k:] + cyc[:k]
    rev = (v,) + tuple(reversed(rot[1:]))
    oc = cd.cycles[other]
    # fixing the companion cycle pointwise forces a deterministic walk
    # down the chain; the transporter is exact, not heuristic
    try:
        g = grp.transporter(tuple(oc) + rot, tuple(oc) + rev, budget=budget)
    except BudgetExceededError:
        return UNKNOWN
    return g is not None


def has_swapper(cd: CycleDecomposition, C, v: int,
                node_budget: int = DEFAULT_NODE_BUDGET):
    """Is there a symmetry reversing C that fixes v and the whole other
    cycle through v?  True/False, or UNKNOWN when the budget runs out."""
    ci = _cycle_index(cd, C)
    if v not in cd.cycles[ci]:
        raise ParameterError(f"vertex {v} is not on that cycle")
    try:
        grp = decomposition_aut(cd, node_budget=node_budget)
    except BudgetExceededError:
        return UNKNOWN
    return _swapper_in(grp, cd, ci, v, node_budget)


def _alternating_quad(cd: CycleDecomposition) -> Optional[tuple]:
    """A 4-cycle whose edges alternate red and green, if one exists."""
    base = cd.base
    color = cd.edge_color
    for u in range(base.n):
        reds = [x for x in base.neighbors(u) if color(u, x) == RED]
        greens = [y for y in base.neighbors(u) if color(u, y) == GREEN]
        for x in reds:
            wanted = {w for w in base.neighbors(x)
                      if w != u and color(x, w) == GREEN}
            for y in greens:
                for w in base.neighbors(y):
                    if w in wanted and color(y, w) == RED:
                        return (u, x, w, y)
    return None


def check_suitable_lr(cd: CycleDecomposition,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> LRVerdict:
    """Decide the four suitability conditions for a colored decomposition:
    the color-preserving group is vertex-transitive, every swapper exists,
    nothing exchanges red with green, and no 4-cycle alternates colors."""
    if cd.coloring is None:
        raise ParameterError("suitability needs a colored decomposition")
    quad = _alternating_quad(cd)
    no_quad = quad is None
    try:
        g_col = _partition_group(cd, True, node_budget)
        g_all = _partition_group(cd, False, node_budget)
    except BudgetExceededError:
        return LRVerdict(False, None, None, None, no_quad,
                         alternating_quad=quad)
    vt = g_col.is_transitive()
    # a color swap is all-or-nothing on a connected base, so the colored
    # group has index 1 or 2 in the partition group; compare orders
    no_swap = g_all.order() == g_col.order()

    owner = cd._owner
    items = [(v, ci) for v in range(cd.base.n) for ci in cd.cycles_at(v)]

    def act(arr, item):
        v, ci = item
        cyc = cd.cycles[ci]
        e = edge_id(int(arr[cyc[0]]), int(arr[cyc[1]]))
        return (int(arr[v]), owner[e])

    swappers: Optional[bool] = True
    missing = None
    for orbit in g_col.orbits_on(items, act):
        v, ci = min(orbit)
        got = _swapper_in(g_col, cd, ci, v, node_budget)
        if got is UNKNOWN:
            swappers = None
        elif not got:
            swappers = False
            missing = (v, ci)
            break
    suitable = (vt is True and swappers is True and no_swap is True
                and no_quad is True)
    return LRVerdict(suitable, vt, swappers, no_swap, no_quad,
                     missing_swapper=missing, alternating_quad=quad)


def pl_of_lr(cd: CycleDecomposition, node_budget: int = DEFAULT_NODE_BUDGET) -> Graph:
    """Partial line graph of a decomposition verified suitable first."""
    verdict = check_suitable_lr(cd, node_budget=node_budget)
    if not verdict.suitable:
        raise ParameterError(f"not a suitable LR structure: {verdict}")
    return partial_line_graph(cd)


def _trace_cycles(pairs: Sequence[tuple]) -> list:
    """Cycles of a 2-regular edge list, as vertex tuples."""
    adj = defaultdict(list)
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    for u, nbrs in adj.items():
        if len(nbrs) != 2:
            raise ParameterError(
                f"vertex {u} has {len(nbrs)} edges in a would-be 2-factor")
    out = []
    seen = set()
    for s in sorted(adj):
        if s in seen:
            continue
        cyc = [s]
        prev, cur = None, s
        while True:
            a, b = adj[cur]
            nxt = b if a == prev else a
            prev, cur = cur, nxt
            if cur == s:
                break
            cyc.append(cur)
        seen.update(cyc)
        out.append(tuple(cyc))
    return out


# ---------------------------------------------------------------- families

def barrel(k: int, n: int, r: int, mutant: bool = False) -> CycleDecomposition:
    """Br(k, n; r), or MBr(k, n; r) with mutant=True.

    Vertices Z_k x Z_n at index i*n + j.  Green edges run along the rows
    with jump r^i; red edges climb the columns, the mutant wrapping from
    row k-1 to row 0 with an extra half turn.
    """
    kind = "MBr" if mutant else "Br"
    if k % 2 or k < (2 if mutant else 4):
        raise ParameterError(f"{kind} needs even k >= {2 if mutant else 4}")
    if mutant:
        if n % 2 or n < 8:
            raise ParameterError("MBr needs even n >= 8")
    elif n < 5:
        raise ParameterError("Br needs n >= 5")
    r %= n
    if r in (1, n - 1):
        raise ParameterError(f"{kind} needs r != +-1 (mod n)")
    if r * r % n not in (1, n - 1):
        raise ParameterError(f"{kind} needs r^2 = +-1 (mod n)")

    def vid(i, j):
        return i * n + j % n

    edges = []
    cycles = []
    rp = [pow(r, i, n) for i in range(k)]
    for i in range(k):
        for j in range(n):
            edges.append((vid(i, j), vid(i, j + rp[i])))
        cycles.append(tuple(vid(i, t * rp[i]) for t in range(n)))
    greens = len(cycles)
    if mutant:
        half = n // 2
        for i in range(k):
            for j in range(n):
                edges.append((vid(i, j), vid(0, j + half) if i == k - 1
                              else vid(i + 1, j)))
        for j in range(half):
            cyc = [vid(i, j) for i in range(k)]
            cyc += [vid(i, j + half) for i in range(k)]
            cycles.append(tuple(cyc))
    else:
        for i in range(k):
            for j in range(n):
                edges.append((vid(i, j), vid((i + 1) % k, j)))
        for j in range(n):
            cycles.append(tuple(vid(i, j) for i in range(k)))
    coloring = (GREEN,) * greens + (RED,) * (len(cycles) - greens)
    return CycleDecomposition(build_graph(k * n, edges), tuple(cycles),
                              coloring)


def _build_barrel(k: int, n: int, r: int) -> Graph:
    return barrel(k, n, r).base


def _build_mutant_barrel(k: int, n: int, r: int) -> Graph:
    return barrel(k, n, r, mutant=True).base


def cycle_structure_double(g: Graph, cd: CycleDecomposition, variant: int,
                           verify: bool = True,
                           node_budget: int = DEFAULT_NODE_BUDGET
                           ) -> CycleDecomposition:
    """CS(g, cd, variant): split each vertex across its two cycles, tie
    the halves with a parallel red pair, then take the double cover in
    which red pairs get voltages {0, 1} and green edges get voltage 0
    (variant 0) or a single voltage-1 edge per cycle (variant 1).

    The voltage-1 edge sits on the lexicographically least edge of each
    cycle, which keeps the output deterministic.
    """
    if variant not in (0, 1):
        raise ParameterError("variant must be 0 or 1")
    if not is_regular_of_valence(g, 4):
        raise ParameterError("cycle structure doubling needs a tetravalent base")
    if cd.base.n != g.n or set(cd.base.edges) != set(g.edges):
        raise ParameterError("decomposition does not belong to this graph")
    if verify:
        grp = decomposition_aut(cd.uncolored(), node_budget=node_budget)
        if len(grp.dart_orbits(g.darts())) != 1:
            raise ParameterError("decomposition is not a cycle structure "
                                 "(its group misses some dart)")

    def side(v, ci):
        pair = cd.cycles_at(v)
        return 0 if ci == min(pair) else 1

    def vid(v, c, layer):
        return 4 * v + 2 * c + layer

    edges = []
    cycles = []
    colors = []
    for ci, cyc in enumerate(cd.cycles):
        L = len(cyc)
        eids = [edge_id(cyc[t], cyc[(t + 1) % L]) for t in range(L)]
        low = min(eids)
        volts = [1 if variant and e == low else 0 for e in eids]
        for t in range(L):
            u, w = cyc[t], cyc[(t + 1) % L]
            su, sw = side(u, ci), side(w, ci)
            for layer in (0, 1):
                edges.append((vid(u, su, layer),
                              vid(w, sw, (layer + volts[t]) % 2)))
        # lifted cycles: voltage sum 0 splits the cycle into two copies,
        # sum 1 doubles it around both layers
        starts = (0,) if sum(volts) % 2 else (0, 1)
        for start_layer in starts:
            lift = []
            layer = start_layer
            while True:
                for t in range(L):
                    lift.append(vid(cyc[t], side(cyc[t], ci), layer))
                    layer = (layer + volts[t]) % 2
                if layer == start_layer:
                    break
            cycles.append(tuple(lift))
            colors.append(GREEN)
    for v in range(g.n):
        edges.append((vid(v, 0, 0), vid(v, 1, 0)))
        edges.append((vid(v, 0, 1), vid(v, 1, 1)))
        edges.append((vid(v, 0, 0), vid(v, 1, 1)))
        edges.append((vid(v, 0, 1), vid(v, 1, 0)))
        cycles.append((vid(v, 0, 0), vid(v, 1, 0), vid(v, 0, 1),
                       vid(v, 1, 1)))
        colors.append(RED)
    return CycleDecomposition(build_graph(4 * g.n, edges), tuple(cycles),
                              tuple(colors))


def sop(fourm: int, fourn: int) -> CycleDecomposition:
    """SoP(4m, 4n) on Z_4m x Z_4n x Z_2: red row cycles with jump r^z
    where r = 2n+1, green K_{2,2} rungs pairing columns by j's parity."""
    if fourm % 4 or fourn % 4 or fourm < 4 or fourn < 4:
        raise ParameterError("SoP arguments must be positive multiples of 4")
    r = fourn // 2 + 1

    def vid(i, j, z):
        return (i * fourn + j % fourn) * 2 + z

    edges = []
    cycles = []
    for i in range(fourm):
        for z, step in ((0, 1), (1, r)):
            for j in range(fourn):
                edges.append((vid(i, j, z), vid(i, j + step, z)))
            cycles.append(tuple(vid(i, t * step, z) for t in range(fourn)))
    reds = len(cycles)
    for j in range(fourn):
        for i in range(fourm // 2):
            a = 2 * i
            b = (a + 1) % fourm if j % 2 == 0 else (a - 1) % fourm
            for z in (0, 1):
                for z2 in (0, 1):
                    edges.append((vid(a, j, z), vid(b, j, z2)))
            cycles.append((vid(a, j, 0), vid(b, j, 0), vid(a, j, 1),
                           vid(b, j, 1)))
    coloring = (RED,) * reds + (GREEN,) * (len(cycles) - reds)
    return CycleDecomposition(build_graph(fourm * fourn * 2, edges),
                              tuple(cycles), coloring)


def _build_sop(fourm: int, fourn: int) -> Graph:
    return sop(fourm, fourn).base


def rows_and_columns(n: int, k: int) -> CycleDecomposition:
    """RC(n, k): two kinds of triples (i, (r, j)) and ((i, r), j) on
    Z_n x Z_k x Z_n; green cycles move the free coordinate, red edges
    step r and toggle the kind."""
    if n < 3 or k < 3:
        raise ParameterError("RC needs n >= 3 and k >= 3")
    half = k * n * n

    def t1(i, r, j):
        return ((i % n) * k + r % k) * n + j % n

    def t2(i, r, j):
        return half + ((i % n) * k + r % k) * n + j % n

    edges = []
    cycles = []
    for r in range(k):
        for j in range(n):
            for i in range(n):
                edges.append((t1(i, r, j), t1(i + 1, r, j)))
            cycles.append(tuple(t1(i, r, j) for i in range(n)))
    for i in range(n):
        for r in range(k):
            for j in range(n):
                edges.append((t2(i, r, j), t2(i, r, j + 1)))
            cycles.append(tuple(t2(i, r, j) for j in range(n)))
    greens = len(cycles)
    red_pairs = []
    for i in range(n):
        for j in range(n):
            for r in range(k):
                red_pairs.append((t1(i, r, j), t2(i, r + 1, j)))
                red_pairs.append((t1(i, r, j), t2(i, r - 1, j)))
    red_pairs = sorted({edge_id(u, v) for u, v in red_pairs})
    edges.extend(red_pairs)
    cycles.extend(_trace_cycles(red_pairs))
    coloring = (GREEN,) * greens + (RED,) * (len(cycles) - greens)
    return CycleDecomposition(build_graph(2 * half, edges), tuple(cycles),
                              coloring)


def _build_rc(n: int, k: int) -> Graph:
    return rows_and_columns(n, k).base


# ------------------------------------------------------------ cayley side

class _Universe:
    """Finite group presented as explicit elements plus multiplication."""

    def __init__(self, elements, mult):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ParameterError("duplicate group elements")
        self.mult = mult

    def identity(self):
        for e in self.elements:
            if self.mult(e, e) == e:
                return e
        raise ParameterError("no identity found")

    def inverse(self, a):
        ident = self.identity()
        for b in self.elements:
            if self.mult(a, b) == ident:
                return b
        raise ParameterError("element has no inverse")


def _dihedral_universe(n: int) -> _Universe:
    if n < 3:
        raise ParameterError("dihedral group needs n >= 3")
    elements = [(rho, eps) for eps in (0, 1) for rho in range(n)]

    def mult(a, b):
        # (rho, eps) is the map x -> (-1)^eps x + rho on Z_n
        return ((a[0] + (b[0] if a[1] == 0 else -b[0])) % n, a[1] ^ b[1])

    return _Universe(elements, mult)


class _Semidirect(_Universe):
    """Z_n^k semidirect a coordinate permutation, optionally modulo a
    pi-invariant subgroup of the translation part."""

    def __init__(self, n: int, pi: Sequence[int], quotient_gens=()):
        self.n = n
        self.pi = tuple(pi)
        k = len(self.pi)
        order = 1
        arr = list(range(k))
        while True:
            arr = [self.pi[x] for x in arr]
            if arr == list(range(k)):
                break
            order += 1
        self.shift_order = order
        self.powers = []
        arr = list(range(k))
        for _ in range(order):
            self.powers.append(tuple(arr))
            arr = [self.pi[x] for x in arr]
        zero = (0,) * k
        subgroup = {zero}
        frontier = [zero]
        while frontier:
            v = frontier.pop()
            for h in quotient_gens:
                w = tuple((a + b) % n for a, b in zip(v, h))
                if w not in subgroup:
                    subgroup.add(w)
                    frontier.append(w)
        # pi-invariance of the subgroup keeps the quotient a group
        for h in subgroup:
            if self._apply(1, h) not in subgroup:
                raise ParameterError("quotient subgroup is not shift-invariant")
        self.subgroup = sorted(subgroup)

        reps = {}
        for vec in self._all_vectors(k):
            rep = min(tuple((a + b) % n for a, b in zip(vec, h))
                      for h in self.subgroup)
            reps[vec] = rep
        self._rep = reps
        elements = sorted({(p, reps[vec]) for p in range(order)
                           for vec in reps})
        super().__init__(elements, self._mult)

    def _all_vectors(self, k):
        vecs = [()]
        for _ in range(k):
            vecs = [v + (x,) for v in vecs for x in range(self.n)]
        return vecs

    def _apply(self, p, vec):
        # position i of the image holds the entry that pi^p sends there
        perm = self.powers[p % self.shift_order]
        out = [0] * len(vec)
        for i, x in enumerate(vec):
            out[perm[i]] = x
        return tuple(out)

    def _mult(self, a, b):
        p = (a[0] + b[0]) % self.shift_order
        vec = tuple((x + y) % self.n
                    for x, y in zip(self._apply(a[0], b[1]), a[1]))
        return (p, self._rep[vec])

    def element(self, p, vec):
        return (p % self.shift_order, self._rep[tuple(x % self.n
                                                      for x in vec)])


def _universe(group_spec) -> _Universe:
    if isinstance(group_spec, _Universe):
        return group_spec
    if isinstance(group_spec, PermGroup):
        elems = group_spec.elements()
        return _Universe(elems, lambda a, b: a * b)
    if isinstance(group_spec, tuple) and group_spec:
        tag = group_spec[0]
        if tag == "dihedral":
            return _dihedral_universe(group_spec[1])
        if tag == "abelian":
            moduli = tuple(group_spec[1])
            if any(m < 1 for m in moduli):
                raise ParameterError("abelian moduli must be positive")
            vecs = [()]
            for m in moduli:
                vecs = [v + (x,) for v in vecs for x in range(m)]
            return _Universe(vecs, lambda a, b: tuple(
                (x + y) % m for x, y, m in zip(a, b, moduli)))
    raise ParameterError(f"unsupported group spec {group_spec!r}")


def cayley_lr(group_spec, R: Sequence, G: Sequence) -> CycleDecomposition:
    """Cay(A; R, G): red edges a - sa for s in R, green for s in G.

    R and G must each hold two distinct non-identity elements and be
    inverse-closed; the union must generate A (connected structure).
    """
    uni = _universe(group_spec)
    ident = uni.identity()
    sides = []
    for name, S in (("R", R), ("G", G)):
        S = list(S)
        if len(S) != 2 or S[0] == S[1]:
            raise ParameterError(f"{name} needs two distinct elements")
        for s in S:
            if s not in uni.index:
                raise ParameterError(f"{name} contains a non-element")
            if s == ident:
                raise ParameterError(f"{name} contains the identity")
            if uni.inverse(s) not in S:
                raise ParameterError(f"{name} is not inverse-closed")
        sides.append(S)
    if set(sides[0]) & set(sides[1]):
        raise ParameterError("R and G overlap")
    idx = uni.index
    pair_lists = []
    for S in sides:
        pairs = set()
        for a in uni.elements:
            for s in S:
                b = uni.mult(s, a)
                if b == a:
                    raise DegenerateGraphError("connection element fixes a "
                                               "vertex")
                pairs.add(edge_id(idx[a], idx[b]))
        pair_lists.append(sorted(pairs))
    red_pairs, green_pairs = pair_lists
    base = build_graph(len(uni.elements), red_pairs + green_pairs)
    if not is_connected(base):
        raise ParameterError("R and G do not generate the group")
    red_cycles = _trace_cycles(red_pairs)
    green_cycles = _trace_cycles(green_pairs)
    cycles = tuple(red_cycles) + tuple(green_cycles)
    coloring = (RED,) * len(red_cycles) + (GREEN,) * len(green_cycles)
    return CycleDecomposition(base, cycles, coloring)


def _extends_to_automorphism(uni: _Universe, images: dict) -> bool:
    """Does the generator assignment extend to a group automorphism?

    Walks the Cayley graph of the given generators; consistency on every
    edge forces all relations, and a bijective total image clinches it.
    """
    ident = uni.identity()
    phi = {ident: ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for s, s_img in images.items():
            y = uni.mult(s, x)
            cand = uni.mult(s_img, phi[x])
            if y in phi:
                if phi[y] != cand:
                    return False
            else:
                phi[y] = cand
                frontier.append(y)
    if len(phi) != len(uni.elements):
        raise ParameterError("generators do not generate the group")
    return len(set(phi.values())) == len(phi)


def cayley_pair_condition(group_spec, R: Sequence, G: Sequence) -> bool:
    """Two automorphisms: one fixing R pointwise and swapping G, one
    the other way around."""
    uni = _universe(group_spec)
    r1, r2 = R
    g1, g2 = G
    swap_g = _extends_to_automorphism(uni, {r1: r1, r2: r2, g1: g2, g2: g1})
    swap_r = _extends_to_automorphism(uni, {r1: r2, r2: r1, g1: g1, g2: g2})
    return swap_g and swap_r


def cayley_rg_condition(group_spec, R: Sequence, G: Sequence) -> bool:
    """RG != GR as product sets; equivalent to having no alternating
    4-cycle."""
    uni = _universe(group_spec)
    rg = {uni.mult(r, g) for r in R for g in G}
    gr = {uni.mult(g, r) for g in G for r in R}
    return rg != gr


def _shift_universe(n: int, k: int, quotient_gens=()) -> _Semidirect:
    if n < 2 or k < 3:
        raise ParameterError("shift semidirect product needs n >= 2, k >= 3")
    pi = tuple((i + 1) % k for i in range(k))
    return _Semidirect(n, pi, quotient_gens)


def aff_lr(n: int, k: int) -> CycleDecomposition:
    """AffLR(n, k): Z_n^k extended by the coordinate shift; R = {+-e1},
    G = the shift and its inverse."""
    if n < 3 or k < 3:
        raise ParameterError("AffLR needs n >= 3 and k >= 3")
    uni = _shift_universe(n, k)
    e1 = (1,) + (0,) * (k - 1)
    zero = (0,) * k
    R = [uni.element(0, e1), uni.element(0, tuple(-x for x in e1))]
    G = [uni.element(1, zero), uni.element(-1, zero)]
    return cayley_lr(uni, R, G)


def _aff_quotient(n: int, k: int, quotient_gens) -> CycleDecomposition:
    uni = _shift_universe(n, k, quotient_gens)
    e1 = (1,) + (0,) * (k - 1)
    zero = (0,) * k
    R = [uni.element(0, e1), uni.element(0, tuple(-x % n for x in e1))]
    G = [uni.element(1, zero), uni.element(-1, zero)]
    return cayley_lr(uni, R, G)


def proj_lr(n: int, k: int) -> CycleDecomposition:
    """AffLR(n, k) modulo the diagonal translation (1, 1, ..., 1)."""
    if n < 3 or k < 3:
        raise ParameterError("ProjLR needs n >= 3 and k >= 3")
    return _aff_quotient(n, k, [(1,) * k])


def proj_lr_o(n: int, k: int) -> CycleDecomposition:
    """AffLR(n, 2k) modulo all e_i - e_{i+k}."""
    if n < 3 or k < 2:
        raise ParameterError("ProjLR-o needs n >= 3 and k >= 2")
    gens = []
    for i in range(k):
        vec = [0] * (2 * k)
        vec[i] = 1
        vec[i + k] = n - 1
        gens.append(tuple(vec))
    return _aff_quotient(n, 2 * k, gens)


def _block_shift_universe(k: int, quotient_gens=()) -> _Semidirect:
    if k < 3:
        raise ParameterError("block shift needs k >= 3")
    pi = tuple([(i + 1) % k for i in range(k)]
               + [k + (i + 1) % k for i in range(k)])
    return _Semidirect(2, pi, quotient_gens)


def aff_lr2(k: int) -> CycleDecomposition:
    """AffLR_2(k): Z_2^{2k} extended by the double block shift;
    R = {e_1, e_{k+1}}, G = the shift and its inverse."""
    uni = _block_shift_universe(k)
    e1 = tuple(1 if i == 0 else 0 for i in range(2 * k))
    ek1 = tuple(1 if i == k else 0 for i in range(2 * k))
    zero = (0,) * (2 * k)
    return cayley_lr(uni, [uni.element(0, e1), uni.element(0, ek1)],
                     [uni.element(1, zero), uni.element(-1, zero)])


def proj_lr_prime(k: int) -> CycleDecomposition:
    """AffLR_2(k) modulo the two block-constant vectors."""
    d1 = tuple(1 if i < k else 0 for i in range(2 * k))
    d2 = tuple(0 if i < k else 1 for i in range(2 * k))
    uni = _block_shift_universe(k, [d1, d2])
    e1 = tuple(1 if i == 0 else 0 for i in range(2 * k))
    ek1 = tuple(1 if i == k else 0 for i in range(2 * k))
    zero = (0,) * (2 * k)
    return cayley_lr(uni, [uni.element(0, e1), uni.element(0, ek1)],
                     [uni.element(1, zero), uni.element(-1, zero)])


def proj_lr_dprime(k: int) -> CycleDecomposition:
    """AffLR_2(k) modulo the all-ones vector."""
    uni = _block_shift_universe(k, [(1,) * (2 * k)])
    e1 = tuple(1 if i == 0 else 0 for i in range(2 * k))
    ek1 = tuple(1 if i == k else 0 for i in range(2 * k))
    zero = (0,) * (2 * k)
    return cayley_lr(uni, [uni.element(0, e1), uni.element(0, ek1)],
                     [uni.element(1, zero), uni.element(-1, zero)])


# ------------------------------------------------------------ bicirculants

def bicirculant_lr(n: int, a: int, b: int, c: int) -> CycleDecomposition:
    """The bicirculant on shifts {0, a, b, c} with green edges using
    shifts 0 and a, red edges using b and c.  A_i is vertex i, B_j is
    vertex n + j."""
    if n < 3:
        raise ParameterError("bicirculant needs n >= 3")
    shifts = [x % n for x in (0, a, b, c)]
    if len(set(shifts)) != 4:
        raise ParameterError("the four shifts must be distinct mod n")
    green_pairs = []
    red_pairs = []
    for i in range(n):
        green_pairs.append((i, n + i))
        green_pairs.append((i, n + (i + shifts[1]) % n))
        red_pairs.append((i, n + (i + shifts[2]) % n))
        red_pairs.append((i, n + (i + shifts[3]) % n))
    base = build_graph(2 * n, green_pairs + red_pairs)
    green_cycles = _trace_cycles(green_pairs)
    red_cycles = _trace_cycles(red_pairs)
    coloring = (GREEN,) * len(green_cycles) + (RED,) * len(red_cycles)
    return CycleDecomposition(base, tuple(green_cycles + red_cycles),
                              coloring)


def bicirculant_family_cases(n: int, a: int, b: int, c: int) -> tuple:
    """Which of the three published bicirculant families (n, a, b, c)
    literally belongs to."""
    a %= n
    b %= n
    c %= n
    cases = []
    if b == 1:
        r = (1 - a) % n
        s = c
        units = {x for x in range(n) if _gcd(x, n) == 1}
        ok = (r in units and s in units
              and r not in (1, (n - 1) % n) and s not in (1, (n - 1) % n)
              and r * r % n == 1 % n and s * s % n == 1 % n
              and r not in (s, (n - s) % n)
              and (r - 1) * (s - 1) % n == 0)
        if ok:
            cases.append(1)
    if n % 2 == 0:
        m = n // 2
        if (a == m and b == 1
                and c not in (1, (n - 1) % n, (m + 1) % n, (m - 1) % n)
                and c * c % n in (1 % n, (m + 1) % n)):
            cases.append(2)
    if n % 4 == 0:
        k = n // 4
        if k >= 3 and a == 2 * k and b == 1 and c == (k + 1) % n:
            cases.append(3)
    return tuple(cases)


def _gcd(x, y):
    while y:
        x, y = y, x % y
    return x


# -------------------------------------------------- stock decompositions

def px_decomposition(n: int, k: int) -> CycleDecomposition:
    """The 4-cycle partition of PX(n, k) whose partial line graph is
    PX(n, k+1): each square joins (i, 0x), (i+1, x0), (i, 1x), (i+1, x1)."""
    from .families import praeger_xu

    base = praeger_xu(n, k)
    size = 1 << k
    top = 1 << (k - 1)
    cycles = []
    for i in range(n):
        for x in range(top):
            nxt = ((i + 1) % n) * size
            cycles.append((i * size + x, nxt + 2 * x,
                           i * size + top + x, nxt + 2 * x + 1))
    return CycleDecomposition(base, tuple(cycles))


def wreath_squares(n: int) -> CycleDecomposition:
    """W(n, 2) cut into its n K_{2,2} squares between consecutive bunches."""
    from .families import wreath

    base = wreath(n, 2)
    cycles = []
    for i in range(n):
        j = (i + 1) % n
        cycles.append((2 * i, 2 * j, 2 * i + 1, 2 * j + 1))
    return CycleDecomposition(base, tuple(cycles))


def torus_decomposition(kind: str, b: int, c: int) -> CycleDecomposition:
    """Horizontal/vertical cycle decomposition of a toroidal graph,
    horizontal cycles red and vertical ones green."""
    from .families import toroidal, torus_grid

    base = toroidal(kind, b, c)
    grid = torus_grid(kind, b, c)
    cycles = []
    for y in range(grid.t):
        cycles.append(tuple(y * grid.r + x for x in range(grid.r)))
    nred = len(cycles)
    seen = set()
    for x0 in range(grid.r):
        if x0 in seen:
            continue
        cyc = []
        x, y = x0, 0
        while True:
            cyc.append(grid.index(x, y))
            if y == 0:
                seen.add(x)
            x, y = grid.reduce(x, y + 1)
            if (x, y) == (x0, 0):
                break
        cycles.append(tuple(cyc))
    coloring = (RED,) * nred + (GREEN,) * (len(cycles) - nred)
    return CycleDecomposition(base, tuple(cycles), coloring)


def msy_lr(m: int, n: int, r: int, t: int) -> CycleDecomposition:
    """MSY(m, n; r, t) with its row edges red and rung edges green."""
    from .families import msy

    base = msy(m, n, r, t)
    r %= n
    t %= n
    rp = [pow(r, i, n) for i in range(m)]
    red_pairs = []
    for i in range(m):
        for j in range(n):
            red_pairs.append((i * n + j, i * n + (j + rp[i]) % n))
    green_pairs = []
    for i in range(m - 1):
        for j in range(n):
            green_pairs.append((i * n + j, (i + 1) * n + j))
    for j in range(n):
        green_pairs.append(((m - 1) * n + j, (j + t) % n))
    red_pairs = sorted({edge_id(u, v) for u, v in red_pairs})
    green_pairs = sorted({edge_id(u, v) for u, v in green_pairs})
    red_cycles = _trace_cycles(red_pairs)
    green_cycles = _trace_cycles(green_pairs)
    cycles = tuple(red_cycles) + tuple(green_cycles)
    coloring = (RED,) * len(red_cycles) + (GREEN,) * len(green_cycles)
    return CycleDecomposition(base, cycles, coloring)


def msy_lr_condition(m: int, n: int, r: int, t: int) -> bool:
    """Arithmetic form of when the MSY coloring is a suitable LR
    structure: 2t = 0 and r^2 = +-1 (mod n)."""
    r %= n
    t %= n
    return 2 * t % n == 0 and r * r % n in (1 % n, (n - 1) % n)


# ------------------------------------------------------ alternating cycles

def alternating_cycles(g: Graph, orient: Orientation) -> CycleDecomposition:
    """Cycle decomposition into alternating cycles: consecutive edges are
    traversed against each other's direction.  The orientation must give
    every vertex even in- and out-degree, neither above two."""
    darts = list(orient.darts)
    if sorted(edge_id(u, v) for u, v in darts) != sorted(g.edges):
        raise ParameterError("orientation does not match the graph's edges")
    dartset = set(darts)
    for v in range(g.n):
        di, do = orient.in_degree(v), orient.out_degree(v)
        if di > 2 or do > 2 or di % 2 or do % 2:
            raise ParameterError(
                f"orientation is not semitransitive at vertex {v}")

    def step(u, v):
        if (u, v) in dartset:
            # moved with the arrow; leave along the other inbound edge
            a, b = orient.in_neighbors(v)
            return (v, b if a == u else a)
        a, b = orient.out_neighbors(v)
        return (v, b if a == u else a)

    used = set()
    cycles = []
    for e in g.edges:
        if e in used:
            continue
        start = e
        cyc = []
        cur = start
        while True:
            cyc.append(cur[0])
            used.add(edge_id(*cur))
            cur = step(*cur)
            if cur == start:
                break
        if len(set(cyc)) != len(cyc):
            raise DegenerateGraphError(
                "an alternating walk revisits a vertex")
        cycles.append(tuple(cyc))
    return CycleDecomposition(g, tuple(cycles))


# ------------------------------------------------------------ name plumbing

def pl_of_name(params) -> Graph:
    """Partial line graph of a named family's canonical decomposition.

    The names registry hands the inner family descriptor through so the
    right decomposition can be chosen; a bare graph has no canonical one.
    """
    fam = params.family
    args = params.args
    if fam == "PX":
        return partial_line_graph(px_decomposition(*args))
    if fam == "W":
        n, k = args
        if k != 2:
            raise ParameterError("only W(n, 2) has the square decomposition")
        return partial_line_graph(wreath_squares(n))
    if fam in ("rot", "angle", "bracket"):
        return partial_line_graph(torus_decomposition(fam, *args))
    if fam == "Br":
        return partial_line_graph(barrel(*args))
    if fam == "MBr":
        return partial_line_graph(barrel(args[0], args[1], args[2],
                                         mutant=True))
    if fam == "SoP":
        return partial_line_graph(sop(*args))
    if fam == "RC":
        return partial_line_graph(rows_and_columns(*args))
    raise ParameterError(f"no canonical cycle decomposition for {fam}")
