"""Edge-symmetry taxonomy for tetravalent graphs.

A connected graph lands in exactly one class: dart-transitive,
half-arc-transitive (edge- and vertex- but not dart-transitive),
semisymmetric (edge- but not vertex-transitive), LR (vertex-transitive
with two edge orbits forming a suitable decomposition), bi-transitive
without being any of those, or none of the above.  Alongside the tag the
report carries orbit counts, a semitransitive orientation when one comes
straight from a dart orbit, and the consistent-cycle analysis.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import BudgetExceededError, ParameterError
from .graphs import Graph, Orientation, bipartition, edge_id, is_connected
from .lr import GREEN, RED, CycleDecomposition, check_suitable_lr, _trace_cycles
from .perms import Perm, PermGroup
from .symmetry import DEFAULT_NODE_BUDGET, automorphism_group

logger = logging.getLogger("tetraforge.classify")

DART_TRANSITIVE = "dart-transitive"
HALF_ARC_TRANSITIVE = "half-arc-transitive"
SEMISYMMETRIC = "semisymmetric"
BI_TRANSITIVE = "bi-transitive"
LR = "LR"
NONE = "none"
UNCLASSIFIED = "unclassified"

TAGS = (DART_TRANSITIVE, HALF_ARC_TRANSITIVE, SEMISYMMETRIC, BI_TRANSITIVE,
        LR, NONE, UNCLASSIFIED)

# consistent-cycle search is skipped above this group order
CYCLE_SEARCH_ORDER_CAP = 10 ** 12


@dataclass(frozen=True)
class ConsistentCycles:
    """Orbits of consistent oriented cycles.

    count is the number of orbits, lengths the multiset of their cycle
    lengths, representatives one anchored cycle per orbit.  complete is
    False when a budget cut the search short, in which case the other
    fields are lower bounds.
    """

    count: int
    lengths: tuple[int, ...]
    representatives: tuple[tuple[int, ...], ...]
    complete: bool


@dataclass(frozen=True)
class SymmetryReport:
    n: int
    aut_order: Optional[int]
    vertex_orbits: Optional[int]
    edge_orbits: Optional[int]
    dart_orbits: Optional[int]
    tag: str
    bipartite: bool
    worthy: bool
    vertex_stabilizer_order: Optional[int]
    semitransitive_orientation: Optional[Orientation]
    consistent_cycles: Optional[ConsistentCycles]

    @property
    def edge_transitive(self) -> bool:
        return self.edge_orbits == 1

    @property
    def vertex_transitive(self) -> bool:
        return self.vertex_orbits == 1


def is_worthy(g: Graph) -> bool:
    """True unless two vertices have exactly the same neighbors."""
    seen = set()
    for v in range(g.n):
        key = tuple(sorted(g.neighbors(v)))
        if key in seen:
            return False
        seen.add(key)
    return True


def two_orbit_decomposition(g: Graph, group: Optional[PermGroup] = None,
                            node_budget: int = DEFAULT_NODE_BUDGET
                            ) -> Optional[CycleDecomposition]:
    """The edge-orbit coloring of a two-edge-orbit graph as a colored
    cycle decomposition, or None when either orbit fails to be a union
    of cycles."""
    G = group if group is not None else automorphism_group(
        g, node_budget=node_budget)
    orbs = G.edge_orbits(g.edges)
    if len(orbs) != 2:
        raise ParameterError("graph does not have exactly two edge orbits")
    orbs.sort(key=min)
    cycles: list[tuple[int, ...]] = []
    coloring: list[str] = []
    for cls, color in zip(orbs, (RED, GREEN)):
        touched = [0] * g.n
        for u, v in cls:
            touched[u] += 1
            touched[v] += 1
        if any(d != 2 for d in touched):
            return None
        traced = _trace_cycles(sorted(edge_id(u, v) for u, v in cls))
        cycles.extend(traced)
        coloring.extend([color] * len(traced))
    return CycleDecomposition(g, tuple(cycles), tuple(coloring))


def classify(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET,
             with_cycles: bool = True) -> SymmetryReport:
    """Full symmetry report for a connected graph."""
    if not is_connected(g):
        raise ParameterError("classification needs a connected graph")
    bip = bipartition(g) is not None
    worthy = is_worthy(g)
    try:
        G = automorphism_group(g, node_budget=node_budget)
    except BudgetExceededError:
        logger.warning("automorphism search out of budget on n=%d", g.n)
        return SymmetryReport(g.n, None, None, None, None, UNCLASSIFIED,
                              bip, worthy, None, None, None)

    vorbs = G.vertex_orbits()
    nv = len(vorbs)
    ne = len(G.edge_orbits(g.edges))
    darts = g.darts()
    dorbs = G.dart_orbits(darts)
    nd = len(dorbs)
    aut = G.order()
    stab = G.point_stabilizer((0,)).order()

    orientation = None
    if nd == 1:
        tag = DART_TRANSITIVE
    elif ne == 1 and nv == 1:
        tag = HALF_ARC_TRANSITIVE
        # the two dart orbits are mutual reverses; report the one holding
        # the smallest dart
        orientation = Orientation(min(dorbs, key=min), base=g)
    elif ne == 1:
        tag = SEMISYMMETRIC
    else:
        tag = ""
        if nv == 1 and ne == 2:
            cd = two_orbit_decomposition(g, group=G)
            if cd is not None:
                verdict = check_suitable_lr(cd, node_budget=node_budget)
                if verdict.suitable:
                    tag = LR
                elif verdict.suitable is None:
                    tag = UNCLASSIFIED
        if not tag:
            # the color-preserving group of a bipartition sits inside the
            # full group, so a graph that is not edge-transitive cannot be
            # bi-transitive; the tag stays for the sake of the schema
            tag = NONE

    cycles = None
    if (with_cycles and nv == 1 and tag != UNCLASSIFIED
            and aut <= CYCLE_SEARCH_ORDER_CAP):
        try:
            cycles = consistent_cycles(g, group=G, node_budget=node_budget)
        except BudgetExceededError:
            cycles = None

    return SymmetryReport(g.n, aut, nv, ne, nd, tag, bip, worthy, stab,
                          orientation, cycles)


# -------------------------------------------------------- consistent cycles

def _anchored_consistent_cycles(G: PermGroup, u: int, v: int,
                                node_limit: int) -> tuple[list, bool]:
    """Every consistent oriented cycle whose first dart is (u, v), as
    (cycle, shunt) pairs.

    A path (c0, .., ck) is grown while some group element shifts it one
    step along itself.  The witnesses of a fixed path form a coset of the
    pointwise stabilizer of all but its endpoint, so the legal extensions
    are the image, under one witness, of that stabilizer's orbit of the
    endpoint; tracking a witness per orbit point keeps the walk cheap.
    """
    sigma0 = G.transporter((u,), (v,))
    if sigma0 is None:
        return [], True
    cycles = []
    complete = True
    nodes = 0
    stack: list[tuple[tuple[int, ...], Perm]] = [((u, v), sigma0)]
    while stack:
        path, sigma = stack.pop()
        nodes += 1
        if nodes > node_limit:
            complete = False
            break
        stab = G.point_stabilizer(path[:-1])
        end = path[-1]
        witness = {end: Perm.identity(G.degree)}
        frontier = [end]
        while frontier:
            x = frontier.pop()
            for gen in stab.generators:
                y = gen(x)
                if y not in witness:
                    witness[y] = witness[x] * gen
                    frontier.append(y)
        for t in sorted(witness):
            nxt = sigma(t)
            shift = witness[t] * sigma
            if nxt == path[0]:
                # shift rotates the whole cycle one step: a shunt
                if len(path) >= 3:
                    cycles.append((path, shift))
                continue
            if nxt in path:
                continue
            stack.append((path + (nxt,), shift))
    return cycles, complete


def consistent_cycles(g: Graph, group: Optional[PermGroup] = None,
                      node_budget: int = DEFAULT_NODE_BUDGET,
                      node_limit: int = 20000) -> ConsistentCycles:
    """Orbits of consistent oriented cycles of a vertex-transitive graph.

    Cycles are collected per dart orbit (consecutive darts of a consistent
    cycle are equivalent, so each cycle lives on a single orbit), anchored
    at the orbit's smallest dart, and deduplicated under the stabilizer of
    that dart.  Mutually-reversed pairs of dart orbits are counted once,
    so a dart-transitive graph reports every orbit while a graph with a
    preserved orientation reports one family per mirrored pair.
    """
    G = group if group is not None else automorphism_group(
        g, node_budget=node_budget)
    if not G.is_transitive():
        raise ParameterError("consistent cycles need vertex-transitivity")
    orbs = G.dart_orbits(g.darts())
    where = {}
    for i, orb in enumerate(orbs):
        for d in orb:
            where[d] = i
    reps = []
    complete = True
    done: set[int] = set()
    for i, orb in enumerate(orbs):
        if i in done:
            continue
        u, v = min(orb)
        # the reverse of a consistent cycle is consistent, so the orbit
        # holding the reversed darts repeats this family mirrored
        done.add(i)
        done.add(where[(v, u)])
        try:
            found, ok = _anchored_consistent_cycles(G, u, v, node_limit)
        except BudgetExceededError:
            complete = False
            continue
        complete = complete and ok
        if not found:
            continue
        stab = G.point_stabilizer((u, v))

        def act(arr, item):
            return tuple(int(arr[x]) for x in item)

        for cls in stab.orbits_on([c for c, _ in found], act):
            reps.append(min(cls))
    reps.sort(key=lambda c: (len(c), c))
    return ConsistentCycles(count=len(reps),
                            lengths=tuple(sorted(len(c) for c in reps)),
                            representatives=tuple(reps),
                            complete=complete)


# --------------------------------------------------- orientations, helpers

def _random_element(gens: list[Perm], rng: random.Random) -> Perm:
    p = rng.choice(gens)
    for _ in range(rng.randrange(1, 6)):
        p = p * rng.choice(gens)
    return p


def _small_generating_set(G: PermGroup, gens: list[Perm],
                          tries: int = 30) -> list[Perm]:
    if len(gens) <= 4:
        return gens
    rng = random.Random(2141)
    order = G.order()
    for k in (2, 3, 4):
        for _ in range(tries):
            cand = [_random_element(gens, rng) for _ in range(k)]
            if PermGroup(cand, degree=G.degree).order() == order:
                return cand
    return gens


def _index_two_subgroups(G: PermGroup) -> Iterator[PermGroup]:
    """Subgroups of index two, via sign assignments on a generating set.

    Every index-two subgroup is the kernel of a map onto a group of order
    two; running over all nonzero sign patterns and keeping the generated
    subgroup exactly when its index is two enumerates them all.
    """
    gens = [p for p in G.generators if not p.is_identity()]
    if not gens:
        return
    gens = _small_generating_set(G, gens)
    k = len(gens)
    if k > 10:
        logger.warning("index-two scan skipped: %d generators", k)
        return
    order = G.order()
    for mask in range(1, 1 << k):
        bits = [(mask >> i) & 1 for i in range(k)]
        t = next(s for s, b in zip(gens, bits) if b)
        tinv = t.inverse()
        sub = []
        for s, b in zip(gens, bits):
            if b:
                sub.append(s * tinv)
                sub.append(t * s)
            else:
                sub.append(s)
                sub.append(t * s * tinv)
        H = PermGroup(sub, degree=G.degree)
        if 2 * H.order() == order:
            yield H


def _descend_index_two(G: PermGroup, depth: int,
                       cap: int = 80) -> Iterator[PermGroup]:
    """G and subgroups reached by chains of index-two steps, at most
    depth long, deduplicated exactly."""
    kept: list[PermGroup] = []

    def known(H: PermGroup) -> bool:
        for K in kept:
            if K.order() == H.order() and all(K.contains(p)
                                              for p in H.generators):
                return True
        return False

    level = [G]
    yield G
    for _ in range(depth):
        nxt = []
        for P in level:
            for H in _index_two_subgroups(P):
                if len(kept) >= cap:
                    logger.warning("index-two descent hit the %d-subgroup "
                                   "cap", cap)
                    return
                if known(H):
                    continue
                kept.append(H)
                nxt.append(H)
                yield H
        level = nxt


def _set_stabilizer(G: PermGroup, dartset: frozenset,
                    orbit_cap: int = 20000) -> Optional[PermGroup]:
    """Setwise stabilizer of a dart set, by Schreier generators along the
    orbit of the set.  None when the orbit outgrows the cap."""
    witness = {dartset: Perm.identity(G.degree)}
    frontier = [dartset]
    gens = []
    while frontier:
        cur = frontier.pop()
        wc = witness[cur]
        for p in G.generators:
            img = frozenset((p(x), p(y)) for x, y in cur)
            w = wc * p
            if img not in witness:
                if len(witness) > orbit_cap:
                    return None
                witness[img] = w
                frontier.append(img)
            else:
                cand = w * witness[img].inverse()
                if not cand.is_identity():
                    gens.append(cand)
    return PermGroup(gens, degree=G.degree,
                     known_order=G.order() // len(witness))


def _orientation_of(H: PermGroup, darts: list, g: Graph
                    ) -> Optional[Orientation]:
    """The orientation carried by H when its dart orbits are exactly two
    mutually-reversed halves."""
    if not H.is_transitive():
        return None
    dorbs = H.dart_orbits(darts)
    if len(dorbs) != 2:
        return None
    a, b = (set(o) for o in dorbs)
    if {(y, x) for x, y in a} != b:
        return None
    return Orientation(min(dorbs, key=min), base=g)


def semitransitive_orientation(g: Graph, group: Optional[PermGroup] = None,
                               node_budget: int = DEFAULT_NODE_BUDGET,
                               depth: int = 3) -> Optional[Orientation]:
    """An orientation preserved by a vertex- and edge-transitive group.

    The full group supplies one directly when it has two paired dart
    orbits.  Failing that, two bounded searches run: subgroups reached by
    chains of up to depth index-two steps, and subgroups generated by one
    or two shunts of consistent cycles, whose dart orbits are assembled
    into candidate orientations and stabilized.  The two mutually-reversed
    solutions are reported once, as the side holding the smallest dart.
    None when the searches find nothing; a preserving group outside their
    reach is not found.
    """
    G = group if group is not None else automorphism_group(
        g, node_budget=node_budget)
    if not G.is_transitive():
        return None
    darts = g.darts()

    for H in _descend_index_two(G, depth):
        found = _orientation_of(H, darts, g)
        if found is not None:
            return found

    return _shunt_orientation_search(G, darts, g)


def _shunt_orientation_search(G: PermGroup, darts: list, g: Graph,
                              pair_cap: int = 60) -> Optional[Orientation]:
    """Candidate orientations from shunt-generated subgroups.

    A preserving group acts transitively on the orientation's darts, so
    the orientation is a union of dart orbits of any of its subgroups.
    Shunts of consistent cycles are natural members; subgroups generated
    by one or two of them that act vertex-transitively supply orbit
    unions to test, each stabilized in the full group and kept when the
    stabilizer is vertex-transitive and moves the union transitively.
    """
    shunts: list[Perm] = []
    for orb in G.dart_orbits(darts):
        u, v = min(orb)
        try:
            found, _ = _anchored_consistent_cycles(G, u, v, 4000)
        except BudgetExceededError:
            continue
        for _, shift in found:
            if all(shift != s for s in shunts):
                shunts.append(shift)
    pools = [[s] for s in shunts]
    pairs = 0
    for i in range(len(shunts)):
        for j in range(i + 1, len(shunts)):
            if pairs >= pair_cap:
                break
            pools.append([shunts[i], shunts[j]])
            pairs += 1
    tried: set[frozenset] = set()
    for pool in pools:
        M = PermGroup(pool, degree=G.degree)
        if not M.is_transitive():
            continue
        morbs = [frozenset(o) for o in M.dart_orbits(darts)]
        if len(morbs) > 12:
            continue
        nedges = len(darts) // 2
        for k in range(1, len(morbs) + 1):
            for pick in _orbit_unions(morbs, k, nedges):
                if pick in tried:
                    continue
                tried.add(pick)
                if not _is_balanced_orientation(pick, g):
                    continue
                # a preserving group moves the orientation's darts
                # transitively, so its index is bounded by |G| / |E|
                S = _set_stabilizer(G, pick,
                                    orbit_cap=G.order() // nedges + 1)
                if S is None or not S.is_transitive():
                    continue
                sorbs = S.dart_orbits(darts)
                if len(sorbs) == 2 and frozenset(sorbs[0]) in (
                        pick, frozenset((y, x) for x, y in pick)):
                    return Orientation(sorted(pick), base=g)
    return None


def _orbit_unions(morbs: list, k: int, nedges: int) -> Iterator[frozenset]:
    """Unions of k dart orbits totalling nedges darts."""
    for combo in combinations(range(len(morbs)), k):
        if sum(len(morbs[i]) for i in combo) != nedges:
            continue
        union: set = set()
        for i in combo:
            union |= morbs[i]
        yield frozenset(union)


def _is_balanced_orientation(dartset: frozenset, g: Graph) -> bool:
    outd = [0] * g.n
    ind = [0] * g.n
    for u, v in dartset:
        if (v, u) in dartset:
            return False
        outd[u] += 1
        ind[v] += 1
    if len(dartset) != g.num_edges:
        return False
    half = None
    for v in range(g.n):
        if half is None:
            half = outd[v]
        if outd[v] != half or ind[v] != half:
            return False
    return True


def bi_transitive_check(g: Graph,
                        node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Whether the group preserving the bipartition classes is transitive
    on edges.  False for non-bipartite input."""
    parts = bipartition(g)
    if parts is None:
        logger.info("bi-transitivity fails: graph is not bipartite")
        return False
    colors = [0] * g.n
    for v in parts[1]:
        colors[v] = 1
    H = automorphism_group(g, colors=colors, node_budget=node_budget)
    return len(H.edge_orbits(g.edges)) == 1


def s_arc_transitive(g: Graph, s: int, group: Optional[PermGroup] = None,
                     node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Transitivity on s-arcs: walks of length s with no immediate
    backtracking."""
    if s < 0:
        raise ParameterError("s must be nonnegative")
    G = group if group is not None else automorphism_group(
        g, node_budget=node_budget)
    arcs: list[tuple[int, ...]] = [(v,) for v in range(g.n)]
    for _ in range(s):
        arcs = [a + (w,) for a in arcs for w in g.neighbors(a[-1])
                if len(a) < 2 or w != a[-2]]
    if not arcs:
        return False
    base = min(arcs)
    seen = {base}
    frontier = [base]
    garr = [p.a for p in G.generators]
    while frontier:
        cur = frontier.pop()
        for arr in garr:
            img = tuple(int(arr[x]) for x in cur)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return len(seen) == len(arcs)
