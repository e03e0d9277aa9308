"""Arithmetic for a family of 2-groups extended by a dihedral part, given in
normal form x^v z^zeta a^k b^m, plus generic coset graphs and the PPM family.

The x-letters square to 1 and commute except for pairs t apart, whose
commutator is the central involution z.  Conjugation by a shifts x-indices,
conjugation by b reverses them around (t-1)/2, and a^(2t) collapses to z^eps.
Everything below is plain bit arithmetic on that normal form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import ParameterError, UNKNOWN
from .graphs import Graph, build_graph, edge_id

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GtElement:
    """Normal form x^v z^zeta a^ak b^bm inside the group of rank t, sign eps.

    v is a bitmask over x_0..x_{2t-1}; ak is reduced mod 2t.
    """
    t: int
    epsilon: int
    v: int
    zeta: int
    ak: int
    bm: int

    def is_identity(self) -> bool:
        return self.v == 0 and self.zeta == 0 and self.ak == 0 and self.bm == 0

    def sort_key(self):
        return (self.v, self.zeta, self.ak, self.bm)


def gt_identity(t: int, epsilon: int) -> GtElement:
    return GtElement(t, epsilon, 0, 0, 0, 0)


def gt_generators(t: int, epsilon: int) -> dict[str, GtElement]:
    gens = {f"x{i}": GtElement(t, epsilon, 1 << i, 0, 0, 0)
            for i in range(2 * t)}
    gens["z"] = GtElement(t, epsilon, 0, 1, 0, 0)
    gens["a"] = GtElement(t, epsilon, 0, 0, 1, 0)
    gens["b"] = GtElement(t, epsilon, 0, 0, 0, 1)
    return gens


def _conjugate_mask(v: int, t: int, k: int, m: int) -> tuple[int, int]:
    """Image of x^v under conjugation by a^k b^m (as in g x g^-1).

    Returns the new exponent mask and a z-parity: when both members of an
    anticommuting pair are present and the index map inverts their order,
    renormalizing the image costs one z.
    """
    out = 0
    sigma = [0] * (2 * t)
    for j in range(2 * t):
        if v >> j & 1:
            idx = (t - 1 - j) % (2 * t) if m else j
            sigma[j] = (idx - k) % (2 * t)
            out |= 1 << sigma[j]
    zpar = 0
    for j in range(t):
        if v >> j & 1 and v >> (t + j) & 1 and sigma[j] > sigma[t + j]:
            zpar ^= 1
    return out, zpar


def gt_multiply(p: GtElement, q: GtElement) -> GtElement:
    if p.t != q.t or p.epsilon != q.epsilon:
        raise ParameterError("elements from different groups")
    t = p.t
    two_t = 2 * t
    w, zconj = _conjugate_mask(q.v, t, p.ak, p.bm)
    # sorting x^v x^w into ascending normal form passes x_{t+j} over x_j
    lowmask = (1 << t) - 1
    zeta = p.zeta ^ q.zeta ^ zconj ^ (
        bin((p.v >> t) & w & lowmask).count("1") & 1)
    e = p.ak + (-q.ak if p.bm else q.ak)
    ak = e % two_t
    if (e - ak) // two_t % 2:
        zeta ^= p.epsilon
    return GtElement(t, p.epsilon, p.v ^ w, zeta, ak, p.bm ^ q.bm)


def gt_inverse(p: GtElement) -> GtElement:
    # involution-heavy group; a has order 2t or 4t, so walk the cheap way
    q = gt_identity(p.t, p.epsilon)
    last = q
    while True:
        nxt = gt_multiply(last, p)
        if nxt.is_identity():
            return last
        last = nxt


def gt_elements(t: int, epsilon: int) -> list[GtElement]:
    """All t * 2^(2t+3) elements, sorted by normal form."""
    out = [GtElement(t, epsilon, v, zeta, ak, bm)
           for v in range(1 << (2 * t))
           for zeta in range(2)
           for ak in range(2 * t)
           for bm in range(2)]
    out.sort(key=GtElement.sort_key)
    return out


def gt_order(t: int) -> int:
    return t * 2 ** (2 * t + 3)


# -- generic coset graphs -----------------------------------------------------

@dataclass
class CosetGraphSpec:
    """Right cosets of a finite group, joined by a connecting element.

    elements: full enumeration of the group; multiply: the group operation;
    in_subgroup: membership test for H; connector: the element a.
    """
    elements: Sequence
    multiply: Callable
    in_subgroup: Callable
    connector: object


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def coset_graph(spec: CosetGraphSpec) -> Graph:
    """Vertices Hg, edges {Hg, Hag}; parallel edges and loops are dropped
    with a logged note.  Raises if the connector lies in H."""
    if spec.in_subgroup(spec.connector):
        raise ParameterError("connecting element lies in the subgroup")
    elems = list(spec.elements)
    index = {e: i for i, e in enumerate(elems)}
    subgroup = [e for e in elems if spec.in_subgroup(e)]
    uf = _UnionFind(len(elems))
    seen = [False] * len(elems)
    for i, g in enumerate(elems):
        if seen[uf.find(i)]:
            continue
        for h in subgroup:
            j = index[spec.multiply(h, g)]
            uf.union(i, j)
            seen[uf.find(i)] = True
    roots = sorted({uf.find(i) for i in range(len(elems))})
    coset_id = {root: c for c, root in enumerate(roots)}
    edges = []
    loops = 0
    for i, g in enumerate(elems):
        u = coset_id[uf.find(i)]
        w = coset_id[uf.find(index[spec.multiply(spec.connector, g)])]
        if u == w:
            loops += 1
        else:
            edges.append(edge_id(u, w))
    distinct = set(edges)
    if loops:
        log.warning("coset graph: dropped %d loop darts", loops)
    if len(edges) != len(distinct):
        log.warning("coset graph: %d darts collapsed onto %d simple edges",
                    len(edges), len(distinct))
    return build_graph(len(roots), distinct)


# -- the PPM family -----------------------------------------------------------

def ppm(t: int, epsilon: int) -> Graph:
    """Coset graph of the rank-t group over H = <x_0..x_{t-1}, b> with
    connector a; t * 2^(t+2) vertices."""
    if t < 2:
        raise ParameterError("ppm needs t >= 2")
    if t > 6:
        raise ParameterError("ppm supported for t <= 6")
    if epsilon not in (0, 1):
        raise ParameterError("epsilon is a bit")
    highmask = ((1 << (2 * t)) - 1) ^ ((1 << t) - 1)

    def in_h(e: GtElement) -> bool:
        return e.ak == 0 and e.zeta == 0 and not e.v & highmask

    spec = CosetGraphSpec(gt_elements(t, epsilon), gt_multiply, in_h,
                          gt_generators(t, epsilon)["a"])
    g = coset_graph(spec)
    if g.n != t * 2 ** (t + 2):
        raise ParameterError(f"ppm vertex count {g.n} off the closed form")
    return g


# -- covering maps ------------------------------------------------------------

def covering_map(cover: Graph, base: Graph, fold: int,
                 node_budget: int = 1_000_000):
    """A fold-to-1 covering projection found by backtracking, None when the
    exhaustive search rules one out, UNKNOWN when the budget ran dry.

    Compare the result with ``is UNKNOWN`` before treating it as a map."""
    if cover.n != fold * base.n or base.n == 0:
        return None
    if sorted(cover.degree(v) for v in range(cover.n)) != sorted(
            base.degree(v) for v in range(base.n)) * fold:
        return None

    order = []
    seen = [False] * cover.n
    for start in range(cover.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in cover.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    phi = [-1] * cover.n
    load = [0] * base.n
    budget = [node_budget]

    def consistent(u: int) -> bool:
        # mapped neighbors of u must have distinct, adjacent images, and
        # u must not collide with a sibling inside any neighbor's fiber view
        images = []
        for w in cover.neighbors(u):
            if phi[w] < 0:
                continue
            if not base.has_edge(phi[u], phi[w]):
                return False
            images.append(phi[w])
            for w2 in cover.neighbors(w):
                if w2 != u and phi[w2] == phi[u]:
                    return False
        return len(images) == len(set(images))

    def place(u: int, img: int) -> bool:
        phi[u] = img
        load[img] += 1
        if load[img] <= fold and consistent(u):
            return True
        load[img] -= 1
        phi[u] = -1
        return False

    def search(pos: int) -> Optional[bool]:
        if pos == len(order):
            return True
        if budget[0] <= 0:
            return None
        u = order[pos]
        anchored = [phi[w] for w in cover.neighbors(u) if phi[w] >= 0]
        candidates = base.neighbors(anchored[0]) if anchored \
            else range(base.n)
        for img in candidates:
            budget[0] -= 1
            if place(u, img):
                sub = search(pos + 1)
                if sub:
                    return True
                load[img] -= 1
                phi[u] = -1
                if sub is None:
                    return None
        return False

    result = search(0)
    if result is None:
        return UNKNOWN
    return list(phi) if result else None


def is_double_cover(cover: Graph, base: Graph, node_budget: int = 1_000_000):
    """2-to-1 covering projection, or None / UNKNOWN."""
    return covering_map(cover, base, 2, node_budget)
