"""Canonical forms, automorphism groups, and isomorphism testing.

The engine is an individualization-refinement search: refine to the coarsest
equitable partition, individualize a vertex from the first largest
non-singleton cell (lowest vertex index first), and recurse.  Branches are
pruned by the refinement trace (a per-level invariant) and by orbits of the
automorphisms discovered at leaves.  The canonical labeling is the leaf
maximizing (trace path, certificate bytes); every leaf tying the first or
the best leaf contributes a generator, which yields the full automorphism
group.

Certificates are versioned bytes: header (version, n), the vertex colors in
canonical order, then the packed upper triangle of the relabeled adjacency
matrix.  Equal certificates mean isomorphic (colored) graphs, byte for byte.
"""

from __future__ import annotations

import hashlib
import math
import sys
from typing import Optional, Sequence

import numpy as np

from ._kernel import cert_bytes, compose, invert, orbit_partition, refine
from .errors import BudgetExceededError, ParameterError
from .graphs import Graph
from .perms import Perm, PermGroup

CERT_VERSION = 1
DEFAULT_NODE_BUDGET = 10_000_000


class CanonicalForm:
    """Certificate bytes plus the labeling that produced them."""

    __slots__ = ("certificate", "labeling", "hash64")

    def __init__(self, certificate: bytes, labeling: Perm):
        self.certificate = certificate
        self.labeling = labeling
        self.hash64 = int.from_bytes(
            hashlib.blake2b(certificate, digest_size=8).digest(), "big")

    def __eq__(self, other):
        return (isinstance(other, CanonicalForm)
                and self.certificate == other.certificate)

    def __hash__(self):
        return self.hash64

    def __repr__(self):
        return f"CanonicalForm(hash64={self.hash64:#018x})"


class SymmetryAnalysis:
    """Canonical form and automorphism group from one search run."""

    __slots__ = ("canonical", "group")

    def __init__(self, canonical: CanonicalForm, group: PermGroup):
        self.canonical = canonical
        self.group = group


def _normalize_colors(n: int, colors) -> np.ndarray:
    if colors is None:
        return np.zeros(n, dtype=np.int32)
    colors = list(colors)
    if len(colors) != n:
        raise ParameterError("color list length differs from vertex count")
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    return np.array([rank[c] for c in colors], dtype=np.int32)


class _IRSearch:
    def __init__(self, g: Graph, colors, node_budget: int):
        self.n = g.n
        self.indptr, self.indices = g.csr()
        self.adj = np.zeros((g.n, g.n), dtype=bool)
        for u, v in g.edges:
            self.adj[u, v] = True
            self.adj[v, u] = True
        self.root_colors = _normalize_colors(g.n, colors)
        self.budget = node_budget
        self.nodes = 0
        self.gens: list[np.ndarray] = []
        self.first_traces: list[tuple] = []
        self.first_lab: Optional[np.ndarray] = None
        self.first_cert: Optional[bytes] = None
        self.best_traces: list[tuple] = []
        self.best_lab: Optional[np.ndarray] = None
        self.best_cert: Optional[bytes] = None

    def run(self) -> tuple[bytes, np.ndarray, list[np.ndarray]]:
        colors, ncells, trace = refine(
            self.n, self.indptr, self.indices, self.root_colors, None)
        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 4 * self.n + 100))
        try:
            self._visit(colors, ncells, 0, [], True, True)
        finally:
            sys.setrecursionlimit(old_limit)
        cert = self._full_cert(self.best_cert, self.best_lab)
        return cert, self.best_lab, self.gens

    def _full_cert(self, adj_cert: bytes, lab: np.ndarray) -> bytes:
        header = bytes([CERT_VERSION]) + self.n.to_bytes(4, "big")
        color_seq = self.root_colors[invert(lab)].astype(">u4").tobytes()
        return header + color_seq + adj_cert

    def _leaf(self, colors: np.ndarray, on_first: bool, best_track: bool):
        lab = colors.astype(np.int32)
        cert = cert_bytes(self.adj, lab)
        if self.first_cert is None:
            self.first_lab = lab
            self.first_cert = cert
            self.best_lab = lab
            self.best_cert = cert
            return
        if on_first and cert == self.first_cert:
            self._add_automorphism(self.first_lab, lab)
        if best_track:
            if self.best_cert is None or cert > self.best_cert:
                self.best_lab = lab
                self.best_cert = cert
            elif cert == self.best_cert:
                self._add_automorphism(self.best_lab, lab)

    def _add_automorphism(self, lab_a: np.ndarray, lab_b: np.ndarray):
        pi = compose(lab_a, invert(lab_b))
        if not (pi == np.arange(self.n, dtype=np.int32)).all():
            self.gens.append(pi)

    def _visit(self, colors: np.ndarray, ncells: int, depth: int,
               path: list[int], on_first: bool, best_track: bool):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"symmetry search exceeded {self.budget} nodes")
        if ncells == self.n:
            self._leaf(colors, on_first, best_track)
            return
        sizes = np.bincount(colors, minlength=ncells)
        masked = np.where(sizes >= 2, sizes, 0)
        cstar = int(np.argmax(masked))
        members = np.nonzero(colors == cstar)[0]

        explored: list[int] = []
        orbit_labels = None
        gens_seen = -1
        path_arr = np.array(path, dtype=np.int32)
        for v in members:
            v = int(v)
            if explored:
                if len(self.gens) != gens_seen:
                    sel = [g for g in self.gens
                           if len(path_arr) == 0
                           or (g[path_arr] == path_arr).all()]
                    orbit_labels = orbit_partition(self.n, sel)
                    gens_seen = len(self.gens)
                if orbit_labels is not None:
                    lv = orbit_labels[v]
                    if any(orbit_labels[u] == lv for u in explored):
                        continue
            child = colors.copy()
            child[colors >= cstar] += 1
            child[v] = cstar
            ref_colors, ref_ncells, trace = refine(
                self.n, self.indptr, self.indices, child, [cstar])
            trace = tuple(trace)

            child_on_first = False
            if self.first_cert is None:
                # leftmost descent: record the reference trace path
                self.first_traces.append(trace)
                child_on_first = True
            elif on_first and trace == self.first_traces[depth]:
                child_on_first = True

            child_best = False
            if best_track:
                if depth == len(self.best_traces):
                    # frontier after a truncation: this path defines best
                    self.best_traces.append(trace)
                    child_best = True
                else:
                    ref = self.best_traces[depth]
                    if trace > ref:
                        self.best_traces[depth] = trace
                        del self.best_traces[depth + 1:]
                        self.best_cert = None
                        self.best_lab = None
                        child_best = True
                    elif trace == ref:
                        child_best = True

            if child_on_first or child_best:
                path.append(v)
                self._visit(ref_colors, ref_ncells, depth + 1, path,
                            child_on_first, child_best)
                path.pop()
            explored.append(v)


def _twin_classes(g: Graph, base: np.ndarray) -> list[list[int]]:
    """Maximal sets of same-colored vertices with equal open neighborhoods."""
    buckets: dict[tuple, list[int]] = {}
    for v in range(g.n):
        buckets.setdefault((int(base[v]), g.neighbors(v)), []).append(v)
    return sorted(buckets.values(), key=lambda c: c[0])


def _analyze_twins(g: Graph, base: np.ndarray, classes: list[list[int]],
                   node_budget: int) -> SymmetryAnalysis:
    """Collapse open-twin classes, analyze the quotient, lift the result.

    Members of a class are interchangeable (equal neighborhoods, equal
    colors), so Aut(g) is the extension of the colored quotient's group by
    the direct product of the symmetric groups on the classes, and a
    canonical labeling of g reads off the quotient's.
    """
    k = len(classes)
    class_of = np.empty(g.n, dtype=np.int64)
    for ci, members in enumerate(classes):
        for v in members:
            class_of[v] = ci
    qedges = set()
    for ci, members in enumerate(classes):
        for w in g.neighbors(members[0]):
            cj = int(class_of[w])
            if ci < cj:
                qedges.add((ci, cj))
    q = Graph(k, sorted(qedges))
    qcolors = [(int(base[members[0]]), len(members)) for members in classes]
    sub = _analyze(q, qcolors, node_budget)

    # canonical order: classes by quotient position, members by index
    qlab = sub.canonical.labeling.a
    order_cls = sorted(range(k), key=lambda ci: int(qlab[ci]))
    lab = np.empty(g.n, dtype=np.int32)
    pos = 0
    for ci in order_cls:
        for v in classes[ci]:
            lab[v] = pos
            pos += 1
    adj = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges:
        adj[u, v] = True
        adj[v, u] = True
    header = bytes([CERT_VERSION]) + g.n.to_bytes(4, "big")
    color_seq = base[invert(lab)].astype(">u4").tobytes()
    cert = header + color_seq + cert_bytes(adj, lab)

    gens: list[Perm] = []
    ident = np.arange(g.n, dtype=np.int32)
    for qg in sub.group.generators:
        pi = ident.copy()
        for ci, members in enumerate(classes):
            image = classes[int(qg.a[ci])]
            for a, b in zip(members, image):
                pi[a] = b
        gens.append(Perm(pi))
    for members in classes:
        for a, b in zip(members, members[1:]):
            pi = ident.copy()
            pi[a], pi[b] = b, a
            gens.append(Perm(pi))
    order = sub.group.order()
    for members in classes:
        order *= math.factorial(len(members))
    group = PermGroup(gens, degree=g.n, known_order=order)
    return SymmetryAnalysis(CanonicalForm(cert, Perm(lab)), group)


def _analyze(g: Graph, colors=None,
             node_budget: int = DEFAULT_NODE_BUDGET) -> SymmetryAnalysis:
    if g.n == 0:
        cert = bytes([CERT_VERSION]) + (0).to_bytes(4, "big")
        return SymmetryAnalysis(CanonicalForm(cert, Perm.identity(0)),
                                PermGroup([], degree=0))
    base = _normalize_colors(g.n, colors)
    classes = _twin_classes(g, base)
    if len(classes) < g.n:
        return _analyze_twins(g, base, classes, node_budget)
    search = _IRSearch(g, colors, node_budget)
    cert, lab, gens = search.run()
    canonical = CanonicalForm(cert, Perm(lab))
    group = PermGroup([Perm(p) for p in gens], degree=g.n)
    return SymmetryAnalysis(canonical, group)


def analyze(g: Graph, colors=None,
            node_budget: int = DEFAULT_NODE_BUDGET) -> SymmetryAnalysis:
    """Canonical form and automorphism group in one search."""
    return _analyze(g, colors, node_budget)


def canonical_form(g: Graph, colors=None,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> CanonicalForm:
    return _analyze(g, colors, node_budget).canonical


def automorphism_group(g: Graph, colors=None,
                       node_budget: int = DEFAULT_NODE_BUDGET) -> PermGroup:
    return _analyze(g, colors, node_budget).group


def are_isomorphic(g1: Graph, g2: Graph, colors1=None, colors2=None,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != \
            sorted(g2.degree(v) for v in range(g2.n)):
        return False
    c1 = canonical_form(g1, colors1, node_budget)
    c2 = canonical_form(g2, colors2, node_budget)
    return c1.certificate == c2.certificate


def isomorphism(g1: Graph, g2: Graph,
                node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[Perm]:
    """An explicit vertex bijection g1 -> g2, or None."""
    if g1.n != g2.n:
        return None
    c1 = canonical_form(g1, node_budget=node_budget)
    c2 = canonical_form(g2, node_budget=node_budget)
    if c1.certificate != c2.certificate:
        return None
    mapping = compose(c1.labeling.a, invert(c2.labeling.a))
    for u, v in g1.edges:
        if not g2.has_edge(int(mapping[u]), int(mapping[v])):
            raise AssertionError("certificate collision without isomorphism")
    return Perm(mapping)


def extend_to_automorphism(g: Graph, src: Sequence[int], dst: Sequence[int],
                           colors=None,
                           node_budget: int = DEFAULT_NODE_BUDGET
                           ) -> Optional[Perm]:
    """An automorphism of g with src[i] -> dst[i] for every i, or None.

    Exact: pins become singleton colors on top of ``colors`` and the two
    colored canonical forms are compared, so a None return proves no such
    automorphism exists.  Pinning the same vertex twice is fine as long as
    the images agree.
    """
    if len(src) != len(dst):
        raise ParameterError("src and dst pin lists differ in length")
    base = _normalize_colors(g.n, colors)
    pin_a: dict[int, int] = {}
    pin_b: dict[int, int] = {}
    for i, (u, v) in enumerate(zip(src, dst)):
        prev = pin_a.get(u)
        if prev is not None:
            if dst[prev] != v:
                return None
            continue
        if v in pin_b:
            return None
        pin_a[u] = i
        pin_b[v] = i
    key_a = [(int(base[v]), pin_a.get(v, -1)) for v in range(g.n)]
    key_b = [(int(base[v]), pin_b.get(v, -1)) for v in range(g.n)]
    if sorted(key_a) != sorted(key_b):
        return None
    ca = canonical_form(g, key_a, node_budget)
    cb = canonical_form(g, key_b, node_budget)
    if ca.certificate != cb.certificate:
        return None
    sigma = compose(ca.labeling.a, invert(cb.labeling.a))
    for u, v in g.edges:
        if not g.has_edge(int(sigma[u]), int(sigma[v])):
            raise AssertionError("certificate collision without isomorphism")
    return Perm(sigma)


def is_unworthy(g: Graph) -> tuple[bool, Optional[tuple[int, int]]]:
    """True when two vertices share the same neighborhood (with a witness)."""
    seen: dict[tuple[int, ...], int] = {}
    for v in range(g.n):
        key = g.neighbors(v)
        if key in seen:
            return True, (seen[key], v)
        seen[key] = v
    return False, None
