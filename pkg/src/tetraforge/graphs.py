"""Core graph type, traversal helpers, and the graph6 codec.

Vertices are dense 0-based integers.  A :class:`Graph` is immutable once
built; family constructors map their semantic coordinates (pairs, triples,
group elements) onto this index range and document the bijection.

A *dart* is an ordered pair ``(tail, head)``; every edge ``{u, v}`` carries
the two darts ``(u, v)`` and ``(v, u)``.  Edges are identified by the sorted
pair ``(min(u, v), max(u, v))``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import GraphFormatError, ParameterError


def edge_id(u: int, v: int) -> tuple[int, int]:
    """Canonical identifier of the edge {u, v}."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_edges", "_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise ParameterError(f"loop at vertex {u} not allowed")
            seen.add(edge_id(u, v))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._edges = tuple(sorted(seen))
        self._csr = None

    # -- basic queries ----------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in set(self._adj[u]) if len(self._adj[u]) > 8 else v in self._adj[u]

    def darts(self) -> list[tuple[int, int]]:
        """All 2|E| darts, sorted."""
        out = []
        for u, v in self._edges:
            out.append((u, v))
            out.append((v, u))
        out.sort()
        return out

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices), cached."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int32)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self._adj[v])
            indices = np.empty(int(indptr[-1]), dtype=np.int32)
            for v in range(self.n):
                indices[indptr[v]:indptr[v + 1]] = self._adj[v]
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self._edges == other._edges)

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, deduplicating repeated edges.

    (u, v) and (v, u) name the same edge and are retained once.  Loops and
    out-of-range endpoints raise ParameterError.
    """
    return Graph(n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex relabeling v -> perm[v]."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def is_regular_of_valence(g: Graph, d: int) -> bool:
    return all(g.degree(v) == d for v in range(g.n))


def bipartition(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Two-color the graph; None if an odd cycle exists.

    Each component is colored starting from its smallest vertex, which gets
    side 0, so the output is deterministic.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def connected_component(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on the component of v, plus the old->new index map."""
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    order = sorted(seen)
    remap = {old: new for new, old in enumerate(order)}
    edges = [(remap[a], remap[b]) for a, b in g.edges if a in seen and b in seen]
    return Graph(len(order), edges), remap


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    comp, _ = connected_component(g, 0)
    return comp.n == g.n


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle; None for a forest."""
    best = None
    for src in range(g.n):
        # BFS from src finds the shortest cycle through src in O(E).
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] * 2 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def diameter(g: Graph) -> Optional[int]:
    """Greatest vertex eccentricity; None if disconnected or empty."""
    if g.n == 0:
        return None
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        ecc = max(dist)
        if min(dist) < 0:
            return None
        best = max(best, ecc)
    return best


class Orientation:
    """A set of darts, one per edge of a base graph, or a standalone digraph.

    When ``base`` is given, darts must cover each base edge exactly once.
    Standalone orientations may carry parallel darts (the separated box
    product consumes such inputs), so darts are kept as a sorted tuple with
    multiplicity.
    """

    __slots__ = ("n", "base", "darts", "_out", "_in")

    def __init__(self, darts: Iterable[tuple[int, int]],
                 base: Optional[Graph] = None,
                 n: Optional[int] = None):
        darts = tuple(sorted(tuple(d) for d in darts))
        if base is not None:
            need = set(base.edges)
            got = [edge_id(t, h) for t, h in darts]
            if len(got) != len(need) or set(got) != need:
                raise ParameterError("darts do not cover each base edge exactly once")
            self.n = base.n
        else:
            if n is None:
                n = 1 + max((max(t, h) for t, h in darts), default=-1)
            for t, h in darts:
                if t == h:
                    raise ParameterError(f"loop dart at {t}")
                if not (0 <= t < n and 0 <= h < n):
                    raise ParameterError(f"dart ({t},{h}) out of range")
            self.n = n
        self.base = base
        self.darts = darts
        out: list[list[int]] = [[] for _ in range(self.n)]
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for t, h in darts:
            out[t].append(h)
            inn[h].append(t)
        self._out = tuple(tuple(sorted(x)) for x in out)
        self._in = tuple(tuple(sorted(x)) for x in inn)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def reverse(self) -> "Orientation":
        return Orientation([(h, t) for t, h in self.darts],
                           base=self.base, n=self.n)

    def underlying_graph(self) -> Graph:
        if self.base is not None:
            return self.base
        return Graph(self.n, [edge_id(t, h) for t, h in self.darts])

    def is_balanced(self, k: int = 2) -> bool:
        """True when every vertex has in-degree = out-degree = k."""
        return all(self.out_degree(v) == k and self.in_degree(v) == k
                   for v in range(self.n))

    def __eq__(self, other):
        return (isinstance(other, Orientation) and self.n == other.n
                and self.darts == other.darts)

    def __hash__(self):
        return hash((self.n, self.darts))

    def __repr__(self):
        return f"Orientation(n={self.n}, darts={len(self.darts)})"


# -- graph6 ---------------------------------------------------------------
#
# Size field N(n), then the upper triangle of the adjacency matrix read
# column by column (bit (i,j) for i < j, j ascending, i ascending inside a
# column), packed into 6-bit groups, each printed as chr(group + 63).

def _g6_size_bytes(n: int) -> bytes:
    if n < 0:
        raise ParameterError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63
                                   for s in (30, 24, 18, 12, 6, 0)])
    raise ParameterError("graph too large for graph6")


def encode_g6(g: Graph) -> str:
    buf = bytearray(_g6_size_bytes(g.n))
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if j in adj[i] else 0)
            nbits += 1
            if nbits == 6:
                buf.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        buf.append((acc << (6 - nbits)) + 63)
    return buf.decode("ascii")


def decode_g6(text: str) -> Graph:
    raw = text.strip()
    if raw.startswith(">>graph6<<"):
        raw = raw[len(">>graph6<<"):]
    data = raw.encode("ascii", errors="replace")
    pos = 0

    def take(k: int) -> list[int]:
        nonlocal pos
        vals = []
        for _ in range(k):
            if pos >= len(data):
                raise GraphFormatError("truncated graph6 string", pos)
            b = data[pos]
            if not (63 <= b <= 126):
                raise GraphFormatError(f"invalid graph6 byte {b}", pos)
            vals.append(b - 63)
            pos += 1
        return vals

    first = take(1)[0]
    if first != 63:
        n = first
    else:
        nxt = take(1)[0]
        if nxt != 63:
            lo = take(2)
            n = (nxt << 12) | (lo[0] << 6) | lo[1]
        else:
            parts = take(6)
            n = 0
            for p in parts:
                n = (n << 6) | p
    need = (n * (n - 1) // 2 + 5) // 6
    groups = take(need)
    if pos != len(data):
        raise GraphFormatError("trailing bytes after graph6 payload", pos)
    bits = []
    for gval in groups:
        for s in (5, 4, 3, 2, 1, 0):
            bits.append((gval >> s) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def write_g6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(encode_g6(g) + "\n")


def read_g6_file(path) -> list[Graph]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(decode_g6(line))
    return out
