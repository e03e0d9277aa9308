"""Parameterized graph families.

Every constructor validates its parameter domain, builds the graph on an
explicit flat vertex indexing (documented per family), and raises
ParameterError for domain violations or DegenerateGraphError where the
parameters would force loops or parallel edges in the skeleton.

Families whose defining edge rule is directed (spidergraphs, Attebery
graphs, CPM) return the graph together with that orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import DegenerateGraphError, ParameterError
from .graphs import Graph, Orientation, build_graph, connected_component, edge_id
from .perms import Perm


def _pow_table(r: int, count: int, n: int) -> list[int]:
    out = [1 % n]
    for _ in range(count - 1):
        out.append(out[-1] * r % n)
    return out


# -- wreaths and circulants -------------------------------------------------

def wreath(n: int, k: int) -> Graph:
    """W(n, k): n bunches of k vertices in a circle, consecutive bunches
    completely joined.  Vertex (i, r) is index i*k + r."""
    if n < 3:
        raise ParameterError("wreath needs n >= 3")
    if k < 1:
        raise ParameterError("wreath needs k >= 1")
    edges = []
    for i in range(n):
        for r in range(k):
            for s in range(k):
                edges.append((i * k + r, ((i + 1) % n) * k + s))
    return build_graph(n * k, edges)


def circulant(n: int, jumps: Sequence[int]) -> Graph:
    """C_n(a_1, a_2, ...): vertices Z_n, i ~ i + a for each jump a."""
    if n < 3:
        raise ParameterError("circulant needs n >= 3")
    seen = set()
    for a in jumps:
        a = a % n
        if a == 0:
            raise ParameterError("jump 0 would give loops")
        seen.add(min(a, n - a))
    edges = []
    for a in seen:
        for i in range(n):
            edges.append((i, (i + a) % n))
    return build_graph(n, edges)


def depleted_wreath(n: int) -> Graph:
    """DW(n, 3): wreath bunches of three, matching coordinates removed."""
    if n < 3:
        raise ParameterError("depleted wreath needs n >= 3")
    k = 3
    edges = []
    for i in range(n):
        for r in range(k):
            for s in range(k):
                if r != s:
                    edges.append((i * k + r, ((i + 1) % n) * k + s))
    return build_graph(n * k, edges)


# -- toroidal quotients -----------------------------------------------------

def lattice_normal_form(u1: tuple[int, int],
                        u2: tuple[int, int]) -> tuple[int, int, int]:
    """Rewrite the lattice spanned by u1, u2 as <(r, 0), (s, t)>.

    r, t > 0 and 0 <= s < r; the result generates the same sublattice of
    Z x Z.  Raises for linearly dependent generators.
    """
    d, e = u1
    f, g = u2
    if d * g - e * f == 0:
        raise ParameterError("lattice generators are linearly dependent")
    t = math.gcd(e, g)
    if t == 0:
        # both second coordinates vanish, so the lattice misses (*, 1) rows
        raise ParameterError("lattice generators are linearly dependent")
    ep, gp = e // t, g // t
    m, nn = _bezout(ep, gp)
    s = m * d + nn * f
    r = abs(gp * d - ep * f)
    return r, s % r, t


def _bezout(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


@dataclass(frozen=True)
class TorusGrid:
    """Fundamental rectangle of a square-lattice quotient: r wide, t high,
    rows wrap directly, top row reattaches to the bottom shifted s right."""
    r: int
    s: int
    t: int

    def reduce(self, x: int, y: int) -> tuple[int, int]:
        j = y % self.t
        k = (y - j) // self.t
        return (x - k * self.s) % self.r, j

    def index(self, x: int, y: int) -> int:
        x, y = self.reduce(x, y)
        return y * self.r + x

    @property
    def num_vertices(self) -> int:
        return self.r * self.t


def _torus_graph(grid: TorusGrid) -> Graph:
    edges = []
    for y in range(grid.t):
        for x in range(grid.r):
            v = y * grid.r + x
            nbrs = [grid.index(x + 1, y), grid.index(x - 1, y),
                    grid.index(x, y + 1), grid.index(x, y - 1)]
            if v in nbrs:
                raise DegenerateGraphError("torus quotient has loops")
            if len(set(nbrs)) != 4:
                raise DegenerateGraphError("torus quotient has parallel edges")
            for w in nbrs:
                edges.append(edge_id(v, w))
    return build_graph(grid.num_vertices, edges)


def toroidal(kind: str, b: int, c: int) -> Graph:
    """Quotient of the square grid by one of three translation groups.

    rot: <(b,c), (-c,b)>, b^2+c^2 vertices; angle: <(b,c), (c,b)> for
    b-1 > c >= 0, b^2-c^2 vertices; bracket: <(b,b), (-c,c)> for b, c > 1
    (arguments may come in either order), 2bc vertices.
    """
    if kind == "rot":
        if (b, c) == (0, 0):
            raise ParameterError("rot quotient needs (b, c) != (0, 0)")
        u1, u2 = (b, c), (-c, b)
    elif kind == "angle":
        if c < 0 or b <= c:
            raise ParameterError("angle quotient needs b - 1 > c >= 0")
        if b == c + 1:
            raise DegenerateGraphError("angle quotient with b = c + 1 "
                                       "has parallel edges")
        u1, u2 = (b, c), (c, b)
    elif kind == "bracket":
        b, c = max(b, c), min(b, c)
        if c < 1:
            raise ParameterError("bracket quotient needs b, c > 1")
        if c == 1:
            raise DegenerateGraphError("bracket quotient with c = 1 "
                                       "has parallel edges")
        u1, u2 = (b, b), (-c, c)
    else:
        raise ParameterError(f"unknown torus kind {kind!r}")
    grid = TorusGrid(*lattice_normal_form(u1, u2))
    return _torus_graph(grid)


def torus_grid(kind: str, b: int, c: int) -> TorusGrid:
    """The normal-form grid underlying toroidal(kind, b, c)."""
    if kind == "rot":
        u1, u2 = (b, c), (-c, b)
    elif kind == "angle":
        u1, u2 = (b, c), (c, b)
    elif kind == "bracket":
        b, c = max(b, c), min(b, c)
        u1, u2 = (b, b), (-c, c)
    else:
        raise ParameterError(f"unknown torus kind {kind!r}")
    return TorusGrid(*lattice_normal_form(u1, u2))


# -- spidergraphs -----------------------------------------------------------

def spidergraph(k: int, n: int, r: int,
                mutant: bool = False) -> tuple[Graph, Orientation]:
    """PS(k, n; r) or, with mutant=True, MPS(k, n; r).

    Vertices Z_k x Z_n at index i*n + j; darts run (i, j) -> (i+1, j +- r^i),
    the mutant form adding n/2 on the wrap from ring k-1 to ring 0.  If the
    result is disconnected the component of (0, 0) is returned.  The second
    return value is the defining orientation.
    """
    if k < 3:
        raise ParameterError("spidergraph needs k >= 3")
    if mutant:
        if n < 8 or n % 2:
            raise ParameterError("mutant spidergraph needs even n >= 8")
    elif n < 5:
        raise ParameterError("spidergraph needs n >= 5")
    r %= n
    if r in (1, n - 1):
        raise ParameterError("spidergraph needs r != +-1 (mod n)")
    if pow(r, k, n) not in (1, n - 1):
        raise ParameterError("spidergraph needs r^k = +-1 (mod n)")
    rp = _pow_table(r, k, n)
    darts = []
    for i in range(k):
        shift = n // 2 if (mutant and i == k - 1) else 0
        for j in range(n):
            for sgn in (1, -1):
                darts.append((i * n + j,
                              ((i + 1) % k) * n + (j + sgn * rp[i] + shift) % n))
    return _cut_to_origin(k * n, darts)


def _cut_to_origin(nv: int, darts: list[tuple[int, int]]
                   ) -> tuple[Graph, Orientation]:
    """Underlying graph of the darts, restricted to the component of 0."""
    full = build_graph(nv, [edge_id(u, v) for u, v in darts])
    comp, mapping = connected_component(full, 0)
    if comp.n == full.n:
        return full, Orientation(darts, n=nv)
    kept = [(mapping[u], mapping[v]) for u, v in darts
            if u in mapping and v in mapping]
    return comp, Orientation(kept, n=comp.n)


def xe_graph(m: int, n: int, r: int, t: int) -> Graph:
    """The X_e(m, n; r, t) presentation of the even tightly-attached graphs.

    Vertices Z_m x Z_n at i*n + j.  Ring i joins ring i+1 directly and with
    shift r^i; the wrap from ring m-1 adds t to both.
    """
    if m < 4 or m % 2 or n < 4 or n % 2:
        raise ParameterError("xe_graph needs m, n even and >= 4")
    r %= n
    if pow(r, m, n) != 1 % n:
        raise ParameterError("xe_graph needs r^m = 1 (mod n)")
    rp = _pow_table(r, m, n)
    if (sum(rp) + 2 * t) % n != 0:
        raise ParameterError("xe_graph needs 1 + r + ... + r^(m-1) + 2t "
                             "= 0 (mod n)")
    edges = []
    for i in range(m - 1):
        for j in range(n):
            edges.append((i * n + j, (i + 1) * n + j))
            edges.append((i * n + j, (i + 1) * n + (j + rp[i]) % n))
    for j in range(n):
        edges.append(((m - 1) * n + j, (j + t) % n))
        edges.append(((m - 1) * n + j, (j + rp[m - 1] + t) % n))
    return build_graph(m * n, edges)


def xe_match(m: int, n: int, r: int, t: int) -> Optional[tuple[str, tuple]]:
    """Which spidergraph X_e(m, n; r, t) reduces to, by the parity of the
    integer ring sum mod 2n.  None when the target's preconditions fail."""
    r %= n
    t %= n
    two = 2 * n
    s = (sum(_pow_table(r, m, two)) + 2 * t) % two
    if s == 0:
        tag = "PS"
    elif s == n:
        tag = "MPS"
    else:
        return None
    if r % two in (1, two - 1) or pow(r, m, two) not in (1, two - 1):
        return None
    return tag, (m, two, r)


# -- Attebery graphs --------------------------------------------------------

class AbelianGroup:
    """Direct sum of cyclic groups, elements as tuples."""

    def __init__(self, orders: Sequence[int]):
        orders = tuple(int(m) for m in orders)
        if not orders or any(m < 1 for m in orders):
            raise ParameterError("cyclic orders must be positive")
        self.orders = orders
        self.rank = len(orders)
        self.size = math.prod(orders)

    def reduce(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(v) % m for v, m in zip(x, self.orders))

    def add(self, x, y) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.orders))

    def neg(self, x) -> tuple[int, ...]:
        return tuple((-a) % m for a, m in zip(x, self.orders))

    def act(self, x, matrix) -> tuple[int, ...]:
        """Row vector times matrix, coordinates reduced."""
        return tuple(
            sum(x[i] * matrix[i][jj] for i in range(self.rank)) % m
            for jj, m in enumerate(self.orders))

    def elements(self):
        return product(*(range(m) for m in self.orders))

    def index(self, x) -> int:
        idx = 0
        for v, m in zip(reversed(x), reversed(self.orders)):
            idx = idx * m + v
        return idx

    def span(self, gens) -> int:
        """Order of the subgroup generated by the given elements."""
        zero = (0,) * self.rank
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    e = self.add(h, g)
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
            frontier = nxt
        return len(seen)


def attebery(orders: Sequence[int], matrix: Sequence[Sequence[int]], k: int,
             a: Sequence[int], b: Sequence[int],
             enforce: bool = False) -> tuple[Graph, Orientation]:
    """Att(A, T, k; a, b): A a direct sum of cyclic groups, T a matrix
    acting on row vectors, darts (x, i) -> (x + aT^i, i+1) and likewise b.

    Vertex (x, i) is index(x)*k + i.  With enforce=True the three defining
    conditions are checked and failures raise with the condition number.
    """
    if k < 2:
        raise ParameterError("attebery needs k >= 2")
    A = AbelianGroup(orders)
    a = A.reduce(a)
    b = A.reduce(b)
    ai = [a]
    bi = [b]
    for _ in range(k):
        ai.append(A.act(ai[-1], matrix))
        bi.append(A.act(bi[-1], matrix))
    if enforce:
        if {ai[k], bi[k]} != {a, b}:
            raise AtteberyConditionError(1, "aT^k, bT^k do not return to a, b")
        ci = [A.add(bi[i], A.neg(ai[i])) for i in range(k)]
        total_a = a
        for i in range(1, k):
            total_a = A.add(total_a, ai[i])
        if A.span(ci + [total_a]) != A.size:
            raise AtteberyConditionError(2, "difference orbit and dart sum "
                                            "do not generate the group")
        s = A.add(a, b)
        image = s
        acc = image
        for _ in range(1, k):
            image = A.act(image, matrix)
            acc = A.add(acc, image)
        if any(acc):
            raise AtteberyConditionError(3, "a + b is not killed by the "
                                            "power sum of T")
    nv = A.size * k
    darts = []
    for x in A.elements():
        xi = A.index(x)
        for i in range(k):
            u = xi * k + i
            darts.append((u, A.index(A.add(x, ai[i])) * k + (i + 1) % k))
            darts.append((u, A.index(A.add(x, bi[i])) * k + (i + 1) % k))
    graph = build_graph(nv, [edge_id(u, v) for u, v in darts])
    return graph, Orientation(darts, n=nv)


class AtteberyConditionError(ParameterError):
    """One of the three defining conditions failed; .condition says which."""

    def __init__(self, condition: int, message: str):
        super().__init__(f"attebery condition ({condition}): {message}")
        self.condition = condition


def amc(k: int, n: int, matrix: Sequence[Sequence[int]]) -> Graph:
    """AMC(k, n, M): the Attebery graph on Z_n x Z_n with T = M,
    a = (1, 0), b = (-1, 0)."""
    if k < 3:
        raise ParameterError("amc needs k >= 3")
    if n < 2:
        raise ParameterError("amc needs n >= 2")
    m = [[int(e) % n for e in row] for row in matrix]
    if len(m) != 2 or any(len(row) != 2 for row in m):
        raise ParameterError("amc needs a 2x2 matrix")
    graph, _ = attebery((n, n), m, k, (1, 0), (n - 1, 0))
    return graph


def amc_matrix_condition(k: int, n: int,
                         matrix: Sequence[Sequence[int]]) -> bool:
    """Whether M^k = +-I mod n."""
    m = [[int(e) % n for e in row] for row in matrix]
    acc = [[1, 0], [0, 1]]
    for _ in range(k):
        acc = [[sum(acc[i][l] * m[l][jj] for l in range(2)) % n
                for jj in range(2)] for i in range(2)]
    ident = [[1 % n, 0], [0, 1 % n]]
    minus = [[(-1) % n, 0], [0, (-1) % n]]
    return acc == ident or acc == minus


# -- cycle-of-products (Gardiner-Praeger style) ------------------------------

def cpm(n: int, s: int, t: int, r: int) -> tuple[Graph, Orientation]:
    """CPM(n, s, t, r) on Z_n^s x Z_st: darts (x, i) -> (x +- r^i e_j, i+1)
    with j = i mod s.  Cut to the component of the origin; the vertex count
    is checked against the closed form (stn^s for odd n, st(n/2)^s doubled
    for odd t when n is even)."""
    if n < 3:
        raise ParameterError("cpm needs n >= 3")
    if s < 2:
        raise ParameterError("cpm needs s >= 2")
    if t < 1:
        raise ParameterError("cpm needs t >= 1")
    if math.gcd(r, n) != 1:
        raise ParameterError("cpm needs r to be a unit mod n")
    A = AbelianGroup([n] * s)
    st = s * t
    rp = _pow_table(r % n, st, n)
    darts = []
    for x in A.elements():
        xi = A.index(x)
        for i in range(st):
            u = xi * st + i
            j = i % s
            for sgn in (1, -1):
                y = list(x)
                y[j] = (y[j] + sgn * rp[i]) % n
                darts.append((u, A.index(tuple(y)) * st + (i + 1) % st))
    graph, orient = _cut_to_origin(A.size * st, darts)
    if n % 2:
        expected = st * n ** s
    else:
        expected = st * (n // 2) ** s * (2 if t % 2 else 1)
    if graph.n != expected:
        raise ParameterError(
            f"cpm component has {graph.n} vertices, closed form {expected}")
    return graph, orient


# -- bicirculants and friends ------------------------------------------------

def rose_window(n: int, a: int, r: int) -> Graph:
    """R_n(a, r): rim A_i - A_{i+1}, in-spoke A_i - B_i, out-spoke
    B_i - A_{i+a}, hub B_i - B_{i+r}.  A_i is index i, B_i index n + i."""
    if n < 3:
        raise ParameterError("rose window needs n >= 3")
    a %= n
    r %= n
    if r == 0:
        raise DegenerateGraphError("hub jump 0 gives loops")
    if 2 * r % n == 0:
        raise DegenerateGraphError("hub jump n/2 halves the hub cycle")
    if a == 0:
        raise DegenerateGraphError("spoke offset 0 doubles the spokes")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, (i + a) % n))
        edges.append((n + i, n + (i + r) % n))
    return build_graph(2 * n, edges)


def rose_window_family(n: int, a: int, r: int) -> Optional[str]:
    """Which of the four edge-transitive parameter families (a, r) lies in,
    or None.  Jump reflections r ~ n-r and spoke reflections a ~ n-a give
    the same graph and are folded in."""
    a %= n
    r %= n
    for aa in {a, (n - a) % n}:
        for rr in {r, (n - r) % n}:
            tag = _rw_family_literal(n, aa, rr)
            if tag is not None:
                return tag
    return None


def _rw_family_literal(n: int, a: int, r: int) -> Optional[str]:
    if a == 2 and r == 1:
        return "a"
    if n % 2 == 0:
        m = n // 2
        if a == (m + 2) % n and r % n == (m + 1) % n:
            return "b"
    if n % 12 == 0:
        k = n // 12
        if (a, r) in {((3 * k + 2) % n, (3 * k - 1) % n),
                      ((3 * k - 2) % n, (3 * k + 1) % n)}:
            return "c"
    if n % 2 == 0:
        m = n // 2
        if a % 2 == 0:
            bb = a // 2
            if (bb * bb) % m in (1 % m, (m - 1) % m) and r % 2 == 1 \
                    and r % m == 1 % m:
                return "d"
    return None


def bicirculant(n: int, a: int, b: int, c: int, d: int) -> Graph:
    """BC_n(a, b, c, d): spoke-only bicirculant, edges A_i - B_{i+e} for
    e among the four offsets.  A_i is index i, B_i index n + i."""
    if n < 3:
        raise ParameterError("bicirculant needs n >= 3")
    offs = [a % n, b % n, c % n, d % n]
    if len(set(offs)) != 4:
        raise ParameterError("bicirculant offsets must be distinct mod n")
    edges = []
    for i in range(n):
        for e in offs:
            edges.append((i, n + (i + e) % n))
    return build_graph(2 * n, edges)


BC_SPORADICS = ((7, 0, 1, 2, 4), (13, 0, 1, 3, 9), (14, 0, 1, 4, 6))


def propellor(n: int, a: int, b: int, c: int, d: int) -> Graph:
    """Pr_n(a, b, c, d): tip cycles on A and C, flat spokes through B,
    blade edges B_i - A_{i+b} and B_i - C_{i+c}.  Index order A, B, C."""
    if n < 3:
        raise ParameterError("propellor needs n >= 3")
    a %= n
    b %= n
    c %= n
    d %= n
    if a == 0 or d == 0:
        raise DegenerateGraphError("tip offsets 0 give loops")
    edges = []
    for i in range(n):
        A, B, C = i, n + i, 2 * n + i
        edges.append((A, (i + a) % n))
        edges.append((C, 2 * n + (i + d) % n))
        edges.append((A, B))
        edges.append((B, C))
        edges.append((B, (i + b) % n))
        edges.append((B, 2 * n + (i + c) % n))
    return build_graph(3 * n, edges)


PROPELLOR_SPORADICS = ((5, 1, 1, 2, 2), (10, 1, 1, 2, 2), (10, 1, 4, 3, 2),
                       (10, 1, 1, 3, 3), (10, 2, 3, 1, 4))


# -- metacirculant families ---------------------------------------------------

def msy(m: int, n: int, r: int, t: int) -> Graph:
    """MSY(m, n; r, t) on Z_m x Z_n (index i*n + j): fiber jumps
    (i, j) - (i, j + r^i), rungs (i, j) - (i+1, j) for i < m-1, and the
    wrap (m-1, j) - (0, j+t)."""
    if m < 3 or n < 3:
        raise ParameterError("msy needs m, n >= 3")
    r %= n
    t %= n
    rp = _pow_table(r, m, n)
    edges = []
    try:
        for i in range(m):
            for j in range(n):
                edges.append((i * n + j, i * n + (j + rp[i]) % n))
        for i in range(m - 1):
            for j in range(n):
                edges.append((i * n + j, (i + 1) * n + j))
        for j in range(n):
            edges.append(((m - 1) * n + j, (j + t) % n))
        return build_graph(m * n, edges)
    except ParameterError as exc:
        raise DegenerateGraphError(f"msy parameters give loops: {exc}")


def msy_is_metacirculant(m: int, n: int, r: int, t: int) -> bool:
    r %= n
    t %= n
    return pow(r, m, n) == 1 % n and (r * t - t) % n == 0


MSY_SPORADICS = ((5, 11, 5, 0), (5, 22, 5, 11), (5, 33, 16, 0),
                 (5, 66, 31, 33))


def msz(m: int, n: int, k: int, r: int) -> Graph:
    """MSZ(m, n; k, r) on Z_m x Z_n: (i, j) - (i+1, j) and
    (i, j) - (i+k, j + r^i)."""
    if m < 3 or n < 3:
        raise ParameterError("msz needs m, n >= 3")
    k %= m
    r %= n
    rp = _pow_table(r, m, n)
    edges = []
    try:
        for i in range(m):
            for j in range(n):
                edges.append((i * n + j, ((i + 1) % m) * n + j))
                edges.append((i * n + j, ((i + k) % m) * n + (j + rp[i]) % n))
        return build_graph(m * n, edges)
    except ParameterError as exc:
        raise DegenerateGraphError(f"msz parameters give loops: {exc}")


def mc3(m: int, n: int, a: int, b: int, r: int, t: int, c: int) -> Graph:
    """MC3(m, n, a, b, r, t, c) on Z_m x Z_n: green edges step c along the
    fiber cycle with a t-twisted wrap, red edges cross to the opposite
    fiber with shifts a*r^i and b*r^i."""
    if m < 4 or m % 2:
        raise ParameterError("mc3 needs even m >= 4")
    if n < 2:
        raise ParameterError("mc3 needs n >= 2")
    a %= n
    b %= n
    r %= n
    t %= n
    c %= m
    half = m // 2
    rp = _pow_table(r, m, n)
    edges = []
    try:
        for j in range(n):
            for i in range(m - 1):
                edges.append((i * n + j, ((i + c) % m) * n + j))
            edges.append(((m - 1) * n + j, (j + t) % n))
        for i in range(m):
            for j in range(n):
                u = i * n + j
                edges.append((u, ((i + half) % m) * n + (j + a * rp[i]) % n))
                edges.append((u, ((i + half) % m) * n + (j + b * rp[i]) % n))
        return build_graph(m * n, edges)
    except ParameterError as exc:
        raise DegenerateGraphError(f"mc3 parameters give loops: {exc}")


def mc3_is_metacirculant(m: int, n: int, a: int, b: int, r: int, t: int,
                         c: int) -> bool:
    a %= n
    b %= n
    r %= n
    t %= n
    half = pow(r, m // 2, n)
    lhs = {(a + t) % n, (b + t) % n}
    rhs = {(-a * half) % n, (-b * half) % n}
    return (r * t - t) % n == 0 and pow(r, m, n) == 1 % n and lhs == rhs


# -- Praeger-Xu graphs --------------------------------------------------------

def praeger_xu(n: int, k: int) -> Graph:
    """PX(n, k) on Z_n x {bit strings of length k}: (i, ax) - (i+1, xb)
    for bits a, b.  Vertex (j, x) is index j*2^k + x with the string read
    most-significant-bit first."""
    if n < 3:
        raise ParameterError("praeger_xu needs n >= 3")
    if not 1 <= k < n:
        raise ParameterError("praeger_xu needs 1 <= k < n")
    size = 1 << k
    top = 1 << (k - 1)
    edges = []
    for i in range(n):
        for x in range(top):
            for first in range(2):
                for last in range(2):
                    edges.append((i * size + first * top + x,
                                  ((i + 1) % n) * size + 2 * x + last))
    return build_graph(n * size, edges)


def px_generators(n: int, k: int) -> list[Perm]:
    """The rotation rho, reflection mu, and local flips sigma_0..sigma_{n-1}
    of PX(n, k), each checked to be an automorphism."""
    g = praeger_xu(n, k)
    size = 1 << k
    perms = []

    def reverse_bits(x: int) -> int:
        out = 0
        for _ in range(k):
            out = (out << 1) | (x & 1)
            x >>= 1
        return out

    rho = [0] * g.n
    mu = [0] * g.n
    for j in range(n):
        for x in range(size):
            rho[j * size + x] = ((j + 1) % n) * size + x
            mu[j * size + x] = ((-j) % n) * size + reverse_bits(x)
    perms.append(Perm(rho))
    perms.append(Perm(mu))
    for bpt in range(n):
        sig = list(range(g.n))
        for i in range(1, k + 1):
            fiber = (bpt - i) % n
            bit = 1 << (k - i)
            for x in range(size):
                sig[fiber * size + x] = fiber * size + (x ^ bit)
        perms.append(Perm(sig))
    for p in perms:
        for u, v in g.edges:
            if not g.has_edge(p.act(u), p.act(v)):
                raise ParameterError("generator is not an automorphism")
    return perms


# graph-only entry points for the name registry
def _build_ps(k: int, n: int, r: int) -> Graph:
    return spidergraph(k, n, r, mutant=False)[0]


def _build_mps(k: int, n: int, r: int) -> Graph:
    return spidergraph(k, n, r, mutant=True)[0]


def _build_cpm(n: int, s: int, t: int, r: int) -> Graph:
    return cpm(n, s, t, r)[0]


# -- sporadic graphs ----------------------------------------------------------

def sporadic(name: str) -> Graph:
    """K5, the octahedron, or the odd graph on 3-subsets of a 7-set."""
    key = name.lower()
    if key == "k5":
        return build_graph(5, [(i, j) for i in range(5)
                               for j in range(i + 1, 5)])
    if key == "octahedron":
        return build_graph(6, [(i, j) for i in range(6)
                               for j in range(i + 1, 6)
                               if j - i != 3])
    if key == "odd4":
        from itertools import combinations
        triples = list(combinations(range(7), 3))
        idx = {tr: i for i, tr in enumerate(triples)}
        edges = []
        for x in triples:
            for y in triples:
                if x < y and not set(x) & set(y):
                    edges.append((idx[x], idx[y]))
        return build_graph(35, edges)
    raise ParameterError(f"unknown sporadic graph {name!r}")


# -- semiregular quotient diagrams ---------------------------------------------

@dataclass(frozen=True)
class Diagram:
    """Voltage diagram of a graph modulo a semiregular symmetry.

    nodes: orbit count; modulus: orbit length; arcs: (p, q, label) with the
    label normalized to the smaller direction; loops: (p, label) with
    label <= modulus/2; semi_edges: nodes carrying the half-length jump.
    """
    nodes: int
    modulus: int
    arcs: tuple[tuple[int, int, int], ...]
    loops: tuple[tuple[int, int], ...]
    semi_edges: tuple[int, ...]

    def valence(self, p: int) -> int:
        total = 0
        for (u, v, _a) in self.arcs:
            total += (u == p) + (v == p)
        for (u, a) in self.loops:
            if u == p:
                total += 2
        for u in self.semi_edges:
            if u == p:
                total += 1
        return total


def diagram_quotient(g: Graph, sigma: Perm) -> Diagram:
    """Quotient of g by the cyclic group of a semiregular symmetry."""
    for u, v in g.edges:
        if not g.has_edge(sigma.act(u), sigma.act(v)):
            raise ParameterError("sigma is not an automorphism")
    cycles = sigma.cycles(include_fixed=True)
    lengths = {len(c) for c in cycles}
    if len(lengths) != 1:
        raise ParameterError("sigma is not semiregular")
    n = lengths.pop()
    node_of = {}
    pos = {}
    for ci, cyc in enumerate(cycles):
        for step, v in enumerate(cyc):
            node_of[v] = ci
            pos[v] = step
    arcs = set()
    loops = set()
    semi = set()
    for u, v in g.edges:
        p, q = node_of[u], node_of[v]
        label = (pos[v] - pos[u]) % n
        if p == q:
            if n % 2 == 0 and label == n // 2:
                semi.add(p)
            else:
                loops.add((p, min(label, (n - label) % n)))
        else:
            back = (-label) % n
            if back < label or (back == label and q < p):
                arcs.add((q, p, back))
            else:
                arcs.add((p, q, label))
    return Diagram(len(cycles), n, tuple(sorted(arcs)),
                   tuple(sorted(loops)), tuple(sorted(semi)))


def diagram_expand(d: Diagram) -> Graph:
    """Rebuild the covering graph, node p position i at index p*modulus + i."""
    n = d.modulus
    edges = []
    for (p, q, a) in d.arcs:
        for i in range(n):
            edges.append((p * n + i, q * n + (i + a) % n))
    for (p, a) in d.loops:
        for i in range(n):
            edges.append((p * n + i, p * n + (i + a) % n))
    for p in d.semi_edges:
        for i in range(n):
            edges.append((p * n + i, p * n + (i + n // 2) % n))
    return build_graph(d.nodes * n, edges)
