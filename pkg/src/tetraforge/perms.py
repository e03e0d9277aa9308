"""Permutations and permutation groups with a deterministic stabilizer chain.

Convention: permutations act on the right, so ``(v)(p*q) = ((v)p)q`` and the
array form is ``(p*q)[v] = q[p[v]]``.  Stabilizer chains are built by a
deterministic incremental Schreier-Sims: FIFO processing of Schreier
generators, base points taken from a prescribed prefix first and then as the
smallest point moved by the offending residue.  Orders are exact big
integers.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from ._kernel import compose, invert, orbit_partition
from .errors import BudgetExceededError, ParameterError


def _as_array(images, n=None) -> np.ndarray:
    a = np.asarray(images, dtype=np.int32)
    if a.ndim != 1:
        raise ParameterError("permutation must be a flat sequence")
    if n is not None and len(a) != n:
        raise ParameterError(f"permutation degree {len(a)} != {n}")
    seen = np.zeros(len(a), dtype=bool)
    if len(a) and (a.min() < 0 or a.max() >= len(a)):
        raise ParameterError("permutation image out of range")
    seen[a] = True
    if not seen.all():
        raise ParameterError("not a bijection")
    return a


class Perm:
    """Immutable permutation of 0..n-1."""

    __slots__ = ("a", "_hash")

    def __init__(self, images):
        object.__setattr__(self, "a", _as_array(images))
        object.__setattr__(self, "_hash", None)

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(np.arange(n, dtype=np.int32))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        a = np.arange(n, dtype=np.int32)
        for cyc in cycles:
            for i, v in enumerate(cyc):
                a[v] = cyc[(i + 1) % len(cyc)]
        return Perm(a)

    @property
    def degree(self) -> int:
        return len(self.a)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.a)

    def act(self, v: int) -> int:
        return int(self.a[v])

    __call__ = act

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(compose(self.a, other.a))

    def inverse(self) -> "Perm":
        return Perm(invert(self.a))

    def is_identity(self) -> bool:
        return bool((self.a == np.arange(len(self.a), dtype=np.int32)).all())

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.a)
        out = []
        for v in range(len(self.a)):
            if seen[v]:
                continue
            cyc = [v]
            seen[v] = True
            w = int(self.a[v])
            while w != v:
                cyc.append(w)
                seen[w] = True
                w = int(self.a[w])
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    def order(self) -> int:
        from math import lcm
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __eq__(self, other):
        return isinstance(other, Perm) and np.array_equal(self.a, other.a)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.a.tobytes()))
        return self._hash

    def __repr__(self):
        return f"Perm({self.cycle_string()})"


class _Level:
    """One stabilizer-chain level: base point, generators, Schreier tree."""

    __slots__ = ("base", "gens", "ginv", "tree", "orbit_order",
                 "_reps", "_repinvs", "processed")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[np.ndarray] = []
        self.ginv: list[np.ndarray] = []
        # tree[x] = (parent, gen index, inverted?) with tree[base] = None
        self.tree: dict[int, Optional[tuple[int, int, bool]]] = {base: None}
        self.orbit_order: list[int] = [base]
        self._reps: dict[int, np.ndarray] = {}
        self._repinvs: dict[int, np.ndarray] = {}
        self.processed: set[tuple[int, int]] = set()

    def rep(self, x: int, degree: int) -> np.ndarray:
        """Permutation moving base -> x, composed along the Schreier tree."""
        if x == self.base:
            return np.arange(degree, dtype=np.int32)
        got = self._reps.get(x)
        if got is not None:
            return got
        path = []
        w = x
        while w != self.base:
            parent, gi, inv = self.tree[w]
            path.append((gi, inv))
            w = parent
        r = np.arange(degree, dtype=np.int32)
        for gi, inv in reversed(path):
            arr = self.ginv[gi] if inv else self.gens[gi]
            r = compose(r, arr)
        self._reps[x] = r
        return r

    def repinv(self, x: int, degree: int) -> np.ndarray:
        got = self._repinvs.get(x)
        if got is None:
            got = invert(self.rep(x, degree))
            self._repinvs[x] = got
        return got

    def grow_orbit(self) -> list[int]:
        """Extend the orbit with the current generators; new points returned."""
        new_points = []
        frontier = deque(self.orbit_order)
        while frontier:
            x = frontier.popleft()
            for gi in range(len(self.gens)):
                for inv, arr in ((False, self.gens[gi]), (True, self.ginv[gi])):
                    y = int(arr[x])
                    if y not in self.tree:
                        self.tree[y] = (x, gi, inv)
                        self.orbit_order.append(y)
                        new_points.append(y)
                        frontier.append(y)
        return new_points


class _Chain:
    def __init__(self, degree: int, gens: Sequence[np.ndarray],
                 base_prefix: Sequence[int] = (),
                 budget: Optional[int] = None):
        self.degree = degree
        self.base_prefix = tuple(base_prefix)
        # prescribed base points get their levels up front so the base order
        # is exactly the prefix; extra points are appended after it
        self.levels: list[_Level] = [_Level(b, degree) for b in self.base_prefix]
        self._work = 0
        self._budget = budget
        ident = np.arange(degree, dtype=np.int32)
        todo = deque()
        for g in gens:
            if not np.array_equal(g, ident):
                todo.append((0, np.asarray(g, dtype=np.int32)))
        while todo:
            start, p = todo.popleft()
            self._incorporate(start, p, todo)

    def _charge(self, amount: int = 1):
        self._work += amount
        if self._budget is not None and self._work > self._budget:
            raise BudgetExceededError("stabilizer chain budget exhausted")

    def _sift_arr(self, p: np.ndarray, start: int = 0):
        """Reduce p through levels >= start; return (residue, level)."""
        for j in range(start, len(self.levels)):
            self._charge()
            lvl = self.levels[j]
            x = int(p[lvl.base])
            if x == lvl.base:
                continue
            if x not in lvl.tree:
                return p, j
            p = compose(p, lvl.repinv(x, self.degree))
        return p, len(self.levels)

    def _incorporate(self, start: int, p: np.ndarray, todo: deque):
        residue, j = self._sift_arr(p, start)
        if np.array_equal(residue, np.arange(self.degree, dtype=np.int32)):
            return
        if j == len(self.levels):
            moved = np.nonzero(
                residue != np.arange(self.degree, dtype=np.int32))[0]
            self.levels.append(_Level(int(moved[0]), self.degree))
        # the residue fixes the first j base points, so it is a strong
        # generator for every level up to and including j; each such level
        # stores the full generator list of its stabilizer subgroup
        rinv = invert(residue)
        for i in range(j + 1):
            lvl = self.levels[i]
            lvl.gens.append(residue)
            lvl.ginv.append(rinv)
            lvl.grow_orbit()
            for x in lvl.orbit_order:
                for k in range(len(lvl.gens)):
                    if (x, k) in lvl.processed:
                        continue
                    lvl.processed.add((x, k))
                    self._charge()
                    rx = lvl.rep(x, self.degree)
                    g = lvl.gens[k]
                    y = int(g[x])
                    s = compose(compose(rx, g),
                                lvl.repinv(y, self.degree))
                    if not np.array_equal(
                            s, np.arange(self.degree, dtype=np.int32)):
                        todo.append((i + 1, s))

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.orbit_order)
        return out

    def contains(self, p: np.ndarray) -> bool:
        residue, _ = self._sift_arr(np.asarray(p, dtype=np.int32))
        return bool(np.array_equal(residue,
                                   np.arange(self.degree, dtype=np.int32)))

    def level_group_gens(self, k: int) -> list[np.ndarray]:
        """Generators of the pointwise stabilizer of the first k base points."""
        if k >= len(self.levels):
            return []
        return list(self.levels[k].gens)


class PermGroup:
    """Group generated by a list of permutations of 0..n-1."""

    def __init__(self, gens: Sequence[Perm], degree: Optional[int] = None,
                 known_order: Optional[int] = None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise ParameterError("degree required for the trivial group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ParameterError("mixed permutation degrees")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        # callers that know the order from structure (quotient lifts) pass
        # it in so order() never has to build a chain over huge groups
        self._known_order = known_order
        self._chains: dict[tuple, _Chain] = {}

    def _gen_arrays(self) -> list[np.ndarray]:
        return [g.a for g in self.generators]

    def chain(self, base_prefix: Sequence[int] = (),
              budget: Optional[int] = None) -> _Chain:
        key = tuple(base_prefix)
        got = self._chains.get(key)
        if got is None:
            got = _Chain(self.degree, self._gen_arrays(), key, budget)
            self._chains[key] = got
        return got

    def order(self) -> int:
        if self._known_order is not None:
            return self._known_order
        return self.chain().order()

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            return False
        return self.chain().contains(p.a)

    def vertex_orbits(self) -> list[tuple[int, ...]]:
        labels = orbit_partition(self.degree, self._gen_arrays())
        buckets: dict[int, list[int]] = {}
        for v in range(self.degree):
            buckets.setdefault(int(labels[v]), []).append(v)
        return [tuple(buckets[k]) for k in sorted(buckets)]

    def orbits_on(self, items: Sequence, act: Callable) -> list[list]:
        """Orbits on arbitrary items; act(gen_arr, item) -> item."""
        index = {item: i for i, item in enumerate(items)}
        parent = list(range(len(items)))

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        for g in self._gen_arrays():
            for i, item in enumerate(items):
                j = index[act(g, item)]
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        buckets: dict[int, list] = {}
        for i, item in enumerate(items):
            buckets.setdefault(find(i), []).append(item)
        return [buckets[k] for k in sorted(buckets)]

    def edge_orbits(self, edges: Sequence[tuple[int, int]]) -> list[list]:
        def act(g, e):
            a, b = int(g[e[0]]), int(g[e[1]])
            return (a, b) if a < b else (b, a)
        return self.orbits_on(list(edges), act)

    def dart_orbits(self, darts: Sequence[tuple[int, int]]) -> list[list]:
        def act(g, d):
            return (int(g[d[0]]), int(g[d[1]]))
        return self.orbits_on(list(darts), act)

    def is_transitive(self) -> bool:
        return len(self.vertex_orbits()) == 1 if self.degree else True

    def point_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        """Pointwise stabilizer of the given points."""
        chain = self.chain(tuple(points))
        gens = chain.level_group_gens(len(points))
        return PermGroup([Perm(g) for g in gens], self.degree)

    def transporter(self, src: Sequence[int], dst: Sequence[int],
                    budget: Optional[int] = None):
        """A group element mapping src[i] -> dst[i] for all i, or None.

        The chain is built with src as prescribed base, which makes the
        search a deterministic walk: at each level the transversal element
        is forced, and failure proves absence.  A budget bounds chain
        construction (BudgetExceededError propagates to the caller).
        """
        src = [int(x) for x in src]
        dst = [int(x) for x in dst]
        if len(src) != len(dst):
            raise ParameterError("transporter tuples differ in length")
        chain = self.chain(tuple(src), budget=budget)
        targets = list(dst)
        parts = []
        consumed = 0
        for lvl in chain.levels:
            if consumed >= len(src):
                break
            if lvl.base != src[consumed]:
                break
            x = targets[consumed]
            if x not in lvl.tree:
                return None
            if x != lvl.base:
                u = lvl.rep(x, self.degree)
                uinv = lvl.repinv(x, self.degree)
                for j in range(consumed + 1, len(targets)):
                    targets[j] = int(uinv[targets[j]])
                parts.append(u)
            consumed += 1
        acc = np.arange(self.degree, dtype=np.int32)
        for u in reversed(parts):
            acc = compose(acc, u)
        for i in range(len(src)):
            if int(acc[src[i]]) != dst[i]:
                return None
        return Perm(acc)

    def elements(self, limit: int = 1_000_000) -> list[Perm]:
        """Every group element, if the order is within limit."""
        if self.order() > limit:
            raise BudgetExceededError(
                f"group order {self.order()} exceeds enumeration limit {limit}")
        chain = self.chain()
        elems = [np.arange(self.degree, dtype=np.int32)]
        for lvl in reversed(chain.levels):
            new = []
            for h in elems:
                for x in lvl.orbit_order:
                    new.append(compose(h, lvl.rep(x, self.degree)))
            elems = new
        return [Perm(e) for e in elems]

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"
