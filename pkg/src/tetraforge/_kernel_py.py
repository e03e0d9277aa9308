"""Pure-Python compute kernels.

These are the hot loops of the package: equitable partition refinement,
permutation composition, orbit closure, and leaf-certificate packing.  The
compiled module ``_speedups`` implements the same five functions with the
same contracts; ``_kernel`` picks whichever is importable.  Keep the two in
lockstep — the parity test compares them on a shared corpus.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def refine(n, indptr, indices, colors, splitters=None):
    """Coarsest equitable refinement of a colored partition.

    ``colors`` must be contiguous values 0..k-1 constant on cells, with the
    color value giving the cell's rank in partition order.  ``splitters``
    seeds the worklist with the given color values (None = every cell).

    Returns ``(colors_out, ncells, trace)`` where colors_out is again
    contiguous and partition-ordered and ``trace`` is a list of ints that is
    invariant under isomorphism (cell positions, fragment count keys and
    sizes for every split event).
    """
    if n == 0:
        return np.zeros(0, dtype=np.int32), 0, [-1, 0]
    ncells = int(max(colors)) + 1
    csize = [0] * ncells
    for c in colors:
        csize[c] += 1
    cstart = [0] * ncells
    s = 0
    for c in range(ncells):
        cstart[c] = s
        s += csize[c]
    order = [0] * n
    fill = list(cstart)
    for v in range(n):
        c = colors[v]
        order[fill[c]] = v
        fill[c] += 1
    pos = [0] * n
    cell_of = [0] * n     # start position of the containing cell
    cell_len = [0] * n    # valid at start positions only
    for c in range(ncells):
        st = cstart[c]
        cell_len[st] = csize[c]
        for i in range(st, st + csize[c]):
            v = order[i]
            pos[v] = i
            cell_of[v] = st

    in_queue = [False] * n
    queue = deque()
    if splitters is None:
        seed = list(cstart)
    else:
        seed = [cstart[int(c)] for c in sorted(set(int(x) for x in splitters))]
    for st in seed:
        queue.append(st)
        in_queue[st] = True

    trace = []
    cnt = [0] * n
    while queue:
        if ncells == n:
            break
        ws = queue.popleft()
        in_queue[ws] = False
        members = order[ws:ws + cell_len[ws]]
        touched = []
        for u in members:
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if cnt[w] == 0:
                    touched.append(w)
                cnt[w] += 1
        bycell = {}
        for w in touched:
            cs = cell_of[w]
            if cs in bycell:
                bycell[cs].append(w)
            else:
                bycell[cs] = [w]
        for cs in sorted(bycell):
            clen = cell_len[cs]
            if clen == 1:
                continue
            # group the full cell by count; untouched members count 0
            groups = {}
            for i in range(cs, cs + clen):
                w = order[i]
                k = cnt[w]
                if k in groups:
                    groups[k].append(w)
                else:
                    groups[k] = [w]
            if len(groups) == 1:
                continue
            keys = sorted(groups)
            trace.append(cs)
            trace.append(len(keys))
            sizes = [len(groups[k]) for k in keys]
            maxidx = sizes.index(max(sizes))
            parent_q = in_queue[cs]
            p = cs
            for gi, k in enumerate(keys):
                grp = groups[k]
                trace.append(k)
                trace.append(len(grp))
                cell_len[p] = len(grp)
                st = p
                for w in grp:
                    order[st] = w
                    pos[w] = st
                    cell_of[w] = p
                    st += 1
                if gi > 0:
                    ncells += 1
                    # queue rule: if the parent was pending, all fragments
                    # join it (fragment 0 inherits the parent's entry);
                    # otherwise all but one largest fragment join.
                    if parent_q or gi != maxidx:
                        queue.append(p)
                        in_queue[p] = True
                elif not parent_q and gi != maxidx:
                    queue.append(p)
                    in_queue[p] = True
                p += len(grp)
        for w in touched:
            cnt[w] = 0

    colors_out = np.empty(n, dtype=np.int32)
    cid = 0
    i = 0
    while i < n:
        L = cell_len[i]
        for j in range(i, i + L):
            colors_out[order[j]] = cid
        cid += 1
        i += L
    trace.append(-1)
    trace.append(ncells)
    return colors_out, ncells, trace


def compose(p, q):
    """Right-action product: v -> q[p[v]] (p applied first)."""
    return q[p]


def invert(p):
    out = np.empty_like(p)
    out[p] = np.arange(len(p), dtype=p.dtype)
    return out


def orbit_partition(n, gens):
    """Union-find orbit labels (smallest member) under a list of perms."""
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for g in gens:
        for v in range(n):
            a, b = find(v), find(int(g[v]))
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    out = np.empty(n, dtype=np.int32)
    for v in range(n):
        out[v] = find(v)
    return out


def cert_bytes(adj, lab):
    """Pack the relabeled upper-triangle adjacency into bytes.

    adj is a dense boolean matrix, lab[v] the new label of v.  Bit order is
    row-major over pairs (i, j), i < j, of new labels.
    """
    inv = invert(np.asarray(lab, dtype=np.int32))
    moved = adj[np.ix_(inv, inv)]
    iu = np.triu_indices(len(inv), 1)
    return np.packbits(moved[iu]).tobytes()
