"""Numba ``@njit`` kernels.

Shared contracts (both backends):

``first_violated_edge(table, n) -> (u, i)``
    First hypercube edge violating monotonicity, scanning points ``u`` in
    ascending table order and coordinates ``i = 0..n-1`` (coordinate 0 is
    the leftmost bit, i.e. bit ``n-1`` of the index). Returns ``(-1, -1)``
    if the table is monotone.

``violating_pairs(table, n) -> (lefts, rights)``
    Every pair ``a`` proper-submask-of ``b`` with ``table[a]=1`` and
    ``table[b]=0``. Order unspecified; callers canonicalize.

``maximum_matching(n_left, n_right, indptr, indices) -> (match_l, match_r)``
    Maximum bipartite matching over a CSR left-to-right adjacency,
    ``-1`` marking unmatched vertices.

``koenig_cover(n_left, n_right, indptr, indices, match_l, match_r)``
    Boolean masks ``(cover_l, cover_r)`` of a minimum vertex cover derived
    from a maximum matching by alternating reachability from the unmatched
    left vertices.
"""

import numpy as np
from numba import njit

_INF = np.int64(2**62)


@njit(cache=True)
def first_violated_edge(table, n):
    size = table.shape[0]
    for u in range(size):
        if table[u] == 1:
            for i in range(n):
                bit = 1 << (n - 1 - i)
                if u & bit == 0 and table[u | bit] == 0:
                    return u, i
    return -1, -1


@njit(cache=True)
def violating_pairs(table, n):
    # Two passes over the 3^n (point, superset) walks: count, then fill.
    size = table.shape[0]
    full = size - 1
    count = 0
    for a in range(size):
        if table[a] == 1:
            free = full & ~a
            s = free
            while s != 0:
                if table[a | s] == 0:
                    count += 1
                s = (s - 1) & free
    lefts = np.empty(count, np.int64)
    rights = np.empty(count, np.int64)
    pos = 0
    for a in range(size):
        if table[a] == 1:
            free = full & ~a
            s = free
            while s != 0:
                b = a | s
                if table[b] == 0:
                    lefts[pos] = a
                    rights[pos] = b
                    pos += 1
                s = (s - 1) & free
    return lefts, rights


@njit(cache=True)
def maximum_matching(n_left, n_right, indptr, indices):
    # Hopcroft-Karp with an iterative layered DFS.
    match_l = np.full(n_left, -1, np.int64)
    match_r = np.full(n_right, -1, np.int64)
    dist = np.empty(n_left, np.int64)
    queue = np.empty(n_left, np.int64)
    stack = np.empty(n_left + 1, np.int64)
    chosen = np.empty(n_left + 1, np.int64)
    cursor = np.empty(n_left, np.int64)

    while True:
        # BFS: layer the free left vertices, find the shortest augmenting depth.
        head = 0
        tail = 0
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue[tail] = u
                tail += 1
            else:
                dist[u] = _INF
        found = _INF
        while head < tail:
            u = queue[head]
            head += 1
            if dist[u] >= found:
                continue
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                w = match_r[v]
                if w == -1:
                    if found == _INF:
                        found = dist[u] + 1
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        if found == _INF:
            break

        # DFS: augment along vertex-disjoint shortest paths.
        for u in range(n_left):
            cursor[u] = indptr[u]
        for s in range(n_left):
            if match_l[s] != -1:
                continue
            top = 0
            stack[0] = s
            while top >= 0:
                u = stack[top]
                progressed = False
                while cursor[u] < indptr[u + 1]:
                    e = cursor[u]
                    cursor[u] += 1
                    v = indices[e]
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == found:
                            chosen[top] = v
                            for d in range(top, -1, -1):
                                match_l[stack[d]] = chosen[d]
                                match_r[chosen[d]] = stack[d]
                            top = -1
                            progressed = True
                            break
                    elif dist[w] == dist[u] + 1:
                        chosen[top] = v
                        top += 1
                        stack[top] = w
                        progressed = True
                        break
                if not progressed:
                    dist[u] = _INF
                    top -= 1
    return match_l, match_r


@njit(cache=True)
def koenig_cover(n_left, n_right, indptr, indices, match_l, match_r):
    # Alternating BFS: left-to-right on non-matching edges, back on matching
    # edges. Cover = (matched lefts never reached) + (rights reached).
    in_z_l = np.zeros(n_left, np.bool_)
    in_z_r = np.zeros(n_right, np.bool_)
    queue = np.empty(n_left, np.int64)
    tail = 0
    for u in range(n_left):
        if match_l[u] == -1:
            in_z_l[u] = True
            queue[tail] = u
            tail += 1
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            if v == match_l[u]:
                continue
            if not in_z_r[v]:
                in_z_r[v] = True
                w = match_r[v]
                if w != -1 and not in_z_l[w]:
                    in_z_l[w] = True
                    queue[tail] = w
                    tail += 1
    return ~in_z_l, in_z_r
