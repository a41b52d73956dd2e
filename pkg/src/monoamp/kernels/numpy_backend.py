"""Pure-numpy fallback kernels (matching via scipy.sparse.csgraph).

Same contracts as ``numba_backend``; see that module's docstring.
"""

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import maximum_bipartite_matching as _scipy_matching


def first_violated_edge(table, n):
    size = table.shape[0]
    idx = np.arange(size, dtype=np.int64)
    ones = table == 1
    best_u = -1
    best_i = -1
    for i in range(n):
        bit = 1 << (n - 1 - i)
        lo = idx[(idx & bit) == 0]
        bad = lo[ones[lo] & (table[lo | bit] == 0)]
        if bad.size and (best_u == -1 or (int(bad[0]), i) < (best_u, best_i)):
            best_u = int(bad[0])
            best_i = i
    return best_u, best_i


def violating_pairs(table, n):
    # For each difference mask d, pair every a with table[a]=1 disjoint from
    # d against b = a|d. Total work sum_d 2^(n-|d|) = 3^n, same as the walk
    # the numba backend does point by point.
    size = table.shape[0]
    idx = np.arange(size, dtype=np.int64)
    ones_idx = idx[table == 1]
    out_l = []
    out_r = []
    for d in range(1, size):
        a = ones_idx[(ones_idx & d) == 0]
        if a.size == 0:
            continue
        b = a | d
        keep = table[b] == 0
        if keep.any():
            out_l.append(a[keep])
            out_r.append(b[keep])
    if not out_l:
        empty = np.empty(0, np.int64)
        return empty, empty.copy()
    return np.concatenate(out_l), np.concatenate(out_r)


def maximum_matching(n_left, n_right, indptr, indices):
    match_l = np.full(n_left, -1, np.int64)
    match_r = np.full(n_right, -1, np.int64)
    if n_left == 0 or n_right == 0 or len(indices) == 0:
        return match_l, match_r
    graph = sp.csr_matrix(
        (np.ones(len(indices), dtype=np.int8), indices, indptr),
        shape=(n_left, n_right),
    )
    match_l = _scipy_matching(graph, perm_type="column").astype(np.int64)
    matched = np.nonzero(match_l >= 0)[0]
    match_r[match_l[matched]] = matched
    return match_l, match_r


def koenig_cover(n_left, n_right, indptr, indices, match_l, match_r):
    deg = np.diff(indptr)
    edge_l = np.repeat(np.arange(n_left, dtype=np.int64), deg)
    edge_r = indices.astype(np.int64, copy=False)
    non_matching = match_l[edge_l] != edge_r

    in_z_l = match_l == -1
    in_z_r = np.zeros(n_right, dtype=bool)
    while True:
        reach = np.zeros(n_right, dtype=bool)
        live = non_matching & in_z_l[edge_l]
        reach[edge_r[live]] = True
        new_r = reach & ~in_z_r
        if not new_r.any():
            break
        in_z_r |= new_r
        back = match_r[new_r]
        back = back[back >= 0]
        new_l = np.zeros(n_left, dtype=bool)
        new_l[back] = True
        new_l &= ~in_z_l
        if not new_l.any():
            break
        in_z_l |= new_l
    return ~in_z_l, in_z_r
