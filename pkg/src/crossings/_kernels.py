"""Compiled inner loops (numba). Positions are 1-based; vertex arrays 0-based."""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def fisher_yates(draws):
    """Turn pre-drawn bounded integers into permutations of ``1..n``.

    ``draws[s, t]`` must lie in ``0..n-1-t``; step ``t`` swaps slot
    ``n-1-t`` with slot ``draws[s, t]``.
    """
    samples, steps = draws.shape
    n = steps + 1
    out = np.empty((samples, n), dtype=np.int64)
    for s in range(samples):
        for v in range(n):
            out[s, v] = v + 1
        for t in range(steps):
            i = n - 1 - t
            j = draws[s, t]
            tmp = out[s, i]
            out[s, i] = out[s, j]
            out[s, j] = tmp
    return out


@njit(cache=True, nogil=True)
def crossings_sweep(positions, indptr, indices):
    """Crossing counts for each row of ``positions`` (shape samples x n).

    Sweeps positions left to right.  A Fenwick tree holds the right
    endpoints of edges whose left endpoint has already been passed; an edge
    (p, r) crosses every stored edge whose right endpoint lies strictly
    between p and r.
    """
    samples, n = positions.shape
    out = np.zeros(samples, dtype=np.int64)
    tree = np.zeros(n + 1, dtype=np.int64)
    inv = np.empty(n + 1, dtype=np.int64)
    for s in range(samples):
        pos = positions[s]
        for v in range(n):
            inv[pos[v]] = v
        for i in range(n + 1):
            tree[i] = 0
        total = 0
        for p in range(1, n + 1):
            v = inv[p]
            # prefix count up to p, shared by every edge leaving v
            below_p = 0
            i = p
            while i > 0:
                below_p += tree[i]
                i -= i & -i
            for k in range(indptr[v], indptr[v + 1]):
                r = pos[indices[k]]
                if r > p:
                    below_r = 0
                    i = r - 1
                    while i > 0:
                        below_r += tree[i]
                        i -= i & -i
                    total += below_r - below_p
            for k in range(indptr[v], indptr[v + 1]):
                r = pos[indices[k]]
                if r > p:
                    i = r
                    while i <= n:
                        tree[i] += 1
                        i += i & -i
        out[s] = total
    return out
