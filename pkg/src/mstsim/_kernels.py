"""Numba kernels for the hot loops: union-find scans and BFS.

Everything here operates on plain int64/float64 arrays so the callers in
`mst`, `metrics`, and `experiments` stay allocation-light at n ~ 10^6.
"""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = [
    "kruskal_select",
    "union_roots",
    "build_csr",
    "bfs_from",
    "eccentricities",
]


@njit(cache=True)
def kruskal_select(n, edge_i, edge_j):
    """Scan edges in the given order, keeping each edge that joins two components.

    Returns (keep mask, fully-compressed root per node).  With edges sorted
    by increasing capacity this is Kruskal's algorithm; the roots double as
    connected-component identifiers for the *input* graph.
    """
    parent = np.arange(n, dtype=np.int64)
    rank = np.zeros(n, dtype=np.int8)
    m = edge_i.shape[0]
    keep = np.zeros(m, dtype=np.bool_)
    for k in range(m):
        a = edge_i[k]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = edge_j[k]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            keep[k] = True
            if rank[a] < rank[b]:
                a, b = b, a
            parent[b] = a
            if rank[a] == rank[b]:
                rank[a] += 1
    roots = np.empty(n, dtype=np.int64)
    for x in range(n):
        r = x
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        roots[x] = r
    return keep, roots


@njit(cache=True)
def union_roots(n, edge_i, edge_j):
    """Connected-component root per node for the graph given by the edge list."""
    parent = np.arange(n, dtype=np.int64)
    rank = np.zeros(n, dtype=np.int8)
    for k in range(edge_i.shape[0]):
        a = edge_i[k]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = edge_j[k]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            if rank[a] < rank[b]:
                a, b = b, a
            parent[b] = a
            if rank[a] == rank[b]:
                rank[a] += 1
    roots = np.empty(n, dtype=np.int64)
    for x in range(n):
        r = x
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        roots[x] = r
    return roots


def build_csr(n, edge_i, edge_j, capacity):
    """Adjacency in CSR form with each node's neighbors sorted by (capacity, neighbor).

    The per-node capacity ordering is what the breadth-first walk consumes;
    ties (exactly equal capacities) fall back to the neighbor index, i.e.
    the global lexicographic edge order.
    """
    m = edge_i.shape[0]
    src = np.concatenate((edge_i, edge_j))
    dst = np.concatenate((edge_j, edge_i))
    cap2 = np.concatenate((capacity, capacity))
    order = np.lexsort((dst, cap2, src))
    deg = np.bincount(src, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    nbr = dst[order]
    cap_adj = cap2[order]
    return indptr, np.ascontiguousarray(nbr), np.ascontiguousarray(cap_adj)


@njit(cache=True)
def bfs_from(indptr, nbr, src, dist, queue):
    """BFS hop distances from `src` into `dist` (prefilled with -1).

    Returns (farthest node reached, number of nodes visited).  Only the
    component of `src` is touched, so `dist` can be reused across calls
    after resetting the visited prefix of `queue`.
    """
    head = 0
    tail = 0
    queue[tail] = src
    tail += 1
    dist[src] = 0
    far = src
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for t in range(indptr[u], indptr[u + 1]):
            v = nbr[t]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
                if du > dist[far]:
                    far = v
    return far, tail


@njit(cache=True)
def eccentricities(indptr, nbr, n):
    """Exact eccentricity of every node (max hop distance within its component)."""
    ecc = np.zeros(n, dtype=np.int64)
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for src in range(n):
        far, visited = bfs_from(indptr, nbr, src, dist, queue)
        ecc[src] = dist[far]
        for t in range(visited):
            dist[queue[t]] = -1
    return ecc
