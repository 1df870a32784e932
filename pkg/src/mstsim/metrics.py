"""Component statistics, exact diameters, typical distances, and path bounds.

All distances are hop counts.  Diameters are exact (double BFS on trees,
all-source BFS on graphs): the scaling experiments fit exponents from mean
diameters, so estimator bias is not acceptable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import bfs_from, build_csr, eccentricities, union_roots
from .graphgen import GraphSnapshot
from .mst import Forest
from .seeding import as_rng
from .weights import WeightVector

__all__ = [
    "ComponentStats",
    "component_stats",
    "tree_diameter",
    "graph_diameter",
    "typical_distance",
    "excess_height_bound",
    "diam_growth_bound",
    "write_component_stats",
]


@dataclass(frozen=True)
class ComponentStats:
    """Size, weight, surplus, and (optionally) diameters of one component."""

    size: int
    weight: float
    surplus: int
    diameter: int | None = None
    tree_diameter: int | None = None

    def __post_init__(self):
        if self.size < 1 or self.weight <= 0 or self.surplus < 0:
            raise ValueError("component stats out of range")


def component_stats(
    g: GraphSnapshot,
    v: WeightVector,
    *,
    diameters: bool = False,
    forest: Forest | None = None,
) -> list[ComponentStats]:
    """Per-component records, sorted by size descending.

    Surplus is edges - nodes + 1.  Exact graph diameters are optional
    (all-source BFS; affordable for critical-regime component sizes, not
    for a supercritical giant).  If a spanning `forest` of g is supplied,
    each record also carries the tree diameter of its component.
    """
    if g.n != v.n:
        raise ValueError("snapshot and weight vector disagree on n")
    roots = union_roots(g.n, g.edge_i, g.edge_j)
    labels = np.unique(roots, return_inverse=True)[1]
    k = int(labels.max()) + 1
    sizes = np.bincount(labels, minlength=k)
    weights = np.bincount(labels, weights=v.weights, minlength=k)
    edges = np.bincount(labels[g.edge_i], minlength=k)
    surplus = edges - sizes + 1

    diam = np.full(k, -1, dtype=np.int64)
    if diameters:
        indptr, nbr, _ = build_csr(g.n, g.edge_i, g.edge_j, g.capacity)
        ecc = eccentricities(indptr, nbr, g.n)
        np.maximum.at(diam, labels, ecc)

    tdiam = np.full(k, -1, dtype=np.int64)
    if forest is not None:
        if forest.n != g.n:
            raise ValueError("forest and snapshot disagree on n")
        for lbl in range(k):
            member = int(np.argmax(labels == lbl))
            tdiam[lbl] = _double_bfs(forest, member)

    order = np.lexsort((np.arange(k), -sizes))
    return [
        ComponentStats(
            size=int(sizes[lbl]),
            weight=float(weights[lbl]),
            surplus=int(surplus[lbl]),
            diameter=int(diam[lbl]) if diameters else None,
            tree_diameter=int(tdiam[lbl]) if forest is not None else None,
        )
        for lbl in order
    ]


def _double_bfs(f: Forest, start: int) -> int:
    """Exact diameter of the tree component of `start` (two BFS sweeps)."""
    indptr, nbr, _ = f.adjacency
    dist = np.full(f.n, -1, dtype=np.int64)
    queue = np.empty(f.n, dtype=np.int64)
    far, visited = bfs_from(indptr, nbr, start, dist, queue)
    dist[queue[:visited]] = -1
    far2, _ = bfs_from(indptr, nbr, far, dist, queue)
    return int(dist[far2])


def tree_diameter(f: Forest, component: int | None = None) -> int:
    """Exact diameter of a tree via double BFS.

    With `component=None` the forest must be a single tree; otherwise the
    diameter of the given component label is returned.
    """
    if component is None:
        if f.n_components != 1:
            raise ValueError("forest is not a single tree; pass a component label")
        start = 0
    else:
        members = np.flatnonzero(f.labels == component)
        if members.size == 0:
            raise ValueError(f"no component labeled {component}")
        start = int(members[0])
    return _double_bfs(f, start)


def graph_diameter(g: GraphSnapshot) -> int:
    """Max over components of the largest hop distance (exact, all-source BFS)."""
    if g.m == 0:
        return 0
    indptr, nbr, _ = build_csr(g.n, g.edge_i, g.edge_j, g.capacity)
    return int(eccentricities(indptr, nbr, g.n).max())


def typical_distance(
    f: Forest, pairs: int, seed, component: int | None = None
) -> np.ndarray:
    """Hop distances between `pairs` uniformly drawn node pairs of a tree.

    Pairs are drawn with replacement across pairs; within a pair the two
    nodes are distinct (equal draws are rejected and redrawn).  With
    `component=None` the forest must be a single tree with >= 2 nodes.
    """
    if pairs < 1:
        raise ValueError("pairs must be positive")
    if component is None:
        if f.n_components != 1:
            raise ValueError("forest is not a single tree; pass a component label")
        members = np.arange(f.n)
    else:
        members = np.flatnonzero(f.labels == component)
    if members.size < 2:
        raise ValueError("tree must have at least 2 nodes")
    rng = as_rng(seed)
    indptr, nbr, _ = f.adjacency
    dist = np.full(f.n, -1, dtype=np.int64)
    queue = np.empty(f.n, dtype=np.int64)
    out = np.empty(pairs, dtype=np.int64)
    for k in range(pairs):
        u = int(members[rng.integers(members.size)])
        v = u
        while v == u:
            v = int(members[rng.integers(members.size)])
        _, visited = bfs_from(indptr, nbr, u, dist, queue)
        out[k] = dist[v]
        dist[queue[:visited]] = -1
    return out


def excess_height_bound(h: int, q: int) -> int:
    """Longest-path bound 2h(q+1) + q for a connected graph with a height-h spanning tree and surplus q."""
    if h < 0 or q < 0:
        raise ValueError("h and q must be non-negative")
    return 2 * h * (q + 1) + q


def diam_growth_bound(diam_sub: int, lp_rest: int) -> int:
    """Diameter bound diam' + 2 lp + 2 for a connected graph nesting a connected subgraph.

    `diam_sub` is the subgraph diameter; `lp_rest` the longest path of the
    graph with the subgraph's nodes (and incident edges) removed.
    """
    if diam_sub < 0 or lp_rest < 0:
        raise ValueError("inputs must be non-negative")
    return diam_sub + 2 * lp_rest + 2


def write_component_stats(records: list[ComponentStats], path) -> None:
    """CSV export: one row per component, ranked by size."""
    with open(path, "w") as fh:
        fh.write("rank,size,weight,surplus,diameter\n")
        for rank, r in enumerate(records, start=1):
            d = "" if r.diameter is None else r.diameter
            fh.write(f"{rank},{r.size},{r.weight!r},{r.surplus},{d}\n")
