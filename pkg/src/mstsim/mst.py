"""Minimum spanning forests by two routes, plus the increasing forest process.

`kruskal` is the production path (sorted scan + union-find).  `edge_deletion`
is the bombing construction: scan edges by *decreasing* capacity and delete
every non-bridge.  Both must return the identical edge set under the
deterministic capacity tiebreak; keeping both gives a built-in oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._kernels import kruskal_select, union_roots
from .graphgen import CapacitySource, GraphSnapshot

__all__ = ["Forest", "kruskal", "edge_deletion", "forest_process", "write_forest"]


@dataclass(frozen=True)
class Forest:
    """A spanning forest: acyclic edge set plus per-node component labels."""

    n: int
    edge_i: np.ndarray
    edge_j: np.ndarray
    capacity: np.ndarray
    labels: np.ndarray  # component label per node, 0..k-1

    def __post_init__(self):
        if self.labels.shape != (self.n,):
            raise ValueError("labels must have one entry per node")
        k = int(self.labels.max()) + 1 if self.n else 0
        if self.edge_i.size != self.n - k:
            raise ValueError("edge count must equal n - number of components")

    @property
    def m(self) -> int:
        return self.edge_i.size

    @property
    def n_components(self) -> int:
        return int(self.labels.max()) + 1

    @cached_property
    def component_roots(self) -> np.ndarray:
        """Smallest node index in each component (canonical root choice)."""
        roots = np.full(self.n_components, self.n, dtype=np.int64)
        np.minimum.at(roots, self.labels, np.arange(self.n))
        return roots

    @property
    def total_capacity(self) -> float:
        return float(self.capacity.sum())

    @cached_property
    def adjacency(self):
        from ._kernels import build_csr

        return build_csr(self.n, self.edge_i, self.edge_j, self.capacity)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(zip(self.edge_i.tolist(), self.edge_j.tolist()))


def _labels_from_roots(roots: np.ndarray) -> np.ndarray:
    return np.unique(roots, return_inverse=True)[1].astype(np.int64)


def kruskal(g: GraphSnapshot) -> Forest:
    """Minimum spanning forest by ascending-capacity scan with union-find."""
    keep, roots = kruskal_select(g.n, g.edge_i, g.edge_j)
    return Forest(
        g.n,
        g.edge_i[keep],
        g.edge_j[keep],
        g.capacity[keep],
        _labels_from_roots(roots),
    )


def edge_deletion(g: GraphSnapshot) -> Forest:
    """Minimum spanning forest by bombing: kill every non-bridge, largest capacity first.

    O(m * component) with a BFS bridge test per edge; exists for fidelity and
    as an oracle against `kruskal`, not as the production path.
    """
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for a, b in zip(g.edge_i.tolist(), g.edge_j.tolist()):
        adj[a].add(b)
        adj[b].add(a)
    kept = np.ones(g.m, dtype=bool)
    # snapshot edges are sorted ascending by (capacity, i, j); walk them backwards
    for k in range(g.m - 1, -1, -1):
        a, b = int(g.edge_i[k]), int(g.edge_j[k])
        adj[a].discard(b)
        adj[b].discard(a)
        if _reachable(adj, a, b):
            kept[k] = False  # not a bridge: delete for good
        else:
            adj[a].add(b)
            adj[b].add(a)
    roots = union_roots(g.n, g.edge_i[kept], g.edge_j[kept])
    return Forest(
        g.n,
        g.edge_i[kept],
        g.edge_j[kept],
        g.capacity[kept],
        _labels_from_roots(roots),
    )


def _reachable(adj: list[set[int]], src: int, dst: int) -> bool:
    seen = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            return True
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return False


def forest_process(src: CapacitySource, ps) -> list[Forest]:
    """Spanning forests at each threshold in `ps`, nested by construction.

    A single ascending Kruskal scan makes all forests at once: the accepted
    edges with capacity at most p form the minimum spanning forest of the
    snapshot at p, so a cursor over the requested thresholds suffices.
    """
    ps = [float(p) for p in ps]
    if any(b <= a for a, b in zip(ps, ps[1:])):
        raise ValueError("thresholds must be strictly increasing")
    if not ps:
        return []
    if ps[0] < 0:
        raise ValueError("thresholds must be non-negative")
    if ps[-1] > src.p_max:
        raise ValueError(f"threshold {ps[-1]} exceeds the source range {src.p_max}")
    g = src.snapshot(ps[-1])
    keep, _ = kruskal_select(g.n, g.edge_i, g.edge_j)
    forests = []
    for p in ps:
        cut = int(np.searchsorted(g.capacity, p, side="right"))
        mask = keep[:cut]
        ei, ej, cap = g.edge_i[:cut][mask], g.edge_j[:cut][mask], g.capacity[:cut][mask]
        roots = union_roots(g.n, ei, ej)
        forests.append(Forest(g.n, ei, ej, cap, _labels_from_roots(roots)))
    return forests


def write_forest(f: Forest, path, p="-", mode="-", seed="-") -> None:
    """Forest export: the edge-list format plus a component-label column."""
    with open(path, "w") as fh:
        fh.write(f"{f.n} {p} {mode} {seed}\n")
        for i, j, c in zip(f.edge_i.tolist(), f.edge_j.tolist(), f.capacity.tolist()):
            fh.write(f"{i + 1}\t{j + 1}\t{c!r}\t{int(f.labels[i])}\n")
