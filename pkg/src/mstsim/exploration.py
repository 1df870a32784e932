"""Breadth-first walk with size-biased root choice, and its walk processes.

The walk explores one node per step.  A node's children are its not yet
discovered neighbors, taken in increasing capacity order; when the
discovered set empties, a new component root is drawn among the remaining
nodes with probability proportional to weight.  The load-bearing records
are the two walk processes: the raw walk starts at 1 and moves by
(children - 1) per step, and the reflected walk is the same clamped below
at 1.  New strict minima of the raw walk mark component boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphgen import GraphSnapshot
from .mst import Forest, _labels_from_roots
from ._kernels import union_roots
from .sampling import FenwickSampler
from .seeding import as_rng
from .weights import WeightVector

__all__ = [
    "ExplorationTrace",
    "bfw",
    "size_biased_draw",
    "excursion_components",
    "exploration_forest",
    "write_trace",
]


@dataclass(frozen=True)
class ExplorationTrace:
    """Record of one breadth-first walk.

    order[t] is the node explored at step t (0-based); children[t] its
    child count; walk has length n+1 with walk[0] = 1 and increments
    children[t] - 1; reflected is the same clamped at 1.  component_starts
    holds the 0-based steps at which a new component was discovered.
    parent maps each node to its walk parent (-1 for roots) and parent_cap
    carries the capacity of that edge (nan for roots).
    """

    order: np.ndarray
    children: np.ndarray
    walk: np.ndarray
    reflected: np.ndarray
    component_starts: np.ndarray
    parent: np.ndarray
    parent_cap: np.ndarray

    def __post_init__(self):
        n = self.order.size
        if sorted(self.order.tolist()) != list(range(n)):
            raise ValueError("order must be a permutation of 0..n-1")
        if self.walk.size != n + 1 or self.walk[0] != 1:
            raise ValueError("walk must have length n+1 and start at 1")
        if np.any(np.diff(self.walk) != self.children - 1):
            raise ValueError("walk increments must equal children - 1")

    @property
    def n(self) -> int:
        return self.order.size

    def component_sizes(self) -> np.ndarray:
        bounds = np.append(self.component_starts, self.n)
        return np.diff(bounds)


def bfw(g: GraphSnapshot, v: WeightVector, seed) -> ExplorationTrace:
    """Breadth-first walk of a snapshot with size-biased root sampling."""
    if g.n != v.n:
        raise ValueError("snapshot and weight vector disagree on n")
    n = g.n
    indptr, nbr, cap = g.adjacency  # per-node neighbors sorted by (capacity, neighbor)
    rng = as_rng(seed)
    sampler = FenwickSampler(v.weights)

    order = np.empty(n, dtype=np.int64)
    children = np.empty(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    parent_cap = np.full(n, np.nan)
    discovered = np.zeros(n, dtype=bool)
    starts = []

    filled = 0  # discovered so far
    for t in range(n):
        if t == filled:  # discovered set exhausted: draw a new root
            root = sampler.draw(rng)
            sampler.remove(root)
            discovered[root] = True
            order[filled] = root
            filled += 1
            starts.append(t)
        u = int(order[t])
        c = 0
        for k in range(indptr[u], indptr[u + 1]):
            w_node = int(nbr[k])
            if not discovered[w_node]:
                discovered[w_node] = True
                sampler.remove(w_node)
                order[filled] = w_node
                parent[w_node] = u
                parent_cap[w_node] = cap[k]
                filled += 1
                c += 1
        children[t] = c

    walk = np.empty(n + 1, dtype=np.int64)
    walk[0] = 1
    np.cumsum(children - 1, out=walk[1:])
    walk[1:] += 1
    reflected = walk - np.minimum.accumulate(walk) + 1
    return ExplorationTrace(
        order,
        children,
        walk,
        reflected,
        np.array(starts, dtype=np.int64),
        parent,
        parent_cap,
    )


def size_biased_draw(v: WeightVector, excluded, seed) -> int:
    """Draw a node outside `excluded` with probability proportional to its weight."""
    w = v.weights.copy()
    idx = np.fromiter(excluded, dtype=np.int64) if len(excluded) else np.empty(0, np.int64)
    w[idx] = 0.0
    total = w.sum()
    if total <= 0:
        raise ValueError("every node is excluded")
    rng = as_rng(seed)
    return int(rng.choice(v.n, p=w / total))


def excursion_components(t: ExplorationTrace) -> list[tuple[int, int]]:
    """(start, size) per component, recovered purely from the raw walk.

    The walk only ever steps down by one, so it hits a new strict minimum
    exactly when a component's exploration finishes.  The result must agree
    with the trace's own bookkeeping or the trace is inconsistent.
    """
    walk = t.walk
    run_min = np.minimum.accumulate(walk)
    ends = np.flatnonzero(walk[1:] < run_min[:-1]) + 1  # walk indices of new minima
    starts = np.concatenate(([0], ends[:-1])) if ends.size else np.empty(0, np.int64)
    out = list(zip(starts.tolist(), np.diff(np.concatenate(([0], ends))).tolist()))
    if [s for s, _ in out] != t.component_starts.tolist():
        raise RuntimeError("walk excursions disagree with recorded component starts")
    if sum(sz for _, sz in out) != t.n:
        raise RuntimeError("excursion sizes do not sum to n")
    return out


def exploration_forest(t: ExplorationTrace) -> Forest:
    """The spanning forest defined by the walk's parent map."""
    child = np.flatnonzero(t.parent >= 0)
    par = t.parent[child]
    ei = np.minimum(child, par)
    ej = np.maximum(child, par)
    cap = t.parent_cap[child]
    order = np.lexsort((ej, ei, cap))
    ei, ej, cap = ei[order], ej[order], cap[order]
    roots = union_roots(t.n, ei, ej)
    return Forest(t.n, ei, ej, cap, _labels_from_roots(roots))


def write_trace(t: ExplorationTrace, path) -> None:
    """Columnar export: step, v, c, Lprime, L, new_component (1-based step and node)."""
    starts = set(t.component_starts.tolist())
    with open(path, "w") as fh:
        fh.write("step\tv\tc\tLprime\tL\tnew_component\n")
        for k in range(t.n):
            fh.write(
                f"{k + 1}\t{int(t.order[k]) + 1}\t{int(t.children[k])}\t"
                f"{int(t.walk[k + 1])}\t{int(t.reflected[k + 1])}\t{int(k in starts)}\n"
            )
