"""Galton-Watson machinery: Poisson-offspring trees with labeled nodes,
label-collision pruning, i.i.d. edge cuts, and height-tail estimates.

The labeled tree with a red-coloring prune is the bridge between the
exploration trees of a snapshot and plain branching processes: generate a
tree whose node labels are i.i.d. size-biased draws and whose offspring
means are weight-driven, then keep only the nodes whose label has not been
seen on an earlier kept node (in breadth-first order).  The kept subtree
reproduces the law of an exploration tree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numba import njit

from .mst import Forest, _labels_from_roots
from ._kernels import union_roots
from .sampling import AliasSampler
from .seeding import as_rng

__all__ = [
    "GWTree",
    "CutConfig",
    "offspring_mean",
    "sample_gw",
    "color_prune",
    "edge_cut_prune",
    "height_tail",
    "snapshot_schedule",
    "constant_labels",
    "size_biased_labels",
]

MAX_SIZE_DEFAULT = 1_000_000
MAX_HEIGHT_DEFAULT = 10_000


@dataclass(frozen=True)
class GWTree:
    """A branching-process tree in breadth-first order.

    parent[k] is the BF index of node k's parent (-1 for the root), so
    parents always precede children.  child_count holds the number of
    children actually materialized; `truncated` is set when the size or
    height cap cut generation short.
    """

    parent: np.ndarray
    label: np.ndarray
    child_count: np.ndarray
    depth: np.ndarray
    height: int
    truncated: bool

    def __post_init__(self):
        if not (self.parent.size == self.label.size == self.child_count.size):
            raise ValueError("per-node arrays must have equal length")
        if self.parent[0] != -1:
            raise ValueError("node 0 must be the root")
        if np.any(self.parent[1:] >= np.arange(1, self.parent.size)):
            raise ValueError("parents must precede children in breadth-first order")

    @property
    def size(self) -> int:
        return self.parent.size


@dataclass(frozen=True)
class CutConfig:
    """I.i.d. edge-cut probability 2f / ell^(1/3)."""

    f: float
    ell_n: float

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"cut probability {self.q} outside [0, 1]")

    @property
    def q(self) -> float:
        return 2.0 * self.f / self.ell_n ** (1.0 / 3.0)


def offspring_mean(w_root: float, remaining_weight: float, p: float) -> float:
    """Poisson offspring mean w_root * remaining_weight * p."""
    if w_root < 0 or remaining_weight < 0 or p < 0:
        raise ValueError("inputs must be non-negative")
    return w_root * remaining_weight * p


def constant_labels(value: int = 0) -> Callable:
    """Label sampler that always returns `value` (unlabeled trees)."""

    def sampler(rng, size):
        return np.full(size, value, dtype=np.int64)

    return sampler


def size_biased_labels(weights: np.ndarray, excluded=()) -> Callable:
    """I.i.d. labels drawn proportional to weight over the non-excluded nodes.

    The excluded set is frozen at construction time; labels are genuine node
    indices of the original weight vector.
    """
    w = np.asarray(weights, dtype=np.float64).copy()
    idx = np.fromiter(excluded, dtype=np.int64) if len(excluded) else np.empty(0, np.int64)
    w[idx] = 0.0
    live = np.flatnonzero(w > 0)
    if live.size == 0:
        raise ValueError("every label is excluded")
    alias = AliasSampler(w[live])

    def sampler(rng, size):
        return live[alias.draw(rng, size)]

    return sampler


def sample_gw(
    child_mean: Callable,
    label_sampler: Callable,
    *,
    max_size: int = MAX_SIZE_DEFAULT,
    max_height: int = MAX_HEIGHT_DEFAULT,
    seed=None,
) -> GWTree:
    """Labeled Galton-Watson tree, generated level by level in breadth-first order.

    Each node gets a label from ``label_sampler(rng, size)`` and then a
    Poisson number of children with mean ``child_mean(labels)``.  Generation
    stops, with the truncation flag set, if the size or height cap binds --
    the supercritical case need not terminate otherwise.
    """
    if max_size < 1 or max_height < 0:
        raise ValueError("caps must be positive")
    rng = as_rng(seed)
    parents = [np.full(1, -1, dtype=np.int64)]
    labels = [label_sampler(rng, 1).astype(np.int64)]
    counts = []
    truncated = False
    total = 1
    level_start = 0  # BF index of the current level's first node
    level_labels = labels[0]
    depth = 0
    while level_labels.size:
        if depth == max_height:
            counts.append(np.zeros(level_labels.size, dtype=np.int64))
            truncated = True
            break
        c = rng.poisson(np.asarray(child_mean(level_labels), dtype=np.float64))
        room = max_size - total
        born = int(c.sum())
        if born > room:
            # cut the level short: trim trailing children counts to fit
            cum = np.cumsum(c)
            c = np.minimum(c, np.maximum(room - np.concatenate(([0], cum[:-1])), 0))
            born = int(c.sum())
            truncated = True
        counts.append(c)
        if born == 0:
            break
        parents.append(np.repeat(np.arange(level_start, level_start + c.size), c))
        labels.append(label_sampler(rng, born).astype(np.int64))
        level_start += level_labels.size
        level_labels = labels[-1]
        total += born
        depth += 1
        if truncated:
            counts.append(np.zeros(level_labels.size, dtype=np.int64))
            break

    parent = np.concatenate(parents)
    label = np.concatenate(labels)
    child_count = np.concatenate(counts)
    depths = np.zeros(parent.size, dtype=np.int64)
    offset = 0
    for d, lv in enumerate(labels):
        depths[offset : offset + lv.size] = d
        offset += lv.size
    return GWTree(
        parent=parent,
        label=label,
        child_count=child_count,
        depth=depths,
        height=int(depths[-1]),
        truncated=truncated,
    )


@njit(cache=True)
def _prune_mask(parent, label, n_labels):
    red = np.zeros(parent.shape[0], dtype=np.bool_)
    seen = np.zeros(n_labels, dtype=np.bool_)
    red[0] = True
    seen[label[0]] = True
    for k in range(1, parent.shape[0]):
        if red[parent[k]] and not seen[label[k]]:
            red[k] = True
            seen[label[k]] = True
    return red


def color_prune(t: GWTree) -> GWTree:
    """Keep the red subtree: root red, and a node red iff its parent is red
    and no earlier red node (breadth-first order) carries its label."""
    red = _prune_mask(t.parent, t.label, int(t.label.max()) + 1)
    new_index = np.cumsum(red) - 1
    keep = np.flatnonzero(red)
    parent = np.where(t.parent[keep] >= 0, new_index[t.parent[keep]], -1)
    depth = t.depth[keep]
    child_count = np.bincount(parent[parent >= 0], minlength=keep.size).astype(np.int64)
    return GWTree(
        parent=parent.astype(np.int64),
        label=t.label[keep],
        child_count=child_count,
        depth=depth,
        height=int(depth.max()),
        truncated=t.truncated,
    )


def edge_cut_prune(f: Forest, cfg: CutConfig, seed) -> tuple[Forest, int]:
    """Remove each forest edge independently with probability cfg.q.

    Returns the finer forest and the number of cuts made.
    """
    rng = as_rng(seed)
    keep = rng.random(f.m) >= cfg.q
    ei, ej, cap = f.edge_i[keep], f.edge_j[keep], f.capacity[keep]
    roots = union_roots(f.n, ei, ej)
    cuts = int(f.m - keep.sum())
    return Forest(f.n, ei, ej, cap, _labels_from_roots(roots)), cuts


def height_tail(mean: float, m: int, replicates: int, seed) -> float:
    """Monte-Carlo estimate of P(height >= m) for Poisson(mean) offspring.

    Simulates generation sizes only: the sum of Poisson counts across a
    generation is itself Poisson, so no trees are built.
    """
    if m < 1 or replicates < 1:
        raise ValueError("m and replicates must be positive")
    rng = as_rng(seed)
    z = np.ones(replicates, dtype=np.int64)
    for _ in range(m):
        alive = z > 0
        if not alive.any():
            return 0.0
        z[alive] = rng.poisson(mean * z[alive])
    return float((z > 0).mean())


def snapshot_schedule(F: float, f_max: float) -> list[float]:
    """Geometric schedule F, 1.5 F, 1.5^2 F, ... through the first value >= f_max."""
    if F <= 0:
        raise ValueError("F must be positive")
    if f_max < F:
        raise ValueError("f_max must be at least F")
    out = [float(F)]
    while out[-1] < f_max:
        out.append(out[-1] * 1.5)
    return out
