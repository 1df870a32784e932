"""Edge-capacity sources and monotone-coupled graph snapshots.

Each unordered pair {i, j} carries an exponential capacity of rate
w_i * w_j; the graph at level p keeps the edges with capacity at most p.
Two source modes realize this with one coupling contract (snapshots are
nested along p):

* exact mode materializes capacity rows lazily from per-row seeded
  streams -- the literal O(n^2) model, fine up to the dense limit;
* poissonized mode draws a Poisson number of weighted endpoint arrivals
  with uniform arrival times and collapses duplicates to the earliest
  arrival, which reproduces the same per-pair law with O(m) memory and
  scales to n ~ 10^6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .sampling import AliasSampler
from .seeding import as_rng, derive_seed
from .weights import WeightStats, WeightVector, stats

__all__ = [
    "CapacityLimitError",
    "GraphSnapshot",
    "ExactCapacities",
    "PoissonizedArrivals",
    "exact_capacities",
    "poissonized_source",
    "snapshot",
    "p_critical",
    "iid_capacities_on",
    "write_edge_list",
    "read_edge_list",
]

DENSE_LIMIT_DEFAULT = 20_000


class CapacityLimitError(ValueError):
    """The dense capacity table would exceed the configured node limit."""


@dataclass(frozen=True)
class GraphSnapshot:
    """A concrete edge set at capacity threshold p.

    Edges are stored with i < j, sorted by (capacity, i, j); that order is
    the package-wide deterministic tiebreak, so both MST constructions and
    the exploration walk see one well-defined capacity order.
    """

    n: int
    p: float
    edge_i: np.ndarray
    edge_j: np.ndarray
    capacity: np.ndarray
    mode: str = "exact"
    seed: int | None = None

    def __post_init__(self):
        ei = np.ascontiguousarray(self.edge_i, dtype=np.int64)
        ej = np.ascontiguousarray(self.edge_j, dtype=np.int64)
        cap = np.ascontiguousarray(self.capacity, dtype=np.float64)
        if not (ei.shape == ej.shape == cap.shape):
            raise ValueError("edge arrays must have equal length")
        if ei.size and (ei.min() < 0 or ej.max() >= self.n or np.any(ei >= ej)):
            raise ValueError("edges must satisfy 0 <= i < j < n")
        object.__setattr__(self, "edge_i", ei)
        object.__setattr__(self, "edge_j", ej)
        object.__setattr__(self, "capacity", cap)

    @property
    def m(self) -> int:
        return self.edge_i.size

    @cached_property
    def adjacency(self):
        """CSR adjacency (indptr, neighbors, capacities), per-node sorted by capacity."""
        from ._kernels import build_csr

        return build_csr(self.n, self.edge_i, self.edge_j, self.capacity)


class ExactCapacities:
    """Lazily materialized table of exponential capacities, one stream per row.

    E_{ij} (j > i) lives in row i; symmetric access goes through the row of
    the smaller index, so E_{ij} == E_{ji} by construction.  Rows are pure
    functions of (seed, i): nothing is cached, everything is reproducible.
    """

    mode = "exact"

    def __init__(self, v: WeightVector, seed: int, dense_limit: int = DENSE_LIMIT_DEFAULT):
        if v.n > dense_limit:
            raise CapacityLimitError(
                f"n={v.n} exceeds the dense limit {dense_limit}; "
                "use poissonized_source for large n"
            )
        self.weights = v
        self.seed = int(seed)
        self.n = v.n
        self.p_max = math.inf

    def row(self, i: int) -> np.ndarray:
        """Capacities E_{ij} for j > i."""
        if not 0 <= i < self.n:
            raise ValueError(f"row index {i} out of range")
        w = self.weights.weights
        rng = np.random.default_rng(derive_seed(self.seed, i))
        return rng.standard_exponential(self.n - 1 - i) / (w[i] * w[i + 1 :])

    def capacity(self, i: int, j: int) -> float:
        """Symmetric access E_{ij} = E_{ji}; no self-capacities."""
        if i == j:
            raise ValueError("self-capacities do not exist")
        a, b = (i, j) if i < j else (j, i)
        return float(self.row(a)[b - a - 1])

    def full_row(self, i: int) -> np.ndarray:
        """All capacities E_{il}, l != i, with +inf at position i."""
        out = np.full(self.n, np.inf)
        out[i + 1 :] = self.row(i)
        for a in range(i):
            out[a] = self.row(a)[i - a - 1]
        return out

    def snapshot(self, p: float) -> GraphSnapshot:
        if p < 0:
            raise ValueError("p must be non-negative")
        eis, ejs, caps = [], [], []
        for i in range(self.n - 1):
            row = self.row(i)
            hit = np.flatnonzero(row <= p)
            if hit.size:
                eis.append(np.full(hit.size, i, dtype=np.int64))
                ejs.append(hit + i + 1)
                caps.append(row[hit])
        if eis:
            ei = np.concatenate(eis)
            ej = np.concatenate(ejs)
            cap = np.concatenate(caps)
            order = np.lexsort((ej, ei, cap))
            ei, ej, cap = ei[order], ej[order], cap[order]
        else:
            ei = np.empty(0, dtype=np.int64)
            ej = np.empty(0, dtype=np.int64)
            cap = np.empty(0)
        return GraphSnapshot(self.n, p, ei, ej, cap, mode=self.mode, seed=self.seed)


class PoissonizedArrivals:
    """Arrival-stream capacity source (collapsed multigraph construction).

    A Poisson(p_max * ell^2 / 2) number of arrivals is drawn; each arrival
    picks both endpoints independently with probability w_i / ell (alias
    table, O(1) per arrival) and a uniform time in (0, p_max].  Self-loops
    are discarded; duplicate pairs collapse at snapshot time to the
    earliest arrival.  Per pair, the arrival count up to p is Poisson with
    mean w_i * w_j * p exactly, so the collapsed snapshot has the same law
    as the exact mode at the same p.
    """

    mode = "poisson"

    def __init__(self, v: WeightVector, p_max: float, seed: int):
        if not p_max > 0:
            raise ValueError("p_max must be positive")
        self.weights = v
        self.seed = int(seed)
        self.n = v.n
        self.p_max = float(p_max)

        w = v.weights
        ell = w.sum()
        rng = np.random.default_rng(self.seed)
        count = rng.poisson(p_max * ell * ell / 2.0)
        sampler = AliasSampler(w)
        a = sampler.draw(rng, count)
        b = sampler.draw(rng, count)
        t = (1.0 - rng.random(count)) * p_max  # uniform on (0, p_max]
        keep = a != b
        a, b, t = a[keep], b[keep], t[keep]
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        order = np.argsort(t, kind="stable")
        self.arrival_i = lo[order]
        self.arrival_j = hi[order]
        self.arrival_t = t[order]

    @property
    def n_arrivals(self) -> int:
        return self.arrival_t.size

    def snapshot(self, p: float) -> GraphSnapshot:
        if p < 0:
            raise ValueError("p must be non-negative")
        if p > self.p_max:
            raise ValueError(f"p={p} exceeds the source range p_max={self.p_max}")
        k = int(np.searchsorted(self.arrival_t, p, side="right"))
        ii = self.arrival_i[:k]
        jj = self.arrival_j[:k]
        tt = self.arrival_t[:k]
        # earliest arrival per pair: the prefix is time-sorted, and
        # np.unique(return_index) points at first occurrences
        pair = ii * self.n + jj
        _, first = np.unique(pair, return_index=True)
        ei, ej, cap = ii[first], jj[first], tt[first]
        order = np.lexsort((ej, ei, cap))
        return GraphSnapshot(
            self.n, p, ei[order], ej[order], cap[order], mode=self.mode, seed=self.seed
        )


CapacitySource = ExactCapacities | PoissonizedArrivals


def exact_capacities(
    v: WeightVector, seed: int, dense_limit: int = DENSE_LIMIT_DEFAULT
) -> ExactCapacities:
    """Dense-mode capacity source (raises CapacityLimitError above the limit)."""
    return ExactCapacities(v, seed, dense_limit=dense_limit)


def poissonized_source(v: WeightVector, p_max: float, seed: int) -> PoissonizedArrivals:
    """Sparse-mode capacity source valid for thresholds up to p_max."""
    return PoissonizedArrivals(v, p_max, seed)


def snapshot(src: CapacitySource, p: float) -> GraphSnapshot:
    """The graph with every edge of capacity (first arrival) at most p."""
    return src.snapshot(p)


def p_critical(s: WeightStats | WeightVector, f: float) -> float:
    """Critical-window threshold 1/ell + f / ell^(4/3)."""
    if isinstance(s, WeightVector):
        s = stats(s)
    ell = s.ell_n
    p = 1.0 / ell + f / ell ** (4.0 / 3.0)
    if p < 0:
        raise ValueError(f"f={f} puts the threshold below zero")
    return p


def iid_capacities_on(g: GraphSnapshot, seed) -> GraphSnapshot:
    """Same edge set, capacities replaced by i.i.d. uniform(0, 1) draws.

    Duplicate values (possible at 64-bit resolution) are redrawn so the
    capacity order, which is all the MST geometry depends on, is strict.
    """
    rng = as_rng(seed)
    cap = rng.random(g.m)
    while True:
        uniq, counts = np.unique(cap, return_counts=True)
        if np.all(counts == 1):
            break
        dup = np.isin(cap, uniq[counts > 1])
        cap[dup] = rng.random(int(dup.sum()))
    order = np.lexsort((g.edge_j, g.edge_i, cap))
    return GraphSnapshot(
        g.n,
        1.0,
        g.edge_i[order],
        g.edge_j[order],
        cap[order],
        mode="iid",
        seed=None if isinstance(seed, np.random.Generator) else int(seed),
    )


def write_edge_list(g: GraphSnapshot, path) -> None:
    """Edge-list text export: header ``n p mode seed``, then 1-based ``i<TAB>j<TAB>capacity``."""
    with open(path, "w") as fh:
        seed = "-" if g.seed is None else str(g.seed)
        fh.write(f"{g.n} {float(g.p)!r} {g.mode} {seed}\n")
        for i, j, c in zip(g.edge_i.tolist(), g.edge_j.tolist(), g.capacity.tolist()):
            fh.write(f"{i + 1}\t{j + 1}\t{c!r}\n")


def read_edge_list(path) -> GraphSnapshot:
    """Round-trip reader for :func:`write_edge_list`."""
    text = Path(path).read_text().splitlines()
    n_s, p_s, mode, seed_s = text[0].split()
    ei, ej, cap = [], [], []
    for line in text[1:]:
        a, b, c = line.split("\t")
        ei.append(int(a) - 1)
        ej.append(int(b) - 1)
        cap.append(float(c))
    return GraphSnapshot(
        int(n_s),
        float(p_s),
        np.array(ei, dtype=np.int64),
        np.array(ej, dtype=np.int64),
        np.array(cap),
        mode=mode,
        seed=None if seed_s == "-" else int(seed_s),
    )
