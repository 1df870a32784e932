"""Weighted index sampling.

Two structures back the samplers used across the package:

* :class:`AliasSampler` -- i.i.d. draws proportional to fixed weights in
  O(1) per draw (Vose alias table).  Used for the endpoint draws of the
  poissonized arrival stream and for node-label draws.
* :class:`FenwickSampler` -- draws *without replacement* proportional to
  weights, O(log n) per draw/removal.  Used by the breadth-first walk to
  pick component roots among the still-unexplored nodes.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .seeding import as_rng

__all__ = ["AliasSampler", "FenwickSampler"]


@njit(cache=True)
def _build_alias_table(prob, alias):
    """Vose construction; `prob` arrives scaled to mean 1 and is finalized in place."""
    n = prob.shape[0]
    small = np.empty(n, np.int64)
    large = np.empty(n, np.int64)
    ns = 0
    nl = 0
    for i in range(n):
        if prob[i] < 1.0:
            small[ns] = i
            ns += 1
        else:
            large[nl] = i
            nl += 1
    while ns > 0 and nl > 0:
        ns -= 1
        lo = small[ns]
        hi = large[nl - 1]
        alias[lo] = hi
        prob[hi] -= 1.0 - prob[lo]
        if prob[hi] < 1.0:
            nl -= 1
            small[ns] = hi
            ns += 1
    for k in range(ns):
        prob[small[k]] = 1.0
        alias[small[k]] = small[k]
    for k in range(nl):
        prob[large[k]] = 1.0
        alias[large[k]] = large[k]


class AliasSampler:
    """Draw indices i.i.d. with probability weights[i] / sum(weights)."""

    def __init__(self, weights):
        w = np.ascontiguousarray(weights, dtype=np.float64)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty 1-d array")
        if np.any(w < 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite and non-negative")
        total = w.sum()
        if total <= 0:
            raise ValueError("total weight must be positive")
        self.n = w.size
        self._prob = w * (w.size / total)
        self._alias = np.zeros(w.size, dtype=np.int64)
        _build_alias_table(self._prob, self._alias)

    def draw(self, seed, size: int) -> np.ndarray:
        """Return `size` i.i.d. index draws."""
        rng = as_rng(seed)
        idx = rng.integers(0, self.n, size=size)
        keep = rng.random(size) < self._prob[idx]
        return np.where(keep, idx, self._alias[idx])


class FenwickSampler:
    """Sample without replacement proportional to weights.

    A binary indexed tree over the weights supports prefix-sum descent
    (one draw) and single-index zeroing (one removal) in O(log n).
    """

    def __init__(self, weights):
        w = np.ascontiguousarray(weights, dtype=np.float64)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty 1-d array")
        if np.any(w < 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite and non-negative")
        self.n = w.size
        self._w = w.copy()
        tree = np.zeros(self.n + 1, dtype=np.float64)
        tree[1:] = w
        for i in range(1, self.n + 1):
            j = i + (i & -i)
            if j <= self.n:
                tree[j] += tree[i]
        self._tree = tree
        self._top = 1
        while self._top * 2 <= self.n:
            self._top *= 2
        self.remaining = self.n

    def total(self) -> float:
        """Current total weight (prefix sum of all live entries)."""
        acc = 0.0
        i = self.n
        while i > 0:
            acc += self._tree[i]
            i -= i & -i
        return acc

    def _add(self, index: int, delta: float) -> None:
        i = index + 1
        while i <= self.n:
            self._tree[i] += delta
            i += i & -i

    def remove(self, index: int) -> None:
        """Zero out one entry so later draws can never return it."""
        w = self._w[index]
        if w == 0.0:
            raise ValueError(f"index {index} already removed")
        self._w[index] = 0.0
        self._add(index, -w)
        self.remaining -= 1

    def draw(self, seed) -> int:
        """Draw one live index with probability proportional to its weight."""
        if self.remaining == 0:
            raise ValueError("all entries removed")
        rng = as_rng(seed)
        u = rng.random() * self.total()
        idx = 0
        step = self._top
        while step > 0:
            nxt = idx + step
            if nxt <= self.n and self._tree[nxt] <= u:
                u -= self._tree[nxt]
                idx = nxt
            step >>= 1
        # idx counts entries with cumulative weight <= u; guard against
        # landing on a zeroed entry through floating-point boundary hits
        i = idx
        while i < self.n and self._w[i] == 0.0:
            i += 1
        if i == self.n:
            i = int(np.flatnonzero(self._w)[-1])
        return i
