"""Deterministic seed derivation and RNG plumbing.

Every sampler in the package takes an explicit seed (or an already
constructed ``numpy.random.Generator``); nothing touches global RNG state.
Replicate streams are derived with a splitmix64-style mixer so that the
same (base seed, n, replicate) always maps to the same stream regardless
of execution order or parallelism.
"""

from __future__ import annotations

import numpy as np

__all__ = ["derive_seed", "as_rng"]

_M64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


def derive_seed(base: int, *parts: int) -> int:
    """Mix a base seed and integer tags into a new 64-bit seed.

    Used to give each (n, replicate) task, and each lazily generated
    capacity row, an independent deterministic stream.
    """
    h = _splitmix64(int(base) & _M64)
    for p in parts:
        h = _splitmix64(h ^ _splitmix64(int(p) & _M64))
    return h


def as_rng(seed) -> np.random.Generator:
    """Return ``seed`` itself if it is already a Generator, else seed a new one."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
