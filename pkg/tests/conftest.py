import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mstsim import GraphSnapshot


def snapshot_from_edges(n, edges, p=None, mode="manual"):
    """Build a snapshot from (i, j, capacity) triples, applying the canonical order."""
    if edges:
        ei = np.array([min(i, j) for i, j, _ in edges], dtype=np.int64)
        ej = np.array([max(i, j) for i, j, _ in edges], dtype=np.int64)
        cap = np.array([c for _, _, c in edges], dtype=np.float64)
        order = np.lexsort((ej, ei, cap))
        ei, ej, cap = ei[order], ej[order], cap[order]
    else:
        ei = np.empty(0, dtype=np.int64)
        ej = np.empty(0, dtype=np.int64)
        cap = np.empty(0)
    if p is None:
        p = float(cap.max()) if cap.size else 0.0
    return GraphSnapshot(n, p, ei, ej, cap, mode=mode)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
