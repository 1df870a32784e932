"""Branching-process trees, the coloring prune, and height tails.

A size-biased-labeled Poisson branching tree, pruned so that no label is
kept twice (in breadth-first order), has exactly the law of a
breadth-first exploration tree of the graph.  This demo builds both from
the same ingredients and compares their size histograms, then checks the
critical height-tail decay P(height >= m) ~ 2/m against the exact
extinction recursion.
"""

import math

import numpy as np

from mstsim import (
    bfw,
    color_prune,
    height_tail,
    make_constant,
    poissonized_source,
    sample_gw,
    size_biased_labels,
)

n, samples = 200, 3_000
v = make_constant(n)
p = 1.0 / n  # critical: offspring mean w * ell * p = 1

walk_sizes = []
for s in range(samples):
    g = poissonized_source(v, p, seed=s).snapshot(p)
    walk_sizes.append(int(bfw(g, v, seed=10_000 + s).component_sizes()[0]))

labeler = size_biased_labels(v.weights)
gw_sizes = []
for s in range(samples):
    t = sample_gw(lambda lab: v.weights[lab] * n * p, labeler, seed=20_000 + s)
    if not t.truncated:
        gw_sizes.append(color_prune(t).size)

for name, sizes in [("exploration tree", walk_sizes), ("pruned branching tree", gw_sizes)]:
    a = np.array(sizes)
    print(f"{name:>22}: mean {a.mean():6.2f}  median {np.median(a):4.0f}  max {a.max()}")

# Exact tail recursion q_{m+1} = exp(q_m - 1), P(height >= m) = 1 - q_m:
print("\ncritical height tails, Monte Carlo vs recursion:")
q = 0.0
for m in range(1, 21):
    q = math.exp(q - 1.0)
    if m in (2, 5, 10, 20):
        est = height_tail(1.0, m, 200_000, seed=m)
        print(f"  m = {m:2d}   MC {est:.4f}   exact {1 - q:.4f}   m*P = {m * est:.2f}")
