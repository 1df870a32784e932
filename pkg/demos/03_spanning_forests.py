"""Two routes to the minimum spanning forest, and the increasing process.

The bombing route scans edges in decreasing capacity order and deletes
every edge whose removal keeps its component connected; what survives is
exactly the ascending-scan Kruskal forest.  Because Kruskal acceptance
only depends on the prefix of smaller edges, the forests at increasing
thresholds are nested: an increasing process of spanning forests.
"""

from mstsim import (
    edge_deletion,
    forest_process,
    kruskal,
    make_constant,
    poissonized_source,
    tree_diameter,
)

v = make_constant(500)
src = poissonized_source(v, 0.05, seed=3)
g = src.snapshot(0.02)

a = kruskal(g)
b = edge_deletion(g)
print(f"snapshot: {g.m} edges, {a.n_components} components")
print("kruskal == bombing:", a.edge_set() == b.edge_set())
print(f"forest: {a.m} edges, total capacity {a.total_capacity:.4f}")

# The increasing forest process: one Kruskal scan, many snapshots.
forests = forest_process(src, [0.004, 0.008, 0.016, 0.032, 0.05])
prev = forests[0]
for p, f in zip([0.004, 0.008, 0.016, 0.032, 0.05], forests):
    assert prev.edge_set() <= f.edge_set()
    note = ""
    if f.n_components == 1:
        note = f"  (spanning tree, diameter {tree_diameter(f)})"
    print(f"  p = {p:.3f}  components = {f.n_components:4d}{note}")
    prev = f
