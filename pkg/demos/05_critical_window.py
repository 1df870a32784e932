"""Component growth across the critical window.

Inside the window p = 1/ell + f/ell^(4/3) the largest component grows
like 2 f ell^(2/3) / C while everything else stays small.  Walking f
along the geometric snapshot schedule shows the giant emerging smoothly;
the normalized ratio hovers around 1 once f is moderately large.
"""

from mstsim import (
    component_stats,
    make_constant,
    p_critical,
    poissonized_source,
    snapshot_schedule,
    stats,
)

n = 200_000
v = make_constant(n)
s = stats(v)

schedule = snapshot_schedule(F=1.0, f_max=10.0)
src = poissonized_source(v, p_critical(s, schedule[-1]), seed=11)

print(f"n = {n}, schedule = {[round(f, 2) for f in schedule]}")
print(f"{'f':>6} {'largest':>9} {'2nd':>7} {'surplus':>8} {'ratio':>7}")
for f in schedule:
    g = src.snapshot(p_critical(s, f))
    recs = component_stats(g, v)
    top = recs[0]
    second = recs[1].size if len(recs) > 1 else 0
    ratio = top.size * s.C / (2 * f * s.ell_n ** (2 / 3))
    print(f"{f:6.2f} {top.size:9d} {second:7d} {top.surplus:8d} {ratio:7.3f}")

print("\nThe ratio column is size * C / (2 f ell^(2/3)); the window theory"
      "\npredicts it concentrates near 1 as n grows and f is large but o(n^(1/3)).")
