"""Weight vectors and the criticality normalization.

Node weights control everything downstream: pair {i, j} gets an
exponential capacity of rate w_i * w_j, so the sum ell = sum(w) sets the
scale of the phase transition.  The normalization enforced here makes
sum(w^2) = sum(w) exactly, which pins the transition at p = 1/ell.
"""

import numpy as np

from mstsim import (
    check_conditions,
    make_constant,
    make_powerlaw,
    normalize_critical,
    sample_iid,
    stats,
)
from mstsim.weights import TwoPointLaw, WeightVector

# The homogeneous case: every weight 1.  Already critical.
v = make_constant(10_000)
s = stats(v)
print(f"constant weights:  ell={s.ell_n:.0f}  sum(w^2)={s.s2:.0f}  C={s.C}")

# An i.i.d. two-point law with mean 1 but second moment 1.5 ...
law = TwoPointLaw(low=0.5, high=2.0, p_high=1 / 3)
raw = sample_iid(10_000, law, seed=1)
print(f"two-point raw:     sum(w^2)/ell = {stats(raw).s2 / stats(raw).ell_n:.4f}")

# ... is off criticality until rescaled.
crit = normalize_critical(raw)
print(f"two-point scaled:  sum(w^2)/ell = {stats(crit).s2 / stats(crit).ell_n:.10f}")

# Deterministic heavy-tail weights w_i = (n/i)^(1/(alpha-1)).  For
# alpha = 3.5 the population third moment diverges, and the condition
# report flags exactly that (plus the slowly-decaying max weight):
heavy = make_powerlaw(10_000, alpha=3.5)
report = check_conditions(heavy)
for c in report.checks:
    flag = "ok  " if c.passed else "WARN"
    print(f"  ({c.key:>4}) {flag} deviation={c.deviation:9.4f}  {c.description}")

# The checker never rejects; it only warns.  A single outlier node is the
# textbook way to break the max-weight condition (vii):
spiked = WeightVector(np.array([10.0] + [1.0] * 7))
print("spiked vector warnings:", check_conditions(spiked).warnings)
