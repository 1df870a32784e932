"""Node-weight vectors and their moment diagnostics.

Weights drive everything downstream: edge-capacity rates, size-biased
sampling, and the location of the critical window.  This module builds
weight vectors (constant, i.i.d. from a small family of laws, or
deterministic power-law order statistics), rescales them to exact
criticality (sum of squares = sum), and reports how far a vector sits
from the moment conditions the scaling results assume.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .seeding import as_rng

__all__ = [
    "WeightVector",
    "WeightStats",
    "ConditionCheck",
    "ConditionsReport",
    "ConditionThresholds",
    "TwoPointLaw",
    "ShiftedExponentialLaw",
    "UniformLaw",
    "TruncatedParetoLaw",
    "parse_law",
    "make_constant",
    "sample_iid",
    "make_powerlaw",
    "normalize_critical",
    "check_conditions",
    "stats",
]


@dataclass(frozen=True)
class WeightVector:
    """Positive node weights, stored sorted non-increasing."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.ascontiguousarray(self.weights, dtype=np.float64)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty 1-d array")
        if not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise ValueError("all weights must be positive and finite")
        if np.any(np.diff(w) > 0):
            raise ValueError("weights must be sorted non-increasing")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.size


@dataclass(frozen=True)
class WeightStats:
    """Moment summaries of a weight vector."""

    ell_n: float  # sum of weights
    s2: float  # sum of squares
    s3: float  # sum of cubes
    s4: float  # sum of fourth powers
    w_max: float
    C: float  # third-moment-to-mean ratio estimate, s3 / ell_n


@dataclass(frozen=True)
class ConditionCheck:
    key: str
    description: str
    measured: float
    target: float
    deviation: float
    passed: bool


@dataclass(frozen=True)
class ConditionsReport:
    """Finite-n diagnostics for the eight moment conditions, keyed (i)..(viii).

    Deviations are defined as excesses over the constant-weight baseline,
    so a constant vector scores exactly 0 everywhere.  The report warns
    above configured thresholds but never blocks execution.
    """

    checks: tuple[ConditionCheck, ...]

    def __post_init__(self):
        if len(self.checks) != 8:
            raise ValueError("report must contain exactly eight entries")

    def __getitem__(self, key: str) -> ConditionCheck:
        for c in self.checks:
            if c.key == key:
                return c
        raise KeyError(key)

    @property
    def warnings(self) -> list[str]:
        return [c.key for c in self.checks if not c.passed]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class ConditionThresholds:
    """Warn levels for the condition checker.

    These are configuration, not derived values: the asymptotic conditions
    only pin o(.) rates, which a single n cannot certify.
    """

    third_moment_share: float = 0.05  # (ii)
    criticality_rel: float = 0.05  # (iii)
    second_moment_window: float = 1.0  # (v)
    max_weight_excess: float = 1.0  # (vii)
    fourth_moment_share: float = 0.05  # (viii)


# ---------------------------------------------------------------------------
# distribution specs for i.i.d. sampling


@dataclass(frozen=True)
class TwoPointLaw:
    """P(W = high) = p_high, else W = low."""

    low: float
    high: float
    p_high: float

    def __post_init__(self):
        if self.low <= 0 or self.high <= 0:
            raise ValueError("two-point law must have positive support")
        if not 0.0 <= self.p_high <= 1.0:
            raise ValueError("p_high must lie in [0, 1]")

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return np.where(rng.random(n) < self.p_high, self.high, self.low)

    def mean(self) -> float:
        return self.low * (1 - self.p_high) + self.high * self.p_high


@dataclass(frozen=True)
class ShiftedExponentialLaw:
    """W = shift + Exponential(rate)."""

    shift: float
    rate: float

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("shift must be non-negative for positive support")
        if self.rate <= 0:
            raise ValueError("rate must be positive")

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return self.shift + rng.standard_exponential(n) / self.rate

    def mean(self) -> float:
        return self.shift + 1.0 / self.rate


@dataclass(frozen=True)
class UniformLaw:
    """Uniform on [low, high], 0 < low <= high."""

    low: float
    high: float

    def __post_init__(self):
        if self.low <= 0 or self.high < self.low:
            raise ValueError("uniform law needs 0 < low <= high")

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(self.low, self.high, n)

    def mean(self) -> float:
        return 0.5 * (self.low + self.high)


@dataclass(frozen=True)
class TruncatedParetoLaw:
    """Density proportional to x^-exponent on [1, cutoff]."""

    exponent: float
    cutoff: float

    def __post_init__(self):
        if self.exponent <= 1:
            raise ValueError("exponent must exceed 1")
        if self.cutoff <= 1:
            raise ValueError("cutoff must exceed 1")

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        a = self.exponent - 1.0
        u = rng.random(n)
        # inverse CDF of the truncated tail
        lo = self.cutoff ** (-a)
        return (1.0 - u * (1.0 - lo)) ** (-1.0 / a)


Law = Union[TwoPointLaw, ShiftedExponentialLaw, UniformLaw, TruncatedParetoLaw]

_LAW_PARSERS = {
    "two_point": (TwoPointLaw, 3),
    "exp_shifted": (ShiftedExponentialLaw, 2),
    "uniform": (UniformLaw, 2),
    "pareto": (TruncatedParetoLaw, 2),
}


def parse_law(spec: str) -> Law:
    """Parse a law spec string like ``two_point:0.5,2,0.3333``."""
    name, _, args = spec.partition(":")
    name = name.strip()
    if name not in _LAW_PARSERS:
        raise ValueError(f"unknown law {name!r}; known: {sorted(_LAW_PARSERS)}")
    cls, arity = _LAW_PARSERS[name]
    values = [float(x) for x in args.split(",") if x.strip()]
    if len(values) != arity:
        raise ValueError(f"law {name!r} takes {arity} parameters, got {len(values)}")
    return cls(*values)


# ---------------------------------------------------------------------------
# constructors


def make_constant(n: int) -> WeightVector:
    """All weights equal to 1 (the homogeneous case)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return WeightVector(np.ones(n))


def sample_iid(n: int, law: Law | str, seed) -> WeightVector:
    """n independent draws from `law`, sorted non-increasing."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if isinstance(law, str):
        law = parse_law(law)
    rng = as_rng(seed)
    w = law.sample(n, rng)
    return WeightVector(np.sort(w)[::-1])


def make_powerlaw(n: int, alpha: float) -> WeightVector:
    """Deterministic heavy-tail weights w_i = (n/i)^(1/(alpha-1)), critically rescaled.

    Order statistics rather than i.i.d. draws: reproducible and with exact
    tail exponent control.  alpha <= 3 (infinite second moment) is refused.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if alpha <= 3:
        raise ValueError("alpha must exceed 3 (finite second moment)")
    i = np.arange(1, n + 1, dtype=np.float64)
    w = (n / i) ** (1.0 / (alpha - 1.0))
    return normalize_critical(WeightVector(w))


def normalize_critical(v: WeightVector) -> WeightVector:
    """Rescale so the sum of squared weights equals the sum of weights exactly."""
    w = v.weights
    scale = w.sum() / np.square(w).sum()
    return WeightVector(w * scale)


# ---------------------------------------------------------------------------
# diagnostics


def stats(v: WeightVector) -> WeightStats:
    """Exact moment sums of a weight vector."""
    w = v.weights
    ell = float(w.sum())
    s2 = float(np.square(w).sum())
    s3 = float((w**3).sum())
    s4 = float((w**4).sum())
    return WeightStats(ell_n=ell, s2=s2, s3=s3, s4=s4, w_max=float(w[0]), C=s3 / ell)


def check_conditions(
    v: WeightVector, thresholds: ConditionThresholds | None = None
) -> ConditionsReport:
    """Finite-n report on the eight moment conditions.

    Conditions (i), (iv), (vi) are identities once the population moments
    are estimated from the vector itself, so they carry deviation 0 by
    construction; the informative diagnostics are the criticality miss
    (iii), its n^(2/3)-window version (v), the max-weight excess (vii),
    and the third/fourth-moment concentration shares (ii)/(viii).
    """
    th = thresholds or ConditionThresholds()
    s = stats(v)
    n = v.n
    mean_w = s.ell_n / n

    share3 = s.w_max**3 / s.s3 - 1.0 / n
    crit_rel = abs(s.s2 - s.ell_n) / s.ell_n
    crit_window = abs(s.s2 - s.ell_n) / n ** (2.0 / 3.0)
    max_scaled = s.w_max / n ** (1.0 / 3.0)
    max_excess = (s.w_max - mean_w) / n ** (1.0 / 3.0)
    share4 = s.w_max**4 / s.s4 - 1.0 / n

    checks = (
        ConditionCheck(
            "i",
            "weak convergence of a uniformly chosen weight (not identifiable at one n)",
            0.0,
            0.0,
            0.0,
            True,
        ),
        ConditionCheck(
            "ii",
            "finite third moment: max-weight share of the cube sum, over the 1/n baseline",
            share3,
            0.0,
            share3,
            share3 <= th.third_moment_share,
        ),
        ConditionCheck(
            "iii",
            "criticality: relative gap between sum of squares and sum",
            s.s2 / s.ell_n,
            1.0,
            crit_rel,
            crit_rel <= th.criticality_rel,
        ),
        ConditionCheck(
            "iv",
            "first-moment sum (identity under the plug-in mean estimate)",
            mean_w,
            mean_w,
            0.0,
            True,
        ),
        ConditionCheck(
            "v",
            "criticality gap on the n^(2/3) window scale",
            crit_window,
            0.0,
            crit_window,
            crit_window <= th.second_moment_window,
        ),
        ConditionCheck(
            "vi",
            "third-moment sum (identity under the plug-in estimate)",
            s.s3 / n,
            s.s3 / n,
            0.0,
            True,
        ),
        ConditionCheck(
            "vii",
            "max weight on the n^(1/3) scale; deviation is the excess over the mean weight",
            max_scaled,
            0.0,
            max_excess,
            max_excess <= th.max_weight_excess,
        ),
        ConditionCheck(
            "viii",
            "finite fourth moment: max-weight share of the fourth-power sum, over 1/n",
            share4,
            0.0,
            share4,
            share4 <= th.fourth_moment_share,
        ),
    )
    return ConditionsReport(checks)
