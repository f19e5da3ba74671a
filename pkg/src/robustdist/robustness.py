"""Contamination tolerance and imprecision invariance scores.

For every instance ``x`` a disturbed copy ``x'`` is built once and the
score is the fraction of out-of-class instances ``y`` with
``d(x, x') < d(x, y)``; the dataset score is the mean over instances.
Randomness for instance ``i`` comes from ``SeedSequence([seed, i])`` so
scores do not depend on evaluation order or thread count.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import math

import numpy as np

from .distances import resolve_threads
from .series import as_series

__all__ = [
    "ContaminationPlan",
    "ImprecisionPlan",
    "RobustnessScore",
    "contaminate",
    "perturb",
    "contamination_tolerance_score",
    "imprecision_invariance_score",
    "instance_rng",
]

PLACEMENTS = ("random", "consecutive")


def instance_rng(seed, index):
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(index)]))


def contaminated_count(n, fraction):
    """``ceil(fraction * n)``, clamped to ``[1, n]``."""
    if not 0 < fraction <= 1:
        raise ValueError("fraction must lie in (0, 1]")
    return min(n, max(1, math.ceil(fraction * n - 1e-12)))


@dataclass(frozen=True)
class ContaminationPlan:
    positions: tuple
    magnitude: float = np.inf
    placement: str = "random"
    seed: int = None

    def __post_init__(self):
        pos = tuple(int(p) for p in self.positions)
        if not pos:
            raise ValueError("a contamination plan needs at least one position")
        if len(set(pos)) != len(pos):
            raise ValueError("contamination positions must be distinct")
        if self.placement not in PLACEMENTS:
            raise ValueError("placement must be one of %s" % (PLACEMENTS,))
        if np.isnan(self.magnitude):
            raise ValueError("contamination magnitude cannot be NaN")
        object.__setattr__(self, "positions", pos)

    @property
    def k(self):
        return len(self.positions)

    @classmethod
    def draw(cls, n, fraction=0.05, placement="random", seed=0, magnitude=np.inf, k=None):
        """Seeded plan contaminating ``k = ceil(fraction * n)`` positions.

        ``random`` picks distinct positions uniformly; ``consecutive`` picks
        one contiguous block at a uniform offset.
        """
        if k is None:
            k = contaminated_count(n, fraction)
        if not 1 <= k <= n:
            raise ValueError("need 1 <= k <= n, got k=%d for n=%d" % (k, n))
        rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        if placement == "random":
            pos = np.sort(rng.choice(n, size=k, replace=False))
        elif placement == "consecutive":
            start = int(rng.integers(0, n - k + 1))
            pos = np.arange(start, start + k)
        else:
            raise ValueError("placement must be one of %s" % (PLACEMENTS,))
        return cls(tuple(pos.tolist()), magnitude, placement, None if isinstance(seed, np.random.Generator) else seed)


@dataclass(frozen=True)
class ImprecisionPlan:
    eps_max: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if not (self.eps_max > 0 and np.isfinite(self.eps_max)):
            raise ValueError("eps_max must be a positive finite number")

    def draw(self, n, rng=None):
        rng = np.random.default_rng(self.seed) if rng is None else rng
        return rng.uniform(-self.eps_max, self.eps_max, size=n)


@dataclass(frozen=True)
class RobustnessScore:
    per_instance_ratios: tuple
    mean_score: float


def contaminate(x, plan):
    """Copy of ``x`` with ``plan.positions`` overwritten by ``plan.magnitude``."""
    x = np.array(as_series(x))
    pos = np.asarray(plan.positions)
    if pos.min() < 0 or pos.max() >= x.shape[0]:
        raise ValueError("contamination position out of range for length %d" % x.shape[0])
    x[pos] = plan.magnitude
    return as_series(x)


def perturb(x, plan, rng=None):
    """``x + eps`` with ``eps`` uniform on ``(-eps_max, eps_max)``.

    Every position is disturbed: a draw that vanishes in floating-point
    rounding (``x_t + eps_t == x_t``) is redrawn.
    """
    x = as_series(x)
    if not np.isfinite(x).all():
        raise ValueError("imprecision can only be added to a finite series")
    rng = np.random.default_rng(plan.seed) if rng is None else rng
    if (np.spacing(np.abs(x)) / 2 >= plan.eps_max).any():
        raise ValueError("eps_max %g is below the floating-point resolution of the series" % plan.eps_max)
    y = x + plan.draw(x.shape[0], rng)
    stuck = np.flatnonzero(y == x)
    while stuck.size:
        y[stuck] = x[stuck] + plan.draw(stuck.size, rng)
        stuck = stuck[y[stuck] == x[stuck]]
    return as_series(y)


def _score(data, metric, disturb, threads):
    if data.r < 2:
        raise ValueError("robustness scores need at least two classes")
    labels = data.labels
    prepped = [metric.prepare(inst.series) for inst in data]

    def ratio(i):
        x = data[i].series
        own = metric.between(prepped[i], metric.prepare(disturb(x, i)))
        others = [j for j, lab in enumerate(labels) if lab != labels[i]]
        hits = sum(own < metric.between(prepped[i], prepped[j]) for j in others)
        return hits / len(others)

    threads = resolve_threads(threads)
    if threads == 1:
        ratios = [ratio(i) for i in range(len(data))]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            ratios = list(pool.map(ratio, range(len(data))))
    return RobustnessScore(tuple(ratios), float(np.mean(ratios)))


def contamination_tolerance_score(data, metric, fraction=0.05, seed=0,
                                  placement="random", magnitude=np.inf, threads=None):
    """Mean share of out-of-class instances farther from ``x`` than its contaminated copy."""
    if not 0 < fraction < 1:
        raise ValueError("fraction must lie in (0, 1)")
    n = data.length

    def disturb(x, i):
        plan = ContaminationPlan.draw(n, fraction, placement, instance_rng(seed, i), magnitude)
        return contaminate(x, plan)

    return _score(data, metric, disturb, threads)


def imprecision_invariance_score(data, metric, eps_max=1e-10, seed=0, threads=None):
    """As :func:`contamination_tolerance_score`, with ``x + eps`` at every position."""
    plan = ImprecisionPlan(eps_max, seed)
    return _score(data, metric, lambda x, i: perturb(x, plan, instance_rng(seed, i)), threads)
