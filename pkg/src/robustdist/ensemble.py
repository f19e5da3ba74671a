"""The robust ensemble metric.

Six components are each squashed into [0, 1] with ``scale`` and combined
with an L2 norm: Euclidean, Log and Edit distance on the raw series, then
the same three on the sliding medians of both series.  The raw Euclidean
term keeps identity of indiscernibles; the medianed terms and the Edit
terms keep the value bounded away from its supremum under contamination.
"""
import math
from dataclasses import dataclass

import numpy as np

from .lockstep import abs_diff, l2_norm
from .median_filter import odd_window, sliding_median
from .series import as_series

__all__ = [
    "scale",
    "EnsembleConfig",
    "window_for_length",
    "ensemble_components",
    "ensemble_distance",
    "ENSEMBLE_SUP",
    "COMPONENT_NAMES",
]

ENSEMBLE_SUP = math.sqrt(6.0)
COMPONENT_NAMES = ("euclidean", "log", "edit", "median_euclidean", "median_log", "median_edit")


def scale(d):
    """Map a distance in [0, inf] onto [0, 1] via ``1 - 1 / (1 + d)``.

    Strictly increasing, ``scale(0) == 0`` and ``scale(inf) == 1``.  Applied
    to a (pseudo)metric the result is again a (pseudo)metric.
    """
    d = float(d)
    if not d >= 0:
        raise ValueError("distance must be non-negative, got %r" % d)
    return 1.0 - 1.0 / (1.0 + d)


def window_for_length(n, fraction=0.1):
    """Window from the fraction rule: ``floor(fraction * n) + 1``, made odd.

    Clamped below at 3, the smallest window a sliding median accepts.
    """
    w = odd_window(int(math.floor(fraction * n)) + 1)
    return max(w, 3)


@dataclass(frozen=True)
class EnsembleConfig:
    """Window choice for the sliding-median components.

    Give ``window`` for a fixed size (even sizes are bumped to the next odd
    number), otherwise ``window_fraction`` is applied to each series length.
    """

    window: int = None
    window_fraction: float = 0.1

    def __post_init__(self):
        if self.window is not None:
            object.__setattr__(self, "window", odd_window(self.window))
        elif not 0 < self.window_fraction < 1:
            raise ValueError("window_fraction must lie in (0, 1)")

    def resolve(self, n):
        w = self.window if self.window is not None else window_for_length(n, self.window_fraction)
        if w < 3 or w > n:
            raise ValueError("window %d invalid for series of length %d" % (w, n))
        return w


def _lockstep_triple(a, b):
    d = abs_diff(a, b)
    return (
        l2_norm(d),
        float(np.log1p(d).sum()),
        int(np.count_nonzero(a != b)),
    )


def _fuse(scaled):
    return math.sqrt(sum(s * s for s in scaled))


def _components_from_medians(x, y, mx, my):
    raw = _lockstep_triple(x, y) + _lockstep_triple(mx, my)
    return tuple(scale(d) for d in raw)


def ensemble_components(x, y, window=None, window_fraction=0.1):
    """Return ``(value, scaled)`` where ``scaled`` holds the six scaled terms.

    The order of ``scaled`` is fixed: Euclidean, Log, Edit on the raw
    series, then Euclidean, Log, Edit on the sliding medians.  ``window``
    may also be an :class:`EnsembleConfig`.
    """
    cfg = window if isinstance(window, EnsembleConfig) else EnsembleConfig(window, window_fraction)
    x = as_series(x)
    y = as_series(y)
    if x.shape[0] != y.shape[0]:
        raise ValueError("lockstep length mismatch: %d vs %d" % (x.shape[0], y.shape[0]))
    w = cfg.resolve(x.shape[0])
    scaled = _components_from_medians(x, y, sliding_median(x, w), sliding_median(y, w))
    return _fuse(scaled), scaled


def ensemble_distance(x, y, window=None, window_fraction=0.1):
    """Robust ensemble distance, a metric with values in ``[0, sqrt(6)]``.

    >>> ensemble_distance([0., 1., 2., 3.], [0., 1., 2., 3.], window=3)
    0.0
    """
    return ensemble_components(x, y, window, window_fraction)[0]


def recompose(scaled):
    """Fuse six exported scaled components back into the ensemble value."""
    if len(scaled) != 6:
        raise ValueError("expected six components")
    return _fuse(scaled)
