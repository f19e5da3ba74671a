"""Lockstep metrics: Euclidean, Log-distance and raw Edit distance.

Each compares ``x[t]`` only with ``y[t]``.  Infinite observations are
allowed; an infinite difference makes Euclidean and Log-distance infinite
while Edit distance simply counts the position.
"""
import numpy as np

from .series import as_series

__all__ = ["euclidean", "log_distance", "edit_distance", "abs_diff", "l2_norm"]


def _pair(x, y):
    x = as_series(x)
    y = as_series(y)
    if x.shape[0] != y.shape[0]:
        raise ValueError("lockstep length mismatch: %d vs %d" % (x.shape[0], y.shape[0]))
    return x, y


def abs_diff(x, y):
    """Pointwise ``|x - y|``; same-signed infinities at one position raise."""
    with np.errstate(invalid="ignore"):
        d = np.abs(x - y)
    if np.isnan(d).any():
        raise ValueError("undefined difference between equal infinities")
    return d


def l2_norm(d):
    """Euclidean norm of a non-negative vector, rescaled against under/overflow."""
    top = d.max()
    if top == 0 or not np.isfinite(top):
        return float(top)
    d = d / top
    return float(top * np.sqrt(np.dot(d, d)))


def euclidean(x, y):
    x, y = _pair(x, y)
    return l2_norm(abs_diff(x, y))


def log_distance(x, y):
    """Sum of ``log(1 + |x_t - y_t|)`` (natural logarithm)."""
    x, y = _pair(x, y)
    return float(np.log1p(abs_diff(x, y)).sum())


def edit_distance(x, y):
    """Number of positions where ``x`` and ``y`` differ under exact equality."""
    x, y = _pair(x, y)
    return int(np.count_nonzero(x != y))
