"""Elastic comparison measures: banded DTW and EDR.

Neither is a metric.  Both run a dynamic program over two rolling rows, so
memory is O(m) per call.
"""
import numpy as np
from numba import njit

from .series import as_series, mad

__all__ = ["dtw", "edr", "edr_tolerance"]


@njit(cache=True, nogil=True)
def _dtw_banded(x, y, band):
    n = x.shape[0]
    m = y.shape[0]
    inf = np.inf
    prev = np.full(m + 1, inf)
    cur = np.full(m + 1, inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        cur[:] = inf
        lo = max(1, i - band)
        hi = min(m, i + band)
        for j in range(lo, hi + 1):
            diff = x[i - 1] - y[j - 1]
            cost = diff * diff
            if cost != cost:
                return np.nan
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            cur[j] = cost + best
        prev, cur = cur, prev
    return prev[m]


def dtw(x, y, band=100):
    """Dynamic time warping under a Sakoe-Chiba band.

    ``band`` is the half-width: cell ``(i, j)`` is reachable only when
    ``|i - j| <= band``.  Squared pointwise costs are accumulated along the
    cheapest warping path and the square root of the total is returned, so
    the diagonal path alone reproduces the Euclidean distance.
    """
    x = as_series(x)
    y = as_series(y)
    band = int(band)
    if band < 1:
        raise ValueError("band must be >= 1, got %d" % band)
    if band < abs(x.shape[0] - y.shape[0]):
        raise ValueError("band %d cannot bridge lengths %d and %d" % (band, x.shape[0], y.shape[0]))
    total = _dtw_banded(x, y, band)
    if np.isnan(total):
        raise ValueError("undefined difference between equal infinities")
    return float(np.sqrt(total))


@njit(cache=True, nogil=True)
def _edr(x, y, tol):
    n = x.shape[0]
    m = y.shape[0]
    prev = np.arange(m + 1)
    cur = np.empty(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        cur[0] = i
        xi = x[i - 1]
        for j in range(1, m + 1):
            # NaN (equal infinities) and infinite gaps both fail the match test
            sub = 0 if abs(xi - y[j - 1]) <= tol else 1
            best = prev[j - 1] + sub
            if prev[j] + 1 < best:
                best = prev[j] + 1
            if cur[j - 1] + 1 < best:
                best = cur[j - 1] + 1
            cur[j] = best
        prev, cur = cur, prev
    return prev[m]


def edr_tolerance(x, y, fraction=0.1):
    """Match threshold: ``fraction`` times the MAD of the concatenated series."""
    if fraction < 0:
        raise ValueError("tolerance fraction must be non-negative")
    return fraction * mad(np.concatenate([as_series(x), as_series(y)]))


def edr(x, y, tolerance_fraction=0.1, tolerance=None):
    """Edit Distance on Real sequences.

    Two observations match when they differ by at most the tolerance;
    a matched pair costs nothing, everything else (substitution, insertion,
    deletion) costs one.  Pass ``tolerance`` to use an absolute threshold
    instead of ``tolerance_fraction * mad(x ++ y)``.
    """
    x = as_series(x)
    y = as_series(y)
    if tolerance is None:
        tolerance = edr_tolerance(x, y, tolerance_fraction)
    elif tolerance < 0:
        raise ValueError("tolerance must be non-negative")
    return int(_edr(x, y, float(tolerance)))
