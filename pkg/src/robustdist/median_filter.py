"""Sliding-window median.

Every observation is ranked once (an O(n log n) sort, each observation
getting its own rank).  The current window is then a set of ranks held in
a hierarchical bitset: 64-way summary levels make insert, delete and
"next/previous present rank" O(log_64 n).  A pointer to the median rank
moves by at most a couple of present ranks per slide, so the total cost is
O(n log n) whatever the window size.  Deleting the oldest observation is
located through its rank, which is stored by arrival index.
"""
import numpy as np
from numba import njit
from numba.cpython.unsafe.numbers import leading_zeros, trailing_zeros

from .series import as_series

__all__ = ["odd_window", "sliding_median", "naive_sliding_median"]


def odd_window(w):
    """Return ``w`` rounded up to the next odd integer (even ``w`` -> ``w + 1``)."""
    w = int(w)
    if w < 1:
        raise ValueError("window must be a positive integer, got %d" % w)
    return w + 1 if w % 2 == 0 else w


def _check_window(n, w):
    if n < 3:
        raise ValueError("sliding median needs at least 3 observations, got %d" % n)
    if w > n:
        raise ValueError("window exceeds series (w=%d, n=%d)" % (w, n))
    if w < 3:
        raise ValueError("window must be at least 3, got %d" % w)


def _layout(n):
    # offsets[l] is where level l starts in the flat word array; level 0 has one bit per rank
    offsets, sizes = [0], []
    size = n
    while True:
        words = (size + 63) // 64
        sizes.append(words)
        offsets.append(offsets[-1] + words)
        if words == 1:
            break
        size = words
    return np.array(offsets, dtype=np.int64), len(sizes)


@njit(cache=True, nogil=True, inline="always")
def _set(bits, offsets, levels, r):
    for lv in range(levels):
        word = offsets[lv] + (r >> 6)
        was_empty = bits[word] == 0
        bits[word] |= np.uint64(1) << np.uint64(r & 63)
        if not was_empty:
            return
        r >>= 6


@njit(cache=True, nogil=True, inline="always")
def _clear(bits, offsets, levels, r):
    for lv in range(levels):
        word = offsets[lv] + (r >> 6)
        bits[word] &= ~(np.uint64(1) << np.uint64(r & 63))
        if bits[word] != 0:
            return
        r >>= 6


@njit(cache=True, nogil=True)
def _next(bits, offsets, levels, r):
    """Smallest present rank > r, or -1."""
    lv = 0
    pos = r + 1
    # climb until some word holds a set bit at or after pos
    while lv < levels:
        idx = pos >> 6
        if idx < offsets[lv + 1] - offsets[lv]:
            word = bits[offsets[lv] + idx] >> np.uint64(pos & 63)
            if word != 0:
                pos = pos + trailing_zeros(word)
                break
        pos = idx + 1
        lv += 1
    else:
        return -1
    # descend to level 0 following the lowest set bit
    while lv > 0:
        lv -= 1
        w = bits[offsets[lv] + pos]
        pos = (pos << 6) + trailing_zeros(w)
    return pos


@njit(cache=True, nogil=True)
def _prev(bits, offsets, levels, r):
    """Largest present rank < r, or -1."""
    lv = 0
    pos = r - 1
    while lv < levels:
        if pos < 0:
            return -1
        idx = pos >> 6
        shift = np.uint64(63 - (pos & 63))
        word = (bits[offsets[lv] + idx] << shift) >> shift
        if word != 0:
            pos = (idx << 6) + 63 - leading_zeros(word)
            break
        pos = idx - 1
        lv += 1
    else:
        return -1
    while lv > 0:
        lv -= 1
        w = bits[offsets[lv] + pos]
        pos = (pos << 6) + 63 - leading_zeros(w)
    return pos


@njit(cache=True, nogil=True)
def _bitset_sliding_median(sorted_values, rank, w, offsets, levels):
    n = rank.shape[0]
    bits = np.zeros(offsets[levels], dtype=np.uint64)
    half = (w - 1) // 2
    out = np.empty(n - w + 1, dtype=np.float64)

    for t in range(w):
        _set(bits, offsets, levels, rank[t])
    m = _next(bits, offsets, levels, -1)
    for _ in range(half):
        m = _next(bits, offsets, levels, m)
    below = half  # present ranks strictly smaller than m
    out[0] = sorted_values[m]

    for t in range(w, n):
        r_in = rank[t]
        r_out = rank[t - w]
        _set(bits, offsets, levels, r_in)
        if r_in < m:
            below += 1
        _clear(bits, offsets, levels, r_out)
        if r_out < m:
            below -= 1
        elif r_out == m:
            nxt = _next(bits, offsets, levels, m)
            if nxt >= 0:
                m = nxt
            else:
                m = _prev(bits, offsets, levels, m)
                below -= 1
        while below > half:
            m = _prev(bits, offsets, levels, m)
            below -= 1
        while below < half:
            m = _next(bits, offsets, levels, m)
            below += 1
        out[t - w + 1] = sorted_values[m]
    return out


def sliding_median(x, w):
    """Median of every length-``w`` window of ``x``.

    ``w`` is made odd first (even values are incremented).  Output position
    ``i`` is ``median(x[i:i + w])`` and the result has ``n - w + 1`` entries.
    Infinite observations are ordered as extremes.

    >>> sliding_median([1, 100, 2, 3, 4], 3)
    array([2., 3., 3.])
    """
    x = as_series(x)
    w = odd_window(w)
    n = x.shape[0]
    _check_window(n, w)
    # ties hold equal values, so how they are broken cannot change the output
    order = np.argsort(x)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    offsets, levels = _layout(n)
    return _bitset_sliding_median(x[order], rank, w, offsets, levels)


def naive_sliding_median(x, w, chunk=None):
    """Reference implementation: sort every window independently.

    Costs O(n w log w); kept as a test oracle for :func:`sliding_median`.
    """
    x = as_series(x)
    w = odd_window(w)
    n = x.shape[0]
    _check_window(n, w)
    windows = np.lib.stride_tricks.sliding_window_view(x, w)
    if chunk is None:
        chunk = max(1, 2_000_000 // w)
    out = np.empty(n - w + 1)
    mid = w // 2
    for start in range(0, n - w + 1, chunk):
        block = np.sort(windows[start:start + chunk], axis=1)
        out[start:start + chunk] = block[:, mid]
    return out
