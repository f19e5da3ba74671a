"""Validated series containers and the order statistics used everywhere else."""
from dataclasses import dataclass

import numpy as np

__all__ = ["as_series", "LabeledInstance", "Dataset", "median", "mad"]


def as_series(values):
    """Return ``values`` as a read-only 1-D float64 array.

    Infinities are legal observations; NaN is rejected.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("a time series must be one-dimensional, got shape %s" % (arr.shape,))
    if arr.shape[0] == 0:
        raise ValueError("a time series needs at least one observation")
    if np.isnan(arr).any():
        raise ValueError("NaN observations are not allowed")
    if arr.flags.writeable:
        if arr is values or arr.base is not None:
            arr = arr.copy()
        arr.flags.writeable = False
    return arr


def median(values):
    """Median with the mean-of-middles convention for even counts.

    Infinities sort as extremes, so ``median([1, inf, 2]) == 2``.
    """
    arr = np.asarray(values, dtype=np.float64).ravel()
    if arr.shape[0] == 0:
        raise ValueError("empty sample")
    if np.isnan(arr).any():
        raise ValueError("NaN observations are not allowed")
    s = np.sort(arr)
    half = s.shape[0] // 2
    if s.shape[0] % 2:
        return float(s[half])
    # halving first avoids overflow and keeps inf/2 + inf/2 == inf
    with np.errstate(invalid="ignore"):
        mid = s[half - 1] / 2 + s[half] / 2
    if np.isnan(mid):
        raise ValueError("median undefined: middle values are -inf and +inf")
    return float(mid)


def mad(values):
    """Median absolute deviation from the median (unscaled)."""
    arr = np.asarray(values, dtype=np.float64).ravel()
    if arr.shape[0] == 0:
        raise ValueError("empty sample")
    center = median(arr)
    if not np.isfinite(center):
        raise ValueError("median absolute deviation is undefined: median is infinite")
    return median(np.abs(arr - center))


@dataclass(frozen=True)
class LabeledInstance:
    series: np.ndarray
    label: str

    def __post_init__(self):
        object.__setattr__(self, "series", as_series(self.series))


@dataclass(frozen=True)
class Dataset:
    """Equal-length labeled series.

    Labels are opaque tokens (kept as strings when read from disk).  The
    class list preserves first-appearance order.
    """

    instances: tuple
    name: str = ""

    def __post_init__(self):
        instances = tuple(self.instances)
        if not instances:
            raise ValueError("a dataset needs at least one instance")
        n = instances[0].series.shape[0]
        for i, inst in enumerate(instances):
            if inst.series.shape[0] != n:
                raise ValueError(
                    "nonuniform length: instance %d has %d observations, expected %d"
                    % (i, inst.series.shape[0], n))
        object.__setattr__(self, "instances", instances)

    @classmethod
    def from_arrays(cls, X, labels, name=""):
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[0] != len(labels):
            raise ValueError("expected a 2-D array with one row per label")
        return cls(tuple(LabeledInstance(row, lab) for row, lab in zip(X, labels)), name=name)

    def __len__(self):
        return len(self.instances)

    def __getitem__(self, i):
        return self.instances[i]

    def __iter__(self):
        return iter(self.instances)

    @property
    def length(self):
        return self.instances[0].series.shape[0]

    @property
    def labels(self):
        return [inst.label for inst in self.instances]

    @property
    def classes(self):
        return tuple(dict.fromkeys(self.labels))

    @property
    def r(self):
        return len(self.classes)

    def values(self):
        """Stack the series into an ``(len(self), n)`` array."""
        return np.vstack([inst.series for inst in self.instances])
