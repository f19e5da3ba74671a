"""Uniform access to the six distance functions compared in the evaluation."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
import os

import numpy as np

from .elastic import dtw, edr
from .ensemble import EnsembleConfig, _components_from_medians, _fuse, ensemble_distance
from .lockstep import euclidean, log_distance, edit_distance
from .median_filter import sliding_median
from .series import as_series

__all__ = ["DistanceSpec", "KINDS", "DISPLAY_NAMES", "NON_METRIC", "cross_distances", "resolve_threads"]

# column order of every results table
KINDS = ("ensemble", "euclidean", "dtw", "log", "edit", "edr")
DISPLAY_NAMES = {
    "ensemble": "E",
    "euclidean": "Euc",
    "dtw": "DTW",
    "log": "Log",
    "edit": "ED",
    "edr": "EDR",
}
NON_METRIC = frozenset({"dtw", "edr"})


@dataclass(frozen=True)
class DistanceSpec:
    """A distance function plus its parameters.

    Only the parameters relevant to ``kind`` are kept; the others are reset
    to ``None`` so two specs describing the same function compare equal.
    """

    kind: str
    window: int = None
    window_fraction: float = 0.1
    edr_tolerance_fraction: float = 0.1
    dtw_band: int = 100

    def __post_init__(self):
        kind = self.kind.lower()
        if kind not in KINDS:
            raise ValueError("unknown distance %r (choose from %s)" % (self.kind, ", ".join(KINDS)))
        object.__setattr__(self, "kind", kind)
        if kind == "ensemble":
            cfg = EnsembleConfig(self.window, self.window_fraction)
            object.__setattr__(self, "window", cfg.window)
            if cfg.window is not None:
                object.__setattr__(self, "window_fraction", None)
        else:
            object.__setattr__(self, "window", None)
            object.__setattr__(self, "window_fraction", None)
        if kind != "edr":
            object.__setattr__(self, "edr_tolerance_fraction", None)
        elif self.edr_tolerance_fraction < 0:
            raise ValueError("edr tolerance fraction must be non-negative")
        if kind != "dtw":
            object.__setattr__(self, "dtw_band", None)
        elif self.dtw_band < 1:
            raise ValueError("dtw band must be >= 1")

    @property
    def name(self):
        return DISPLAY_NAMES[self.kind]

    @property
    def is_metric(self):
        return self.kind not in NON_METRIC

    def params(self):
        return {k: v for k, v in asdict(self).items() if v is not None}

    def __call__(self, x, y):
        if self.kind == "euclidean":
            return euclidean(x, y)
        if self.kind == "log":
            return log_distance(x, y)
        if self.kind == "edit":
            return edit_distance(x, y)
        if self.kind == "dtw":
            return dtw(x, y, band=self.dtw_band)
        if self.kind == "edr":
            return edr(x, y, tolerance_fraction=self.edr_tolerance_fraction)
        return ensemble_distance(x, y, self._ensemble_config())

    def _ensemble_config(self):
        if self.window is not None:
            return EnsembleConfig(window=self.window)
        return EnsembleConfig(window_fraction=self.window_fraction)

    def prepare(self, x):
        """Per-series precomputation reused across many comparisons."""
        x = as_series(x)
        if self.kind != "ensemble":
            return x
        w = self._ensemble_config().resolve(x.shape[0])
        return x, sliding_median(x, w)

    def between(self, a, b):
        """Distance between two outputs of :meth:`prepare`."""
        if self.kind != "ensemble":
            return self(a, b)
        (x, mx), (y, my) = a, b
        if x.shape[0] != y.shape[0]:
            raise ValueError("lockstep length mismatch: %d vs %d" % (x.shape[0], y.shape[0]))
        return _fuse(_components_from_medians(x, y, mx, my))


def resolve_threads(threads):
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError("threads must be >= 1")
    return int(threads)


def cross_distances(queries, references, metric, threads=None):
    """Matrix ``D[i, j] = metric(queries[i], references[j])``.

    Rows are evaluated in parallel; the result does not depend on the
    number of threads.
    """
    prepped_refs = [metric.prepare(r) for r in references]
    prepped_q = [metric.prepare(q) for q in queries]

    def row(q):
        return [metric.between(q, r) for r in prepped_refs]

    threads = resolve_threads(threads)
    if threads == 1 or len(prepped_q) < 2:
        rows = [row(q) for q in prepped_q]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, prepped_q))
    return np.array(rows, dtype=np.float64).reshape(len(prepped_q), len(prepped_refs))
