"""1-nearest-neighbour classification and error rates."""
from dataclasses import dataclass

import numpy as np

from .distances import cross_distances

__all__ = ["ClassificationResult", "nn1_classify", "error_rate", "predict_from_distances"]


@dataclass(frozen=True)
class ClassificationResult:
    predictions: tuple
    nn_index: tuple
    nn_distance: tuple
    error_rate: float


def nn1_classify(train, query, metric):
    """Return ``(label, index, distance)`` of the nearest training instance.

    Ties go to the lowest training index.
    """
    if len(train) == 0:
        raise ValueError("empty training set")
    q = metric.prepare(query)
    best_i, best_d = 0, np.inf
    for i, inst in enumerate(train):
        d = metric.between(q, metric.prepare(inst.series))
        if d < best_d or i == 0:
            best_i, best_d = i, d
    return train[best_i].label, best_i, float(best_d)


def predict_from_distances(D, train_labels):
    """Labels, indices and distances of the row-wise nearest neighbours of ``D``."""
    idx = np.argmin(D, axis=1)  # first minimum == lowest index on ties
    return (
        tuple(train_labels[i] for i in idx),
        tuple(int(i) for i in idx),
        tuple(float(D[r, i]) for r, i in enumerate(idx)),
    )


def error_rate(train, test, metric, threads=None):
    """Classify every test instance by 1-NN over ``train`` and score it."""
    if len(train) == 0 or len(test) == 0:
        raise ValueError("training and test sets must be non-empty")
    D = cross_distances([t.series for t in test], [t.series for t in train], metric, threads)
    preds, idx, dist = predict_from_distances(D, train.labels)
    wrong = sum(p != t.label for p, t in zip(preds, test))
    return ClassificationResult(preds, idx, dist, wrong / len(test))
