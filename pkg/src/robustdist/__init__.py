"""Robust time-series distances.

An ensemble metric built from Euclidean, Log and Edit distances on the raw
series and on their sliding medians, plus the comparison measures (DTW,
EDR), 1-NN evaluation, contamination/imprecision robustness scores and
Friedman/Nemenyi rank statistics.
"""
from .series import as_series, median, mad, LabeledInstance, Dataset
from .lockstep import euclidean, log_distance, edit_distance
from .elastic import dtw, edr, edr_tolerance
from .median_filter import odd_window, sliding_median, naive_sliding_median
from .ensemble import (
    ENSEMBLE_SUP,
    EnsembleConfig,
    ensemble_components,
    ensemble_distance,
    recompose,
    scale,
    window_for_length,
)
from .distances import DistanceSpec, KINDS, cross_distances
from .knn import ClassificationResult, error_rate, nn1_classify
from .robustness import (
    ContaminationPlan,
    ImprecisionPlan,
    RobustnessScore,
    contaminate,
    perturb,
    contamination_tolerance_score,
    imprecision_invariance_score,
)
from .ranks import RankMatrix, rank_rows, friedman_chi_square, friedman_statistic, nemenyi_cd, emit_cd_diagram
from .datasets import load_ucr, save_ucr, load_series, synth_dataset, split_dataset

__version__ = "0.1.0"
