import math

import numpy as np
import pytest

from robustdist import (
    ContaminationPlan,
    Dataset,
    DistanceSpec,
    ENSEMBLE_SUP,
    ImprecisionPlan,
    contaminate,
    contamination_tolerance_score,
    imprecision_invariance_score,
    perturb,
    synth_dataset,
)
from robustdist.distances import KINDS


def test_contaminate_example():
    out = contaminate([1, 2, 3, 4], ContaminationPlan((1,)))
    np.testing.assert_array_equal(out, [1, np.inf, 3, 4])


def test_contaminate_rejects_bad_plans():
    with pytest.raises(ValueError):
        ContaminationPlan(())
    with pytest.raises(ValueError):
        ContaminationPlan((1, 1))
    with pytest.raises(ValueError):
        contaminate([1, 2, 3], ContaminationPlan((3,)))
    with pytest.raises(ValueError):
        ContaminationPlan.draw(10, k=0)


def test_plan_k_rounding():
    assert ContaminationPlan.draw(200, 0.05, seed=1).k == 10
    assert ContaminationPlan.draw(24, 0.05, seed=1).k == 2
    assert ContaminationPlan.draw(5, 0.05, seed=1).k == 1


def test_plan_determinism():
    a = ContaminationPlan.draw(100, 0.05, "random", seed=11)
    b = ContaminationPlan.draw(100, 0.05, "random", seed=11)
    assert a.positions == b.positions
    c = ContaminationPlan.draw(100, 0.2, "consecutive", seed=2)
    assert np.all(np.diff(c.positions) == 1)


def test_contaminate_leaves_other_positions(rng):
    x = rng.normal(size=50)
    plan = ContaminationPlan.draw(50, 0.1, seed=3)
    y = contaminate(x, plan)
    mask = np.ones(50, bool)
    mask[list(plan.positions)] = False
    assert np.array_equal(y[mask], x[mask])
    assert np.all(np.isinf(y[~mask]))


def test_perturb(rng):
    x = rng.normal(size=300) * 100
    plan = ImprecisionPlan()
    y = perturb(x, plan)
    assert np.all(np.abs(y - x) <= 1e-10)
    assert np.all(y != x)
    np.testing.assert_array_equal(y, perturb(x, plan))
    with pytest.raises(ValueError):
        ImprecisionPlan(0.0)
    with pytest.raises(ValueError):
        perturb([1.0, np.inf], plan)
    with pytest.raises(ValueError):
        perturb([1e10], ImprecisionPlan(1e-10))


def test_single_class_rejected():
    data = Dataset.from_arrays(np.zeros((3, 5)), ["a"] * 3)
    with pytest.raises(ValueError):
        contamination_tolerance_score(data, DistanceSpec("edit"))


def test_two_singletons():
    data = Dataset.from_arrays([[0, 0, 0, 0], [5, 5, 5, 5]], ["x", "y"])
    s = contamination_tolerance_score(data, DistanceSpec("edit"), 0.25, seed=0)
    assert s.per_instance_ratios == (1.0, 1.0) and s.mean_score == 1.0


@pytest.fixture(scope="module")
def synth():
    return synth_dataset(3, 8, 60, separation=20, seed=2)


def test_paper_column_patterns(synth):
    assert contamination_tolerance_score(synth, DistanceSpec("euclidean")).mean_score == 0.0
    assert contamination_tolerance_score(synth, DistanceSpec("edit")).mean_score == 1.0
    assert imprecision_invariance_score(synth, DistanceSpec("euclidean")).mean_score == 1.0
    assert imprecision_invariance_score(synth, DistanceSpec("edit")).mean_score == 0.0
    assert imprecision_invariance_score(synth, DistanceSpec("ensemble")).mean_score == 1.0


@pytest.mark.parametrize("kind", KINDS)
def test_sign_of_magnitude_irrelevant(synth, kind):
    spec = DistanceSpec(kind)
    pos = contamination_tolerance_score(synth, spec, seed=5, magnitude=np.inf)
    neg = contamination_tolerance_score(synth, spec, seed=5, magnitude=-np.inf)
    assert pos == neg


@pytest.mark.parametrize("kind", KINDS)
def test_thread_independent(synth, kind):
    spec = DistanceSpec(kind)
    a = contamination_tolerance_score(synth, spec, seed=9, threads=1)
    b = contamination_tolerance_score(synth, spec, seed=9, threads=3)
    assert a == b
    a = imprecision_invariance_score(synth, spec, seed=9, threads=1)
    b = imprecision_invariance_score(synth, spec, seed=9, threads=3)
    assert a == b


@pytest.mark.parametrize("kind", ["edit", "euclidean", "log"])
def test_scores_do_not_drop_with_separation(kind):
    spec = DistanceSpec(kind)
    prev_c = prev_i = -1
    for sep in (0.5, 2, 8, 32):
        data = synth_dataset(2, 6, 40, separation=sep, seed=8)
        c = contamination_tolerance_score(data, spec, seed=1).mean_score
        i = imprecision_invariance_score(data, spec, seed=1).mean_score
        assert c >= prev_c and i >= prev_i
        prev_c, prev_i = c, i


def test_contaminated_distance_finiteness(rng):
    x = rng.normal(size=100)
    y = contaminate(x, ContaminationPlan.draw(100, 0.05, seed=4))
    for kind in ("ensemble", "edit", "edr"):
        d = DistanceSpec(kind)(x, y)
        assert 0 <= d < math.inf
    assert DistanceSpec("ensemble")(x, y) < ENSEMBLE_SUP
    for kind in ("euclidean", "log", "dtw"):
        assert DistanceSpec(kind)(x, y) == math.inf
