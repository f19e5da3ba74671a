import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from robustdist import edit_distance, euclidean, log_distance

vec = st.integers(1, 30).flatmap(
    lambda n: st.tuples(*[st.lists(st.floats(-1e3, 1e3), min_size=n, max_size=n)] * 3))


def test_euclidean_examples():
    assert euclidean([0, 0], [3, 4]) == 5
    assert euclidean([1, 2, 3], [1, 2, 3]) == 0
    assert euclidean([1, 2, 3], [2, 2, 5]) == pytest.approx(math.sqrt(5), rel=1e-15)


def test_log_distance_examples():
    assert log_distance([1.5, -2], [1.5, -2]) == 0
    assert log_distance([0], [math.e - 1]) == pytest.approx(1.0, rel=1e-15)
    assert log_distance([0, 0], [1, 3]) == pytest.approx(3 * math.log(2), rel=1e-15)


def test_edit_distance_examples():
    assert edit_distance([1, 2, 3], [1, 2, 3]) == 0
    assert edit_distance([1, 2, 3], [1, 2, 4]) == 1
    assert edit_distance([1, 2, 3], [1 + 1e-12, 2, 3]) == 1
    assert edit_distance([0.0], [-0.0]) == 0


@pytest.mark.parametrize("fn", [euclidean, log_distance, edit_distance])
def test_length_mismatch(fn):
    with pytest.raises(ValueError, match="lockstep length mismatch"):
        fn([1, 2], [1, 2, 3])


@pytest.mark.parametrize("fn", [euclidean, log_distance, edit_distance])
@given(triple=vec)
def test_metric_axioms(fn, triple):
    x, y, z = map(np.array, triple)
    dxy, dyx = fn(x, y), fn(y, x)
    assert dxy >= 0
    assert dxy == dyx
    assert fn(x, x) == 0
    if not np.array_equal(x, y):
        assert dxy > 0
    assert fn(x, z) <= (dxy + fn(y, z)) * (1 + 1e-9) + 1e-12


@given(triple=vec)
def test_log_dominated_by_l1(triple):
    x, y, _ = map(np.array, triple)
    assert log_distance(x, y) <= np.abs(x - y).sum() * (1 + 1e-12) + 1e-12


def test_single_point_breakdown(rng):
    x = rng.normal(size=50)
    y = x.copy()
    y[17] = np.inf
    assert euclidean(x, y) == np.inf
    assert log_distance(x, y) == np.inf
    assert edit_distance(x, y) == 1
    y[17] = -np.inf
    assert euclidean(x, y) == np.inf


def test_equal_infinities_are_rejected():
    with pytest.raises(ValueError):
        euclidean([np.inf, 1.0], [np.inf, 2.0])
    assert edit_distance([np.inf, 1.0], [np.inf, 2.0]) == 1


def test_edit_imprecision_susceptibility(rng):
    x = rng.normal(size=64)
    eps = rng.uniform(1e-6, 1e-5, size=64) * rng.choice([-1, 1], size=64)
    assert edit_distance(x, x + eps) == 64
