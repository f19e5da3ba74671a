import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from robustdist import (
    ENSEMBLE_SUP,
    EnsembleConfig,
    edit_distance,
    ensemble_components,
    ensemble_distance,
    euclidean,
    log_distance,
    recompose,
    scale,
    sliding_median,
    window_for_length,
)


def S(d):
    return d / (1.0 + d)


def test_scale_examples():
    assert scale(0) == 0
    assert scale(1) == 0.5
    assert scale(np.inf) == 1.0
    with pytest.raises(ValueError):
        scale(-1e-9)
    with pytest.raises(ValueError):
        scale(float("nan"))


@given(st.floats(0, 1e12), st.floats(0, 1e12))
def test_scale_subadditive_and_monotone(a, b):
    assert scale(a + b) <= scale(a) + scale(b) + 1e-15
    if a < b:
        assert scale(a) <= scale(b)


def test_closed_form_example():
    # each component written out by hand: e=sqrt5, l=5 log2, Edit=5 on raw;
    # medians are the constant series 0 and 1 of length 3
    expected = math.sqrt(
        S(math.sqrt(5)) ** 2 + S(5 * math.log(2)) ** 2 + S(5) ** 2
        + S(math.sqrt(3)) ** 2 + S(3 * math.log(2)) ** 2 + S(3) ** 2
    )
    got = ensemble_distance([0.0] * 5, [1.0] * 5, window=3)
    assert got == pytest.approx(expected, rel=1e-14)
    assert got == pytest.approx(1.78734399062026, rel=1e-13)


def test_identical_series_zero(rng):
    x = rng.normal(size=40)
    assert ensemble_distance(x, x) == 0


def test_range(rng):
    for _ in range(100):
        n = int(rng.integers(3, 100))
        x, y = rng.normal(size=n), rng.normal(size=n) * 100
        v = ensemble_distance(x, y)
        assert 0 < v < ENSEMBLE_SUP


def test_window_rule():
    assert window_for_length(100) == 11
    assert window_for_length(286) == 29
    assert window_for_length(24) == 3
    assert window_for_length(3) == 3
    assert window_for_length(30) == 5   # floor(3)+1 = 4 -> 5
    for n in range(3, 3000):
        assert 3 <= window_for_length(n) <= n
        assert window_for_length(n) % 2 == 1


def test_config_errors():
    with pytest.raises(ValueError):
        EnsembleConfig(window=11).resolve(5)
    with pytest.raises(ValueError):
        EnsembleConfig(window_fraction=0)
    with pytest.raises(ValueError, match="length mismatch"):
        ensemble_distance([1, 2, 3], [1, 2, 3, 4])


def test_even_window_matches_next_odd(rng):
    for w in (4, 6, 10):
        x, y = rng.normal(size=50), rng.normal(size=50)
        assert ensemble_distance(x, y, window=w) == ensemble_distance(x, y, window=w + 1)


def test_components_recompose(rng):
    for _ in range(200):
        n = int(rng.integers(3, 120))
        x, y = rng.normal(size=n), np.round(rng.normal(size=n), 1)
        value, comps = ensemble_components(x, y)
        assert len(comps) == 6
        assert abs(recompose(comps) - value) <= 1e-12


def test_components_from_independent_parts(rng):
    x, y = rng.normal(size=60), rng.normal(size=60)
    w = window_for_length(60)
    mx, my = sliding_median(x, w), sliding_median(y, w)
    expected = [
        S(euclidean(x, y)), S(log_distance(x, y)), S(edit_distance(x, y)),
        S(euclidean(mx, my)), S(log_distance(mx, my)), S(edit_distance(mx, my)),
    ]
    _, comps = ensemble_components(x, y)
    np.testing.assert_allclose(comps, expected, rtol=1e-14)


def test_contamination_damping(rng):
    # scattered +inf, at most (w-1)/2 per window: medianed terms stay finite
    n, w = 200, 21
    x = rng.normal(size=n)
    y = x.copy()
    y[::w] = np.inf
    k = int(np.isinf(y).sum())
    _, comps = ensemble_components(x, y, window=w)
    assert comps[0] == 1.0 and comps[1] == 1.0
    assert comps[2] == pytest.approx(S(k))
    assert all(c < 1.0 for c in comps[3:])


def test_monotone_series_consecutive_block_keeps_medians():
    # contaminating the top end of an increasing series leaves medians intact
    n = 200
    x = np.arange(n, dtype=float)
    w = window_for_length(n)
    k = math.ceil(0.05 * n)
    y = x.copy()
    y[-k:] = np.inf
    value, comps = ensemble_components(x, y, window=w)
    assert comps[3:] == (0.0, 0.0, 0.0)
    assert value == pytest.approx(math.sqrt(2 + S(k) ** 2), rel=1e-14)
