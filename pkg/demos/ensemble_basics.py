"""Ensemble distance on a pair of short series.

Shows the six scaled components, how they recombine into the ensemble
value, and what happens to each one when a single reading goes to +inf.
"""
import numpy as np

import robustdist as rd

rng = np.random.default_rng(0)
x = np.sin(np.linspace(0, 4 * np.pi, 60)) + 0.1 * rng.normal(size=60)
y = np.sin(np.linspace(0.3, 4 * np.pi + 0.3, 60)) + 0.1 * rng.normal(size=60)

w = rd.window_for_length(x.size)
print("series length", x.size, "-> median window", w)

value, parts = rd.ensemble_components(x, y)
for name, s in zip(rd.ensemble.COMPONENT_NAMES, parts):
    print("  %-16s %.4f" % (name, s))
print("ensemble %.4f (recomposed %.4f, upper bound %.4f)" % (value, rd.recompose(parts), rd.ENSEMBLE_SUP))

# one broken sensor reading
y_bad = y.copy()
y_bad[17] = np.inf
value_bad, parts_bad = rd.ensemble_components(x, y_bad)
print("\nwith y[17] = inf")
for name, s in zip(rd.ensemble.COMPONENT_NAMES, parts_bad):
    print("  %-16s %.4f" % (name, s))
print("ensemble %.4f" % value_bad)

# the spike only nudges the window medians, it never reaches them
print("median of y_bad finite:", np.isfinite(rd.sliding_median(y_bad, w)).all())
print("euclidean on raw series:", rd.euclidean(x, y_bad))
