"""How much contamination the sliding median absorbs.

A window of width w keeps a finite output while fewer than half its
entries are infinite.  Push one more in and the median breaks down.
"""
import numpy as np

import robustdist as rd

rng = np.random.default_rng(1)
x = rng.normal(size=40)
w = 9

for block in range(0, w + 1):
    y = x.copy()
    y[10:10 + block] = np.inf
    m = rd.sliding_median(y, w)
    print("block of %d infs -> %2d infinite medians" % (block, np.isinf(m).sum()))

# Contamination plans place k = ceil(fraction * n) infinite values
plan = rd.ContaminationPlan.draw(x.size, fraction=0.05, placement="random", seed=3)
print("\nrandom plan positions", plan.positions)
plan = rd.ContaminationPlan.draw(x.size, fraction=0.05, placement="consecutive", seed=3)
print("consecutive plan positions", plan.positions)

# every entry infinite: lockstep terms saturate, the ensemble stays finite
z = np.full(x.size, np.inf)
print("\nfully contaminated: euclidean", rd.euclidean(x, z), " ensemble %.6f" % rd.ensemble_distance(x, z))
