"""1-NN error and robustness scores on a synthetic two-class problem."""
import numpy as np

import robustdist as rd

data = rd.synth_dataset(classes=2, per_class=15, n=80, separation=1.5, noise=1.0, seed=7)
train, test = rd.split_dataset(data, test_fraction=0.5, seed=7)
print("train %d, test %d, length %d" % (len(train), len(test), data.length))

metrics = [rd.DistanceSpec(kind) for kind in rd.KINDS]
for spec in metrics:
    res = rd.error_rate(train, test, spec)
    print("%-4s error %.3f" % (spec.name, res.error_rate))

# smaller set keeps the elastic measures quick
small = rd.synth_dataset(classes=2, per_class=6, n=60, separation=1.5, seed=2)
print("\n      contamination  imprecision")
for spec in metrics:
    c = rd.contamination_tolerance_score(small, spec, seed=0).mean_score
    i = rd.imprecision_invariance_score(small, spec, seed=0).mean_score
    print("%-4s  %12.3f  %11.3f" % (spec.name, c, i))
