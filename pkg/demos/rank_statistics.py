"""Friedman test and a critical-difference diagram from an error table."""
import numpy as np

import robustdist as rd

methods = ("E", "Euc", "DTW", "Log", "ED")
rng = np.random.default_rng(11)
base = np.array([0.10, 0.14, 0.11, 0.15, 0.30])
errors = np.clip(base + 0.03 * rng.normal(size=(12, base.size)), 0, 1)

rm = rd.rank_rows(errors, methods=methods, datasets=["d%02d" % i for i in range(len(errors))])
for m, r in zip(rm.methods, rm.avg_ranks):
    print("  %-4s average rank %.3f" % (m, r))
chi2, f_ff = rd.friedman_statistic(rm)
print("chi^2_F %.3f  F_F %.3f" % (chi2, f_ff))

cd = rd.nemenyi_cd(rm.k, rm.N, alpha=0.05)
print("critical difference %.3f" % cd)

diagram = rd.emit_cd_diagram(rm, cd, non_metric_flags=[m == "DTW" for m in methods])
print(diagram.text)
with open("cd_diagram.svg", "w") as fh:
    fh.write(diagram.svg)
print("wrote cd_diagram.svg")
