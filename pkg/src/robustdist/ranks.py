"""Friedman rank test, Nemenyi critical distance and CD diagrams.

Ranks are assigned per dataset (row) with lower error ranked better and
ties sharing the average of their rank positions.
"""
from dataclasses import dataclass
import math

import numpy as np
from scipy.stats import rankdata

__all__ = [
    "RankMatrix",
    "rank_rows",
    "friedman_chi_square",
    "friedman_statistic",
    "nemenyi_cd",
    "NEMENYI_Q",
    "cd_groups",
    "CDDiagram",
    "emit_cd_diagram",
]

# Two-tailed Nemenyi critical values q_alpha for k = 2..10 methods
# (studentized range statistic divided by sqrt(2), infinite degrees of freedom).
NEMENYI_Q = {
    0.05: (1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031, 3.102, 3.164),
    0.10: (1.645, 2.052, 2.291, 2.459, 2.589, 2.693, 2.780, 2.855, 2.920),
}


@dataclass(frozen=True)
class RankMatrix:
    methods: tuple
    datasets: tuple
    errors: np.ndarray
    ranks: np.ndarray

    @property
    def avg_ranks(self):
        return self.ranks.mean(axis=0)

    @property
    def N(self):
        return self.ranks.shape[0]

    @property
    def k(self):
        return self.ranks.shape[1]


def rank_rows(errors, methods=None, datasets=None):
    errors = np.asarray(errors, dtype=np.float64)
    if errors.ndim != 2:
        raise ValueError("errors must be an N x k matrix")
    N, k = errors.shape
    if N < 2 or k < 2:
        raise ValueError("need at least 2 datasets and 2 methods, got %d x %d" % (N, k))
    if not np.isfinite(errors).all():
        raise ValueError("error matrix contains non-finite entries")
    methods = tuple(methods) if methods is not None else tuple("m%d" % j for j in range(k))
    datasets = tuple(datasets) if datasets is not None else tuple("d%d" % i for i in range(N))
    if len(methods) != k or len(datasets) != N:
        raise ValueError("method/dataset names do not match the matrix shape")
    ranks = rankdata(errors, method="average", axis=1)
    return RankMatrix(methods, datasets, errors, ranks)


def friedman_chi_square(rm):
    N, k = rm.N, rm.k
    R = rm.avg_ranks
    return float(12.0 * N / (k * (k + 1)) * (np.sum(R ** 2) - k * (k + 1) ** 2 / 4.0))


def friedman_statistic(rm):
    """Friedman ``chi2_F`` and the Iman-Davenport corrected ``F_F``."""
    N, k = rm.N, rm.k
    chi2 = friedman_chi_square(rm)
    denom = N * (k - 1) - chi2
    if abs(denom) <= 1e-12 * N * k:
        raise ValueError("F-statistic undefined: N(k-1) equals chi2_F")
    return chi2, (N - 1) * chi2 / denom


def nemenyi_cd(k, N, alpha=0.05):
    """Critical distance ``q_alpha(k) * sqrt(k (k + 1) / (6 N))``."""
    if alpha not in NEMENYI_Q:
        raise ValueError("alpha must be one of %s" % sorted(NEMENYI_Q))
    if not 2 <= k <= 10:
        raise ValueError("Nemenyi table covers 2 <= k <= 10, got k=%d" % k)
    if N < 2:
        raise ValueError("need at least 2 datasets")
    return NEMENYI_Q[alpha][k - 2] * math.sqrt(k * (k + 1) / (6.0 * N))


def cd_groups(avg_ranks, cd):
    """Maximal runs of rank-sorted methods spanning less than ``cd``.

    Returns tuples of method indices (into ``avg_ranks``), each of size >= 2,
    in order of increasing rank.  Methods in one group are not significantly
    different.
    """
    avg_ranks = np.asarray(avg_ranks, dtype=np.float64)
    order = sorted(range(len(avg_ranks)), key=lambda j: (avg_ranks[j], j))
    groups = []
    last_end = -1
    for a in range(len(order)):
        b = a
        while b + 1 < len(order) and avg_ranks[order[b + 1]] - avg_ranks[order[a]] < cd:
            b += 1
        if b > a and b > last_end:
            groups.append(tuple(order[a:b + 1]))
            last_end = b
    return groups


def not_different(avg_ranks, cd):
    """Boolean matrix: ``True`` where two methods differ by less than ``cd``."""
    r = np.asarray(avg_ranks, dtype=np.float64)
    return np.abs(r[:, None] - r[None, :]) < cd


@dataclass(frozen=True)
class CDDiagram:
    labels: tuple
    avg_ranks: tuple
    cd: float
    groups: tuple
    svg: str
    text: str


def _label(name, flag):
    return name + "*" if flag else name


def _render_text(labels, ranks, cd, groups, k, width=61):
    def col(r):
        return int(round((r - 1) / (k - 1) * (width - 1))) if k > 1 else 0

    axis = ["-"] * width
    ticks = [" "] * width
    for i in range(1, k + 1):
        c = col(i)
        axis[c] = "+"
        s = str(i)
        ticks[c:c + len(s)] = list(s)
    lines = ["CD = %.3f" % cd, "".join(ticks).rstrip(), "".join(axis)]
    for g in groups:
        row = [" "] * width
        lo, hi = col(ranks[g[0]]), col(ranks[g[-1]])
        for c in range(lo, hi + 1):
            row[c] = "="
        lines.append("".join(row).rstrip() + "  " + ", ".join(labels[j] for j in g))
    order = sorted(range(k), key=lambda j: (ranks[j], j))
    lines.extend("%-10s %.4f" % (labels[j], ranks[j]) for j in order)
    return "\n".join(lines) + "\n"


def _render_svg(labels, ranks, cd, groups, k):
    left, right, top = 60.0, 540.0, 60.0
    step = 22.0
    height = top + 40 + step * (len(groups) + k) + 20

    def x(r):
        return left + (r - 1) / max(k - 1, 1) * (right - left)

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="600" height="%d" '
        'font-family="sans-serif" font-size="12">' % int(height),
        '<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" stroke="black"/>' % (left, top, right, top),
    ]
    for i in range(1, k + 1):
        out.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" stroke="black"/>'
                   % (x(i), top - 5, x(i), top))
        out.append('<text x="%.1f" y="%.1f" text-anchor="middle">%d</text>' % (x(i), top - 10, i))
    out.append('<line x1="%.1f" y1="20" x2="%.1f" y2="20" stroke="black" stroke-width="2"/>'
               % (left, x(1 + cd)))
    out.append('<text x="%.1f" y="15" text-anchor="middle">CD = %.3f</text>' % ((left + x(1 + cd)) / 2, cd))
    y = top + 15
    for g in groups:
        out.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" stroke="black" stroke-width="4"/>'
                   % (x(ranks[g[0]]) - 3, y, x(ranks[g[-1]]) + 3, y))
        y += step
    order = sorted(range(k), key=lambda j: (ranks[j], j))
    for j in order:
        y += step
        out.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" stroke="gray"/>' % (x(ranks[j]), top, x(ranks[j]), y))
        out.append('<text x="%.1f" y="%.1f">%s (%.2f)</text>' % (x(ranks[j]) + 4, y + 4, labels[j], ranks[j]))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_cd_diagram(rm, cd, non_metric_flags=None):
    """Critical-distance diagram of ``rm`` as SVG and monospace text.

    Bars join methods whose average ranks differ by less than ``cd``;
    flagged (non-metric) methods get an asterisk.
    """
    k = rm.k
    flags = tuple(non_metric_flags) if non_metric_flags is not None else (False,) * k
    if len(flags) != k:
        raise ValueError("need one non-metric flag per method")
    if not cd > 0:
        raise ValueError("critical distance must be positive")
    labels = tuple(_label(m, f) for m, f in zip(rm.methods, flags))
    ranks = tuple(float(r) for r in rm.avg_ranks)
    groups = tuple(cd_groups(ranks, cd))
    return CDDiagram(labels, ranks, cd, groups,
                     _render_svg(labels, ranks, cd, groups, k),
                     _render_text(labels, ranks, cd, groups, k))
