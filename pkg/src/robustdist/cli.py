"""Command-line front end: ``robustdist {dist,knn,robustness,ranks,synth}``."""
import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field, asdict

import numpy as np

from .datasets import load_series, load_ucr, save_ucr, synth_dataset, split_dataset
from .distances import DistanceSpec, KINDS, DISPLAY_NAMES, NON_METRIC
from .knn import error_rate
from .ranks import emit_cd_diagram, friedman_chi_square, friedman_statistic, nemenyi_cd, rank_rows
from .robustness import contamination_tolerance_score, imprecision_invariance_score

__all__ = ["EvalReport", "main", "run_cli"]


@dataclass
class EvalReport:
    dataset: str
    method: str
    params: dict
    error_rate: float = None
    contamination_score: float = None
    imprecision_score: float = None
    seeds: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError("cannot serialise %r" % (obj,))


def _dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n"


def _write(path, text):
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _metrics(args):
    kinds = KINDS if args.metric == "all" else [m.strip() for m in args.metric.split(",") if m.strip()]
    specs = []
    for kind in kinds:
        specs.append(DistanceSpec(
            kind,
            window=args.window,
            window_fraction=args.window_frac,
            edr_tolerance_fraction=args.edr_tol_frac,
            dtw_band=args.dtw_band,
        ))
    # table column order is fixed regardless of the order given on the command line
    specs.sort(key=lambda s: KINDS.index(s.kind))
    return specs


def _table(header, rows):
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) for i, h in enumerate(header)]
    fmt = "  ".join("%%-%ds" % w for w in widths)
    lines = [fmt % tuple(header)] + [fmt % tuple(r) for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _csv_row(dataset, values):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = [DISPLAY_NAMES[k] for k in KINDS if k in values]
    w.writerow(["dataset"] + names)
    w.writerow([dataset] + ["%.6f" % values[k] for k in KINDS if k in values])
    return buf.getvalue()


def cmd_dist(args, out):
    x = load_series(args.x)
    y = load_series(args.y)
    rows, results = [], []
    for spec in _metrics(args):
        d = float(spec(x, y))
        rows.append((spec.name, "%.12g" % d))
        results.append({"method": spec.name, "params": spec.params(), "distance": d})
    out.write(_table(("method", "distance"), rows))
    if args.json:
        _write(args.json, _dumps({"command": "dist", "x": args.x, "y": args.y, "results": results}))
    return 0


def cmd_knn(args, out):
    train = load_ucr(args.train)
    test = load_ucr(args.test)
    reports, rows, values = [], [], {}
    for spec in _metrics(args):
        t0 = time.perf_counter()
        res = error_rate(train, test, spec, threads=args.threads)
        elapsed = time.perf_counter() - t0
        values[spec.kind] = res.error_rate
        rows.append((spec.name, "%.4f" % res.error_rate))
        reports.append(EvalReport(train.name, spec.name, spec.params(), error_rate=res.error_rate,
                                  timings={"knn_seconds": elapsed}).to_dict())
    out.write("dataset: %s (%d train, %d test, n=%d)\n" % (train.name, len(train), len(test), train.length))
    out.write(_table(("method", "error_rate"), rows))
    if args.json:
        _write(args.json, _dumps({"command": "knn", "train": args.train, "test": args.test, "reports": reports}))
    if args.csv:
        _write(args.csv, _csv_row(train.name, values))
    return 0


def cmd_robustness(args, out):
    data = load_ucr(args.dataset)
    modes = ("contamination", "imprecision") if args.mode == "both" else (args.mode,)
    reports, rows, values = [], [], {}
    for spec in _metrics(args):
        rep = EvalReport(data.name, spec.name, spec.params(), seeds={"seed": args.seed})
        row = [spec.name]
        for mode in modes:
            t0 = time.perf_counter()
            if mode == "contamination":
                s = contamination_tolerance_score(data, spec, args.fraction, args.seed,
                                                  placement=args.placement, threads=args.threads)
                rep.contamination_score = s.mean_score
                rep.params = dict(rep.params, fraction=args.fraction, placement=args.placement)
            else:
                s = imprecision_invariance_score(data, spec, args.eps_max, args.seed, threads=args.threads)
                rep.imprecision_score = s.mean_score
                rep.params = dict(rep.params, eps_max=args.eps_max)
            rep.timings[mode + "_seconds"] = time.perf_counter() - t0
            row.append("%.4f" % s.mean_score)
            values.setdefault(mode, {})[spec.kind] = s.mean_score
        rows.append(row)
        reports.append(rep.to_dict())
    out.write("dataset: %s (%d instances, %d classes, n=%d)\n" % (data.name, len(data), data.r, data.length))
    out.write(_table(("method",) + tuple(m + "_score" for m in modes), rows))
    if args.json:
        _write(args.json, _dumps({"command": "robustness", "dataset": args.dataset, "reports": reports}))
    if args.csv:
        _write(args.csv, "".join(_csv_row("%s:%s" % (data.name, m), values[m]) for m in modes))
    return 0


def _read_error_table(path):
    with open(path, newline="") as fh:
        sample = fh.read()
    dialect = "excel-tab" if "\t" in sample.splitlines()[0] else "excel"
    rows = [r for r in csv.reader(io.StringIO(sample), dialect) if r and any(c.strip() for c in r)]
    if len(rows) < 3:
        raise ValueError("%s: need a header and at least two dataset rows" % path)
    methods = [m.strip() for m in rows[0][1:]]
    datasets, errors = [], []
    for i, r in enumerate(rows[1:], 2):
        if len(r) != len(methods) + 1:
            raise ValueError("%s line %d: expected %d columns" % (path, i, len(methods) + 1))
        datasets.append(r[0].strip())
        try:
            errors.append([float(v) for v in r[1:]])
        except ValueError:
            raise ValueError("%s line %d: non-numeric error rate" % (path, i)) from None
    return methods, datasets, np.array(errors)


def cmd_ranks(args, out):
    methods, datasets, errors = _read_error_table(args.table)
    rm = rank_rows(errors, methods, datasets)
    chi2 = friedman_chi_square(rm)
    try:
        _, ff = friedman_statistic(rm)
    except ValueError:
        ff = None
    cd = nemenyi_cd(rm.k, rm.N, args.alpha)
    if args.non_metric is None:
        non_metric = {DISPLAY_NAMES[k].lower() for k in NON_METRIC}
    else:
        non_metric = {m.strip().lower() for m in args.non_metric.split(",") if m.strip()}
    flags = [m.lower() in non_metric for m in methods]
    diagram = emit_cd_diagram(rm, cd, flags)
    out.write("datasets: %d, methods: %d\n" % (rm.N, rm.k))
    out.write("chi2_F = %.6f\n" % chi2)
    out.write("F_F = %s\n" % ("undefined" if ff is None else "%.6f" % ff))
    out.write(diagram.text)
    if args.diagram:
        _write(args.diagram, diagram.svg)
        _write(args.diagram + ".txt", diagram.text)
    if args.json:
        doc = {
            "command": "ranks",
            "methods": list(methods),
            "datasets": list(datasets),
            "avg_ranks": [float(r) for r in rm.avg_ranks],
            "chi2_F": chi2,
            "F_F": ff,
            "alpha": args.alpha,
            "cd": cd,
            "groups": [[diagram.labels[j] for j in g] for g in diagram.groups],
        }
        _write(args.json, _dumps(doc))
    return 0


def cmd_synth(args, out):
    data = synth_dataset(args.classes, args.per_class, args.length, args.separation, args.seed,
                         noise=args.noise)
    if args.split:
        train, test = split_dataset(data, args.test_fraction, args.seed)
        # toy.csv -> toy_TRAIN.csv / toy_TEST.csv
        stem, ext = os.path.splitext(args.out)
        paths = stem + "_TRAIN" + ext, stem + "_TEST" + ext
        save_ucr(train, paths[0])
        save_ucr(test, paths[1])
        out.write("wrote %s (%d) and %s (%d)\n" % (paths[0], len(train), paths[1], len(test)))
    else:
        save_ucr(data, args.out)
        out.write("wrote %s (%d instances)\n" % (args.out, len(data)))
    return 0


def _add_metric_flags(p, default="ensemble"):
    p.add_argument("--metric", default=default,
                   help="distance kind, comma-separated list, or 'all' (%s)" % ", ".join(KINDS))
    p.add_argument("--window", type=int, default=None, help="explicit ensemble window (even -> +1)")
    p.add_argument("--window-frac", type=float, default=0.1, help="ensemble window fraction of n (default 0.1)")
    p.add_argument("--edr-tol-frac", type=float, default=0.1, help="EDR tolerance as fraction of MAD (default 0.1)")
    p.add_argument("--dtw-band", type=int, default=100, help="DTW Sakoe-Chiba half-width (default 100)")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all CPUs)")
    p.add_argument("--json", metavar="PATH", help="write a JSON report")


def build_parser():
    parser = argparse.ArgumentParser(prog="robustdist", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance between two single-series files")
    _add_metric_flags(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("knn", help="1-NN error rate on a train/test pair")
    _add_metric_flags(p)
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--csv", metavar="PATH", help="write the error-rate row as CSV")
    p.set_defaults(func=cmd_knn)

    p = sub.add_parser("robustness", help="contamination tolerance / imprecision invariance scores")
    _add_metric_flags(p)
    p.add_argument("dataset")
    p.add_argument("--mode", choices=("contamination", "imprecision", "both"), default="both")
    p.add_argument("--fraction", type=float, default=0.05)
    p.add_argument("--eps-max", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--placement", choices=("random", "consecutive"), default="random")
    p.add_argument("--csv", metavar="PATH", help="write score rows as CSV")
    p.set_defaults(func=cmd_robustness)

    p = sub.add_parser("ranks", help="Friedman test and critical-distance diagram")
    p.add_argument("table", help="CSV/TSV: header 'dataset,<method>...', one row of error rates per dataset")
    p.add_argument("--alpha", type=float, choices=(0.05, 0.10), default=0.05)
    p.add_argument("--non-metric", default=None,
                   help="comma-separated method names to mark with '*' (default: DTW,EDR)")
    p.add_argument("--diagram", metavar="PATH", help="write the SVG diagram (text copy at PATH.txt)")
    p.add_argument("--json", metavar="PATH", help="write a JSON report")
    p.set_defaults(func=cmd_ranks)

    p = sub.add_parser("synth", help="write a seeded synthetic dataset in UCR format")
    p.add_argument("--classes", type=int, default=2)
    p.add_argument("--per-class", type=int, default=10)
    p.add_argument("--length", type=int, default=100)
    p.add_argument("--separation", type=float, default=10.0)
    p.add_argument("--noise", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--split", action="store_true", help="write <stem>_TRAIN<ext> and <stem>_TEST<ext> instead of OUT")
    p.add_argument("--test-fraction", type=float, default=0.5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)
    return parser


def run_cli(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        err.write("robustdist %s: error: %s\n" % (args.command, exc))
        return 1


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
