"""Reading and writing UCR-format text files, plus seeded synthetic data.

UCR format: one instance per line, the class label first, then the
observations, separated by commas or tabs (detected per file).
"""
import os
import re

import numpy as np

from .series import Dataset, LabeledInstance, as_series

__all__ = ["load_ucr", "save_ucr", "load_series", "format_ucr", "synth_dataset", "split_dataset", "dataset_name"]


def _detect_separator(line):
    if "\t" in line:
        return "\t"
    if "," in line:
        return ","
    return None


def _parse_value(token, lineno):
    token = token.strip()
    try:
        v = float(token)
    except ValueError:
        raise ValueError("line %d: non-numeric field %r" % (lineno, token)) from None
    if np.isnan(v):
        raise ValueError("line %d: missing or NaN value %r" % (lineno, token))
    return v


def dataset_name(path):
    base = os.path.basename(str(path))
    base = re.sub(r"\.(tsv|txt|csv)$", "", base, flags=re.IGNORECASE)
    return re.sub(r"_(TRAIN|TEST)$", "", base)


def load_ucr(path, name=None):
    """Load a UCR text file into a :class:`Dataset`.

    Labels are kept as the exact token found in the file.  Rows of unequal
    length, non-numeric fields and NaN/missing values are errors.
    """
    with open(path) as fh:
        lines = [(i, ln.strip()) for i, ln in enumerate(fh, 1) if ln.strip()]
    if not lines:
        raise ValueError("%s: no instances" % path)
    sep = _detect_separator(lines[0][1])
    instances = []
    n = None
    for lineno, line in lines:
        fields = line.split(sep) if sep else line.split()
        if len(fields) < 2:
            raise ValueError("line %d: expected a label and at least one observation" % lineno)
        values = [_parse_value(tok, lineno) for tok in fields[1:]]
        if n is None:
            n = len(values)
        elif len(values) != n:
            raise ValueError("line %d: nonuniform length (%d observations, expected %d)"
                             % (lineno, len(values), n))
        instances.append(LabeledInstance(np.array(values), fields[0].strip()))
    return Dataset(tuple(instances), name=dataset_name(path) if name is None else name)


def load_series(path):
    """Read one unlabeled series: numbers separated by commas, tabs or whitespace."""
    with open(path) as fh:
        text = fh.read()
    tokens = [t for t in re.split(r"[,\s]+", text) if t]
    if not tokens:
        raise ValueError("%s: empty series file" % path)
    return as_series([_parse_value(t, 1) for t in tokens])


def format_ucr(data, sep=","):
    # repr() of a float is the shortest string that round-trips exactly
    return "".join(
        sep.join([str(inst.label)] + [repr(float(v)) for v in inst.series]) + "\n" for inst in data
    )


def save_ucr(data, path, sep=","):
    with open(path, "w") as fh:
        fh.write(format_ucr(data, sep))


def synth_dataset(classes=2, per_class=10, n=100, separation=10.0, seed=0, noise=1.0, name="synth"):
    """Seeded multi-class dataset of level-shifted white noise.

    Class ``c`` (label ``str(c)``) is ``c * separation`` plus Gaussian noise
    with standard deviation ``noise``.  Instances are grouped by class.
    """
    if classes < 2:
        raise ValueError("need at least 2 classes")
    if per_class < 1:
        raise ValueError("need at least 1 instance per class")
    if n < 3:
        raise ValueError("series length must be at least 3")
    if not separation > 0:
        raise ValueError("separation must be positive")
    if noise < 0:
        raise ValueError("noise must be non-negative")
    rng = np.random.default_rng(seed)
    instances = []
    for c in range(classes):
        X = c * separation + noise * rng.standard_normal((per_class, n))
        instances.extend(LabeledInstance(row, str(c)) for row in X)
    return Dataset(tuple(instances), name=name)


def split_dataset(data, test_fraction=0.5, seed=0):
    """Stratified seeded train/test split; every class keeps one training instance."""
    if not 0 < test_fraction < 1:
        raise ValueError("test_fraction must lie in (0, 1)")
    rng = np.random.default_rng(seed)
    labels = data.labels
    train_idx, test_idx = [], []
    for c in data.classes:
        idx = [i for i, lab in enumerate(labels) if lab == c]
        idx = list(rng.permutation(idx))
        n_test = min(len(idx) - 1, int(round(test_fraction * len(idx))))
        test_idx.extend(idx[:n_test])
        train_idx.extend(idx[n_test:])
    train = Dataset(tuple(data[i] for i in sorted(train_idx)), name=data.name)
    if not test_idx:
        raise ValueError("split leaves the test set empty")
    test = Dataset(tuple(data[i] for i in sorted(test_idx)), name=data.name)
    return train, test
