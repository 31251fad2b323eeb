"""Input coercion for the estimator API.

Sequences may be given as ``SequenceInstance`` objects, strings of
whitespace-separated bitstrings (``"01 10"``), lists of bitstrings, or 2-D
0/1 array-likes of shape ``(length, n)``.
"""

import numpy as np

from .errors import DimensionMismatch
from .pattern import BasePattern, ObjectivePattern, SequenceInstance


def check_sequence(s, dim=None):
    """Coerce one sequence-like to a ``SequenceInstance``, optionally checking its dimension."""
    if isinstance(s, SequenceInstance):
        seq = s
    elif isinstance(s, str):
        seq = SequenceInstance.parse(s)
    elif isinstance(s, BasePattern):
        seq = SequenceInstance(s.dim, (s.code,))
    else:
        items = list(s)
        if not items:
            raise ValueError("empty sequence")
        if all(isinstance(x, (str, BasePattern)) for x in items):
            seq = SequenceInstance.of(*items)
        else:
            arr = np.asarray(items)
            if arr.ndim == 1:
                arr = arr[None, :]
            if arr.ndim != 2 or arr.size == 0:
                raise ValueError(f"expected a (length, n) array, got shape {arr.shape}")
            if not np.isin(arr, (0, 1)).all():
                raise ValueError("sequence arrays must contain only 0 and 1")
            seq = SequenceInstance.of(*(BasePattern.from_bits(row) for row in arr.tolist()))
    if dim is not None and seq.dim != dim:
        raise DimensionMismatch(f"sequence has dimension {seq.dim}, expected {dim}")
    return seq


def check_sequences(X, dim=None):
    """Coerce a collection of sequence-likes; all must share one dimension.

    Returns ``(sequences, dim)``.
    """
    if isinstance(X, (str, SequenceInstance)):
        raise TypeError("expected a collection of sequences, got a single sequence")
    if isinstance(X, ObjectivePattern):
        seqs = X.sorted()
    else:
        seqs = [check_sequence(s) for s in X]
    if not seqs:
        raise ValueError("no sequences given")
    dims = {s.dim for s in seqs}
    if len(dims) > 1:
        raise DimensionMismatch(f"sequences have mixed dimensions {sorted(dims)}")
    (found,) = dims
    if dim is not None and found != dim:
        raise DimensionMismatch(f"sequences have dimension {found}, expected {dim}")
    return seqs, found


def check_labels(y, n_samples):
    y = np.asarray(y)
    if y.ndim != 1 or len(y) != n_samples:
        raise ValueError(f"y must be 1-D with {n_samples} entries, got shape {y.shape}")
    labels = set(np.unique(y).tolist())
    if not labels <= {0, 1, False, True}:
        raise ValueError(f"labels must be 0/1 or boolean, got {sorted(labels, key=str)}")
    return y.astype(bool)
