"""scikit-learn style wrappers.

``XFormClassifier`` synthesizes a form from the positive training sequences
and predicts by running the compiled perception machine, so it slots into
``cross_val_score``, ``GridSearchCV`` and friends like any other classifier.
"""

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .expr import Interpretation
from .machine import compile_form
from .pattern import DEFAULT_CAP, ObjectivePattern
from .synthesis import simplify, synthesize
from .validation import check_labels, check_sequences

_MODES = ("sx", "tx", "x")


class XFormClassifier(ClassifierMixin, BaseEstimator):
    """Binary classifier over binary-vector sequences.

    Parameters
    ----------
    mode : {"x", "tx", "sx"}
        Synthesis construction. ``"x"`` reproduces the positives exactly;
        ``"tx"`` generalizes a same-length class to the product of its
        per-position projections; ``"sx"`` needs length-1 sequences.
    interp : {"singleton", "mask"}
        Leaf interpretation used for synthesis and compilation.
    simplify : bool
        Run the size-reducing rewrites on the synthesized form.
    cap : int
        Enumeration cap passed to every set operation.

    Attributes
    ----------
    form_ : XForm
    exact_ : bool
    machine_ : PerceptionMachine
    n_features_in_ : int
        The base pattern dimension ``n``.
    classes_ : ndarray of shape (2,)
    """

    def __init__(self, mode="x", interp="singleton", simplify=False, cap=DEFAULT_CAP):
        self.mode = mode
        self.interp = interp
        self.simplify = simplify
        self.cap = cap

    def fit(self, X, y=None):
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        interp = Interpretation.coerce(self.interp)
        seqs, dim = check_sequences(X)
        if y is None:
            positives = seqs
        else:
            labels = check_labels(y, len(seqs))
            positives = [s for s, keep in zip(seqs, labels) if keep]
        target = ObjectivePattern(dim, positives)
        result = synthesize(target, self.mode, interp, cap=self.cap)
        form = result.form
        if self.simplify:
            form = simplify(form, interp, cap=self.cap)
        self.form_ = form
        self.exact_ = result.exact
        self.machine_ = compile_form(form, interp, cap=self.cap)
        self.n_features_in_ = dim
        self.classes_ = np.array([0, 1])
        return self

    def predict(self, X):
        check_is_fitted(self, "machine_")
        seqs, _ = check_sequences(X, self.n_features_in_)
        return np.array([int(self.machine_.accepts(s)) for s in seqs])

    def decision_function(self, X):
        return self.predict(X).astype(float)


class SpatialBitEncoder(TransformerMixin, BaseEstimator):
    """Encode each sequence by the spatial bits of a form that fire on its last step.

    ``fit`` compiles ``form`` (text or tree); ``transform`` returns a 0/1 matrix
    of shape ``(n_samples, n_spatial_bits)``.
    """

    def __init__(self, form=None, interp="singleton", cap=DEFAULT_CAP):
        self.form = form
        self.interp = interp
        self.cap = cap

    def fit(self, X=None, y=None):
        from .parser import parse

        if self.form is None:
            raise ValueError("form is required")
        form = parse(self.form) if isinstance(self.form, (str, bytes)) else self.form
        self.machine_ = compile_form(form, self.interp, cap=self.cap)
        self.n_features_in_ = form.dim
        self.bit_ids_ = [b.id for b in self.machine_.spatial_bits]
        return self

    def transform(self, X):
        check_is_fitted(self, "machine_")
        seqs, _ = check_sequences(X, self.n_features_in_)
        bits = self.machine_.spatial_bits
        out = np.zeros((len(seqs), len(bits)), dtype=np.int8)
        for i, s in enumerate(seqs):
            last = s.codes[-1]
            for j, b in enumerate(bits):
                out[i, j] = last in b.codes
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "machine_")
        return np.array(self.bit_ids_, dtype=object)
