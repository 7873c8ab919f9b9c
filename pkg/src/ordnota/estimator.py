"""scikit-learn style wrappers: terms in, standard forms or verdicts out.

Inputs are one-dimensional sequences of term text or :class:`Term` objects
(a single-column 2-D array is also accepted).  Nothing is learned; ``fit``
only resolves and validates the system selector, so the estimators drop into
pipelines and parameter searches like any stateless transformer.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import standard
from .parsing import parse
from .systems import SystemSpec, parse_system
from .terms import Term, render


def _resolve(system) -> SystemSpec:
    if isinstance(system, SystemSpec):
        return system
    return parse_system(system)


def check_terms(X, spec: SystemSpec) -> list:
    """Validate ``X`` and return a list of terms parsed under ``spec``."""
    if isinstance(X, (str, Term)):
        raise ValueError("expected a sequence of terms, got a single term")
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D sequence of terms, got shape {arr.shape}")
    out = []
    for x in arr:
        if isinstance(x, Term):
            out.append(x)
        elif isinstance(x, str):
            out.append(parse(x, spec))
        else:
            raise TypeError(f"terms must be text or Term, got {type(x).__name__}")
    return out


class StandardFormNormalizer(TransformerMixin, BaseEstimator):
    """Map each term to its standard form.

    Parameters
    ----------
    system : str or SystemSpec, default="combined"
        System selector such as ``"main:2"`` or ``"dor-pass:none"``.
    output : {"term", "text"}, default="term"
        Return :class:`Term` objects or their prefix text.
    """

    def __init__(self, system="combined", output="term"):
        self.system = system
        self.output = output

    def fit(self, X, y=None):
        if self.output not in ("term", "text"):
            raise ValueError(f"output must be 'term' or 'text', got {self.output!r}")
        self.spec_ = _resolve(self.system)
        check_terms(X, self.spec_)
        return self

    def transform(self, X):
        check_is_fitted(self, "spec_")
        terms = [standard.normalize(t, self.spec_) for t in check_terms(X, self.spec_)]
        if self.output == "text":
            terms = [render(t) for t in terms]
        out = np.empty(len(terms), dtype=object)
        out[:] = terms
        return out

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.string = True
        tags.input_tags.two_d_array = False
        tags.requires_fit = True
        return tags


class StandardnessClassifier(ClassifierMixin, BaseEstimator):
    """Predict whether each term is in standard form for ``system``.

    ``fit`` accepts labels for API compatibility and records ``classes_``;
    the decision rule is the system's standardness test, so ``score`` on
    labelled data measures agreement with those labels.
    """

    def __init__(self, system="combined"):
        self.system = system

    def fit(self, X, y=None):
        self.spec_ = _resolve(self.system)
        check_terms(X, self.spec_)
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X):
        check_is_fitted(self, "spec_")
        return np.array([standard.explain(t, self.spec_) is None for t in check_terms(X, self.spec_)])

    def explain(self, X) -> list:
        """The first failing condition per term, or None for standard terms."""
        check_is_fitted(self, "spec_")
        return [standard.explain(t, self.spec_) for t in check_terms(X, self.spec_)]
