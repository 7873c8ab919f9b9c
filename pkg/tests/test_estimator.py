import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline

from ordnota import StandardFormNormalizer, StandardnessClassifier, parse, parse_system
from ordnota.estimator import check_terms


def test_normalizer_text_output():
    est = StandardFormNormalizer(system="main:1", output="text")
    out = est.fit_transform(["C(W,C(0,0))", "C(W,0)", "0"])
    assert list(out) == ["C(W,0)", "C(W,0)", "0"]


def test_normalizer_returns_terms_by_default():
    out = StandardFormNormalizer(system="main:1").fit(["0"]).transform(["C(W,C(0,0))"])
    assert out[0] is parse("C(W,0)", "main:1")


def test_classifier_predicts_and_scores():
    X = ["C(W,0)", "C(W,C(0,0))", "0"]
    y = [True, False, True]
    clf = StandardnessClassifier(system="main:1").fit(X, y)
    assert list(clf.predict(X)) == y
    assert clf.score(X, y) == 1.0
    assert list(clf.classes_) == [False, True]
    diags = clf.explain(X)
    assert diags[0] is None and diags[1].condition == "base-not-minimal"


def test_pipeline_and_clone():
    pipe = make_pipeline(StandardFormNormalizer(system="dor"), StandardnessClassifier(system="dor"))
    X = ["C(W,C(0,0))", "C(C(W*2,0),W)"]
    pipe.fit(X, [True, True])
    assert pipe.predict(X).all()
    c = clone(pipe)
    assert c.get_params()["standardformnormalizer__system"] == "dor"


def test_input_validation():
    spec = parse_system("main:1")
    assert len(check_terms(np.array([["0"], ["W"]], dtype=object), spec)) == 2
    with pytest.raises(ValueError):
        check_terms("0", spec)
    with pytest.raises(TypeError):
        check_terms([3], spec)
    with pytest.raises(ValueError):
        StandardFormNormalizer(output="bogus").fit(["0"])


def test_unfitted_raises():
    from sklearn.exceptions import NotFittedError
    with pytest.raises(NotFittedError):
        StandardnessClassifier().predict(["0"])
