import json

import numpy as np
import pytest

from opuc.diagnostics import Thresholds, classify


def test_converged():
    s = classify(1 - 0.5 ** np.arange(60))
    assert s.verdict == "converged"
    assert s.limit == s.partials[-1]


def test_diverging_by_bound():
    assert classify([0, 10, 2000]).verdict == "diverging"
    assert classify([0, np.inf, 1]).verdict == "diverging"


def test_diverging_monotone_drift():
    assert classify(np.log1p(np.arange(1000.0))).verdict == "diverging"


def test_bounded_oscillation():
    p = 0.01 * np.sin(np.arange(1000) / 10.0)
    assert classify(p).verdict == "bounded"


def test_inconclusive():
    p = 0.5 * np.sin(np.arange(1000) / 3.0)
    assert classify(p).verdict == "inconclusive"


def test_thresholds_configurable():
    p = np.linspace(0, 0.04, 100)
    assert classify(p).verdict == "bounded"
    assert classify(p, Thresholds(drift_tol=0.001)).verdict == "diverging"


def test_complex_series_and_json():
    p = np.exp(1j * np.arange(50)) * 0.25 ** np.arange(50)
    s = classify(p, label="c")
    assert s.verdict == "converged"
    assert s.window_stats["monotone"] is False
    doc = json.loads(json.dumps(s.to_json()))
    assert doc["label"] == "c" and len(doc["partials"]) == 50


def test_oscillation_window():
    s = classify([0.0, 1.0, -1.0, 0.5, 0.25])
    assert s.oscillation(1, 3) == 2.0
    assert s.oscillation(3) == 0.25


def test_too_short():
    with pytest.raises(ValueError):
        classify([1.0])
