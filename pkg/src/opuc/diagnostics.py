"""Traces of truncated infinite sums with a deterministic convergence verdict.

The verdict is evidence, not proof: it only looks at the final window of
the trace.  Rules, applied in order:

1. ``diverging``   some ``|partial|`` exceeds ``bound``;
2. ``converged``   window total variation ``<= conv_tol * (1 + |last|)``;
3. ``diverging``   the window is monotone and its variation ``>= drift_tol``;
4. ``bounded``     window oscillation (max - min) ``< drift_tol``;
5. ``inconclusive`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

VERDICTS = ("converged", "bounded", "diverging", "inconclusive")


@dataclass(frozen=True)
class Thresholds:
    window: float = 0.2
    conv_tol: float = 1e-3
    drift_tol: float = 0.05
    bound: float = 1e3


@dataclass(frozen=True)
class DiagnosticSeries:
    partials: np.ndarray
    verdict: str
    window_stats: dict = field(default_factory=dict)
    label: str = ""

    @property
    def last(self):
        return self.partials[-1]

    @property
    def limit(self):
        """Best available limit estimate: the final entry."""
        return self.partials[-1]

    def oscillation(self, start: int, stop: int | None = None) -> float:
        """Diameter of the entries with index in ``[start, stop]``."""
        w = self.partials[start : (None if stop is None else stop + 1)]
        if not len(w):
            return 0.0
        if np.iscomplexobj(w):
            return float(np.max(np.abs(w[:, None] - w[None, :])))
        return float(np.max(w) - np.min(w))

    def to_json(self) -> dict:
        p = self.partials
        if np.iscomplexobj(p):
            values = [[float(x.real), float(x.imag)] for x in p]
        else:
            values = [float(x) for x in p]
        return {
            "label": self.label,
            "partials": values,
            "verdict": self.verdict,
            "windowStats": self.window_stats,
        }


def classify(partials, thresholds: Thresholds = Thresholds(), label: str = "") -> DiagnosticSeries:
    p = np.asarray(partials)
    if p.ndim != 1 or len(p) < 2:
        raise ValueError("a diagnostic series needs at least two partial sums")
    start = min(int(len(p) * (1 - thresholds.window)), len(p) - 2)
    w = p[start:]
    d = np.diff(w)
    variation = float(np.sum(np.abs(d)))
    if np.iscomplexobj(w):
        monotone = False
        oscillation = float(np.max(np.abs(w[:, None] - w[None, :])))
        drift = float(abs(w[-1] - w[0]))
    else:
        monotone = bool(np.all(d >= 0) or np.all(d <= 0))
        oscillation = float(np.max(w) - np.min(w))
        drift = float(w[-1] - w[0])
    last = abs(p[-1])
    if np.any(~np.isfinite(p)) or np.max(np.abs(p)) > thresholds.bound:
        verdict = "diverging"
    elif variation <= thresholds.conv_tol * (1 + last):
        verdict = "converged"
    elif monotone and variation >= thresholds.drift_tol:
        verdict = "diverging"
    elif oscillation < thresholds.drift_tol:
        verdict = "bounded"
    else:
        verdict = "inconclusive"
    stats = {
        "windowStart": start,
        "variation": variation,
        "oscillation": oscillation,
        "drift": drift,
        "monotone": monotone,
    }
    return DiagnosticSeries(p, verdict, stats, label)
