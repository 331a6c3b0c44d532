"""Higher-order sum rules for polynomial weights ``|Q(e^{i theta})|^2``.

``Z_Q(mu) = int |Q|^2 log w dtheta / 4 pi`` is expanded as a single sum over
shifts ``k``.  Every per-shift term collects ``p_0 log rho_k`` together with
the ``m >= 1`` contributions of collections shifted to ``k``, so the large
cancellation between them happens before accumulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import beta_shifts, check_order, term_table
from .core import VerblunskySequence, alpha_window, in_lp, rho_at, shifted, truncated
from .diagnostics import DiagnosticSeries, Thresholds, classify
from .errors import DomainError, KindError
from .fourier import delta_wm


@dataclass(frozen=True)
class QWeight:
    """Polynomial ``Q`` and the Laurent coefficients of ``|Q|^2`` on the circle."""

    q: tuple[complex, ...]
    p: np.ndarray  # p[m + N] for -N <= m <= N

    @property
    def N(self) -> int:
        return len(self.q) - 1

    def p_at(self, m: int) -> complex:
        if abs(m) > self.N:
            return 0j
        return complex(self.p[m + self.N])

    @property
    def p0(self) -> float:
        return float(self.p[self.N].real)

    def sup_norm_sq_bound(self) -> float:
        """``sum_m |p_m| >= max |Q|^2`` on the circle."""
        return float(np.sum(np.abs(self.p)))


def make_qweight(q) -> QWeight:
    q = tuple(complex(x) for x in q)
    if not q:
        raise DomainError("Q needs at least one coefficient")
    if q[-1] == 0:
        raise DomainError("leading coefficient of Q must be non-zero")
    N = len(q) - 1
    qa = np.asarray(q)
    p = np.zeros(2 * N + 1, dtype=complex)
    for m in range(0, N + 1):
        # p_m = sum_i q_{i+m} conj(q_i)
        p[N + m] = np.sum(qa[m:] * np.conj(qa[: N + 1 - m]))
        p[N - m] = np.conj(p[N + m])
    p[N] = p[N].real
    return QWeight(q, p)


def _shift_terms(seq: VerblunskySequence, Q: QWeight, nmax: int) -> np.ndarray:
    """Per-shift terms ``t_k``, ``0 <= k <= nmax``, whose partial sums are Z_Q(mu_n)."""
    N = Q.N
    if N:
        check_order(N)
    lo = -N - 1
    A = alpha_window(seq, lo, nmax)
    al = A[-lo:]
    terms = Q.p0 * 0.5 * np.log1p(-np.abs(al) ** 2)
    shifts = np.arange(0, nmax + 1)
    for m in range(1, N + 1):
        acc = np.zeros(nmax + 1, dtype=complex)
        for P, weight in term_table(m):
            acc += float(weight) * beta_shifts(A, lo, P, shifts)
        terms = terms + np.real(np.conj(Q.p_at(m)) * acc)
    return terms


def zq_bernstein(seq: VerblunskySequence, Q: QWeight, n: int) -> float:
    """Exact ``Z_Q(mu_n)`` for the Bernstein-Szego approximation ``mu_n``."""
    if n < 0:
        raise IndexError("n must be >= 0")
    return float(np.sum(_shift_terms(seq, Q, n)))


def zq_partials(seq: VerblunskySequence, Q: QWeight, n_max: int,
                thresholds: Thresholds = Thresholds()) -> DiagnosticSeries:
    """Partial sums ``Z_Q(mu_n)``, ``n = 0..n_max``, of the shift series."""
    if n_max < 1:
        raise IndexError("n_max must be >= 1")
    return classify(np.cumsum(_shift_terms(seq, Q, n_max)), thresholds, "zq")


def step_residual(seq: VerblunskySequence, Q: QWeight, n: int) -> float:
    """Defect of the one-step sum rule for the finite measure ``alpha_0..alpha_n``.

    ``|Z_Q(mu) - p_0 log rho_0 - sum_m Re(conj(p_m) dw_m) - Z_Q(mu^(1))|``
    """
    if seq.kind != "finite":
        raise KindError("step residual is only exact for finite sequences")
    if n < 1:
        raise IndexError("n must be >= 1")
    mu = truncated(seq, n)
    lhs = zq_bernstein(mu, Q, n)
    rhs = Q.p0 * math.log(rho_at(mu, 0))
    for m in range(1, Q.N + 1):
        rhs += (np.conj(Q.p_at(m)) * delta_wm(mu, m)).real
    rhs += zq_bernstein(shifted(mu, 1), Q, n - 1)
    return abs(lhs - rhs)


def qshift_values(seq: VerblunskySequence, Q: QWeight, n_max: int) -> np.ndarray:
    """``{conj(Q)(S) alpha}_k = sum_m conj(q_m) alpha_{k+m}`` for ``0 <= k <= n_max``."""
    al = alpha_window(seq, 0, n_max + Q.N)
    out = np.zeros(n_max + 1, dtype=complex)
    for m, qm in enumerate(Q.q):
        out += np.conj(qm) * al[m : m + n_max + 1]
    return out


def qshift_partials(seq: VerblunskySequence, Q: QWeight, n_max: int,
                    thresholds: Thresholds = Thresholds()) -> DiagnosticSeries:
    if n_max < 1:
        raise IndexError("n_max must be >= 1")
    v = qshift_values(seq, Q, n_max)
    return classify(np.cumsum(np.abs(v) ** 2), thresholds, "qshift")


def quadratic_partials(seq: VerblunskySequence, Q: QWeight, n_max: int) -> np.ndarray:
    """``-[p_0/2 sum_{k<=n} |a_k|^2 + sum_m Re(conj(p_m) sum_{k<=n-m} a_{k+m} conj(a_k))]``."""
    al = alpha_window(seq, 0, n_max)
    out = 0.5 * Q.p0 * np.cumsum(np.abs(al) ** 2)
    for m in range(1, Q.N + 1):
        lag = np.zeros(n_max + 1, dtype=complex)
        if m <= n_max:
            lag[m:] = np.cumsum(al[m:] * np.conj(al[: n_max + 1 - m]))
        out = out + np.real(np.conj(Q.p_at(m)) * lag)
    return -out


@dataclass(frozen=True)
class L4Report:
    zq: DiagnosticSeries
    qshift: DiagnosticSeries
    quadratic: DiagnosticSeries
    verdict: str

    def to_json(self) -> dict:
        return {
            "zq": self.zq.to_json(),
            "qshift": self.qshift.to_json(),
            "crit311": self.quadratic.to_json(),
            "verdict": self.verdict,
            "note": "verdicts are finite-window evidence, not proofs",
        }


def _is_bounded(s: DiagnosticSeries) -> bool | None:
    if s.verdict in ("converged", "bounded"):
        return True
    if s.verdict == "diverging":
        return False
    return None


def l4_equivalence_report(seq: VerblunskySequence, Q: QWeight, n_max: int,
                          thresholds: Thresholds = Thresholds()) -> L4Report:
    """Side-by-side evidence for integrability of ``|Q|^2 log w`` versus
    square-summability of ``conj(Q)(S) alpha``, under a fourth-power hypothesis."""
    if not in_lp(seq, 4):
        raise KindError(f"kind {seq.kind!r} is not in l^4")
    zq = zq_partials(seq, Q, n_max, thresholds)
    qs = qshift_partials(seq, Q, n_max, thresholds)
    c3 = classify(quadratic_partials(seq, Q, n_max), thresholds, "quadratic")
    zb, qb = _is_bounded(zq), _is_bounded(qs)
    if zb is None or qb is None:
        verdict = "inconclusive"
    elif zb and qb:
        verdict = "both bounded"
    elif not zb and not qb:
        verdict = "both unbounded"
    else:
        verdict = "mismatch"
    return L4Report(zq, qs, c3, verdict)
