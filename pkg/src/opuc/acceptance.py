"""Acceptance checks shared by ``opuc verify`` and the test suite.

Each check returns a :class:`CheckResult`; nothing here asserts, so a failing
criterion is reported rather than hidden.
"""

from __future__ import annotations

import cmath
import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .asymptotics import default_grid, g_limit, limit_gap, omega_nm_rel, ratio_grid
from .combinatorics import (canonicalize, count_divisions, find_cuts, has_cut, lerch_check,
                            n_weight)
from .core import finite, geometric, power
from .fourier import (lambda_combinatorial_table, wm_bernstein, wm_explicit,
                      wm_l4_decomposition, wm_truncated)
from .quadrature import Grid, fourier_log_w_all, zq_quadrature
from .recursion import lambda_table, log_phi_star_taylor
from .sumrules import make_qweight, qshift_partials, step_residual, zq_bernstein, zq_partials


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.number:2d} {self.name} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _random_alphas(rng: np.random.Generator, n: int, rmax: float) -> np.ndarray:
    return rng.uniform(0, rmax, n) * np.exp(2j * np.pi * rng.uniform(size=n))


def check_recursion_vs_partitions(seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    t0 = time.perf_counter()
    for _ in range(50):
        seq = finite(_random_alphas(rng, 12, 0.9))
        rec = lambda_table(seq, 12)
        comb = lambda_combinatorial_table(seq, 12, 12)
        for n in range(1, 13):
            worst = max(worst, float(np.max(np.abs(rec[n, 1 : n + 1] - comb[n, 1 : n + 1]))))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-10 and dt <= 10
    return CheckResult(1, "recursion vs partition formula", ok, {"maxAbsDiff": worst, "tol": 1e-10}, dt)


def _small_collections(max_weight: int = 5, k_range=(-5, 5), max_size: int = 4):
    couples = [(k, a) for k in range(k_range[0], k_range[1] + 1) for a in range(1, max_weight + 1)]
    for size in range(1, max_size + 1):
        for combo in itertools.combinations_with_replacement(couples, size):
            if sum(a for _, a in combo) <= max_weight:
                yield canonicalize(combo)


def check_cut_nullity() -> CheckResult:
    t0 = time.perf_counter()
    with_cut = 0
    bad = []
    for P in _small_collections():
        if has_cut(P):
            with_cut += 1
            if n_weight(P) != 0:
                bad.append(P.to_json())
    dt = time.perf_counter() - t0
    ok = not bad and dt <= 30
    return CheckResult(2, "collections with a cut have zero weight", ok,
                       {"checked": with_cut, "violations": bad[:5]}, dt)


def check_lerch() -> CheckResult:
    t0 = time.perf_counter()
    bad = []
    for p in range(9):
        for q in range(p + 1):
            for r in range(9):
                lhs, rhs = lerch_check(q, r, p)
                if lhs != rhs:
                    bad.append([q, r, p])
    return CheckResult(3, "Lerch binomial identity", not bad, {"violations": bad},
                       time.perf_counter() - t0)


def check_worked_example() -> CheckResult:
    t0 = time.perf_counter()
    P = canonicalize([(3, 1), (1, 1), (1, 1)])
    got = {
        "N1": count_divisions(P, 1),
        "N2": count_divisions(P, 2),
        "N3": count_divisions(P, 3),
        "N": str(n_weight(P)),
        "cuts": find_cuts(P),
    }
    want = {"N1": 0, "N2": 2, "N3": 3, "N": "0", "cuts": [2]}
    return CheckResult(4, "worked collection example", got == want, got, time.perf_counter() - t0)


# The trapezoid rule converges like |zero of Phi*|^(-nodes).  Radius 0.3 keeps
# every zero of Phi*_n, n <= 12, outside 1.01, which 4096 nodes resolve.
QUADRATURE_RADIUS = 0.3


def check_three_way_wm(seed: int = 1, samples: int = 20) -> CheckResult:
    rng = np.random.default_rng(seed)
    grid = Grid(4096)
    worst = 0.0
    series_worst = 0.0
    t0 = time.perf_counter()
    for _ in range(samples):
        n = int(rng.integers(1, 11))
        wide = finite(_random_alphas(rng, n + 1, 0.9))
        taylor = log_phi_star_taylor(wide, n + 1, 5)
        for m in range(1, 6):
            series_worst = max(series_worst, abs(wm_bernstein(wide, n, m) - taylor[m - 1]))
        seq = finite(_random_alphas(rng, n + 1, QUADRATURE_RADIUS))
        taylor = log_phi_star_taylor(seq, n + 1, 5)
        quad = fourier_log_w_all(seq, n, 5, grid)
        for m in range(1, 6):
            b = wm_bernstein(seq, n, m)
            vals = (b, taylor[m - 1], quad[m])
            worst = max(worst, max(abs(x - y) for x, y in itertools.combinations(vals, 2)))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-9 and series_worst <= 1e-9 and dt <= 20
    return CheckResult(5, "w_m by collections, series log and quadrature", ok,
                       {"maxPairwiseDiff": worst, "collectionsVsSeriesWide": series_worst,
                        "nodes": grid.nodes}, dt)


def check_single_coefficient() -> CheckResult:
    t0 = time.perf_counter()
    seq = finite([0.5])
    errs = [abs(wm_truncated(seq, m, 0).value - 0.5**m / m) for m in range(1, 7)]
    return CheckResult(6, "single coefficient closed form", max(errs) <= 1e-12,
                       {"maxAbsErr": max(errs)}, time.perf_counter() - t0)


def check_explicit_low_order(seed: int = 2) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    t0 = time.perf_counter()
    for _ in range(30):
        L = int(rng.integers(1, 13))
        seq = finite(_random_alphas(rng, L, 0.9))
        K = L - 1
        for m in (1, 2, 3):
            worst = max(worst, abs(wm_explicit(seq, m, K).value - wm_truncated(seq, m, K).value))
    return CheckResult(7, "explicit w_1, w_2, w_3", worst <= 1e-12, {"maxAbsDiff": worst},
                       time.perf_counter() - t0)


def check_l4_remainder(K: int = 2000) -> CheckResult:
    t0 = time.perf_counter()
    rows = []
    ok = True
    cases = {
        "power p=1/3": power(1.0, 1 / 3),
        "power p=1/3 alternating": power(1.0, 1 / 3, "alternating"),
        "geometric a=0.5": geometric(0.5, cmath.exp(0.7j)),
        "geometric a=0.3": geometric(0.3, 1.0),
    }
    for label, seq in cases.items():
        for m in range(1, 5):
            _, rem, bound = wm_l4_decomposition(seq, m, K)
            good = abs(rem) <= bound
            ok &= good
            rows.append({"case": label, "m": m, "K": K, "remainder": abs(rem), "bound": bound})
    return CheckResult(8, "fourth-power remainder bound", ok, {"rows": rows}, time.perf_counter() - t0)


def check_sum_rules(seed: int = 3) -> CheckResult:
    rng = np.random.default_rng(seed)
    t0 = time.perf_counter()
    quad_worst = 0.0
    step_worst = 0.0
    for _ in range(20):
        n = int(rng.integers(1, 9))
        seq = finite(_random_alphas(rng, n + 1, QUADRATURE_RADIUS))
        deg = int(rng.integers(0, 4))
        Q = make_qweight(rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1))
        quad_worst = max(quad_worst, abs(zq_bernstein(seq, Q, n) - zq_quadrature(seq, n, Q)))
        L = int(rng.integers(2, 9))
        fin = finite(_random_alphas(rng, L, 0.9))
        step_worst = max(step_worst, step_residual(fin, Q, L - 1))
    ok = quad_worst <= 1e-8 and step_worst <= 1e-10
    return CheckResult(9, "sum rule consistency", ok,
                       {"zqVsQuadrature": quad_worst, "stepResidual": step_worst}, time.perf_counter() - t0)


def check_l4_mechanism(n_max: int = 5000) -> CheckResult:
    t0 = time.perf_counter()
    Q = make_qweight([1, 1])
    alt = power(1.0, 1 / 3, "alternating")
    con = power(1.0, 1 / 3)
    qs_alt = qshift_partials(alt, Q, n_max)
    zq_alt = zq_partials(alt, Q, n_max)
    qs_con = qshift_partials(con, Q, n_max)
    zq_ctrl = zq_partials(con, make_qweight([1]), n_max)
    tail_dev = float(np.max(np.abs(qs_alt.partials[1000:] - qs_alt.partials[n_max])))
    osc = zq_alt.oscillation(4000, 5000)
    growth = float(qs_con.partials[n_max] / qs_con.partials[50])
    ctrl = float(zq_ctrl.partials[n_max])
    parts = {
        "alternatingQshiftConverged": tail_dev <= 1e-3,
        "alternatingZqBounded": osc <= 0.05,
        "constantQshiftGrowth10x": growth >= 10,
        "constantZqControlBelowMinus20": ctrl <= -20,
    }
    dt = time.perf_counter() - t0
    ok = all(parts.values()) and dt <= 60
    details = dict(parts)
    details.update({
        "qshiftTailDeviation": tail_dev,
        "zqOscillation": osc,
        "qshiftRatio5000over50": growth,
        "zqControl": ctrl,
    })
    return CheckResult(10, "square-summability versus log-integrability", ok, details, dt)


def check_ratio_limit() -> CheckResult:
    t0 = time.perf_counter()
    a, lam = 0.5, cmath.exp(1j * cmath.pi / 4)
    seq = geometric(a, lam)
    zs = default_grid()
    # the limit is approached geometrically, far below double roundoff by n = 100
    gap100 = limit_gap(seq, 100, a, lam, zs)
    gap400 = limit_gap(seq, 400, a, lam, zs)
    resid = 0.0
    for z in zs:
        G = g_limit(a, lam, z)
        w = lam * z
        resid = max(resid, abs(G * G - (1 + w) * G + (1 - a * a) * w))
    ok = gap400 <= 1e-3 and gap400 < gap100 and resid <= 1e-12
    return CheckResult(11, "ratio limit", ok,
                       {"gap100": gap100, "gap400": gap400, "quadraticResidual": resid},
                       time.perf_counter() - t0)


def check_relative_limit(n: int = 300) -> CheckResult:
    t0 = time.perf_counter()
    mu = geometric(0.5, cmath.exp(0.9j))
    nu = geometric(0.5, cmath.exp(0.9j), phase=1j)
    nonzero = []
    # alpha_{-1} = -1 is shared by both measures, so only n >= m is phase free
    for m in range(1, 5):
        for k in range(m, n + 1):
            v = omega_nm_rel(mu, nu, k, m)
            if v != 0:
                nonzero.append([k, m, abs(v)])
    zs = default_grid()
    diff = float(np.max(np.abs(ratio_grid(mu, n, zs) - ratio_grid(nu, n, zs))))
    ok = not nonzero and diff <= 1e-6
    return CheckResult(12, "relative ratio limit", ok,
                       {"nonzeroOmega": nonzero[:5], "gridDiff": diff, "n": n},
                       time.perf_counter() - t0)


CHECKS: dict[int, Callable[[], CheckResult]] = {
    1: check_recursion_vs_partitions,
    2: check_cut_nullity,
    3: check_lerch,
    4: check_worked_example,
    5: check_three_way_wm,
    6: check_single_coefficient,
    7: check_explicit_low_order,
    8: check_l4_remainder,
    9: check_sum_rules,
    10: check_l4_mechanism,
    11: check_ratio_limit,
    12: check_relative_limit,
}


def run_all(numbers=None) -> list[CheckResult]:
    return [CHECKS[i]() for i in (numbers or sorted(CHECKS))]
