"""Ratio asymptotics of reversed polynomials.

``ratio_value`` evaluates ``Phi*_{n+1}(z) / Phi*_n(z) = 1 - alpha_n z b_n(z)``
where ``b_n = Phi_n / Phi*_n`` is bounded by one inside the disk and obeys the
Mobius step ``b_{k+1} = (z b_k - conj(alpha_k)) / (1 - alpha_k z b_k)``.
Unlike the raw polynomials, nothing here grows with ``n``.
"""

from __future__ import annotations

import cmath
import csv
import io
from dataclasses import dataclass

import mpmath
import numpy as np

from .combinatorics import term_table
from .core import VerblunskySequence, alpha_mp, alpha_window
from .diagnostics import DiagnosticSeries, Thresholds, classify
from .errors import DomainError


def _check_disk(z: complex):
    if not abs(z) < 1:
        raise DomainError(f"|z| = {abs(z)} is not inside the unit disk")


def ratio_value(seq: VerblunskySequence, n: int, z: complex, dps: int | None = None) -> complex:
    """``Phi*_{n+1}(z) / Phi*_n(z)`` for ``|z| < 1``.

    With ``dps`` the recursion runs in mpmath at that many decimal digits,
    which matters when comparing against a limit closer than double roundoff.
    """
    z = complex(z)
    _check_disk(z)
    if n < 0:
        raise IndexError("n must be >= 0")
    if dps is None:
        al = alpha_window(seq, 0, n)
        b = 1 + 0j
        for k in range(n):
            a = al[k]
            b = (z * b - a.conjugate()) / (1 - a * z * b)
        return complex(1 - al[n] * z * b)
    with mpmath.workdps(dps):
        zm = mpmath.mpc(z.real, z.imag)
        b = mpmath.mpc(1)
        for k in range(n):
            a = alpha_mp(seq, k)
            b = (zm * b - mpmath.conj(a)) / (1 - a * zm * b)
        return complex(1 - alpha_mp(seq, n) * zm * b)


def ratio_grid(seq: VerblunskySequence, n: int, zs) -> np.ndarray:
    """Vectorised ``ratio_value`` over an array of points."""
    zs = np.asarray(zs, dtype=complex)
    if np.any(np.abs(zs) >= 1):
        raise DomainError("all points must lie inside the unit disk")
    if n < 0:
        raise IndexError("n must be >= 0")
    al = alpha_window(seq, 0, n)
    b = np.ones_like(zs)
    for k in range(n):
        a = al[k]
        b = (zs * b - np.conj(a)) / (1 - a * zs * b)
    return 1 - al[n] * zs * b


def _omega_sum(seq: VerblunskySequence, n: int, m: int) -> complex:
    lo = n - m - 1
    A = [complex(x) for x in alpha_window(seq, lo, max(n, lo))]
    total = 0j
    # scalar products: a fused multiply-add in vectorised code would break
    # the exact invariance under a common phase rotation
    for P, w in term_table(m):
        b = 1 + 0j
        for k, a in P:
            b *= A[k + n - lo] * A[k + n - a - lo].conjugate()
        total += float(w) * b
    return total


def omega_nm(seq: VerblunskySequence, n: int, m: int) -> complex:
    """Taylor coefficient of ``z^m`` in ``log(Phi*_{n+1} / Phi*_n)``."""
    return -_omega_sum(seq, n, m)


def omega_nm_rel(mu: VerblunskySequence, nu: VerblunskySequence, n: int, m: int) -> complex:
    """Coefficient of ``z^m`` in ``log(ratio(mu) / ratio(nu))``."""
    return _omega_sum(nu, n, m) - _omega_sum(mu, n, m)


def _products(seq: VerblunskySequence, ell: int, ns: np.ndarray) -> np.ndarray:
    lo = min(int(ns.min()) - ell, -1)
    A = alpha_window(seq, lo, max(int(ns.max()), lo))
    return A[ns - lo] * np.conj(A[ns - ell - lo])


def mate_nevai(seq: VerblunskySequence, ell: int, n_max: int,
               thresholds: Thresholds = Thresholds()) -> DiagnosticSeries:
    """The products ``alpha_n conj(alpha_{n-ell})`` for ``0 <= n <= n_max``."""
    if ell < 1:
        raise DomainError("ell must be >= 1")
    if n_max < 1:
        raise IndexError("n_max must be >= 1")
    return classify(_products(seq, ell, np.arange(n_max + 1)), thresholds, f"ell={ell}")


def mate_nevai_subseq(seq: VerblunskySequence, ell: int, k: int, j_list,
                      thresholds: Thresholds = Thresholds()) -> DiagnosticSeries:
    """Products ``alpha_{k+j} conj(alpha_{k+j-ell})`` along ``j`` in ``j_list``."""
    if ell < 1:
        raise DomainError("ell must be >= 1")
    js = np.asarray(list(j_list), dtype=int)
    if len(js) < 2 or np.any(np.diff(js) <= 0):
        raise DomainError("j_list must be strictly increasing with at least two entries")
    ns = k + js
    if ns.min() < 0:
        raise DomainError("k + j must be >= 0")
    return classify(_products(seq, ell, ns), thresholds, f"k={k},ell={ell}")


def g_limit(a: float, lam: complex, z: complex) -> complex:
    """``(1 + w + sqrt((1 - w)^2 + 4 a^2 w)) / 2`` at ``w = lam z``, principal root."""
    if not 0 <= a <= 1:
        raise DomainError("a must lie in [0, 1]")
    if abs(abs(lam) - 1) > 1e-12:
        raise DomainError("|lambda| must be 1")
    z = complex(z)
    _check_disk(z)
    w = lam * z
    s = (1 - w) ** 2 + 4 * a * a * w
    if s.real < 0 and abs(s.imag) <= 1e-12 * abs(s):
        raise DomainError(f"square root argument {s} sits on the branch cut")
    return 0.5 * (1 + w + cmath.sqrt(s))


def limit_gap(seq: VerblunskySequence, n: int, a: float, lam: complex, zs, dps: int = 60) -> float:
    """``max_z |ratio(n, z) - G_a(lam z)|`` with both sides in ``dps``-digit arithmetic.

    ``lam`` is renormalised to modulus one, matching :func:`~opuc.core.alpha_mp`.
    """
    if not 0 <= a <= 1:
        raise DomainError("a must lie in [0, 1]")
    if n < 0:
        raise IndexError("n must be >= 0")
    gap = 0.0
    with mpmath.workdps(dps):
        lm = mpmath.mpc(complex(lam).real, complex(lam).imag)
        lm = lm / abs(lm)
        am = mpmath.mpf(a)
        alphas = [alpha_mp(seq, k) for k in range(n + 1)]
        for z in np.asarray(zs, dtype=complex).ravel():
            _check_disk(complex(z))
            zm = mpmath.mpc(z.real, z.imag)
            b = mpmath.mpc(1)
            for k in range(n):
                b = (zm * b - mpmath.conj(alphas[k])) / (1 - alphas[k] * zm * b)
            r = 1 - alphas[n] * zm * b
            w = lm * zm
            g = (1 + w + mpmath.sqrt((1 - w) ** 2 + 4 * am * am * w)) / 2
            gap = max(gap, float(abs(r - g)))
    return gap


def default_grid(radii=(0.3, 0.5, 0.7), angles: int = 16) -> np.ndarray:
    th = 2 * np.pi * np.arange(angles) / angles
    return np.concatenate([r * np.exp(1j * th) for r in radii])


@dataclass(frozen=True)
class RatioProbe:
    n_values: tuple[int, ...]
    z_grid: np.ndarray
    values: np.ndarray  # values[i, j] at n_values[i], z_grid[j]

    def __post_init__(self):
        if np.any(np.abs(self.z_grid) > 0.95):
            raise DomainError("probe points must satisfy |z| <= 0.95")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "re(z)", "im(z)", "re(value)", "im(value)"])
        for i, n in enumerate(self.n_values):
            for z, v in zip(self.z_grid, self.values[i]):
                w.writerow([n, repr(float(z.real)), repr(float(z.imag)), repr(float(v.real)), repr(float(v.imag))])
        return buf.getvalue()


def probe(seq: VerblunskySequence, n_values, z_grid=None) -> RatioProbe:
    zs = default_grid() if z_grid is None else np.asarray(z_grid, dtype=complex)
    if np.any(np.abs(zs) > 0.95):
        raise DomainError("probe points must satisfy |z| <= 0.95")
    ns = tuple(int(n) for n in n_values)
    values = np.array([ratio_grid(seq, n, zs) for n in ns])
    return RatioProbe(ns, zs, values)
