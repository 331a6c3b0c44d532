"""Szego recursion: monic OPUC, reversed polynomials and derived quantities.

This module is the reference path that the combinatorial formulas are
checked against, so it only ever uses the two-term recurrences

    Phi_{k+1}(z)  = z Phi_k(z) - conj(alpha_k) Phi_k^*(z)
    Phi_{k+1}^*(z) = Phi_k^*(z) - alpha_k z Phi_k(z)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Polynomial, VerblunskySequence, alpha_window


@dataclass(frozen=True)
class PhiPair:
    phi: Polynomial
    phi_star: Polynomial
    n: int


def _coefficient_arrays(seq: VerblunskySequence, n: int):
    phi = np.zeros(n + 1, dtype=complex)
    star = np.zeros(n + 1, dtype=complex)
    phi[0] = star[0] = 1.0
    alphas = alpha_window(seq, 0, n - 1) if n > 0 else ()
    for k, a in enumerate(alphas):
        # degree k -> k + 1; z*Phi_k shifts by one
        zphi = np.concatenate(([0j], phi[: k + 1]))
        new_phi = zphi.copy()
        new_phi[: k + 1] -= np.conj(a) * star[: k + 1]
        new_star = np.zeros(k + 2, dtype=complex)
        new_star[: k + 1] = star[: k + 1]
        new_star -= a * zphi
        phi[: k + 2] = new_phi
        star[: k + 2] = new_star
    return phi, star


def phi_pair(seq: VerblunskySequence, n: int) -> PhiPair:
    if n < 0:
        raise IndexError("n must be >= 0")
    phi, star = _coefficient_arrays(seq, n)
    return PhiPair(Polynomial(phi), Polynomial(star), n)


def lambda_recursive(seq: VerblunskySequence, n: int, m: int) -> complex:
    """Coefficient ``lambda_{n,m}`` of ``z**m`` in ``Phi_n^*``."""
    if n < 0:
        return 1.0 + 0j if m == 0 else 0j
    if m < 0 or m > n:
        return 0j
    return phi_pair(seq, n).phi_star[m]


def lambda_table(seq: VerblunskySequence, nmax: int) -> np.ndarray:
    """``table[n, m] = lambda_{n,m}`` for ``0 <= n, m <= nmax``."""
    out = np.zeros((nmax + 1, nmax + 1), dtype=complex)
    phi = np.zeros(nmax + 2, dtype=complex)
    star = np.zeros(nmax + 2, dtype=complex)
    phi[0] = star[0] = 1.0
    out[0, 0] = 1.0
    alphas = alpha_window(seq, 0, nmax - 1) if nmax > 0 else ()
    for k, a in enumerate(alphas):
        zphi = np.roll(phi, 1)
        zphi[0] = 0
        phi, star = zphi - np.conj(a) * star, star - a * zphi
        out[k + 1, :] = star[: nmax + 1]
    return out


def phi_star_norm(seq: VerblunskySequence, n: int) -> float:
    if n < 0:
        raise IndexError("n must be >= 0")
    if n == 0:
        return 1.0
    a = alpha_window(seq, 0, n - 1)
    return float(np.prod(np.sqrt(1.0 - np.abs(a) ** 2)))


# ---------------------------------------------------------------------------
# truncated power series


def series_log(f, order: int) -> np.ndarray:
    """Taylor coefficients ``g_0..g_order`` of ``log f`` for ``f_0 = 1``.

    Uses ``m g_m = m f_m - sum_{j<m} j g_j f_{m-j}`` from ``f g' = f'``.
    """
    f = np.zeros(order + 1, dtype=complex) if len(f) == 0 else np.asarray(f, dtype=complex)
    if f[0] != 1:
        raise ValueError("series_log needs f(0) = 1")
    fc = np.zeros(order + 1, dtype=complex)
    fc[: min(len(f), order + 1)] = f[: order + 1]
    g = np.zeros(order + 1, dtype=complex)
    for m in range(1, order + 1):
        acc = m * fc[m]
        for j in range(1, m):
            acc -= j * g[j] * fc[m - j]
        g[m] = acc / m
    return g


def series_exp(g, order: int) -> np.ndarray:
    """Taylor coefficients of ``exp g`` for ``g_0 = 0``."""
    gc = np.zeros(order + 1, dtype=complex)
    g = np.asarray(g, dtype=complex)
    gc[: min(len(g), order + 1)] = g[: order + 1]
    if gc[0] != 0:
        raise ValueError("series_exp needs g(0) = 0")
    f = np.zeros(order + 1, dtype=complex)
    f[0] = 1.0
    for m in range(1, order + 1):
        f[m] = sum(j * gc[j] * f[m - j] for j in range(1, m + 1)) / m
    return f


def log_phi_star_taylor(seq: VerblunskySequence, n: int, M: int) -> np.ndarray:
    """Coefficients ``w_{n,1..M}`` of ``-log Phi_n^*(z)`` (index 0 is w_{n,1})."""
    if n < 0 or M < 1:
        raise IndexError("need n >= 0 and M >= 1")
    star = phi_pair(seq, n).phi_star.coeffs
    return -series_log(star, M)[1:]


# ---------------------------------------------------------------------------
# pointwise evaluation


def phi_values(seq: VerblunskySequence, n: int, z):
    """``(Phi_n(z), Phi_n^*(z))`` by running the recurrence pointwise."""
    z = np.asarray(z, dtype=complex)
    phi = np.ones_like(z)
    star = np.ones_like(z)
    if n > 0:
        for a in alpha_window(seq, 0, n - 1):
            phi, star = z * phi - np.conj(a) * star, star - a * z * phi
    return phi, star


def log_bernstein_weight(seq: VerblunskySequence, n: int, theta):
    """``log w`` of the Bernstein-Szego approximation mu_n at ``theta``.

    Computed as ``log prod rho_k^2 - 2 log |Phi_{n+1}^*(e^{i theta})|``.
    """
    if n < 0:
        raise IndexError("n must be >= 0")
    a = alpha_window(seq, 0, n)
    log_rho2 = float(np.sum(np.log1p(-np.abs(a) ** 2)))
    z = np.exp(1j * np.asarray(theta, dtype=float))
    star = phi_pair(seq, n + 1).phi_star(z)
    return log_rho2 - 2.0 * np.log(np.abs(star))


def bernstein_weight(seq: VerblunskySequence, n: int, theta):
    """Density ``prod_{k<=n} rho_k^2 / |Phi_{n+1}^*(e^{i theta})|^2`` of mu_n."""
    return np.exp(log_bernstein_weight(seq, n, theta))
