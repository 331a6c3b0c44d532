"""Trapezoid-rule ground truth on the circle.

``log w`` of a Bernstein-Szego weight is real analytic and periodic, so the
equal-weight rule on ``nodes`` points converges geometrically.  Nothing here
touches the combinatorial machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import VerblunskySequence
from .errors import AliasError, DomainError
from .recursion import log_bernstein_weight


@dataclass(frozen=True)
class Grid:
    nodes: int = 4096

    def __post_init__(self):
        if self.nodes < 64:
            raise DomainError("grid needs at least 64 nodes")

    @property
    def thetas(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.nodes) / self.nodes


def _mean(x: np.ndarray):
    # numpy reduces with pairwise summation
    return np.sum(x) / len(x)


def fourier_log_w(seq: VerblunskySequence, n: int, m: int, grid: Grid = Grid()) -> complex:
    """``int e^{-i m theta} log w_n(theta) dtheta / 2 pi`` for the weight of mu_n."""
    if abs(m) > grid.nodes // 4:
        raise AliasError(f"|m| = {abs(m)} exceeds nodes/4 = {grid.nodes // 4}")
    th = grid.thetas
    lw = log_bernstein_weight(seq, n, th)
    return complex(_mean(np.exp(-1j * m * th) * lw))


def fourier_log_w_all(seq: VerblunskySequence, n: int, mmax: int, grid: Grid = Grid()) -> np.ndarray:
    """``[w_0, .., w_mmax]`` of mu_n from one FFT of ``log w`` on the grid."""
    if mmax > grid.nodes // 4:
        raise AliasError(f"mmax = {mmax} exceeds nodes/4 = {grid.nodes // 4}")
    lw = log_bernstein_weight(seq, n, grid.thetas)
    return np.fft.fft(lw)[: mmax + 1] / grid.nodes


def zq_quadrature(seq: VerblunskySequence, n: int, Q, grid: Grid = Grid()) -> float:
    """``int |Q(e^{i theta})|^2 log w_n(theta) dtheta / 4 pi``.

    ``Q`` is a :class:`~opuc.sumrules.QWeight` or a coefficient list.
    """
    q = np.asarray(getattr(Q, "q", Q), dtype=complex)
    th = grid.thetas
    z = np.exp(1j * th)
    Qz = np.zeros_like(z)
    for c in q[::-1]:
        Qz = Qz * z + c
    lw = log_bernstein_weight(seq, n, th)
    return float(_mean(np.abs(Qz) ** 2 * lw).real) / 2.0


def weight_mass(seq: VerblunskySequence, n: int, grid: Grid = Grid()) -> float:
    """Total mass ``int w_n dtheta / 2 pi`` (1 for a probability measure)."""
    return float(_mean(np.exp(log_bernstein_weight(seq, n, grid.thetas))))
