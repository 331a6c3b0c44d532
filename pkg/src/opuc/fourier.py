"""Combinatorial formulas for the coefficients of Phi_n^*, 1/D and log D.

Every infinite sum is truncated at a leading index ``K``.  Because all
couples of a shifted collection ``P + k`` have indices ``<= k``, truncating
at ``K`` is the same as evaluating the exact formula for the Bernstein-Szego
approximation ``mu_K`` (coefficients ``alpha_0..alpha_K`` then zeros).  The
``tail_bound`` of a :class:`TruncatedValue` bounds the discarded part for
finite and power tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combinatorics import (
    beta_shifts,
    check_order,
    modified_window,
    term_table,
)
from .core import PowerTail, VerblunskySequence, alpha_window, in_lp, lp_exponent
from .errors import DivergenceError, RangeError


@dataclass(frozen=True)
class TruncatedValue:
    value: complex
    truncation_index: int
    tail_bound: float | None = None

    def to_json(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "K": self.truncation_index,
            "tailBound": self.tail_bound,
        }


def _require_l2(seq: VerblunskySequence, what: str):
    if not in_lp(seq, 2):
        e = lp_exponent(seq)
        where = "no l^r with r < inf" if e == float("inf") else f"l^r only for r > {e:g}"
        raise DivergenceError(f"{what} needs a square-summable sequence; kind {seq.kind!r} is in {where}")


# ---------------------------------------------------------------------------
# coefficients of Phi_n^* via ordered partitions


@lru_cache(maxsize=None)
def compositions(m: int) -> tuple[tuple[int, ...], ...]:
    """All ``2**(m-1)`` ordered partitions of ``m``."""
    if m == 0:
        return ((),)
    return tuple((a,) + rest for a in range(1, m + 1) for rest in compositions(m - a))


def _chain_sums(A: np.ndarray, lo: int, B: int, mmax: int) -> dict[tuple[int, ...], np.ndarray]:
    """Inner chain sums of the partition formula for every composition.

    For ``c = (a_1, .., a_j)`` the returned array ``G[c][b + 1]`` is

        sum_{k_1 < b, k_2 < k_1 - a_1, ..}  prod_l alpha_{k_l} conj(alpha_{k_l - a_l})

    for ``-1 <= b <= B``.  Chains sharing a suffix share its inner sum.
    """
    size = B + 2
    ks = np.arange(-1, B + 1)
    G: dict[tuple[int, ...], np.ndarray] = {(): np.ones(size, dtype=complex)}
    for r in range(1, mmax + 1):
        for c in compositions(r):
            a, rest = c[0], G[c[1:]]
            # h[k + 1] = beta_{k,a} * G_rest(k - a) for a - 1 <= k <= B - 1
            h = np.zeros(size, dtype=complex)
            k = ks[(ks >= a - 1) & (ks <= B - 1)]
            if len(k):
                h[k + 1] = A[k - lo] * np.conj(A[k - a - lo]) * rest[k - a + 1]
            g = np.zeros(size, dtype=complex)
            g[1:] = np.cumsum(h[:-1])  # strict inequality k < b
            G[c] = g
    return G


def lambda_combinatorial_table(seq: VerblunskySequence, nmax: int, mmax: int) -> np.ndarray:
    """``table[n, m] = lambda_{n,m}`` from the partition formula, ``m >= 1``.

    Column 0 is left at zero; the formula is stated for ``m >= 1``.
    """
    B = max(nmax, 0)
    lo = -1 - mmax
    A = alpha_window(seq, lo, B)
    G = _chain_sums(A, lo, B, mmax)
    out = np.zeros((nmax + 1, mmax + 1), dtype=complex)
    for m in range(1, mmax + 1):
        tot = sum(G[c] for c in compositions(m))
        out[:, m] = tot[1 : nmax + 2]
    return out


def lambda_combinatorial(seq: VerblunskySequence, n: int, m: int) -> complex:
    if m < 1:
        raise RangeError("m must be >= 1")
    if n <= 0:
        return 0j
    return complex(lambda_combinatorial_table(seq, n, m)[n, m])


# ---------------------------------------------------------------------------
# tail bounds


def _explicit_len(seq: VerblunskySequence) -> int:
    return len(seq)


def _lag_tail(seq: VerblunskySequence, a: int, K: int) -> float | None:
    """Upper bound for ``sum_{k > K} |alpha_k| |alpha_{k-a}|``; None if unknown."""
    sup = seq.support_length
    if sup is not None:
        if K + 1 >= sup:
            return 0.0
        A = np.abs(alpha_window(seq, K + 1 - a, sup - 1))
        return float(np.sum(A[a:] * A[:-a]))
    t = seq.tail
    if not isinstance(t, PowerTail) or 2 * t.p <= 1:
        return None
    # explicit part while k - a is still inside the prefix, then an integral
    L = _explicit_len(seq)
    k0 = max(K + 1, L + a)
    explicit = 0.0
    if k0 > K + 1:
        A = np.abs(alpha_window(seq, K + 1 - a, k0 - 1))
        explicit = float(np.sum(A[a:] * A[:-a]))
    base = k0 - 1 - a + seq.offset + 2
    return explicit + t.c ** 2 * base ** (1 - 2 * t.p) / (2 * t.p - 1)


def _square_tail(seq: VerblunskySequence, K: int) -> tuple[float, float] | None:
    """``(bound on sum_{k>K} |alpha_k|^2, bound on sup_{k>K} |alpha_k|^2)``."""
    sup = seq.support_length
    if sup is not None:
        if K + 1 >= sup:
            return 0.0, 0.0
        A = np.abs(alpha_window(seq, K + 1, sup - 1)) ** 2
        return float(A.sum()), float(A.max())
    t = seq.tail
    if not isinstance(t, PowerTail) or 2 * t.p <= 1:
        return None
    L = _explicit_len(seq)
    k0 = max(K + 1, L)
    s, top = 0.0, 0.0
    if k0 > K + 1:
        A = np.abs(alpha_window(seq, K + 1, k0 - 1)) ** 2
        s, top = float(A.sum()), float(A.max())
    base = k0 - 1 + seq.offset + 2
    s += t.c ** 2 * base ** (1 - 2 * t.p) / (2 * t.p - 1)
    top = max(top, t.c ** 2 * (k0 + seq.offset + 2) ** (-2 * t.p))
    return s, top


# ---------------------------------------------------------------------------
# 1/D and log D


def d_m(seq: VerblunskySequence, m: int, K: int) -> TruncatedValue:
    """Taylor coefficient ``d_m`` of ``prod(rho) / D(z)``, leading index ``k_1 <= K``."""
    if m < 1:
        raise RangeError("m must be >= 1")
    if K < 0:
        raise RangeError("K must be >= 0")
    _require_l2(seq, "d_m")
    value = complex(lambda_combinatorial_table(seq, K + 1, m)[K + 1, m])

    # sum over compositions of T_{a_1} * prod_{l>1} B_{a_l}
    tails = [_lag_tail(seq, a, K) for a in range(1, m + 1)]
    bound = None
    if all(t is not None for t in tails):
        full = []
        for a in range(1, m + 1):
            A = np.abs(alpha_window(seq, -1, K))
            head = float(np.sum(A[a:] * A[:-a]))
            full.append(head + tails[a - 1])
        S = [1.0] + [0.0] * m
        for r in range(1, m + 1):
            S[r] = sum(full[a - 1] * S[r - a] for a in range(1, r + 1))
        bound = sum(tails[a - 1] * S[m - a] for a in range(1, m + 1))
    return TruncatedValue(value, K, bound)


def w0(seq: VerblunskySequence, K: int) -> TruncatedValue:
    """``w_0 = sum_k log(1 - |alpha_k|^2)`` truncated at ``k <= K``."""
    if K < 0:
        raise RangeError("K must be >= 0")
    _require_l2(seq, "w0")
    A = alpha_window(seq, 0, K)
    value = float(np.sum(np.log1p(-np.abs(A) ** 2)))
    st = _square_tail(seq, K)
    bound = None
    if st is not None:
        s, top = st
        bound = s / (1.0 - top)  # -log(1 - x) <= x / (1 - x)
    return TruncatedValue(complex(value), K, bound)


def _shift_sums(A: np.ndarray, lo: int, m: int, kmax: int) -> list[tuple[object, float, complex]]:
    shifts = np.arange(0, kmax + 1)
    out = []
    for P, N in term_table(m):
        out.append((P, float(N), complex(np.sum(beta_shifts(A, lo, P, shifts)))))
    return out


def wm_bernstein(seq: VerblunskySequence, n: int, m: int) -> complex:
    """``w_m(mu_n) = sum_{P in M0(m)} N(P) sum_{k=0}^n beta(P + k)``."""
    if n < 0:
        raise RangeError("n must be >= 0")
    check_order(m)
    lo = -m - 1
    A = alpha_window(seq, lo, n)
    return complex(sum(N * s for _, N, s in _shift_sums(A, lo, m, n)))


def wm_truncated(seq: VerblunskySequence, m: int, K: int) -> TruncatedValue:
    """Fourier coefficient ``w_m`` of ``log w`` with shifts ``0 <= k <= K``."""
    check_order(m)
    if K < 0:
        raise RangeError("K must be >= 0")
    _require_l2(seq, "w_m")
    value = wm_bernstein(seq, K, m)
    bound = 0.0
    for P, N in term_table(m):
        # the couple at k = 0 contributes |alpha_{k}| |alpha_{k-a}| after shifting
        a = min(a for k, a in P if k == 0)
        t = _lag_tail(seq, a, K)
        if t is None:
            bound = None
            break
        bound += abs(float(N)) * t
    return TruncatedValue(value, K, bound)


@lru_cache(maxsize=None)
def remainder_constant(m: int) -> float:
    """A valid constant for the fourth-power remainder estimate.

    ``(m + 2) * (number of non-singleton P in M0(m)) * max |N(P)|``: every
    remainder term has ``delta(P) >= -1``; ``delta = -1`` terms are bounded by
    ``sum_{j<m} |alpha_j|^2`` and ``delta >= 0`` terms by fourth powers over a
    window of ``m + 1`` indices, each window index hit at most once per P.
    """
    rest = [(P, N) for P, N in term_table(m) if len(P) >= 2]
    if not rest:
        return 0.0
    return float((m + 2) * len(rest) * max(abs(N) for _, N in rest))


def wm_l4_decomposition(seq: VerblunskySequence, m: int, K: int) -> tuple[complex, complex, float]:
    """Split ``w_m(mu_K)`` into the two-coefficient main term and a remainder.

    Returns ``(main, remainder, remainder_bound)`` with

        main      = alpha_{m-1} - sum_{k=0}^{K-m} alpha_{k+m} conj(alpha_k)
        remainder = sum over non-singleton P of N(P) beta(P)
        bound     = C_m * (sum_{k<m} |alpha_k|^2 + sum_{m<=k<=K} |alpha_k|^4)

    Everything refers to the truncation ``mu_K``.  For a power tail with
    ``p <= 1/4`` the bound is unbounded in ``K`` and DivergenceError is raised;
    a constant-modulus tail is accepted, but its bound grows linearly in ``K``.
    """
    check_order(m)
    if K < 0:
        raise RangeError("K must be >= 0")
    if isinstance(seq.tail, PowerTail) and seq.tail.c != 0 and 4 * seq.tail.p <= 1:
        raise DivergenceError("fourth-power remainder needs p > 1/4")
    lo = -m - 1
    A = alpha_window(seq, lo, K)
    al = A[-lo:]  # alpha_0 .. alpha_K
    main = al[m - 1] if m - 1 <= K else 0j
    if K >= m:
        main -= np.sum(al[m:] * np.conj(al[: K + 1 - m]))
    shifts = np.arange(0, K + 1)
    remainder = 0j
    for P, N in term_table(m):
        if len(P) >= 2:
            remainder += float(N) * complex(np.sum(beta_shifts(A, lo, P, shifts)))
    sq = np.abs(al) ** 2
    bound = remainder_constant(m) * float(np.sum(sq[:m]) + np.sum(sq[m:] ** 2))
    return complex(main), complex(remainder), bound


def delta_wm(seq: VerblunskySequence, m: int) -> complex:
    """Fourier coefficient of ``log(w / w^(1))``; depends on ``alpha_0..alpha_m`` only."""
    check_order(m)
    lo = -m - 1
    A = alpha_window(seq, lo, m)
    A1 = modified_window(seq, 1, lo, m)
    shifts = np.arange(0, m + 1)
    total = 0j
    for P, N in term_table(m):
        diff = beta_shifts(A, lo, P, shifts) - beta_shifts(A1, lo, P, shifts)
        total += float(N) * complex(np.sum(diff))
    return total


def wm_explicit(seq: VerblunskySequence, m: int, K: int) -> TruncatedValue:
    """Hand-expanded closed forms of ``w_1, w_2, w_3`` summed over ``0 <= k <= K``."""
    if m not in (1, 2, 3):
        raise RangeError("closed forms exist for m = 1, 2, 3 only")
    if K < 0:
        raise RangeError("K must be >= 0")
    lo = -4
    A = alpha_window(seq, lo, K)
    r2 = 1.0 - np.abs(A) ** 2  # rho^2, vanishes at index -1
    k = np.arange(0, K + 1) - lo

    def al(s):
        return A[k - s]

    def cj(s):
        return np.conj(A[k - s])

    def rho2(s):
        return r2[k - s]

    if m == 1:
        terms = -al(0) * cj(1)
    elif m == 2:
        terms = -al(0) * cj(2) * rho2(1) + 0.5 * al(0) ** 2 * cj(1) ** 2
    else:
        terms = (
            -al(0) * cj(3) * rho2(1) * rho2(2)
            + al(0) ** 2 * cj(1) * cj(2) * rho2(1)
            + al(0) * al(1) * cj(2) ** 2 * rho2(1)
            - al(0) ** 3 * cj(1) ** 3 / 3.0
        )
    return TruncatedValue(complex(np.sum(terms)), K, None)
