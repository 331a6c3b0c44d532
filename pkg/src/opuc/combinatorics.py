"""Collections of couples ``(k, a)`` and their exact rational weights.

A collection ``P`` is a multiset of couples indexing the product

    beta(P) = prod_l alpha_{k_l} * conj(alpha_{k_l - a_l}).

The weight ``N(P) = sum_j (-1)**j / j * N_j(P)`` is computed exactly with
:class:`fractions.Fraction`, where ``N_j(P)`` counts the ordered ``j``-tuples
of non-empty linear collections whose multiset union is ``P``.

Collections with a cut have zero weight, so the Fourier coefficients of
``log w`` only need the finite family ``M0(m)`` of cut-free collections with
``sum a = m`` and ``max k = 0``, shifted along the sequence.
"""

from __future__ import annotations

import functools
import os
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import numpy as np

from .core import VerblunskySequence, alpha_at, alpha_window
from .errors import DomainError, EmptyError, RangeError, ResourceError

DEFAULT_M_CEILING = 8

Couple = tuple[int, int]


@dataclass(frozen=True, order=True)
class Collection:
    """Canonically sorted multiset of couples."""

    items: tuple[Couple, ...]

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def weight(self) -> int:
        """``sum a_l``, i.e. the order m with P in M_m."""
        return sum(a for _, a in self.items)

    def to_json(self) -> list[list[int]]:
        return [[k, a] for k, a in self.items]


def canonicalize(pairs: Iterable[tuple[int, int]]) -> Collection:
    items = []
    for k, a in pairs:
        if a < 1:
            raise DomainError(f"couple ({k}, {a}) needs a >= 1")
        items.append((int(k), int(a)))
    return Collection(tuple(sorted(items)))


def _nonempty(P: Collection):
    if not P.items:
        raise EmptyError("empty collection")


def extent(P: Collection) -> tuple[int, int]:
    """``(omega, delta) = (max k, min (k - a))``."""
    _nonempty(P)
    return max(k for k, _ in P), min(k - a for k, a in P)


def _separated(u: Couple, v: Couple) -> bool:
    return u[0] < v[0] - v[1] or v[0] < u[0] - u[1]


def is_linear(P: Collection) -> bool:
    _nonempty(P)
    return all(_separated(u, v) for u, v in combinations(P.items, 2))


def find_cuts(P: Collection) -> list[int]:
    _nonempty(P)
    ks = {k for k, _ in P}
    cuts = []
    for K in range(min(ks) + 1, max(ks)):
        if K in ks:
            continue
        below = max(k for k in ks if k < K)
        above = min(k - a for k, a in P if k > K)
        if below < above:
            cuts.append(K)
    return cuts


def has_cut(P: Collection) -> bool:
    return bool(find_cuts(P))


def shift(P: Collection, k: int) -> Collection:
    return Collection(tuple((kk + k, a) for kk, a in P.items))


# ---------------------------------------------------------------------------
# admissible divisions


def _division_table(P: Collection) -> list[int]:
    """``[N_1(P), ..., N_|P|(P)]``.

    A linear block never repeats a couple, so a division is fixed by choosing,
    for every distinct couple of multiplicity ``c``, which ``c`` of the ``j``
    blocks contain it.  We count these choices block by block: state = how
    many copies of each distinct couple are already placed, step = append one
    more non-empty linear block (a clique of pairwise separated couples).
    """
    counts = Counter(P.items)
    distinct = sorted(counts)
    mult = tuple(counts[c] for c in distinct)
    D = len(distinct)
    cliques = []
    for r in range(1, D + 1):
        for sub in combinations(range(D), r):
            if all(_separated(distinct[u], distinct[v]) for u, v in combinations(sub, 2)):
                cliques.append(sub)
    full = mult
    total = len(P)
    out = []
    layer: dict[tuple[int, ...], int] = {tuple([0] * D): 1}
    for j in range(1, total + 1):
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for state, cnt in layer.items():
            for sub in cliques:
                if all(state[i] < mult[i] for i in sub):
                    s = list(state)
                    for i in sub:
                        s[i] += 1
                    nxt[tuple(s)] += cnt
        layer = nxt
        out.append(layer.get(full, 0))
        layer.pop(full, None)
        if not layer:
            out.extend([0] * (total - j))
            break
    return out


@functools.lru_cache(maxsize=None)
def _division_table_cached(P: Collection) -> tuple[int, ...]:
    return tuple(_division_table(P))


def count_divisions(P: Collection, j: int) -> int:
    """``N_j(P)``: number of admissible divisions of P into ``j`` blocks."""
    _nonempty(P)
    if j < 1 or j > len(P):
        raise RangeError(f"j = {j} outside 1..{len(P)}")
    return _division_table_cached(P)[j - 1]


def n_weight(P: Collection) -> Fraction:
    """Exact ``N(P) = sum_j (-1)**j N_j(P) / j``."""
    _nonempty(P)
    # N is shift invariant, so cache on the normal form with max k = 0
    return _n_weight_normal(shift(P, -extent(P)[0]))


@functools.lru_cache(maxsize=None)
def _n_weight_normal(P: Collection) -> Fraction:
    table = _division_table_cached(P)
    return sum((Fraction((-1) ** j, j) * n for j, n in enumerate(table, 1) if n), Fraction(0))


def fraction_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


# ---------------------------------------------------------------------------
# enumeration of cut-free collections


def m_ceiling() -> int:
    env = os.environ.get("OPUC_M_CEILING")
    if env:
        try:
            return int(env)
        except ValueError:
            raise RangeError(f"OPUC_M_CEILING={env!r} is not an integer") from None
    return DEFAULT_M_CEILING


def check_order(m: int, ceiling: int | None = None):
    if m < 1:
        raise RangeError("m must be >= 1")
    ceiling = m_ceiling() if ceiling is None else ceiling
    if m > ceiling:
        raise ResourceError(f"m = {m} exceeds enumeration ceiling {ceiling}")


def enumerate_M0(m: int, ceiling: int | None = None) -> frozenset[Collection]:
    """All cut-free collections with ``sum a = m`` and ``max k = 0``."""
    check_order(m, ceiling)
    return frozenset(P for P, _ in _m0_table(m))


@functools.lru_cache(maxsize=None)
def _m0_table(m: int) -> tuple[tuple[Collection, Fraction], ...]:
    # any couple of a cut-free P with omega(P) = 0 has a - m <= k <= 0
    types = [(k, a) for a in range(1, m + 1) for k in range(a - m, 1)]
    found = []

    def grow(start: int, remaining: int, acc: list[Couple]):
        if remaining == 0:
            P = Collection(tuple(sorted(acc)))
            if max(k for k, _ in acc) == 0 and not has_cut(P):
                found.append(P)
            return
        for i in range(start, len(types)):
            k, a = types[i]
            if a <= remaining:
                acc.append(types[i])
                grow(i, remaining - a, acc)
                acc.pop()

    grow(0, m, [])
    return tuple((P, n_weight(P)) for P in sorted(found))


def term_table(m: int, ceiling: int | None = None) -> tuple[tuple[Collection, Fraction], ...]:
    """``(P, N(P))`` for ``P`` in M0(m) with ``N(P) != 0``, in canonical order."""
    check_order(m, ceiling)
    return tuple((P, w) for P, w in _m0_table(m) if w != 0)


# ---------------------------------------------------------------------------
# beta evaluation


def beta(seq: VerblunskySequence, P: Collection) -> complex:
    _nonempty(P)
    out = 1.0 + 0j
    for k, a in P:
        out *= alpha_at(seq, k) * alpha_at(seq, k - a).conjugate()
    return out


def modified_window(seq: VerblunskySequence, n: int, lo: int, hi: int) -> np.ndarray:
    """``alpha_window`` for the sequence used by ``beta_n``.

    Indices ``-1 .. n-2`` are zeroed and index ``n-1`` is set to ``-1``.
    """
    if n < 0:
        raise IndexError("n must be >= 0")
    A = alpha_window(seq, lo, hi)
    idx = np.arange(lo, hi + 1)
    A[(idx >= -1) & (idx <= n - 2)] = 0
    A[idx == n - 1] = -1
    return A


def beta_n(seq: VerblunskySequence, n: int, P: Collection) -> complex:
    """``beta(P)`` with ``alpha_{-1}..alpha_{n-2} -> 0`` and ``alpha_{n-1} -> -1``."""
    _nonempty(P)
    if n < 0:
        raise IndexError("n must be >= 0")
    omega, delta = extent(P)
    lo = min(delta, -1)
    A = modified_window(seq, n, lo, max(omega, lo))
    return complex(beta_shifts(A, lo, P, np.array([0]))[0])


def beta_shifts(A: np.ndarray, lo: int, P: Collection, shifts: np.ndarray) -> np.ndarray:
    """``beta(P + s)`` for every ``s`` in ``shifts``, reading ``A[i - lo] = alpha_i``."""
    out = np.ones(len(shifts), dtype=complex)
    for k, a in P:
        out *= A[shifts + (k - lo)] * np.conj(A[shifts + (k - a - lo)])
    return out


# ---------------------------------------------------------------------------
# Lerch's identity


def gbinom(x: int, k: int) -> Fraction:
    """Binomial coefficient ``C(x, k)`` for any integer ``x`` and ``k >= 0``."""
    if k < 0:
        return Fraction(0)
    num = 1
    for i in range(k):
        num *= x - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return Fraction(num, den)


def lerch_check(q: int, r: int, p: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``sum_s (-1)^s C(q,s) C(r,s) / C(p,s) = C(p-r,q) / C(p,q)``."""
    if q < 0 or r < 0:
        raise RangeError("q and r must be non-negative")
    if p < q:
        raise RangeError("identity requires p >= q")
    lhs = sum(
        ((-1) ** s * gbinom(q, s) * gbinom(r, s) / gbinom(p, s) for s in range(q + 1)),
        Fraction(0),
    )
    rhs = gbinom(p - r, q) / gbinom(p, q)
    return lhs, rhs
