"""Verblunsky sequences and dense complex polynomials.

Every other module reads coefficients through :func:`alpha_at` or
:func:`alpha_window`, which implement the extended-index convention
``alpha_{-1} = -1`` and ``alpha_n = 0`` for ``n <= -2``.

A sequence is an explicit prefix ``alpha_0 .. alpha_{L-1}`` followed by a
tail rule selected by ``kind``:

``finite``        zeros beyond the prefix
``geometric``     ``alpha_n = a * phase * lambda**n``
``power``         ``alpha_n = s_n * c * (n + 2)**(-p)``, ``s_n = 1`` or ``(-1)**n``
``listWithTail``  the block ``repeat`` is repeated forever after the prefix

``offset`` shifts the whole sequence: ``alpha'_n = alpha_{n + offset}`` for
``n >= 0``.  The negative-index convention is not shifted.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from typing import Any, Sequence

import mpmath
import numpy as np

from .errors import ModulusError, SchemaError

KINDS = ("finite", "geometric", "power", "listWithTail")
_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class GeometricTail:
    a: float
    lam: complex
    phase: complex = 1.0 + 0.0j


@dataclass(frozen=True)
class PowerTail:
    c: float
    p: float
    sign: str = "plus"  # or "alternating"


@dataclass(frozen=True)
class RepeatTail:
    block: tuple[complex, ...]


@dataclass(frozen=True)
class VerblunskySequence:
    kind: str
    alphas: tuple[complex, ...] = ()
    tail: GeometricTail | PowerTail | RepeatTail | None = None
    offset: int = 0

    def __len__(self):
        # number of explicit coefficients still visible after the offset
        return max(len(self.alphas) - self.offset, 0)

    @property
    def support_length(self) -> int | None:
        """Index past the last non-zero coefficient, or None if infinite."""
        if self.kind == "finite" or _tail_is_zero(self.tail):
            nz = [i for i, x in enumerate(self.alphas) if x != 0]
            return max(nz[-1] + 1 - self.offset, 0) if nz else 0
        return None


def _tail_is_zero(tail) -> bool:
    if tail is None:
        return True
    if isinstance(tail, GeometricTail):
        return tail.a == 0
    if isinstance(tail, PowerTail):
        return tail.c == 0
    return all(x == 0 for x in tail.block)


# ---------------------------------------------------------------------------
# construction


def _parse_complex(obj: Any, path: str) -> complex:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    if (
        isinstance(obj, (list, tuple))
        and len(obj) == 2
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj)
    ):
        return complex(float(obj[0]), float(obj[1]))
    raise SchemaError("expected a complex number [re, im]", path)


def _parse_real(obj: Any, path: str) -> float:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return float(obj)
    raise SchemaError("expected a real number", path)


def make_sequence(spec: dict) -> VerblunskySequence:
    """Build a validated sequence from its JSON description.

    Raises :class:`SchemaError` for malformed input and :class:`ModulusError`
    if any coefficient, explicit or produced by the tail rule, has modulus
    ``>= 1``.
    """
    if not isinstance(spec, dict):
        raise SchemaError("sequence description must be an object")
    kind = spec.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"kind must be one of {KINDS}", "$.kind")
    raw = spec.get("alphas", [])
    if not isinstance(raw, list):
        raise SchemaError("expected a list", "$.alphas")
    alphas = tuple(_parse_complex(x, f"$.alphas[{i}]") for i, x in enumerate(raw))
    offset = spec.get("offset", 0)
    if not isinstance(offset, int) or isinstance(offset, bool) or offset < 0:
        raise SchemaError("offset must be a non-negative integer", "$.offset")

    t = spec.get("tail")
    tail: GeometricTail | PowerTail | RepeatTail | None = None
    if kind == "finite":
        if t not in (None, {}):
            raise SchemaError("finite sequences take no tail", "$.tail")
    else:
        if not isinstance(t, dict):
            raise SchemaError("tail parameters required", "$.tail")
        if kind == "geometric":
            for key in ("a", "lambda"):
                if key not in t:
                    raise SchemaError("missing field", f"$.tail.{key}")
            tail = GeometricTail(
                a=_parse_real(t["a"], "$.tail.a"),
                lam=_parse_complex(t["lambda"], "$.tail.lambda"),
                phase=_parse_complex(t.get("phase", [1.0, 0.0]), "$.tail.phase"),
            )
        elif kind == "power":
            for key in ("c", "p"):
                if key not in t:
                    raise SchemaError("missing field", f"$.tail.{key}")
            sign = t.get("signPattern", "plus")
            if sign not in ("plus", "alternating"):
                raise SchemaError("signPattern must be plus|alternating", "$.tail.signPattern")
            tail = PowerTail(
                c=_parse_real(t["c"], "$.tail.c"),
                p=_parse_real(t["p"], "$.tail.p"),
                sign=sign,
            )
        else:
            block = t.get("repeat")
            if not isinstance(block, list) or not block:
                raise SchemaError("expected a non-empty list", "$.tail.repeat")
            tail = RepeatTail(
                tuple(_parse_complex(x, f"$.tail.repeat[{i}]") for i, x in enumerate(block))
            )
    seq = VerblunskySequence(kind=kind, alphas=alphas, tail=tail, offset=offset)
    validate(seq)
    return seq


def validate(seq: VerblunskySequence) -> VerblunskySequence:
    for i, x in enumerate(seq.alphas):
        if not abs(x) < 1:
            raise ModulusError(f"|alpha_{i}| = {abs(x)!r} >= 1", f"$.alphas[{i}]")
    tail, L = seq.tail, len(seq.alphas)
    if isinstance(tail, GeometricTail):
        if not 0 <= tail.a < 1:
            raise ModulusError(f"geometric amplitude a = {tail.a!r} not in [0, 1)", "$.tail.a")
        if abs(abs(tail.lam) - 1) > _UNIT_TOL:
            raise SchemaError("|lambda| must equal 1", "$.tail.lambda")
        if abs(abs(tail.phase) - 1) > _UNIT_TOL:
            raise SchemaError("|phase| must equal 1", "$.tail.phase")
    elif isinstance(tail, PowerTail):
        if not tail.p > 0:
            raise SchemaError("p must be positive", "$.tail.p")
        # the tail modulus is largest at its first index
        if not abs(tail.c) * (L + 2) ** (-tail.p) < 1:
            raise ModulusError(f"power tail reaches modulus >= 1 at n = {L}", "$.tail.c")
    elif isinstance(tail, RepeatTail):
        for i, x in enumerate(tail.block):
            if not abs(x) < 1:
                raise ModulusError(f"|repeat[{i}]| = {abs(x)!r} >= 1", f"$.tail.repeat[{i}]")
    if seq.kind != "finite" and tail is None:
        raise SchemaError("tail parameters required", "$.tail")
    return seq


def finite(alphas: Sequence[complex]) -> VerblunskySequence:
    return validate(VerblunskySequence("finite", tuple(complex(x) for x in alphas)))


def geometric(a: float, lam: complex = 1.0, prefix: Sequence[complex] = (),
              phase: complex = 1.0) -> VerblunskySequence:
    tail = GeometricTail(float(a), complex(lam), complex(phase))
    return validate(VerblunskySequence("geometric", tuple(complex(x) for x in prefix), tail))


def power(c: float, p: float, sign: str = "plus",
          prefix: Sequence[complex] = ()) -> VerblunskySequence:
    tail = PowerTail(float(c), float(p), sign)
    return validate(VerblunskySequence("power", tuple(complex(x) for x in prefix), tail))


def periodic(repeat: Sequence[complex], prefix: Sequence[complex] = ()) -> VerblunskySequence:
    tail = RepeatTail(tuple(complex(x) for x in repeat))
    return validate(VerblunskySequence("listWithTail", tuple(complex(x) for x in prefix), tail))


def to_json(seq: VerblunskySequence) -> dict:
    out: dict[str, Any] = {
        "kind": seq.kind,
        "alphas": [[x.real, x.imag] for x in seq.alphas],
    }
    t = seq.tail
    if isinstance(t, GeometricTail):
        out["tail"] = {"a": t.a, "lambda": [t.lam.real, t.lam.imag],
                       "phase": [t.phase.real, t.phase.imag]}
    elif isinstance(t, PowerTail):
        out["tail"] = {"c": t.c, "p": t.p, "signPattern": t.sign}
    elif isinstance(t, RepeatTail):
        out["tail"] = {"repeat": [[x.real, x.imag] for x in t.block]}
    if seq.offset:
        out["offset"] = seq.offset
    return out


def shifted(seq: VerblunskySequence, s: int = 1) -> VerblunskySequence:
    """The sequence ``alpha_s, alpha_{s+1}, ...`` (coefficients of mu^(s))."""
    if s < 0:
        raise IndexError("shift must be non-negative")
    return replace(seq, offset=seq.offset + s)


def truncated(seq: VerblunskySequence, n: int) -> VerblunskySequence:
    """Finite sequence ``alpha_0 .. alpha_n`` (Bernstein-Szego approximation mu_n)."""
    if n < -1:
        raise IndexError("n must be >= -1")
    return VerblunskySequence("finite", tuple(complex(x) for x in alpha_window(seq, 0, n)))


# ---------------------------------------------------------------------------
# evaluation


def _tail_values(seq: VerblunskySequence, idx: np.ndarray) -> np.ndarray:
    """Tail rule at absolute (offset-included) indices ``idx >= len(alphas)``."""
    t = seq.tail
    if t is None:
        return np.zeros(idx.shape, dtype=complex)
    if isinstance(t, GeometricTail):
        theta = cmath.phase(t.lam)
        return t.a * np.exp(1j * theta * idx) * t.phase
    if isinstance(t, PowerTail):
        vals = t.c * (idx + 2.0) ** (-t.p)
        if t.sign == "alternating":
            vals = np.where(idx % 2 == 0, vals, -vals)
        return vals.astype(complex)
    block = np.asarray(t.block, dtype=complex)
    return block[(idx - len(seq.alphas)) % len(block)]


def alpha_window(seq: VerblunskySequence, lo: int, hi: int) -> np.ndarray:
    """Array ``[alpha_lo, ..., alpha_hi]`` under the extended convention."""
    n = np.arange(lo, hi + 1)
    out = np.zeros(n.shape, dtype=complex)
    out[n == -1] = -1.0
    pos = n >= 0
    if np.any(pos):
        idx = n[pos] + seq.offset
        L = len(seq.alphas)
        vals = np.empty(idx.shape, dtype=complex)
        explicit = idx < L
        if np.any(explicit):
            vals[explicit] = np.asarray(seq.alphas, dtype=complex)[idx[explicit]]
        if np.any(~explicit):
            vals[~explicit] = _tail_values(seq, idx[~explicit])
        out[pos] = vals
    return out


def alpha_at(seq: VerblunskySequence, n: int) -> complex:
    if n == -1:
        return -1.0 + 0.0j
    if n < -1:
        return 0j
    return complex(alpha_window(seq, n, n)[0])


def rho_at(seq: VerblunskySequence, n: int) -> float:
    if n < 0:
        raise IndexError("rho is only defined for n >= 0")
    return math.sqrt(1.0 - abs(alpha_at(seq, n)) ** 2)


def alpha_mp(seq: VerblunskySequence, n: int) -> mpmath.mpc:
    """``alpha_n`` in the current mpmath precision.

    Tail rules are evaluated in extended precision with ``lambda`` and
    ``phase`` renormalised to modulus one, so a geometric tail stays exactly
    geometric.
    """
    if n == -1:
        return mpmath.mpc(-1)
    if n < -1:
        return mpmath.mpc(0)
    idx = n + seq.offset
    if idx < len(seq.alphas):
        x = seq.alphas[idx]
        return mpmath.mpc(x.real, x.imag)
    t = seq.tail
    if t is None:
        return mpmath.mpc(0)
    if isinstance(t, GeometricTail):
        lam = mpmath.mpc(t.lam.real, t.lam.imag)
        ph = mpmath.mpc(t.phase.real, t.phase.imag)
        return mpmath.mpf(t.a) * (ph / abs(ph)) * (lam / abs(lam)) ** idx
    if isinstance(t, PowerTail):
        v = mpmath.mpf(t.c) * mpmath.power(idx + 2, -mpmath.mpf(t.p))
        if t.sign == "alternating" and idx % 2:
            v = -v
        return mpmath.mpc(v)
    x = t.block[(idx - len(seq.alphas)) % len(t.block)]
    return mpmath.mpc(x.real, x.imag)


# ---------------------------------------------------------------------------
# summability by kind


def lp_exponent(seq: VerblunskySequence) -> float:
    """Infimum of ``r`` such that the sequence lies in l^r (0 for finite support).

    A power tail ``(n+2)**(-p)`` lies in l^r exactly when ``r * p > 1``, so the
    infimum ``1/p`` itself is excluded; see :func:`in_lp`.
    """
    if _tail_is_zero(seq.tail):
        return 0.0
    if isinstance(seq.tail, PowerTail):
        return 1.0 / seq.tail.p
    return math.inf


def in_lp(seq: VerblunskySequence, r: float) -> bool:
    e = lp_exponent(seq)
    if e == 0.0:
        return True
    return r > e


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Polynomial:
    """Dense complex polynomial; ``coeffs[j]`` multiplies ``z**j``."""

    coeffs: np.ndarray = field(default_factory=lambda: np.ones(1, dtype=complex))

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs, dtype=complex))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> complex:
        if 0 <= m < len(self.coeffs):
            return complex(self.coeffs[m])
        return 0j

    def __call__(self, z):
        acc = np.zeros_like(np.asarray(z, dtype=complex))
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    def reversed_star(self, n: int | None = None) -> "Polynomial":
        """``z**n * conj(P(1/conj(z)))`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        c = np.zeros(n + 1, dtype=complex)
        c[: len(self.coeffs)] = self.coeffs
        return Polynomial(np.conj(c[::-1]))
