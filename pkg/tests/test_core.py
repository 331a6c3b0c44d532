import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from opuc.core import (Polynomial, alpha_at, alpha_mp, alpha_window, finite, geometric, in_lp,
                       make_sequence, periodic, power, rho_at, shifted, to_json, truncated)
from opuc.errors import ModulusError, SchemaError

from conftest import finite_sequences


def test_finite_prefix_then_zeros():
    seq = make_sequence({"kind": "finite", "alphas": [[0.5, 0]]})
    assert alpha_at(seq, 0) == 0.5
    assert alpha_at(seq, 1) == 0
    assert alpha_at(seq, 3) == 0


def test_geometric_formula():
    lam = cmath.exp(1j * math.pi / 4)
    seq = make_sequence({"kind": "geometric", "tail": {"a": 0.5, "lambda": [lam.real, lam.imag]}})
    for n in range(10):
        assert abs(alpha_at(seq, n) - 0.5 * lam**n) < 1e-14


def test_unit_modulus_rejected():
    with pytest.raises(ModulusError) as info:
        make_sequence({"kind": "finite", "alphas": [[1.0, 0]]})
    assert info.value.path == "$.alphas[0]"


@pytest.mark.parametrize(
    "spec, path",
    [
        ({"kind": "nope"}, "$.kind"),
        ({"kind": "finite", "alphas": [[0.1]]}, "$.alphas[0]"),
        ({"kind": "power", "tail": {"c": 1}}, "$.tail.p"),
        ({"kind": "geometric", "tail": {"a": 0.1, "lambda": [2, 0]}}, "$.tail.lambda"),
        ({"kind": "listWithTail", "tail": {"repeat": []}}, "$.tail.repeat"),
    ],
)
def test_schema_errors_carry_path(spec, path):
    with pytest.raises(SchemaError) as info:
        make_sequence(spec)
    assert info.value.path == path


def test_power_tail_first_value_checked():
    with pytest.raises(ModulusError):
        power(3.0, 1.0)
    assert abs(alpha_at(power(1.0, 1 / 3), 0) - 2 ** (-1 / 3)) < 1e-15


def test_extended_convention():
    seq = finite([0.3])
    assert alpha_at(seq, -1) == -1
    assert alpha_at(seq, -5) == 0
    w = alpha_window(seq, -3, 1)
    assert list(w) == [0, 0, -1, 0.3, 0]


@pytest.mark.parametrize("a, rho", [(0, 1.0), (0.6, 0.8), (0.5j, math.sqrt(0.75))])
def test_rho(a, rho):
    assert abs(rho_at(finite([a]), 0) - rho) < 1e-15


def test_rho_negative_index():
    with pytest.raises(IndexError):
        rho_at(finite([0.1]), -1)


@given(finite_sequences())
def test_rho_alpha_pythagoras(seq):
    for n in range(len(seq) + 2):
        assert abs(rho_at(seq, n) ** 2 + abs(alpha_at(seq, n)) ** 2 - 1) < 1e-15


def test_geometric_constant_modulus():
    seq = geometric(0.4, cmath.exp(0.3j), prefix=[0.1])
    assert all(abs(abs(alpha_at(seq, n)) - 0.4) < 1e-15 for n in range(1, 50))


def test_alternating_power_signs():
    seq = power(1.0, 1 / 3, "alternating")
    vals = alpha_window(seq, 0, 5)
    expected = [(-1) ** k * (k + 2) ** (-1 / 3) for k in range(6)]
    assert np.allclose(vals, expected, atol=1e-15)


def test_periodic_tail():
    seq = periodic([0.3, 0.5j], prefix=[0.1])
    assert [alpha_at(seq, n) for n in range(5)] == [0.1, 0.3, 0.5j, 0.3, 0.5j]


def test_shift_and_truncate():
    seq = geometric(0.5, 1j)
    s = shifted(seq, 3)
    assert all(alpha_at(s, n) == alpha_at(seq, n + 3) for n in range(10))
    t = truncated(seq, 4)
    assert t.kind == "finite"
    assert all(alpha_at(t, n) == alpha_at(seq, n) for n in range(5))
    assert alpha_at(t, 5) == 0


def test_json_round_trip():
    seq = geometric(0.5, cmath.exp(0.2j), prefix=[0.1 + 0.2j], phase=1j)
    again = make_sequence(to_json(seq))
    assert np.array_equal(alpha_window(again, -2, 20), alpha_window(seq, -2, 20))


def test_alpha_mp_matches_double():
    seq = power(0.9, 0.4, "alternating", prefix=[0.2j])
    for n in range(6):
        assert abs(complex(alpha_mp(seq, n)) - alpha_at(seq, n)) < 1e-15


def test_summability_by_kind():
    assert in_lp(finite([0.5]), 1)
    assert not in_lp(geometric(0.5), 2)
    assert in_lp(power(1, 1 / 3), 4)
    assert not in_lp(power(1, 1 / 3), 3)


@given(st.lists(st.complex_numbers(max_magnitude=5, allow_nan=False), min_size=1, max_size=6),
       st.complex_numbers(max_magnitude=1.5, allow_nan=False))
def test_polynomial_horner(coeffs, z):
    p = Polynomial(tuple(coeffs))
    direct = sum(c * z**k for k, c in enumerate(coeffs))
    assert abs(p(z) - direct) <= 1e-9 * (1 + abs(direct))
