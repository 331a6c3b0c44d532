import math

import numpy as np
import pytest
from hypothesis import given, settings

from opuc.core import finite
from opuc.quadrature import Grid, weight_mass
from opuc.recursion import (bernstein_weight, lambda_recursive, lambda_table, log_bernstein_weight,
                            log_phi_star_taylor, phi_pair, phi_star_norm, phi_values, series_exp,
                            series_log)
from opuc.fourier import wm_bernstein

from conftest import finite_sequences, random_alphas


def test_phi_pair_zero():
    p = phi_pair(finite([0.3j]), 0)
    assert list(p.phi.coeffs) == [1] and list(p.phi_star.coeffs) == [1]


def test_one_step():
    c = 0.3 - 0.4j
    p = phi_pair(finite([c]), 1)
    assert np.allclose(p.phi.coeffs, [-np.conj(c), 1])
    assert np.allclose(p.phi_star.coeffs, [1, -c])


def test_phi_pair_negative():
    with pytest.raises(IndexError):
        phi_pair(finite([0.1]), -1)


@given(finite_sequences(max_size=10))
def test_star_is_conjugate_reverse(seq):
    n = len(seq)
    p = phi_pair(seq, n)
    assert np.allclose(p.phi_star.coeffs, np.conj(p.phi.coeffs[::-1]), atol=1e-14)
    assert p.phi_star[0] == 1
    assert p.phi[n] == 1
    # kappa_{n,0} = -conj(alpha_{n-1})
    assert abs(p.phi[0] + np.conj(seq.alphas[-1])) < 1e-14


@given(finite_sequences(max_size=8))
def test_phi_bounded_by_star_inside_disk(seq):
    n = len(seq)
    z = 0.95 * np.exp(2j * np.pi * np.arange(32) / 32)
    phi, star = phi_values(seq, n, z)
    assert np.all(np.abs(phi) <= np.abs(star) * (1 + 1e-12))


def test_lambda_conventions():
    seq = finite([0.5])
    assert lambda_recursive(seq, -3, 0) == 1
    assert lambda_recursive(seq, -3, 2) == 0
    assert lambda_recursive(seq, 4, 0) == 1
    assert lambda_recursive(seq, 1, 1) == -0.5
    assert lambda_recursive(seq, 1, 2) == 0


def test_lambda_table_matches_phi_pair(rng):
    seq = finite(random_alphas(rng, 9))
    tab = lambda_table(seq, 9)
    for n in range(10):
        assert np.allclose(tab[n, : n + 1], phi_pair(seq, n).phi_star.coeffs, atol=1e-14)


def test_norms():
    assert phi_star_norm(finite([0.2]), 0) == 1
    assert abs(phi_star_norm(finite([0.6]), 1) - 0.8) < 1e-15
    assert abs(phi_star_norm(finite([0.5] * 4), 4) - 0.5625) < 1e-15


def test_log_taylor_single():
    w = log_phi_star_taylor(finite([0.5]), 1, 3)
    assert np.allclose(w, [0.5, 0.125, 0.5**3 / 3], atol=1e-15)


def test_log_taylor_trivial():
    assert np.all(log_phi_star_taylor(finite([]), 5, 4) == 0)


def test_log_taylor_matches_collections(rng):
    seq = finite(random_alphas(rng, 6))
    w = log_phi_star_taylor(seq, 6, 4)
    for m in range(1, 5):
        assert abs(w[m - 1] - wm_bernstein(seq, 5, m)) < 1e-12


@given(finite_sequences(max_size=12))
@settings(max_examples=30)
def test_exp_of_log_reproduces(seq):
    n = len(seq)
    star = phi_pair(seq, n).phi_star.coeffs
    back = series_exp(series_log(star, n), n)
    assert np.allclose(back, star, atol=1e-12)


def test_series_log_requires_unit_constant():
    with pytest.raises(ValueError):
        series_log([2.0, 1.0], 3)


def test_bernstein_weight_values():
    assert np.allclose(bernstein_weight(finite([]), 3, np.linspace(0, 6, 7)), 1)
    assert abs(bernstein_weight(finite([0.5]), 0, 0.0) - 3.0) < 1e-14


def test_bernstein_weight_is_probability(rng):
    seq = finite(random_alphas(rng, 6, 0.6))
    assert abs(weight_mass(seq, 5, Grid(4096)) - 1) < 1e-10
    th = Grid(4096).thetas
    assert np.all(bernstein_weight(seq, 5, th) > 0)


def test_log_weight_matches_recursion_values(rng):
    seq = finite(random_alphas(rng, 5))
    th = np.linspace(0, 2 * math.pi, 17)
    _, star = phi_values(seq, 5, np.exp(1j * th))
    rho2 = np.prod(1 - np.abs(np.array(seq.alphas[:5])) ** 2)
    assert np.allclose(log_bernstein_weight(seq, 4, th), np.log(rho2 / np.abs(star) ** 2), atol=1e-12)
