import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opuc.core import finite, geometric, power, rho_at
from opuc.errors import DomainError, KindError
from opuc.fourier import w0, wm_bernstein
from opuc.quadrature import zq_quadrature
from opuc.sumrules import (quadratic_partials, l4_equivalence_report, make_qweight, qshift_partials,
                           step_residual, zq_bernstein, zq_partials)

from conftest import finite_sequences, random_alphas


def test_qweight_examples():
    Q = make_qweight([1])
    assert Q.p0 == 1 and len(Q.p) == 1
    Q = make_qweight([1, 1])
    assert Q.p0 == 2 and Q.p_at(1) == 1 and Q.p_at(-1) == 1
    Q = make_qweight([-1, 1])
    assert Q.p0 == 2 and Q.p_at(1) == -1
    assert Q.p_at(5) == 0


def test_qweight_errors():
    with pytest.raises(DomainError):
        make_qweight([])
    with pytest.raises(DomainError):
        make_qweight([1, 0])


@given(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False), min_size=1, max_size=5)
       .filter(lambda q: q[-1] != 0))
def test_qweight_is_abs_square(q):
    Q = make_qweight(q)
    th = np.linspace(0, 2 * math.pi, 11)
    z = np.exp(1j * th)
    direct = np.abs(np.polyval(q[::-1], z)) ** 2
    laurent = sum(Q.p_at(m) * z**m for m in range(-Q.N, Q.N + 1))
    assert np.allclose(laurent, direct, atol=1e-9 * (1 + direct.max()))
    for m in range(Q.N + 1):
        assert Q.p_at(-m) == np.conj(Q.p_at(m))


def test_zq_trivial_cases(rng):
    assert zq_bernstein(finite([]), make_qweight([1, 2j, 1]), 4) == 0
    seq = finite(random_alphas(rng, 5))
    expected = sum(math.log(rho_at(seq, k)) for k in range(5))
    assert abs(zq_bernstein(seq, make_qweight([1]), 4) - expected) < 1e-14


def test_zq_matches_quadrature(rng):
    for _ in range(5):
        seq = finite(random_alphas(rng, 7, 0.3))
        Q = make_qweight(rng.normal(size=3) + 1j * rng.normal(size=3))
        assert abs(zq_bernstein(seq, Q, 6) - zq_quadrature(seq, 6, Q)) < 1e-8


def test_zq_matches_fourier_assembly(rng):
    seq = finite(random_alphas(rng, 7))
    Q = make_qweight([0.5, 1j, 2])
    n = 6
    total = 0.5 * Q.p0 * w0(seq, n).value.real
    for m in range(1, Q.N + 1):
        total += (np.conj(Q.p_at(m)) * wm_bernstein(seq, n, m)).real
    assert abs(zq_bernstein(seq, Q, n) - total) < 1e-12


@given(finite_sequences(max_size=6))
@settings(max_examples=30)
def test_zq_ceiling(seq):
    Q = make_qweight([1, -0.5, 0.25j])
    assert zq_bernstein(seq, Q, len(seq)) <= float(np.sum(np.abs(Q.p)))


def test_zq_partials_q1_is_log_rho():
    seq = power(1.0, 1 / 3, "alternating")
    s = zq_partials(seq, make_qweight([1]), 5000)
    assert s.verdict == "diverging"
    assert s.last <= -20
    terms = np.diff(s.partials)
    assert abs(terms[9] - math.log(rho_at(seq, 10))) < 1e-15


def test_zq_partials_cancellation():
    s = zq_partials(power(1.0, 1 / 3, "alternating"), make_qweight([1, 1]), 5000)
    assert s.verdict in ("converged", "bounded")


def test_zq_partials_finite_converges(rng):
    seq = finite(random_alphas(rng, 4))
    s = zq_partials(seq, make_qweight([1, 1]), 100)
    assert s.verdict == "converged"
    assert np.all(s.partials[6:] == s.partials[6])


def test_step_residual(rng):
    assert step_residual(finite([]), make_qweight([1, 1]), 3) == 0
    assert step_residual(finite([0.5]), make_qweight([1]), 1) <= 1e-12
    for _ in range(5):
        seq = finite(random_alphas(rng, 6))
        assert step_residual(seq, make_qweight([1, 1]), 5) <= 1e-10
        assert step_residual(seq, make_qweight([1, -2j, 0.5, 1]), 5) <= 1e-10
    with pytest.raises(KindError):
        step_residual(power(0.5, 1.0), make_qweight([1]), 3)


def test_qshift_partials():
    Q = make_qweight([1, 1])
    zero = qshift_partials(finite([]), Q, 10)
    assert np.all(zero.partials == 0)
    alt = qshift_partials(power(1.0, 1 / 3, "alternating"), Q, 5000)
    assert alt.verdict == "converged"
    assert np.max(np.abs(alt.partials[1000:] - alt.partials[5000])) <= 1e-3
    con = qshift_partials(power(1.0, 1 / 3), Q, 5000)
    assert con.verdict == "diverging"
    assert np.all(np.diff(con.partials) >= 0)


def test_quadratic_partials_track_zq_for_small_coefficients():
    # apart from the constant Re(conj(p_m) alpha_{m-1}) the gap is fourth order
    seq = power(0.05, 0.9, "alternating")
    Q = make_qweight([1, 1])
    zq = zq_partials(seq, Q, 300).partials
    c = quadratic_partials(seq, Q, 300)
    offset = (np.conj(Q.p_at(1)) * 0.05 * 2 ** -0.9).real
    assert np.max(np.abs(zq - c - offset)) < 1e-4


def test_l4_report():
    Q = make_qweight([1, 1])
    r = l4_equivalence_report(power(1.0, 1 / 3, "alternating"), Q, 5000)
    assert r.verdict == "both bounded"
    r = l4_equivalence_report(power(1.0, 1 / 3), Q, 5000)
    assert r.verdict == "both unbounded"
    r = l4_equivalence_report(finite([0.2, 0.3j]), Q, 50)
    assert r.verdict == "both bounded"
    assert r.zq.verdict == r.qshift.verdict == "converged"
    assert set(r.to_json()) >= {"zq", "qshift", "crit311", "verdict"}


def test_l4_report_kind_check():
    with pytest.raises(KindError):
        l4_equivalence_report(geometric(0.3), make_qweight([1]), 10)
    with pytest.raises(KindError):
        l4_equivalence_report(power(1.0, 0.25), make_qweight([1]), 10)
