import cmath
import math

import pytest

from qdomains import _wordkit_py
from qdomains import qcombinat as qc
from qdomains.qcombinat import EnumerationCapExceeded, QParam

from oracles import brute_fiber, brute_inversions

# mpmath-verified infinite products (30 digits), frozen
POCH_HALF_HALF = 0.288788095086602421278899721929
POCH_QUARTER_QUARTER = 0.688537537120339715456514357294


def test_qparam_rejects_zero():
    with pytest.raises(ValueError):
        QParam(0.0)


def test_qparam_caches_modulus():
    qp = QParam(2j)
    assert qp.modulus == 2.0
    assert qp.log_modulus == pytest.approx(math.log(2.0), rel=1e-15)


def test_q_int_examples():
    assert qc.q_int(3, 0.5) == pytest.approx(1.75)
    for q in (0.3, 2.0, 1j):
        assert qc.q_int(0, q) == 0
    assert qc.q_int(4, 1.0) == pytest.approx(4.0)


def test_q_factorial_examples():
    assert qc.q_factorial(2, 0.5) == pytest.approx(1.5)
    for q in (0.5, 2.0, cmath.exp(0.3j)):
        assert qc.q_factorial((1, 1), q) == pytest.approx(1.0)
    assert qc.q_factorial((2, 1), 0.5) == pytest.approx(1.5)


def test_q_factorial_matches_scalar_product():
    q = 0.7
    value = qc.q_factorial((2, 3), q)
    assert value == pytest.approx(qc.q_factorial(2, q) * qc.q_factorial(3, q), rel=1e-14)


def test_log_q_factorial_matches_direct_product():
    for t in (0.25, 0.5, 0.999999999, 1.0, 1.5, 9.0):
        for m in range(0, 12):
            direct = 1.0
            for j in range(1, m + 1):
                direct *= sum(t ** i for i in range(j))
            assert qc.log_q_factorial(m, t) == pytest.approx(math.log(direct) if m else 0.0,
                                                             abs=1e-12)


def test_pochhammer_values():
    half = qc.q_pochhammer_inf(0.5, 0.5)
    assert half.value == pytest.approx(POCH_HALF_HALF, rel=2e-12)
    quarter = qc.q_pochhammer_inf(0.25, 0.25)
    assert quarter.value == pytest.approx(POCH_QUARTER_QUARTER, rel=2e-12)
    assert half.factors > 0


def test_pochhammer_trivial_and_errors():
    assert qc.q_pochhammer_inf(0.0, 0.5).value == 1.0
    with pytest.raises(ValueError):
        qc.q_pochhammer_inf(0.5, 1.0)
    with pytest.raises(ValueError):
        qc.q_pochhammer_inf(0.5, 0.5, tol=0.0)


def test_weight_polydisk_examples():
    assert qc.weight_polydisk((1, 1), 0.5) == pytest.approx(0.5)
    assert qc.weight_polydisk((2, 1), 2.0) == 1.0
    assert qc.weight_polydisk((2, 3, 1), 0.5) == pytest.approx(0.5 ** 11, rel=1e-12)


def test_weight_u_examples():
    assert qc.weight_u((1, 1), 2.0) == pytest.approx(2.0)
    assert qc.weight_u((5, 0, 0), 0.3) == pytest.approx(1.0)
    assert qc.weight_u((1, 1, 1), 0.5) == pytest.approx(0.125)


def test_weight_ball_examples():
    assert qc.weight_ball((1, 1), 1.0) == pytest.approx(math.sqrt(0.5), rel=1e-12)
    assert qc.weight_ball((4, 0, 0), 0.7) == pytest.approx(1.0, rel=1e-12)
    assert qc.weight_ball((1, 1), 0.5) == pytest.approx(5 ** -0.5, rel=1e-12)


def test_weight_ball_two_forms_agree():
    for modulus in (0.5, 0.9, 1.0, 1.3, 3.0):
        for n in (1, 2, 3):
            for k in qc.multi_indices(n, 10):
                assert qc.weight_ball(k, modulus) == pytest.approx(
                    qc.weight_ball_alt(k, modulus), rel=1e-10)


def test_weight_ball_matches_fiber_enumeration():
    # inverse square sum over the fiber reproduces the ball weight
    for modulus in (0.5, 2.0):
        for k in qc.multi_indices(2, 6):
            acc = sum(modulus ** (-2 * brute_inversions(alpha))
                      for alpha in brute_fiber(k))
            assert qc.weight_ball(k, modulus) == pytest.approx(acc ** -0.5, rel=1e-10)


def test_word_profile_and_fiber_count():
    assert qc.word_profile((2, 1, 2)) == (1, 2)
    assert qc.word_profile((2, 1, 2), n=3) == (1, 2, 0)
    assert qc.fiber_count((1, 1)) == 2
    assert qc.fiber_count((2, 1)) == 3
    with pytest.raises(EnumerationCapExceeded):
        qc.fiber_count((2000, 2000))
    with pytest.raises(ValueError):
        qc.word_profile((0, 1), n=2)


def test_inversions_examples_and_oracle():
    assert qc.inversions((1, 2, 2, 3)) == 0
    assert qc.inversions((2, 1)) == 1
    assert qc.inversions((2, 1, 2, 1)) == 3
    for alpha in qc.words(3, 6):
        assert qc.inversions(alpha) == brute_inversions(alpha)


def test_switch_count_examples():
    assert qc.switch_count((1, 1, 1)) == 0
    assert qc.switch_count(()) == -1
    assert qc.switch_count((1,)) == 0
    assert qc.switch_count((1, 2, 1, 2)) == 3


def test_delta_and_fiber_words():
    assert qc.delta_word((2, 1)) == (1, 1, 2)
    assert qc.fiber_words((1, 1)) == [(1, 2), (2, 1)]
    assert qc.fiber_words((0, 0, 0)) == [()]
    for k in qc.multi_indices(3, 6):
        words = qc.fiber_words(k)
        assert words == brute_fiber(k)
        assert len(words) == qc.fiber_count(k)
        assert words == sorted(words)
    with pytest.raises(EnumerationCapExceeded):
        qc.fiber_words((8, 8, 8), cap=10)


def test_inv_distribution_examples():
    for q in (0.3, 2.0, cmath.exp(1j * math.pi / 5)):
        brute, closed = qc.inv_distribution((1, 1), q)
        assert brute == pytest.approx(1 + q, rel=1e-12)
        assert closed == pytest.approx(1 + q, rel=1e-12)
        assert qc.inv_distribution((3, 0), q).brute == pytest.approx(1.0)
    dist = qc.inv_distribution((1, 1, 1), 0.5)
    assert dist.brute == pytest.approx(2.625, rel=1e-12)
    assert dist.closed == pytest.approx(2.625, rel=1e-12)


def test_inv_distribution_agreement_grid():
    for q in (0.3, 0.5, 1.7, cmath.exp(1j * math.pi / 5)):
        for n in (1, 2, 3):
            for k in qc.multi_indices(n, 6):
                brute, closed = qc.inv_distribution(k, q)
                assert abs(brute - closed) <= 1e-10 * max(abs(brute), abs(closed), 1.0)


def test_word_with_inversions_examples():
    assert qc.word_with_inversions((1, 1), 0) == (1, 2)
    assert qc.word_with_inversions((1, 1), 1) == (2, 1)
    assert qc.word_with_inversions((2, 2), 4) == (2, 2, 1, 1)


def test_word_with_inversions_postconditions():
    for n in (1, 2, 3):
        for k in qc.multi_indices(n, 6):
            for m in range(qc.cross_degree(k) + 1):
                alpha = qc.word_with_inversions(k, m)
                assert qc.word_profile(alpha, n) == k
                assert qc.inversions(alpha) == m
                assert qc.switch_count(alpha) <= n + 2


def test_word_with_inversions_range_errors():
    with pytest.raises(ValueError):
        qc.word_with_inversions((1, 1), 2)
    with pytest.raises(ValueError):
        qc.word_with_inversions((1, 1), -1)


def test_sigma_and_cross_degree():
    assert qc.sigma((1, 0), (0, 1)) == 1
    assert qc.sigma((0, 1), (1, 0)) == 0
    assert qc.sigma((2, 1), (1, 3)) == 6
    assert qc.cross_degree((2, 3, 1)) == 11
    with pytest.raises(ValueError):
        qc.sigma((1,), (1, 2))


def test_multi_index_enumeration_counts():
    assert len(qc.multi_indices(3, 4)) == math.comb(7, 3)
    assert len(qc.multi_indices_exact(4, 6)) == math.comb(9, 3)
    assert qc.multi_indices(2, 1) == ((0, 0), (0, 1), (1, 0))


def test_words_enumeration():
    all_words = list(qc.words(2, 3))
    assert len(all_words) == 1 + 2 + 4 + 8
    assert list(qc.words_exact(2, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_pure_python_kernels_match_active_implementation():
    from qdomains import _kernels
    for counts in ((2, 1), (1, 1, 1), (3, 2), (0, 2, 1)):
        assert _wordkit_py.fiber_words(counts) == _kernels.fiber_words(counts)
        assert _wordkit_py.fiber_inversions(counts) == _kernels.fiber_inversions(counts)
        for q in (0.5, 1.3, cmath.exp(0.7j)):
            assert _wordkit_py.mahonian_sum(counts, q) == pytest.approx(
                _kernels.mahonian_sum(counts, q), rel=1e-13)
    for alpha in qc.words(3, 5):
        assert _wordkit_py.inversions(alpha) == _kernels.inversions(alpha)
        assert _wordkit_py.switch_count(alpha) == _kernels.switch_count(alpha)
        assert _wordkit_py.word_profile(alpha, 3) == _kernels.word_profile(alpha, 3)


def test_stirling_ratio_trend():
    def value(m):
        log_a = 2.0 * math.lgamma(m + 1) - math.lgamma(2 * m + 1)
        log_b = -2.0 * m * math.log(2.0)
        return math.exp((log_a - log_b) / (4.0 * m))

    assert abs(value(100) - 1.0) <= 0.1
    assert abs(value(100) - 1.0) <= abs(value(25) - 1.0)
