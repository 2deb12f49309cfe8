import math
from random import Random

import pytest

from qdomains import fock, qcombinat as qc, randgen
from qdomains.elements import QPolynomial


def test_truncation_validation():
    with pytest.raises(ValueError):
        fock.FockTruncation(2, 1.0, 4)
    with pytest.raises(ValueError):
        fock.FockTruncation(2, 0.0, 4)
    with pytest.raises(ValueError):
        fock.FockTruncation(0, 0.5, 4)


def test_generator_step_examples():
    tr = fock.FockTruncation(1, 0.5, 5, reach=1)
    coeff, target = fock.fock_apply_generator(1, (0,), tr)
    assert coeff == pytest.approx(math.sqrt(0.75)) and target == (1,)
    coeff, target = fock.fock_apply_generator(1, (1,), tr)
    assert coeff == pytest.approx(math.sqrt(0.75 * 1.25)) and target == (2,)
    tr2 = fock.FockTruncation(2, 0.5, 2, reach=1)
    coeff, target = fock.fock_apply_generator(1, (0, 1), tr2)
    assert coeff == pytest.approx(math.sqrt(0.75) * 0.5) and target == (1, 1)
    with pytest.raises(ValueError):
        fock.fock_apply_generator(1, (6,), tr)
    with pytest.raises(ValueError):
        fock.fock_apply_generator(3, (0, 0), tr2)


def test_commutation_relation_on_basis():
    # x_i x_j = q x_j x_i as operators, checked on every truncated basis vector
    for q in (0.3, 0.6):
        for n in (2, 3):
            tr = fock.FockTruncation(n, q, 3, reach=2)
            coords = QPolynomial.coordinates(n, q)
            for k in qc.multi_indices(n, 3):
                e_k = {k: 1.0}
                for i in range(n):
                    for j in range(i + 1, n):
                        lhs = fock.fock_apply(coords[i], fock.fock_apply(coords[j], e_k, tr), tr)
                        rhs = fock.fock_apply(coords[j], fock.fock_apply(coords[i], e_k, tr), tr)
                        keys = set(lhs) | set(rhs)
                        for key in keys:
                            assert lhs.get(key, 0.0) == pytest.approx(
                                q * rhs.get(key, 0.0), abs=1e-12)


def test_vacuum_image_examples():
    assert fock.vacuum_image((1, 1), 0.5) == pytest.approx(0.375, rel=1e-12)
    # single variable: no tail phase
    for m in range(6):
        q = 0.5
        expected = math.sqrt(qc.q_factorial(m, q * q).real) * (1 - q * q) ** (m / 2.0)
        assert fock.vacuum_image((m,), q) == pytest.approx(expected, rel=1e-12)


def test_vacuum_image_matches_composition():
    for q in (0.3, 0.5, 0.8):
        for n in (1, 2, 3):
            for k in qc.multi_indices(n, 5):
                tr = fock.FockTruncation(n, q, 0, reach=sum(k))
                mono = QPolynomial.monomial(n, q, k)
                image = fock.fock_apply(mono, {(0,) * n: 1.0}, tr)
                assert set(image) <= {tuple(k)}
                assert image.get(tuple(k), 0.0) == pytest.approx(
                    fock.vacuum_image(k, q), rel=1e-12)


def test_identity_acts_trivially():
    tr = fock.FockTruncation(2, 0.5, 2, reach=0)
    v = {(1, 0): 0.3, (0, 2): -0.7j}
    out = fock.fock_apply(QPolynomial.one(2, 0.5), v, tr)
    for key in set(v) | set(out):
        assert out.get(key, 0.0) == pytest.approx(v.get(key, 0.0))


def test_op_norm_bounds_examples():
    x = QPolynomial.monomial(1, 0.5, (1,))
    bounds = fock.op_norm_bounds(x, 0.5, 1.0, 5)
    assert bounds.lower == pytest.approx(math.sqrt(1 - 0.5 ** 12), rel=1e-12)
    assert bounds.upper == pytest.approx(1.0)
    one = QPolynomial.one(2, 0.5)
    b1 = fock.op_norm_bounds(one, 0.5, 1.0, 3)
    assert b1.lower == pytest.approx(1.0, rel=1e-12)
    assert b1.upper == pytest.approx(1.0)
    assert b1.vacuum == pytest.approx(1.0)
    pair = QPolynomial.monomial(2, 0.5, (1, 1))
    b2 = fock.op_norm_bounds(pair, 0.5, 1.0, 4)
    assert b2.vacuum == pytest.approx(0.375, rel=1e-12)
    assert b2.lower >= 0.375 - 1e-12


def test_generator_norm_limit():
    x = QPolynomial.monomial(1, 0.5, (1,))
    bounds = fock.op_norm_bounds(x, 0.5, 1.0, 20)
    assert bounds.lower >= 1.0 - 1e-10
    assert bounds.lower <= 1.0 + 1e-12


def test_lower_bounds_monotone_in_degree():
    rng = Random("fock-mono")
    for _ in range(10):
        n = 1 + rng.randrange(2)
        q = (0.3, 0.7)[rng.randrange(2)]
        a = randgen.random_qpoly(rng, n, q, max_degree=2, terms=4)
        lowers = [fock.op_norm_bounds(a, q, 1.0, d).lower for d in range(2, 11)]
        for lo, hi in zip(lowers, lowers[1:]):
            assert lo <= hi + 1e-12


def test_vaksman_sandwich_random():
    rng = Random("vaksman")
    for i in range(30):
        q = (0.3, 0.5, 0.8)[i % 3]
        rho = (0.5, 1.0)[i % 2]
        a = randgen.random_qpoly(rng, 2, q, max_degree=3, terms=5)
        report = fock.vaksman_sandwich_check(a, q, rho, 5)
        assert report["identity_error"] <= 1e-12
        assert report["lower_slack"] >= -1e-10 * report["bounds"].upper
        assert report["vacuum_slack"] >= -1e-12 * max(report["bounds"].vacuum, 1.0)


def test_q_outside_range_rejected():
    a = QPolynomial.monomial(1, 0.5, (1,))
    with pytest.raises(ValueError):
        fock.op_norm_bounds(a, 1.5, 1.0, 4)
