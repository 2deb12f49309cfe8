import cmath
import math
from random import Random

import pytest

from qdomains import qcombinat as qc
from qdomains import randgen
from qdomains.elements import (
    FreeElement,
    LaurentElement,
    QPolynomial,
    ball_lift,
    fiber_eval,
    free_mul,
    homogeneous_component,
    laurent_mul,
    laurent_word,
    normal_order,
    polydisk_lift,
    qpoly_mul,
    tau_flip,
)

from oracles import rewrite_normal_order


def x_mono(n, q, k, c=1.0):
    return QPolynomial.monomial(n, q, k, c)


def test_qpoly_mul_monomial_rule():
    q = 0.5
    x1, x2 = QPolynomial.coordinates(2, q)
    prod = qpoly_mul(x2, x1)
    assert dict(prod.terms) == {(1, 1): pytest.approx(1 / q)}


def test_qpoly_mul_unit_and_square():
    q = 0.5
    one = QPolynomial.one(2, q)
    x1, x2 = QPolynomial.coordinates(2, q)
    a = x1 + 2.0 * x2
    assert qpoly_mul(one, a).allclose(a)
    s = x1 + x2
    sq = qpoly_mul(s, s)
    assert dict(sq.terms) == {(2, 0): pytest.approx(1.0), (1, 1): pytest.approx(3.0),
                              (0, 2): pytest.approx(1.0)}


def test_qpoly_mul_associativity_random():
    rng = Random("assoc")
    for _ in range(500):
        q = (0.5, 2.0, cmath.exp(0.9j))[rng.randrange(3)]
        a = randgen.random_qpoly(rng, 2, q, max_degree=5, terms=4)
        b = randgen.random_qpoly(rng, 2, q, max_degree=5, terms=4)
        c = randgen.random_qpoly(rng, 2, q, max_degree=5, terms=4)
        left = qpoly_mul(qpoly_mul(a, b), c)
        right = qpoly_mul(a, qpoly_mul(b, c))
        keys = set(left.terms) | set(right.terms)
        scale = max((abs(v) for v in left.terms.values()), default=1.0)
        for key in keys:
            assert abs(left.terms.get(key, 0.0) - right.terms.get(key, 0.0)) <= 1e-9 * max(scale, 1.0)


def test_qpoly_mul_degree_cap_and_mismatch():
    q = 0.5
    x1, x2 = QPolynomial.coordinates(2, q)
    capped = qpoly_mul(qpoly_mul(x1, x1), x2, degree_cap=2)
    assert dict(capped.terms) == {}
    with pytest.raises(ValueError):
        qpoly_mul(x1, QPolynomial.monomial(2, 0.7, (1, 0)))
    with pytest.raises(ValueError):
        qpoly_mul(x1, QPolynomial.monomial(3, q, (1, 0, 0)))


def test_free_mul_examples():
    z1, z2 = FreeElement.generators(2)
    assert dict(free_mul(z1, z2).terms) == {(1, 2): pytest.approx(1.0)}
    a = z1 + z2
    assert free_mul(FreeElement.one(2), a).allclose(a)
    prod = free_mul(a, z2)
    assert dict(prod.terms) == {(1, 2): pytest.approx(1.0), (2, 2): pytest.approx(1.0)}


def test_normal_order_examples():
    q = 0.5
    no = normal_order(FreeElement.word(2, (2, 1)), q)
    assert dict(no.terms) == {(1, 1): pytest.approx(1 / q)}
    assert dict(normal_order(FreeElement.word(2, (1, 1, 2)), q).terms) == {
        (2, 1): pytest.approx(1.0)}
    assert dict(normal_order(FreeElement.word(2, (2, 1, 2, 1)), q).terms) == {
        (2, 2): pytest.approx(8.0)}


def test_normal_order_matches_rewriting_oracle():
    for q in (0.5, 2.0, cmath.exp(1j * math.pi / 3)):
        for alpha in qc.words(3, 5):
            image = normal_order(FreeElement.word(3, alpha), q)
            coeff, sorted_word = rewrite_normal_order(alpha, q)
            key = qc.word_profile(sorted_word, 3)
            assert set(image.terms) == ({key} if abs(coeff) > 1e-12 else set())
            assert image.terms[key] == pytest.approx(coeff, rel=1e-10)


def test_normal_order_multiplicative():
    rng = Random("no-mult")
    for _ in range(300):
        q = (0.5, 2.0, cmath.exp(0.4j))[rng.randrange(3)]
        f = randgen.random_free(rng, 2, max_len=3, terms=4)
        g = randgen.random_free(rng, 2, max_len=3, terms=4)
        lhs = normal_order(free_mul(f, g), q)
        rhs = qpoly_mul(normal_order(f, q), normal_order(g, q))
        assert lhs.allclose(rhs, tol=1e-9)


def test_tau_flip_examples():
    q = 0.5
    n = 3
    flipped = tau_flip(QPolynomial.monomial(n, q, (1, 0, 0)))
    assert dict(flipped.terms) == {(0, 0, 1): pytest.approx(1.0)}
    assert flipped.q.value == pytest.approx(2.0)
    two = tau_flip(QPolynomial.monomial(2, q, (1, 1)))
    assert dict(two.terms) == {(1, 1): pytest.approx(0.5)}


def test_tau_flip_involution():
    rng = Random("flip")
    for _ in range(50):
        q = (0.5, 2.0, cmath.exp(0.8j))[rng.randrange(3)]
        a = randgen.random_qpoly(rng, 3, q, max_degree=4, terms=5)
        assert tau_flip(tau_flip(a)).allclose(a, tol=1e-10)


def test_tau_flip_is_homomorphism():
    rng = Random("flip-hom")
    for _ in range(50):
        q = (0.5, cmath.exp(0.3j))[rng.randrange(2)]
        a = randgen.random_qpoly(rng, 2, q, max_degree=3, terms=4)
        b = randgen.random_qpoly(rng, 2, q, max_degree=3, terms=4)
        assert tau_flip(qpoly_mul(a, b)).allclose(
            qpoly_mul(tau_flip(a), tau_flip(b)), tol=1e-9)


def test_polydisk_lift_examples():
    unimodular = cmath.exp(0.3j)
    lift = polydisk_lift((1, 1), unimodular)
    assert set(lift.terms) == {(1, 2)}
    half = polydisk_lift((1, 1), 0.5)
    assert dict(half.terms) == {(2, 1): pytest.approx(0.5)}
    assert dict(polydisk_lift((2, 0), 0.5).terms) == {(1, 1): pytest.approx(1.0)}


def test_polydisk_lift_normal_orders_to_monomial():
    for q in (0.5, 2.0, cmath.exp(0.6j)):
        for n in (1, 2, 3):
            for k in qc.multi_indices(n, 5):
                image = normal_order(polydisk_lift(k, q), q)
                assert image.allclose(QPolynomial.monomial(n, q, k), tol=1e-10)


def test_ball_lift_example_and_identity():
    lift = ball_lift((1, 1), 0.5)
    assert dict(lift.terms) == {(1, 2): pytest.approx(0.2), (2, 1): pytest.approx(0.4)}
    for q in (0.5, 2.0, cmath.exp(0.6j)):
        for n in (1, 2, 3):
            for k in qc.multi_indices(n, 5):
                image = normal_order(ball_lift(k, q), q)
                assert image.allclose(QPolynomial.monomial(n, q, k), tol=1e-10)
    axis = ball_lift((3, 0), 0.5)
    assert dict(axis.terms) == {(1, 1, 1): pytest.approx(1.0)}


def test_laurent_mul_examples():
    n = 2
    a = laurent_mul(LaurentElement.generator(n, 2), LaurentElement.generator(n, 1))
    assert dict(a.terms) == {((1, 1), -1): pytest.approx(1.0)}
    unit = laurent_mul(LaurentElement.z_power(n, 1), LaurentElement.z_power(n, -1))
    assert dict(unit.terms) == {((0, 0), 0): pytest.approx(1.0)}
    b = laurent_mul(LaurentElement.monomial(n, (1, 0), 2), LaurentElement.monomial(n, (0, 1), -1))
    assert dict(b.terms) == {((1, 1), 1): pytest.approx(1.0)}


def test_laurent_word_identity():
    for n in (1, 2, 3):
        for alpha in qc.words(n, 5):
            built = laurent_word(n, alpha)
            expected = LaurentElement.monomial(n, qc.word_profile(alpha, n),
                                               -qc.inversions(alpha))
            assert built == expected


def test_fiber_eval_examples():
    n = 2
    q0 = 0.7
    vanishing = LaurentElement.z_power(n, 1) - q0 * LaurentElement.one(n)
    assert dict(fiber_eval(vanishing, q0).terms) == {}
    doubled = fiber_eval(LaurentElement.monomial(n, (1, 1), -1), 0.5)
    assert dict(doubled.terms) == {(1, 1): pytest.approx(2.0)}
    with pytest.raises(ValueError):
        fiber_eval(LaurentElement.one(n), 0.0)


def test_fiber_eval_is_multiplicative():
    rng = Random("fiber")
    for _ in range(200):
        q = (0.5, 2.0, cmath.exp(0.5j))[rng.randrange(3)]
        a = randgen.random_laurent(rng, 2, terms=4)
        b = randgen.random_laurent(rng, 2, terms=4)
        lhs = fiber_eval(laurent_mul(a, b), q)
        rhs = qpoly_mul(fiber_eval(a, q), fiber_eval(b, q))
        keys = set(lhs.terms) | set(rhs.terms)
        scale = max([abs(v) for v in lhs.terms.values()] + [1.0])
        for key in keys:
            assert abs(lhs.terms.get(key, 0.0) - rhs.terms.get(key, 0.0)) <= 1e-10 * scale


def test_homogeneous_component():
    q = 0.5
    a = (QPolynomial.one(2, q) + QPolynomial.monomial(2, q, (1, 0))
         + QPolynomial.monomial(2, q, (1, 1)))
    assert dict(homogeneous_component(a, 1).terms) == {(1, 0): pytest.approx(1.0)}
    assert dict(homogeneous_component(a, 7).terms) == {}
    total = (homogeneous_component(a, 0) + homogeneous_component(a, 1)
             + homogeneous_component(a, 2))
    assert total.allclose(a)


def test_component_of_product_identity():
    rng = Random("components")
    for _ in range(100):
        q = (0.5, cmath.exp(1.1j))[rng.randrange(2)]
        a = randgen.random_qpoly(rng, 2, q, max_degree=3, terms=4)
        b = randgen.random_qpoly(rng, 2, q, max_degree=3, terms=4)
        prod = qpoly_mul(a, b)
        for ell in range(7):
            direct = homogeneous_component(prod, ell)
            assembled = QPolynomial.zero(2, q)
            for i in range(ell + 1):
                assembled = assembled + qpoly_mul(homogeneous_component(a, i),
                                                  homogeneous_component(b, ell - i))
            assert direct.allclose(assembled, tol=1e-10)


def test_element_validation_and_immutability():
    with pytest.raises(ValueError):
        QPolynomial(2, 0.5, {(1,): 1.0})
    with pytest.raises(ValueError):
        FreeElement(2, {(3,): 1.0})
    with pytest.raises(ValueError):
        LaurentElement(2, {((1, -1), 0): 1.0})
    a = QPolynomial.one(2, 0.5)
    with pytest.raises(AttributeError):
        a.n = 3
    pruned = QPolynomial(2, 0.5, {(1, 0): 1e-15})
    assert dict(pruned.terms) == {}
