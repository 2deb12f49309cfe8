"""Algebra elements: q-plane polynomials, free-algebra elements, and
Laurent-deformation elements, with their products and the lift maps.

All three types are immutable coefficient maps over exact combinatorial
keys.  Coefficients are double-precision complex; terms below the pruning
tolerance (1e-12, absolute) are dropped at construction.
"""

from __future__ import annotations

import math
from types import MappingProxyType
from typing import Mapping, Sequence

from qdomains import _mutate
from qdomains import qcombinat as qc
from qdomains.qcombinat import as_qparam

__all__ = [
    "QPolynomial",
    "FreeElement",
    "LaurentElement",
    "PRUNE_TOL",
    "qpoly_mul",
    "free_mul",
    "normal_order",
    "tau_flip",
    "polydisk_lift",
    "ball_lift",
    "laurent_mul",
    "fiber_eval",
    "homogeneous_component",
]

PRUNE_TOL = 1e-12


def _prune(terms, tol):
    return {key: complex(c) for key, c in terms.items() if abs(c) > tol}


class QPolynomial:
    """Finitely supported element of the q-plane coordinate ring.

    Multiplication is determined by x_i x_j = q x_j x_i for i < j; the
    basis keys are exponent vectors k with x^k = x_1^{k_1} ... x_n^{k_n}.
    """

    __slots__ = ("n", "q", "terms")

    def __init__(self, n: int, q, terms: Mapping, tol: float = PRUNE_TOL):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        qp = as_qparam(q)
        clean = {}
        for k, c in terms.items():
            key = tuple(int(m) for m in k)
            if len(key) != n or any(m < 0 for m in key):
                raise ValueError(f"bad exponent vector {k!r} for dimension {n}")
            if key in clean:
                raise ValueError(f"duplicate exponent vector {k!r}")
            clean[key] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", qp)
        object.__setattr__(self, "terms", MappingProxyType(_prune(clean, tol)))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls, n: int, q) -> "QPolynomial":
        return cls(n, q, {})

    @classmethod
    def one(cls, n: int, q) -> "QPolynomial":
        return cls(n, q, {(0,) * n: 1.0})

    @classmethod
    def monomial(cls, n: int, q, k: Sequence[int], c: complex = 1.0) -> "QPolynomial":
        return cls(n, q, {tuple(k): c})

    @classmethod
    def coordinates(cls, n: int, q) -> list:
        basis = []
        for i in range(n):
            k = [0] * n
            k[i] = 1
            basis.append(cls.monomial(n, q, k))
        return basis

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0.0) + c
        return QPolynomial(self.n, self.q, terms)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, QPolynomial):
            return qpoly_mul(self, other)
        return QPolynomial(self.n, self.q, {k: c * other for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __eq__(self, other):
        return (isinstance(other, QPolynomial) and self.n == other.n
                and self.q == other.q and dict(self.terms) == dict(other.terms))

    def __hash__(self):
        return hash((self.n, self.q, frozenset(self.terms.items())))

    def allclose(self, other, tol: float = PRUNE_TOL) -> bool:
        if not isinstance(other, QPolynomial) or self.n != other.n:
            return False
        if not self.q.isclose(other.q, tol):
            return False
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.terms.get(k, 0.0) - other.terms.get(k, 0.0)) <= tol for k in keys)

    def _check_compatible(self, other):
        if not isinstance(other, QPolynomial):
            raise TypeError("expected a QPolynomial")
        if self.n != other.n or self.q != other.q:
            raise ValueError("dimension or q mismatch")

    def __repr__(self):
        return f"QPolynomial(n={self.n}, q={self.q.value}, terms={len(self.terms)})"


class FreeElement:
    """Finitely supported element of the free algebra on n generators."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping, tol: float = PRUNE_TOL):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        clean = {}
        for alpha, c in terms.items():
            word = tuple(int(a) for a in alpha)
            if any(a < 1 or a > n for a in word):
                raise ValueError(f"bad word {alpha!r} for dimension {n}")
            if word in clean:
                raise ValueError(f"duplicate word {alpha!r}")
            clean[word] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", MappingProxyType(_prune(clean, tol)))

    def __setattr__(self, name, value):
        raise AttributeError("FreeElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "FreeElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "FreeElement":
        return cls(n, {(): 1.0})

    @classmethod
    def word(cls, n: int, alpha: Sequence[int], c: complex = 1.0) -> "FreeElement":
        return cls(n, {tuple(alpha): c})

    @classmethod
    def generators(cls, n: int) -> list:
        return [cls.word(n, (i,)) for i in range(1, n + 1)]

    def length(self) -> int:
        return max((len(a) for a in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0.0) + c
        return FreeElement(self.n, terms)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return free_mul(self, other)
        return FreeElement(self.n, {a: c * other for a, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __eq__(self, other):
        return (isinstance(other, FreeElement) and self.n == other.n
                and dict(self.terms) == dict(other.terms))

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def allclose(self, other, tol: float = PRUNE_TOL) -> bool:
        if not isinstance(other, FreeElement) or self.n != other.n:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.terms.get(a, 0.0) - other.terms.get(a, 0.0)) <= tol for a in keys)

    def _check_compatible(self, other):
        if not isinstance(other, FreeElement):
            raise TypeError("expected a FreeElement")
        if self.n != other.n:
            raise ValueError("dimension mismatch")

    def __repr__(self):
        return f"FreeElement(n={self.n}, terms={len(self.terms)})"


class LaurentElement:
    """Finitely supported element of the Laurent deformation ring.

    Basis keys are pairs (k, p) standing for x^k z^p, with the relations
    x_i x_j = z x_j x_i (i < j) and central invertible z.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping, tol: float = PRUNE_TOL):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        clean = {}
        for (k, p), c in terms.items():
            key = (tuple(int(m) for m in k), int(p))
            if len(key[0]) != n or any(m < 0 for m in key[0]):
                raise ValueError(f"bad exponent vector {k!r} for dimension {n}")
            if key in clean:
                raise ValueError(f"duplicate basis key {(k, p)!r}")
            clean[key] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", MappingProxyType(_prune(clean, tol)))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "LaurentElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "LaurentElement":
        return cls(n, {((0,) * n, 0): 1.0})

    @classmethod
    def monomial(cls, n: int, k: Sequence[int], p: int, c: complex = 1.0) -> "LaurentElement":
        return cls(n, {(tuple(k), p): c})

    @classmethod
    def generator(cls, n: int, i: int) -> "LaurentElement":
        k = [0] * n
        k[i - 1] = 1
        return cls.monomial(n, k, 0)

    @classmethod
    def z_power(cls, n: int, p: int) -> "LaurentElement":
        return cls.monomial(n, (0,) * n, p)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0][0]), item[0]))

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0.0) + c
        return LaurentElement(self.n, terms)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, LaurentElement):
            return laurent_mul(self, other)
        return LaurentElement(self.n, {key: c * other for key, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __eq__(self, other):
        return (isinstance(other, LaurentElement) and self.n == other.n
                and dict(self.terms) == dict(other.terms))

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def allclose(self, other, tol: float = PRUNE_TOL) -> bool:
        if not isinstance(other, LaurentElement) or self.n != other.n:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.terms.get(key, 0.0) - other.terms.get(key, 0.0)) <= tol for key in keys)

    def _check_compatible(self, other):
        if not isinstance(other, LaurentElement):
            raise TypeError("expected a LaurentElement")
        if self.n != other.n:
            raise ValueError("dimension mismatch")

    def __repr__(self):
        return f"LaurentElement(n={self.n}, terms={len(self.terms)})"


# ---------------------------------------------------------------------------
# products

def qpoly_mul(a: QPolynomial, b: QPolynomial, degree_cap: int | None = None) -> QPolynomial:
    """Bilinear product from the monomial rule x^k x^l = q^{-sigma(l,k)} x^{k+l}."""
    a._check_compatible(b)
    q = a.q.value
    out: dict = {}
    for k, ck in a.terms.items():
        for l, cl in b.terms.items():
            key = tuple(ki + li for ki, li in zip(k, l))
            if degree_cap is not None and sum(key) > degree_cap:
                continue
            coeff = ck * cl * q ** (-qc.sigma(l, k))
            out[key] = out.get(key, 0.0) + coeff
    return QPolynomial(a.n, a.q, out)


def free_mul(a: FreeElement, b: FreeElement, length_cap: int | None = None) -> FreeElement:
    """Concatenation product."""
    a._check_compatible(b)
    out: dict = {}
    for alpha, ca in a.terms.items():
        for beta, cb in b.terms.items():
            word = alpha + beta
            if length_cap is not None and len(word) > length_cap:
                continue
            out[word] = out.get(word, 0.0) + ca * cb
    return FreeElement(a.n, out)


def laurent_mul(a: LaurentElement, b: LaurentElement,
                degree_cap: int | None = None) -> LaurentElement:
    """Monomial rule x^k z^p . x^l z^s = x^{k+l} z^{p+s-sigma(l,k)}."""
    a._check_compatible(b)
    out: dict = {}
    for (k, p), ck in a.terms.items():
        for (l, s), cl in b.terms.items():
            knew = tuple(ki + li for ki, li in zip(k, l))
            if degree_cap is not None and sum(knew) > degree_cap:
                continue
            key = (knew, p + s - qc.sigma(l, k))
            out[key] = out.get(key, 0.0) + ck * cl
    return LaurentElement(a.n, out)


# ---------------------------------------------------------------------------
# structure maps

def normal_order(f: FreeElement, q) -> QPolynomial:
    """Push a free element onto the q-plane: zeta_alpha -> q^{-m(alpha)} x^{p(alpha)}."""
    qp = as_qparam(q)
    out: dict = {}
    for alpha, c in f.terms.items():
        k = qc.word_profile(alpha, f.n)
        phase = _mutate.scale("normal-order-phase", qp.value ** (-qc.inversions(alpha)))
        out[k] = out.get(k, 0.0) + c * phase
    return QPolynomial(f.n, qp, out)


def tau_flip(a: QPolynomial) -> QPolynomial:
    """Letter-reversal isomorphism onto the algebra with parameter 1/q.

    On monomials: x^k -> q^{cross_degree(k)} x^{reverse(k)}; applying it
    twice returns the original element.
    """
    q = a.q.value
    out: dict = {}
    for k, c in a.terms.items():
        out[tuple(reversed(k))] = c * q ** qc.cross_degree(k)
    return QPolynomial(a.n, a.q.inverse(), out)


def homogeneous_component(a: QPolynomial, i: int) -> QPolynomial:
    """The degree-i part: sum of c_k x^k over |k| = i."""
    if i < 0:
        raise ValueError("component index must be nonnegative")
    return QPolynomial(a.n, a.q, {k: c for k, c in a.terms.items() if sum(k) == i})


def fiber_eval(a: LaurentElement, q) -> QPolynomial:
    """Evaluate z -> q, landing in the q-plane algebra at parameter q."""
    qp = as_qparam(q)
    out: dict = {}
    for (k, p), c in a.terms.items():
        out[k] = out.get(k, 0.0) + c * qp.value ** p
    return QPolynomial(a.n, qp, out)


def laurent_word(n: int, alpha: Sequence[int]) -> LaurentElement:
    """x_alpha built by multiplying Laurent generators; equals x^{p(alpha)} z^{-m(alpha)}."""
    acc = LaurentElement.one(n)
    for a in alpha:
        acc = laurent_mul(acc, LaurentElement.generator(n, a))
    return acc


# ---------------------------------------------------------------------------
# optimal lifts

def polydisk_lift(k: Sequence[int], q, cap: int = 10 ** 6) -> FreeElement:
    """Single-word lift of x^k minimizing the Taylor free norm.

    Returns q^{m(a*)} zeta_{a*} where a* minimizes |q|^{m(alpha)} over the
    fiber (lexicographically smallest on ties); its normal ordering is x^k
    and its Taylor norm at any rho equals w_q(k) rho^{|k|}.
    """
    qp = as_qparam(q)
    k = tuple(int(m) for m in k)
    n = len(k)
    words = qc.fiber_words(k, cap)
    best = None
    best_m = 0
    for alpha in words:
        m = qc.inversions(alpha)
        value = m * qp.log_modulus
        if best is None or value < best[0] - 1e-15:
            best = (value, alpha)
            best_m = m
    assert best is not None
    return FreeElement.word(n, best[1], qp.value ** best_m)


def ball_lift(k: Sequence[int], q, cap: int = 10 ** 6) -> FreeElement:
    """Minimal-circ-norm lift a_k of x^k across the whole fiber.

    Coefficients c^0_alpha = |q|^{-2m(alpha)} / sum_beta |q|^{-2m(beta)};
    the element sum_alpha c^0_alpha q^{m(alpha)} zeta_alpha normal-orders
    to x^k and its circ norm at rho is exactly the ball monomial norm.
    """
    qp = as_qparam(q)
    k = tuple(int(m) for m in k)
    n = len(k)
    words = qc.fiber_words(k, cap)
    ms = [qc.inversions(alpha) for alpha in words]
    logs = [-2.0 * m * qp.log_modulus for m in ms]
    shift = max(logs)
    raw = [math.exp(v - shift) for v in logs]
    total = sum(raw)
    terms = {}
    for alpha, m, w in zip(words, ms, raw):
        terms[alpha] = (w / total) * qp.value ** m
    return FreeElement(n, terms)
