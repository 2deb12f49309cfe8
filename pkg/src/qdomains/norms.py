"""Weighted power-series norms for all element types, the clipped Laurent
exponent omega(k, p), the scale-comparison constants, and the classical
ball sup coefficients.

Norms are exact finite sums over term supports.  Weights are produced in
the log domain and the terms are accumulated in a fixed sorted order so
reports are reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from qdomains import _mutate
from qdomains import qcombinat as qc
from qdomains.deform_types import HSeriesElement
from qdomains.elements import FreeElement, LaurentElement, QPolynomial
from qdomains.qcombinat import QParam, as_qparam

__all__ = [
    "FAMILIES",
    "POLYDISK_L1",
    "POLYDISK_L2",
    "BALL",
    "CLASSICAL_BALL",
    "FREE_TAYLOR",
    "FREE_POLYDISK",
    "FREE_BALL_BULLET",
    "FREE_BALL_CIRC",
    "LAURENT",
    "FORMAL",
    "NormSpec",
    "norm",
    "monomial_log_norm",
    "omega",
    "lambda_p_compare",
    "classical_ball_sup_coeff",
]

POLYDISK_L1 = "polydisk-l1"
POLYDISK_L2 = "polydisk-l2"
BALL = "ball"
CLASSICAL_BALL = "classical-ball"
FREE_TAYLOR = "free-taylor"
FREE_POLYDISK = "free-polydisk"
FREE_BALL_BULLET = "free-ball-bullet"
FREE_BALL_CIRC = "free-ball-circ"
LAURENT = "laurent"
FORMAL = "formal"

FAMILIES = frozenset({
    POLYDISK_L1, POLYDISK_L2, BALL, CLASSICAL_BALL,
    FREE_TAYLOR, FREE_POLYDISK, FREE_BALL_BULLET, FREE_BALL_CIRC,
    LAURENT, FORMAL,
})

_QPOLY_FAMILIES = frozenset({POLYDISK_L1, POLYDISK_L2, BALL, CLASSICAL_BALL})
_FREE_FAMILIES = frozenset({FREE_TAYLOR, FREE_POLYDISK, FREE_BALL_BULLET, FREE_BALL_CIRC})


@dataclass(frozen=True)
class NormSpec:
    """Selects one norm family with its parameters.

    rho applies to every family; tau to free-polydisk and laurent; order
    (the truncation N) to formal.  q, when given, is cross-checked against
    the q carried by the measured element.
    """

    family: str
    rho: float
    tau: float = 1.0
    order: int = 0
    q: QParam | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown norm family {self.family!r}")
        if not self.rho > 0:
            raise ValueError("rho must be positive")
        if self.tau < 1:
            raise ValueError("tau must be at least 1")
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        if self.q is not None and not isinstance(self.q, QParam):
            object.__setattr__(self, "q", as_qparam(self.q))

    def with_rho(self, rho: float) -> "NormSpec":
        return NormSpec(self.family, rho, self.tau, self.order, self.q)


def _check_q(spec: NormSpec, q: QParam):
    if spec.q is not None and not spec.q.isclose(q):
        raise ValueError("norm spec q does not match the element's q")


def monomial_log_norm(k: Sequence[int], family: str, rho: float, q) -> float:
    """log of the monomial norm ||x^k|| for the q-polynomial families."""
    base = sum(k) * math.log(rho)
    if family in (POLYDISK_L1, POLYDISK_L2):
        return base + qc.weight_polydisk_log(k, q)
    if family == BALL:
        return base + qc.weight_ball_log(k, q)
    if family == CLASSICAL_BALL:
        return base + 0.5 * (sum(math.lgamma(m + 1) for m in k) - math.lgamma(sum(k) + 1))
    raise ValueError(f"{family!r} is not a q-polynomial family")


def _qpoly_norm(a: QPolynomial, spec: NormSpec) -> float:
    _check_q(spec, a.q)
    if spec.family == POLYDISK_L2:
        acc = 0.0
        for k, c in a.sorted_terms():
            acc += abs(c) ** 2 * math.exp(2.0 * monomial_log_norm(k, spec.family, spec.rho, a.q))
        return math.sqrt(acc)
    acc = 0.0
    for k, c in a.sorted_terms():
        acc += abs(c) * math.exp(monomial_log_norm(k, spec.family, spec.rho, a.q))
    return acc


def _free_norm(a: FreeElement, spec: NormSpec) -> float:
    rho, tau = spec.rho, spec.tau
    if spec.family == FREE_TAYLOR:
        return sum(abs(c) * rho ** len(alpha) for alpha, c in a.sorted_terms())
    if spec.family == FREE_POLYDISK:
        return sum(abs(c) * rho ** len(alpha) * tau ** (qc.switch_count(alpha) + 1)
                   for alpha, c in a.sorted_terms())
    if spec.family == FREE_BALL_BULLET:
        by_degree: dict = {}
        for alpha, c in a.terms.items():
            d = len(alpha)
            by_degree[d] = by_degree.get(d, 0.0) + abs(c) ** 2
        return sum(math.sqrt(by_degree[d]) * rho ** d for d in sorted(by_degree))
    if spec.family == FREE_BALL_CIRC:
        by_profile: dict = {}
        for alpha, c in a.terms.items():
            k = qc.word_profile(alpha, a.n)
            by_profile[k] = by_profile.get(k, 0.0) + abs(c) ** 2
        return sum(math.sqrt(by_profile[k]) * rho ** sum(k)
                   for k in sorted(by_profile, key=lambda k: (sum(k), k)))
    raise ValueError(f"{spec.family!r} is not a free-algebra family")


def _laurent_norm(a: LaurentElement, spec: NormSpec) -> float:
    rho, tau = spec.rho, spec.tau
    return sum(abs(c) * rho ** sum(k) * tau ** abs(omega(k, p))
               for (k, p), c in a.sorted_terms())


def _hseries_norm(a: HSeriesElement, spec: NormSpec) -> float:
    acc = 0.0
    for (p, k), c in a.sorted_terms():
        if p <= spec.order:
            acc += abs(c) * spec.rho ** sum(k)
    return acc


def norm(a, spec: NormSpec) -> float:
    """Evaluate the selected norm; the element type must match the family."""
    if isinstance(a, QPolynomial):
        if spec.family not in _QPOLY_FAMILIES:
            raise TypeError(f"family {spec.family!r} does not apply to QPolynomial")
        return _qpoly_norm(a, spec)
    if isinstance(a, FreeElement):
        if spec.family not in _FREE_FAMILIES:
            raise TypeError(f"family {spec.family!r} does not apply to FreeElement")
        return _free_norm(a, spec)
    if isinstance(a, LaurentElement):
        if spec.family != LAURENT:
            raise TypeError(f"family {spec.family!r} does not apply to LaurentElement")
        return _laurent_norm(a, spec)
    if isinstance(a, HSeriesElement):
        if spec.family != FORMAL:
            raise TypeError(f"family {spec.family!r} does not apply to HSeriesElement")
        return _hseries_norm(a, spec)
    raise TypeError(f"cannot take a norm of {type(a).__name__}")


# ---------------------------------------------------------------------------
# the clipped z-exponent

def omega(k: Sequence[int], p: int):
    """Distance-clipped z-exponent: p, 0, or p + cross_degree(k).

    |omega(k, p)| equals the distance from 0 to the integer interval
    [p, p + cross_degree(k)].
    """
    s = qc.cross_degree(k)
    if p >= 0:
        value = p
    elif p + s >= 0:
        value = 0
    else:
        value = p + s
    return _mutate.scale("omega", value)


# ---------------------------------------------------------------------------
# scale comparison for l^p coefficient norms

def _family_lp_norm(weights: Mapping[tuple, float], p, rho: float) -> float:
    if p == math.inf:
        return max((w * rho ** sum(k) for k, w in weights.items()), default=0.0)
    return sum((w * rho ** sum(k)) ** p for k, w in weights.items()) ** (1.0 / p)


def lambda_p_compare(weights: Mapping[tuple, float], p, s, rho: float, tau: float):
    """Check the two-sided comparison between l^p and l^s coefficient norms.

    For p < s and 0 < rho < tau the l^s norm at rho is dominated by the
    l^p norm at rho, which in turn is bounded by C times the l^s norm at
    tau, C = (tau^l / (tau^l - rho^l))^(n/l) with l = (1/p - 1/s)^(-1).
    Returns (bound_holds, C).
    """
    if not 0 < rho < tau:
        raise ValueError("need 0 < rho < tau")
    allowed = (1, 2, math.inf)
    if p not in allowed or s not in allowed or not p < s:
        raise ValueError("need p < s with p, s in {1, 2, inf}")
    if any(w < 0 for w in weights.values()):
        raise ValueError("weights must be nonnegative")
    dims = {len(k) for k in weights}
    if len(dims) != 1:
        raise ValueError("weight family must have a single dimension")
    n = dims.pop()
    inv_s = 0.0 if s == math.inf else 1.0 / s
    ell = 1.0 / (1.0 / p - inv_s)
    constant = (tau ** ell / (tau ** ell - rho ** ell)) ** (n / ell)
    ns_rho = _family_lp_norm(weights, s, rho)
    np_rho = _family_lp_norm(weights, p, rho)
    ns_tau = _family_lp_norm(weights, s, tau)
    slack = 1e-12
    holds = (ns_rho <= np_rho * (1 + slack) + slack
             and np_rho <= constant * ns_tau * (1 + slack) + slack)
    return holds, constant


# ---------------------------------------------------------------------------
# classical ball sup coefficients

def classical_ball_sup_coeff(k: Sequence[int], r: float) -> float:
    """sup of |z^k| over the ball of radius r: (k^k / |k|^{|k|})^(1/2) r^{|k|}.

    Convention 0^0 = 1; zero entries contribute nothing.
    """
    if r <= 0:
        raise ValueError("radius must be positive")
    total = sum(k)
    if total == 0:
        return 1.0
    log_val = sum(m * math.log(m) for m in k if m > 0) - total * math.log(total)
    return math.exp(0.5 * log_val + total * math.log(r))
