"""Deformation layer: the truncated star product, the Poisson bracket it
quantizes, the Rieffel compatibility defect, the formal ball lift, and
fiber-norm scans over the deformation parameter.

Every exponential e^{ith} is a degree-N Taylor truncation with exactly
tracked order; evaluation at a numeric h lands in the fiber algebra at
q = exp(ih).
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple, Sequence

from qdomains import _mutate
from qdomains import qcombinat as qc
from qdomains.deform_types import FormalFreeElement, HSeriesElement
from qdomains.elements import LaurentElement, QPolynomial, fiber_eval, qpoly_mul
from qdomains.norms import BALL, POLYDISK_L1, NormSpec, norm
from qdomains.qcombinat import sigma

__all__ = [
    "sigma",
    "HSeriesElement",
    "FormalFreeElement",
    "star_product",
    "evaluate_h",
    "poisson_bracket",
    "phi_defect_coefficient",
    "quantization_defect",
    "commutator_defect",
    "formal_ball_lift",
    "normal_order_formal",
    "ScanResult",
    "bundle_scan",
    "circle_path",
    "ray_path",
]


def _phase_taylor(exponent: int, order: int) -> list:
    # Taylor coefficients of e^{-i*exponent*h} through h^order
    coeffs = [1.0 + 0.0j]
    for j in range(1, order + 1):
        coeffs.append(coeffs[-1] * (-1j * exponent) / j)
    if exponent != 0:
        coeffs = [_mutate.scale("star-phase", c) for c in coeffs]
    return coeffs


def star_product(f: HSeriesElement, g: HSeriesElement, order: int | None = None,
                 degree_cap: int | None = None) -> HSeriesElement:
    """Monomial rule x^k * x^l = Taylor_N(e^{-ih sigma(l,k)}) x^{k+l},
    extended bilinearly over the h-truncated coefficients."""
    if f.n != g.n:
        raise ValueError("dimension mismatch")
    if order is None:
        order = min(f.order, g.order)
    out: dict = {}
    for (p1, k), a in f.terms.items():
        if p1 > order:
            continue
        for (p2, l), b in g.terms.items():
            if p1 + p2 > order:
                continue
            key_k = tuple(ki + li for ki, li in zip(k, l))
            if degree_cap is not None and sum(key_k) > degree_cap:
                continue
            phases = _phase_taylor(sigma(l, k), order - p1 - p2)
            ab = a * b
            for j, phase in enumerate(phases):
                key = (p1 + p2 + j, key_k)
                out[key] = out.get(key, 0.0) + ab * phase
    return HSeriesElement(f.n, order, out)


def evaluate_h(f: HSeriesElement, h: float) -> QPolynomial:
    """Substitute the numeric h, landing in the fiber algebra at q = exp(ih)."""
    out: dict = {}
    for (p, k), c in f.terms.items():
        out[k] = out.get(k, 0.0) + c * h ** p
    return QPolynomial(f.n, cmath.exp(1j * h), out)


def poisson_bracket(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    """{x^k, x^l} = (sigma(k,l) - sigma(l,k)) x^{k+l} on commutative inputs."""
    f._check_compatible(g)
    if abs(f.q.value - 1.0) > 1e-12:
        raise ValueError("the Poisson bracket lives on the commutative fiber q = 1")
    out: dict = {}
    for k, a in f.terms.items():
        for l, b in g.terms.items():
            factor = sigma(k, l) - sigma(l, k)
            if factor == 0:
                continue
            key = tuple(ki + li for ki, li in zip(k, l))
            out[key] = out.get(key, 0.0) + a * b * factor
    return QPolynomial(f.n, f.q, out)


def phi_defect_coefficient(k: Sequence[int], l: Sequence[int], h: float) -> complex:
    """(e^{-ih sigma(l,k)} - e^{-ih sigma(k,l)})/h - i (sigma(k,l) - sigma(l,k))."""
    s_kl = sigma(k, l)
    s_lk = sigma(l, k)
    return ((cmath.exp(-1j * h * s_lk) - cmath.exp(-1j * h * s_kl)) / h
            - 1j * (s_kl - s_lk))


def quantization_defect(f: QPolynomial, g: QPolynomial, h: float,
                        spec: NormSpec) -> float:
    """|| (f_h g_h - g_h f_h)/h - i {f,g}_h || in the fiber at q = exp(ih).

    f and g are commutative polynomials (q = 1); the caller's spec selects
    the family and rho, and its q (if any) is replaced by exp(ih).
    """
    if h == 0:
        raise ValueError("the defect is a difference quotient; h must be nonzero")
    f._check_compatible(g)
    q_h = cmath.exp(1j * h)
    out: dict = {}
    for k, a in f.terms.items():
        for l, b in g.terms.items():
            key = tuple(ki + li for ki, li in zip(k, l))
            out[key] = out.get(key, 0.0) + a * b * phi_defect_coefficient(k, l, h)
    defect = QPolynomial(f.n, q_h, out)
    fiber_spec = NormSpec(spec.family, spec.rho, spec.tau, spec.order, None)
    return norm(defect, fiber_spec)


def commutator_defect(f: QPolynomial, g: QPolynomial, h: float,
                      spec: NormSpec) -> float:
    """Same defect evaluated the direct way: fiber products at q = exp(ih)."""
    if h == 0:
        raise ValueError("h must be nonzero")
    q_h = cmath.exp(1j * h)
    f_h = QPolynomial(f.n, q_h, dict(f.terms))
    g_h = QPolynomial(g.n, q_h, dict(g.terms))
    bracket = poisson_bracket(f, g)
    bracket_h = QPolynomial(f.n, q_h, dict(bracket.terms))
    diff = (1.0 / h) * (qpoly_mul(f_h, g_h) - qpoly_mul(g_h, f_h)) - 1j * bracket_h
    fiber_spec = NormSpec(spec.family, spec.rho, spec.tau, spec.order, None)
    return norm(diff, fiber_spec)


# ---------------------------------------------------------------------------
# the formal ball lift

def formal_ball_lift(k: Sequence[int], order: int, cap: int = 10 ** 6) -> FormalFreeElement:
    """u_k = (k!/|k|!) sum_alpha e^{i m(alpha) h} zeta_alpha, Taylor-truncated.

    Its truncated normal ordering returns x^k exactly through h^order, and
    the h^s coefficient has circ norm at most |k|^{2s} (k!/|k|!)^{1/2}."""
    k = tuple(int(m) for m in k)
    n = len(k)
    words = qc.fiber_words(k, cap)
    weight = 1.0 / qc.fiber_count(k)
    terms: dict = {}
    for alpha in words:
        m = qc.inversions(alpha)
        coeff = complex(weight)
        terms[(0, alpha)] = coeff
        for p in range(1, order + 1):
            coeff = coeff * (1j * m) / p
            terms[(p, alpha)] = coeff
    return FormalFreeElement(n, order, terms)


def normal_order_formal(u: FormalFreeElement, order: int | None = None) -> HSeriesElement:
    """Truncated normal ordering at q = e^{ih}: each word picks up the
    Taylor expansion of e^{-i m(alpha) h}."""
    if order is None:
        order = u.order
    out: dict = {}
    for (p, alpha), c in u.terms.items():
        if p > order:
            continue
        k = qc.word_profile(alpha, u.n)
        phases = _phase_taylor_plain(-qc.inversions(alpha), order - p)
        for j, phase in enumerate(phases):
            key = (p + j, k)
            out[key] = out.get(key, 0.0) + c * phase
    return HSeriesElement(u.n, order, out)


def _phase_taylor_plain(exponent: int, order: int) -> list:
    # Taylor of e^{i*exponent*h}; separate from the star-product hook
    coeffs = [1.0 + 0.0j]
    for j in range(1, order + 1):
        coeffs.append(coeffs[-1] * (1j * exponent) / j)
    return coeffs


# ---------------------------------------------------------------------------
# fiber-norm scans

class ScanResult(NamedTuple):
    rows: list            # (q, norm) in path order
    max_jump: float       # largest |norm_{i+1} - norm_i|
    max_slope: float      # largest jump / parameter spacing
    spacing: float        # largest |q_{i+1} - q_i|


def bundle_scan(a: LaurentElement, family: str, rho: float,
                samples: Sequence[complex]) -> ScanResult:
    """Evaluate q -> ||a_q|| along a sample path and report the jumps.

    The continuity diagnostic is descriptive: the maximum adjacent-sample
    jump and its ratio to the parameter spacing."""
    if family not in (POLYDISK_L1, BALL):
        raise ValueError("scan families are polydisk-l1 and ball")
    rows = []
    for q in samples:
        q = complex(q)
        if q == 0:
            raise ValueError("samples must be nonzero")
        value = norm(fiber_eval(a, q), NormSpec(family, rho))
        rows.append((q, value))
    max_jump = 0.0
    max_slope = 0.0
    spacing = 0.0
    for (q0, v0), (q1, v1) in zip(rows, rows[1:]):
        gap = abs(q1 - q0)
        jump = abs(v1 - v0)
        max_jump = max(max_jump, jump)
        spacing = max(spacing, gap)
        if gap > 0:
            max_slope = max(max_slope, jump / gap)
    return ScanResult(rows, max_jump, max_slope, spacing)


def circle_path(radius: float, samples: int) -> list:
    """samples points on |q| = radius, full turn, starting at arg 0."""
    if radius <= 0:
        raise ValueError("circle radius must be positive")
    return [radius * cmath.exp(2j * math.pi * i / samples) for i in range(samples)]


def ray_path(theta: float, samples: int, r_min: float = 0.5, r_max: float = 2.0) -> list:
    """samples points on arg q = theta, geometric radii from r_min to r_max."""
    if not 0 < r_min < r_max:
        raise ValueError("need 0 < r_min < r_max")
    step = (r_max / r_min) ** (1.0 / (samples - 1)) if samples > 1 else 1.0
    return [r_min * step ** i * cmath.exp(1j * theta) for i in range(samples)]
