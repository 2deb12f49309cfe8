"""q-numbers, monomial weight functions, and word statistics.

Scalar layer shared by every other module.  Conventions fixed here:
[0]_q = 0 and [0]_q! = 1; exponents such as sum_{i<j} k_i*k_j and the
inversion number m(alpha) are exact integers, and |q|**N is evaluated in
the log domain so weights stay finite for N up to ~1e5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

from qdomains import _mutate
from qdomains._kernels import (
    fiber_inversions,
    fiber_words as _fiber_words_raw,
    inversions as _inversions,
    mahonian_sum,
    switch_count as _switch_count,
    word_profile as _word_profile,
)

__all__ = [
    "QParam",
    "EnumerationCapExceeded",
    "as_qparam",
    "q_int",
    "q_factorial",
    "log_q_factorial",
    "q_pochhammer_inf",
    "PochhammerValue",
    "weight_polydisk",
    "weight_polydisk_log",
    "weight_u",
    "weight_u_log",
    "weight_ball",
    "weight_ball_log",
    "weight_ball_alt",
    "weight_ball_alt_log",
    "word_profile",
    "fiber_count",
    "inversions",
    "switch_count",
    "delta_word",
    "fiber_words",
    "fiber_inversion_list",
    "inv_distribution",
    "InvDistribution",
    "word_with_inversions",
    "sigma",
    "cross_degree",
    "multi_indices",
    "multi_indices_exact",
    "words",
    "words_exact",
]


class EnumerationCapExceeded(ValueError):
    """A fiber or word enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class QParam:
    """Nonzero deformation parameter with cached |q| and log|q|.

    Magnitude-dependent weights use modulus only; the phase enters the
    algebra through integer powers q**N.
    """

    value: complex
    modulus: float = field(init=False, compare=False)
    log_modulus: float = field(init=False, compare=False)

    def __post_init__(self):
        value = complex(self.value)
        if value == 0:
            raise ValueError("deformation parameter q must be nonzero")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "modulus", abs(value))
        object.__setattr__(self, "log_modulus", math.log(abs(value)))

    def inverse(self) -> "QParam":
        return QParam(1.0 / self.value)

    def isclose(self, other: "QParam", tol: float = 1e-12) -> bool:
        return abs(self.value - other.value) <= tol * max(1.0, abs(self.value))


def as_qparam(q) -> QParam:
    if isinstance(q, QParam):
        return q
    return QParam(complex(q))


# ---------------------------------------------------------------------------
# q-integers and q-factorials

def q_int(k: int, q: complex) -> complex:
    """[k]_q = 1 + q + ... + q**(k-1); [0]_q = 0."""
    if k < 0:
        raise ValueError("q-integer index must be nonnegative")
    acc = 0.0 + 0.0j
    for _ in range(k):
        acc = acc * q + 1.0
    return acc


def q_factorial(k, q: complex) -> complex:
    """[k]_q! for a scalar k, or prod_i [k_i]_q! for an exponent vector."""
    if isinstance(k, (int,)):
        entries: Sequence[int] = (k,)
    else:
        entries = tuple(k)
    acc = 1.0 + 0.0j
    for m in entries:
        if m < 0:
            raise ValueError("q-factorial index must be nonnegative")
        for j in range(1, m + 1):
            acc *= q_int(j, q)
    return acc


@lru_cache(maxsize=None)
def _log_q_int(j: int, t: float) -> float:
    # log [j]_t for real t > 0; direct summation keeps full accuracy near
    # t = 1, the closed log form takes over once t**j would overflow
    if t > 2.0 and j * math.log(t) > 60.0:
        return j * math.log(t) + math.log1p(-(t ** -j)) - math.log(t - 1.0)
    acc = 0.0
    power = 1.0
    for _ in range(j):
        acc += power
        power *= t
    return math.log(acc)


@lru_cache(maxsize=None)
def log_q_factorial(m: int, t: float) -> float:
    """log([m]_t!) for real t > 0 (log-domain; never overflows)."""
    if m < 0:
        raise ValueError("q-factorial index must be nonnegative")
    if t <= 0:
        raise ValueError("log-domain base must be positive")
    if m == 0:
        return 0.0
    return log_q_factorial(m - 1, t) + _log_q_int(m, t)


class PochhammerValue(NamedTuple):
    value: float
    factors: int


_POCHHAMMER_HARD_CAP = 10 ** 6


def q_pochhammer_inf(a: complex, q: complex, tol: float = 1e-12) -> PochhammerValue:
    """(a; q)_infty = prod_{j>=0} (1 - a q**j), truncated deterministically.

    Stops once the factor differs from 1 by less than tol (safe for
    |q| <= 1 - 1e-6 by geometric decay); hard cap of 1e6 factors.
    """
    if abs(q) >= 1:
        raise ValueError("q-Pochhammer infinite product needs |q| < 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    value = 1.0 + 0.0j
    term = complex(a)
    j = 0
    while j < _POCHHAMMER_HARD_CAP:
        if abs(term) < tol:
            break
        value *= 1.0 - term
        term *= q
        j += 1
    if abs(value.imag) <= 1e-15 * abs(value.real):
        return PochhammerValue(value.real, j)
    return PochhammerValue(value, j)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# exponent combinatorics

def sigma(k: Sequence[int], ell: Sequence[int]) -> int:
    """sigma(k, ell) = sum_{i<j} k_i * ell_j."""
    if len(k) != len(ell):
        raise ValueError("exponent vectors must share dimension")
    total = 0
    suffix = sum(ell)
    for i in range(len(k)):
        suffix -= ell[i]
        total += k[i] * suffix
    return total


def cross_degree(k: Sequence[int]) -> int:
    """sum_{i<j} k_i * k_j."""
    return sigma(k, k)


# ---------------------------------------------------------------------------
# weight functions

def weight_polydisk(k: Sequence[int], q) -> float:
    """w_q(k): 1 for |q| >= 1, else |q|**cross_degree(k)."""
    return _mutate.scale("weight-polydisk", math.exp(weight_polydisk_log(k, q)))


def weight_polydisk_log(k: Sequence[int], q) -> float:
    qp = as_qparam(q)
    if qp.modulus >= 1.0:
        return 0.0
    return cross_degree(k) * qp.log_modulus


def weight_u(k: Sequence[int], q) -> float:
    """u_q(k) = |q|**cross_degree(k), with no piecewise branch."""
    return math.exp(weight_u_log(k, q))


def weight_u_log(k: Sequence[int], q) -> float:
    return cross_degree(k) * as_qparam(q).log_modulus


def weight_ball_log(k: Sequence[int], q) -> float:
    qp = as_qparam(q)
    t = qp.modulus * qp.modulus
    log_ratio = sum(log_q_factorial(m, t) for m in k) - log_q_factorial(sum(k), t)
    return 0.5 * log_ratio + weight_u_log(k, qp)


def weight_ball(k: Sequence[int], q) -> float:
    """([k]_{|q|^2}! / [|k|]_{|q|^2}!)**(1/2) * u_q(k); equals (k!/|k|!)**(1/2) at |q| = 1."""
    return _mutate.scale("weight-ball", math.exp(weight_ball_log(k, q)))


def weight_ball_alt_log(k: Sequence[int], q) -> float:
    qp = as_qparam(q)
    t = qp.modulus ** -2
    return 0.5 * (sum(log_q_factorial(m, t) for m in k) - log_q_factorial(sum(k), t))


def weight_ball_alt(k: Sequence[int], q) -> float:
    """Alternate form ([k]_{|q|^{-2}}! / [|k|]_{|q|^{-2}}!)**(1/2) of the ball weight."""
    return math.exp(weight_ball_alt_log(k, q))


# ---------------------------------------------------------------------------
# word statistics

def word_profile(alpha: Sequence[int], n: int | None = None) -> tuple:
    """Letter-count profile p(alpha); p_i = number of occurrences of i."""
    if n is None:
        n = max(alpha) if alpha else 0
    if any(a < 1 or a > n for a in alpha):
        raise ValueError("letters must lie in 1..n")
    return _word_profile(tuple(alpha), n)


_DEFAULT_TOTAL_CAP = 1000


def fiber_count(k: Sequence[int], max_total: int = _DEFAULT_TOTAL_CAP) -> int:
    """|p^{-1}(k)| = |k|!/k! as an exact integer."""
    if any(m < 0 for m in k):
        raise ValueError("exponents must be nonnegative")
    total = sum(k)
    if total > max_total:
        raise EnumerationCapExceeded(
            f"total degree {total} exceeds the configured cap {max_total}")
    count = math.factorial(total)
    for m in k:
        count //= math.factorial(m)
    return count


def inversions(alpha: Sequence[int]) -> int:
    """m(alpha) = #{(i, j) : i < j, alpha_i > alpha_j}."""
    return _inversions(tuple(alpha))


def switch_count(alpha: Sequence[int]) -> int:
    """s(alpha) = #{i : alpha_i != alpha_{i+1}}; |alpha| - 1 when |alpha| <= 1."""
    return _switch_count(tuple(alpha))


def delta_word(k: Sequence[int]) -> tuple:
    """The sorted word with k_i copies of letter i."""
    out = []
    for letter, c in enumerate(k, start=1):
        if c < 0:
            raise ValueError("exponents must be nonnegative")
        out.extend([letter] * c)
    return tuple(out)


_DEFAULT_FIBER_CAP = 10 ** 6


def fiber_words(k: Sequence[int], cap: int = _DEFAULT_FIBER_CAP) -> list:
    """All words alpha with p(alpha) = k, exactly once, in lexicographic order."""
    count = fiber_count(k)
    if count > cap:
        raise EnumerationCapExceeded(
            f"fiber of size {count} exceeds the enumeration cap {cap}")
    return _fiber_words_raw(tuple(k))


def fiber_inversion_list(k: Sequence[int], cap: int = _DEFAULT_FIBER_CAP) -> list:
    """Inversion numbers m(alpha) over the fiber, in the fiber_words order."""
    count = fiber_count(k)
    if count > cap:
        raise EnumerationCapExceeded(
            f"fiber of size {count} exceeds the enumeration cap {cap}")
    return fiber_inversions(tuple(k))


class InvDistribution(NamedTuple):
    brute: complex
    closed: complex


def inv_distribution(k: Sequence[int], q: complex,
                     cap: int = _DEFAULT_FIBER_CAP) -> InvDistribution:
    """Sum of q**m(alpha) over the fiber, both by enumeration and in the
    closed Mahonian form [|k|]_q!/[k]_q!; the two agree to ~1e-10 relative.
    """
    count = fiber_count(k)
    if count > cap:
        raise EnumerationCapExceeded(
            f"fiber of size {count} exceeds the enumeration cap {cap}")
    brute = mahonian_sum(tuple(k), complex(q))
    closed = q_factorial(sum(k), q) / q_factorial(k, q)
    closed = _mutate.scale("mahonian-closed-form", closed)
    return InvDistribution(brute, closed)


def word_with_inversions(k: Sequence[int], m: int) -> tuple:
    """A word alpha with p(alpha) = k, m(alpha) = m and switch count <= n + 2.

    Moving-letter construction: starting from the sorted word, the current
    leading letter is transposed rightward one step at a time; each step
    raises the inversion count by 0 or 1, so the target m is hit exactly.
    """
    if any(c < 0 for c in k):
        raise ValueError("exponents must be nonnegative")
    if not 0 <= m <= cross_degree(k):
        raise ValueError("inversion target out of range for this profile")
    word = list(delta_word(k))
    d = len(word)
    acc = 0
    if acc == m:
        return tuple(word)
    for final in range(d - 1, 0, -1):
        # one pass: park word[0] at position `final`
        for pos in range(final):
            if word[pos] < word[pos + 1]:
                acc += 1
            word[pos], word[pos + 1] = word[pos + 1], word[pos]
            if acc == m:
                return tuple(word)
    raise AssertionError("unreachable: target within range is always hit")


# ---------------------------------------------------------------------------
# index and word enumeration

@lru_cache(maxsize=None)
def multi_indices(n: int, max_total: int) -> tuple:
    """All k in Z_+^n with |k| <= max_total, lexicographically sorted."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return tuple(sorted(_compositions_upto(n, max_total)))


def _compositions_upto(n, max_total):
    if n == 1:
        return [(m,) for m in range(max_total + 1)]
    out = []
    for head in range(max_total + 1):
        for tail in _compositions_upto(n - 1, max_total - head):
            out.append((head,) + tail)
    return out


@lru_cache(maxsize=None)
def multi_indices_exact(n: int, total: int) -> tuple:
    """All k in Z_+^n with |k| = total ((Z_+^n)_d), lexicographically sorted."""
    return tuple(k for k in multi_indices(n, total) if sum(k) == total)


def words_exact(n: int, d: int):
    """Iterator over W_{n,d}."""
    if d == 0:
        yield ()
        return
    stack = [()]
    while stack:
        w = stack.pop()
        if len(w) == d:
            yield w
            continue
        for a in range(n, 0, -1):
            stack.append(w + (a,))


def words(n: int, max_len: int):
    """Iterator over all words of length <= max_len over {1..n}."""
    for d in range(max_len + 1):
        yield from words_exact(n, d)
