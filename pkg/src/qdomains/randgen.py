"""Seeded random elements for the verification suites.

Coefficients are uniform on the complex unit disk (sqrt(u) e^{2 pi i v}
with u, v uniform on [0,1)); supports are drawn uniformly from the set of
multi-indices or words of degree at most the cap.  Everything goes
through random.Random, so a fixed seed replays exactly.
"""

from __future__ import annotations

import math
from random import Random

from qdomains import qcombinat as qc
from qdomains.deform_types import HSeriesElement
from qdomains.elements import FreeElement, LaurentElement, QPolynomial

__all__ = [
    "unit_disk",
    "random_qpoly",
    "random_free",
    "random_laurent",
    "random_hseries",
]


def unit_disk(rng: Random) -> complex:
    r = math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return complex(r * math.cos(theta), r * math.sin(theta))


def random_qpoly(rng: Random, n: int, q, max_degree: int = 4, terms: int = 6) -> QPolynomial:
    pool = qc.multi_indices(n, max_degree)
    chosen: dict = {}
    for _ in range(terms):
        k = pool[rng.randrange(len(pool))]
        chosen[k] = chosen.get(k, 0.0) + unit_disk(rng)
    return QPolynomial(n, q, chosen)


def _word_pool(n: int, max_len: int) -> list:
    return list(qc.words(n, max_len))


def random_free(rng: Random, n: int, max_len: int = 4, terms: int = 6) -> FreeElement:
    pool = _word_pool(n, max_len)
    chosen: dict = {}
    for _ in range(terms):
        alpha = pool[rng.randrange(len(pool))]
        chosen[alpha] = chosen.get(alpha, 0.0) + unit_disk(rng)
    return FreeElement(n, chosen)


def random_laurent(rng: Random, n: int, max_degree: int = 3, max_power: int = 4,
                   terms: int = 6) -> LaurentElement:
    pool = qc.multi_indices(n, max_degree)
    chosen: dict = {}
    for _ in range(terms):
        k = pool[rng.randrange(len(pool))]
        p = rng.randint(-max_power, max_power)
        chosen[(k, p)] = chosen.get((k, p), 0.0) + unit_disk(rng)
    return LaurentElement(n, chosen)


def random_hseries(rng: Random, n: int, order: int, max_degree: int = 3,
                   terms: int = 6) -> HSeriesElement:
    pool = qc.multi_indices(n, max_degree)
    chosen: dict = {}
    for _ in range(terms):
        k = pool[rng.randrange(len(pool))]
        p = rng.randint(0, order)
        chosen[(p, k)] = chosen.get((p, k), 0.0) + unit_disk(rng)
    return HSeriesElement(n, order, chosen)
