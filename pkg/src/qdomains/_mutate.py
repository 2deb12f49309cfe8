"""Fault-injection hook for the mutation smoke test.

Setting QDOMAINS_MUTATE=<name> before interpreter start perturbs exactly
one named formula by a relative 1e-6; the matching verification suite must
then fail.  Inactive (the default) every call is the identity.
"""

import os

_BUMP = 1.0 + 1e-6

_active = os.environ.get("QDOMAINS_MUTATE", "")

MUTATION_POINTS = (
    "weight-polydisk",
    "weight-ball",
    "mahonian-closed-form",
    "omega",
    "fock-generator",
    "star-phase",
)


def scale(name, value):
    """Multiply value by (1 + 1e-6) when the named mutation is active."""
    if name == _active:
        return value * _BUMP
    return value


def _refresh():
    # test helper; production code reads the env var once at import
    global _active
    _active = os.environ.get("QDOMAINS_MUTATE", "")
