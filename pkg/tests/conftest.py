"""Shared test helpers.

Oracles used across the suite are deliberately independent of the library
paths they check: expansion from roots goes through numpy.convolve, real-root
counting through a dense numpy sign scan, reference roots through numpy.roots
or hand factorizations, and reference integrals through plain bisection /
closed forms computed in the tests themselves.
"""

import math
import random

import numpy as np
import pytest

# real zero of z^3 - z - 1, frozen from an independent bisection oracle
# (see test_polycore.test_all_roots_contains_smallest_pisot_root)
THETA0 = 1.3247179572447460


def expand_from_roots(roots, lead=1.0):
    """Expand lead * prod (z - r) into ascending coefficients (numpy oracle)."""
    acc = np.array([complex(lead)])
    for r in roots:
        acc = np.convolve(acc, np.array([-r, 1.0]))
    return acc


def bisect_root(f, lo, hi, iters=200):
    """Plain bisection; the test-side oracle for real roots."""
    flo = f(lo)
    assert flo * f(hi) <= 0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
            flo = f(lo)
    return 0.5 * (lo + hi)


def coprime_pairs(n_max, n_min=2):
    return [(n, m) for n in range(n_min, n_max + 1)
            for m in range(1, n) if math.gcd(m, n) == 1]


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
