import math
import random

import pytest

from conftest import THETA0, coprime_pairs
from trinotool import mahler
from trinotool.errors import CoprimalityViolated, DivergenceDetected, DominanceViolated
from trinotool.mahler import (
    LimitRegime,
    house,
    limit_case,
    limit_measure,
    measure_from_roots,
    measure_jensen,
    residue_term,
    series_measure,
)
from trinotool.polycore import IntPolynomial, TrinomialSpec, is_reciprocal, to_dense


def random_spec(rng, n_max=20, a_abs_max=8, a_abs_min=1):
    n, m = rng.choice(coprime_pairs(n_max))
    a = rng.choice([x for x in range(-a_abs_max, a_abs_max + 1)
                    if abs(x) >= a_abs_min])
    b = rng.choice([-1, 1])
    return TrinomialSpec(n, m, a, b)


# -------------------------------------------------------- measure_from_roots

def test_measure_from_roots_examples():
    assert measure_from_roots(TrinomialSpec(3, 1, -1, -1)).value == pytest.approx(THETA0, abs=1e-10)
    # |b| - |a| = 2 >= 1 forces the measure to equal |b| exactly
    assert measure_from_roots(TrinomialSpec(4, 1, 1, -3)).value == pytest.approx(3.0, abs=1e-9)
    assert measure_from_roots(TrinomialSpec(2, 1, 1, 1)).value == pytest.approx(1.0, abs=1e-12)


def test_measure_result_invariants():
    r = measure_from_roots(TrinomialSpec(5, 2, 3, 1))
    assert r.value == pytest.approx(math.exp(r.log_value), rel=1e-15)
    assert r.value >= 1.0 and r.method == "roots"


def test_measure_leading_coefficient_factor():
    # 2(z - 3)(z + 1) has measure 2 * 3 * 1
    p = IntPolynomial.of([-6, -4, 2])
    assert measure_from_roots(p).value == pytest.approx(6.0, abs=1e-9)


# -------------------------------------------------------- measure_jensen

def test_measure_jensen_examples():
    roots_val = measure_from_roots(TrinomialSpec(3, 1, -1, -1)).value
    jens = measure_jensen(TrinomialSpec(3, 1, -1, -1))
    assert abs(jens.value - roots_val) < 1e-8
    # zeros on the unit circle: the integrand is log-singular yet integrable
    assert measure_jensen(TrinomialSpec(2, 1, 1, 1)).value == pytest.approx(1.0, abs=1e-8)
    ref = measure_from_roots(TrinomialSpec(5, 2, 3, 1)).value
    assert abs(measure_jensen(TrinomialSpec(5, 2, 3, 1)).value - ref) < 1e-8


def test_cross_method_agreement_random():
    rng = random.Random(12345)
    for _ in range(200):
        spec = random_spec(rng)
        mr = measure_from_roots(spec).value
        mj = measure_jensen(spec).value
        assert abs(mr - mj) <= 1e-6, spec
        if abs(spec.a) - abs(spec.b) >= 1 and spec.gcd_mn == 1:
            ms = series_measure(spec.n, spec.m, spec.a, spec.b).value
            assert abs(mr - ms) <= 1e-6, spec


# -------------------------------------------------------- house

def test_house_examples():
    assert house(TrinomialSpec(3, 1, -1, -1)) == pytest.approx(THETA0, abs=1e-10)
    assert house(IntPolynomial.of([-2, 0, 0, 0, 0, 1])) == pytest.approx(2 ** 0.2, abs=1e-10)
    assert house(IntPolynomial.of([-1, -2, 0, 1])) == pytest.approx((1 + 5**0.5) / 2, abs=1e-10)


# -------------------------------------------------------- limit regimes

def test_limit_case_examples():
    assert limit_case(3, 1).case is LimitRegime.DOMINANT_A
    c = limit_case(1, 1)
    assert c.case is LimitRegime.OSCILLATORY
    assert c.gamma == pytest.approx(2 * math.pi / 3, abs=1e-12)
    assert limit_case(0.4, 0.5).case is LimitRegime.SUB_UNIT
    assert limit_case(1, 3).case is LimitRegime.DOMINANT_B


def test_limit_case_partitions_plane(rng):
    for _ in range(300):
        a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        b = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if a == 0 or b == 0:
            continue
        c = limit_case(a, b)
        ra, rb = abs(a), abs(b)
        matches = [
            ra - rb >= 1,
            rb - ra >= 1,
            ra + rb <= 1,
            abs(ra - rb) < 1 < ra + rb,
        ]
        assert sum(matches) == 1
        expected = [LimitRegime.DOMINANT_A, LimitRegime.DOMINANT_B,
                    LimitRegime.SUB_UNIT, LimitRegime.OSCILLATORY][matches.index(True)]
        assert c.case is expected
        if c.case is LimitRegime.OSCILLATORY:
            assert 0 < c.gamma <= math.pi


def test_limit_measure_examples():
    assert limit_measure(3, 1).value == 3.0
    assert limit_measure(0.4, 0.5).value == 1.0
    assert limit_measure(1, 3).value == 3.0
    # two-variable measure of 1 + x + y
    assert limit_measure(1, 1).value == pytest.approx(1.381356, abs=1e-5)


def test_limit_measure_matches_large_n():
    lim = limit_measure(2, 2).value  # oscillatory: ||a|-|b|| = 0 < 1 < 4
    big = measure_from_roots(TrinomialSpec(301, 1, 2, 2)).value
    assert abs(lim - big) < 1e-2


# -------------------------------------------------------- series

def test_series_measure_examples():
    ref = measure_from_roots(TrinomialSpec(5, 2, 3, 1)).value
    assert series_measure(5, 2, 3, 1).value == pytest.approx(ref, abs=1e-8)
    # complex-sign handling through Re(b^(-km) (b/a)^(kn)) with both negative
    ref = measure_from_roots(TrinomialSpec(4, 1, -3, -1)).value
    assert series_measure(4, 1, -3, -1).value == pytest.approx(ref, abs=1e-8)


def test_series_first_term_large_a():
    r = series_measure(3, 1, 100, 1)
    # k = 1 displayed summand: (1/1)(-1)^3 C(2,0) Re(100^-3) = -1e-6
    assert r.terms[0].closed_form == pytest.approx(-1e-6, rel=1e-12)
    # so log M = log 100 + 1e-6 - O(1e-11) tail
    assert r.log_value - math.log(100) == pytest.approx(1e-6, abs=1e-10)


def test_series_complex_coefficients():
    # genuinely complex (a, b) exercise the phase factor of Re(b^-km (b/a)^kn)
    rng = random.Random(5150)
    cases = 0
    while cases < 20:
        n = rng.randint(2, 12)
        m = rng.randint(1, n - 1)
        if math.gcd(m, n) != 1:
            continue
        a = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        b = complex(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2))
        if b == 0 or abs(a) - abs(b) < 1.05:
            continue
        spec = TrinomialSpec(n, m, a, b)
        ref = measure_from_roots(spec).value
        assert series_measure(n, m, a, b).value == pytest.approx(ref, abs=1e-8)
        assert measure_jensen(spec).value == pytest.approx(ref, abs=1e-8)
        cases += 1


def test_residue_complex_coefficients():
    rng = random.Random(616)
    cases = 0
    while cases < 8:
        n = rng.randint(3, 7)
        m = rng.randint(1, n - 1)
        if math.gcd(m, n) != 1:
            continue
        a = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        b = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if b == 0 or abs(a) - abs(b) < 1.05:
            continue
        for k in (1, 2, 3, 4):
            t = residue_term(k, n, m, a, b, with_quadrature=True)
            assert t.closed_form == pytest.approx(
                -t.i_k.real / (2 * math.pi * k), abs=1e-9)
        cases += 1


def test_measure_jensen_budget_propagates():
    from trinotool.errors import QuadratureBudgetExceeded
    from trinotool.quadrature import QuadConfig

    with pytest.raises(QuadratureBudgetExceeded):
        measure_jensen(TrinomialSpec(2, 1, 1, 1), QuadConfig(abs_tol=0.0, max_evals=200))


def test_series_preconditions():
    with pytest.raises(CoprimalityViolated):
        series_measure(4, 2, 3, 1)
    with pytest.raises(DominanceViolated):
        series_measure(3, 1, -1, -1)
    with pytest.raises(ValueError):
        series_measure(3, 4, 3, 1)


def test_series_divergence_monitor(monkeypatch):
    # the boundary |a| - |b| = 1 with m/n = 1/2 decays only like k^(-3/2);
    # tightening the monitor threshold must trip the guard rather than loop
    monkeypatch.setattr(mahler, "_RATIO_LIMIT", 0.9)
    with pytest.raises(DivergenceDetected):
        series_measure(2, 1, 2, 1)


def test_series_term_envelope_decreasing():
    r = series_measure(7, 2, 4, 1)
    mags = [abs(t.closed_form) for t in r.terms if t.closed_form != 0.0]
    assert all(x >= y for x, y in zip(mags[2:], mags[3:]))


# -------------------------------------------------------- residue terms

def test_residue_term_zero_when_m_does_not_divide_k():
    t = residue_term(3, 5, 2, 3, 1, with_quadrature=True)
    assert t.closed_form == 0.0
    assert abs(t.i_k) < 1e-9


def test_residue_term_hand_value():
    # I_1 for (n, m, a, b) = (3, 1, 2, 1) equals 2*pi*(-1)^3*C(2,0)*2^-3 = -pi/4
    t = residue_term(1, 3, 1, 2, 1, with_quadrature=True)
    assert t.i_k.real == pytest.approx(-math.pi / 4, abs=1e-9)
    assert abs(t.i_k.imag) < 1e-9
    assert t.closed_form == pytest.approx(1 / 8, rel=1e-12)


def test_residue_term_oracle_agreement():
    t = residue_term(2, 5, 2, 3, 1, with_quadrature=True)
    assert t.closed_form == pytest.approx(-t.i_k.real / (4 * math.pi), abs=1e-9)


def test_residue_terms_sum_to_series():
    # raw-index contributions collapse onto the displayed series at k = j*m
    n, m, a, b = 5, 2, 3, 1
    total = sum(residue_term(k, n, m, a, b).closed_form for k in range(1, 41))
    r = series_measure(n, m, a, b)
    assert math.log(abs(a)) + total == pytest.approx(r.log_value, abs=1e-10)


# -------------------------------------------------------- global invariants

def test_multiplicativity(rng):
    for _ in range(100):
        p = IntPolynomial.of([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))] + [rng.randint(1, 4)])
        q = IntPolynomial.of([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))] + [rng.randint(1, 4)])
        if p.degree < 1 or q.degree < 1 or p.coeffs[0] == 0 or q.coeffs[0] == 0:
            continue
        mp = measure_from_roots(p).value
        mq = measure_from_roots(q).value
        mpq = measure_from_roots(p * q).value
        assert mpq == pytest.approx(mp * mq, rel=1e-8)


def test_smyth_bound_non_reciprocal(rng):
    for _ in range(150):
        spec = random_spec(rng, n_max=14, a_abs_max=5)
        dense = to_dense(spec)
        if is_reciprocal(dense):
            continue
        assert measure_from_roots(dense).value >= THETA0 - 1e-9, spec


def test_scaling_invariance(rng):
    for _ in range(60):
        spec = random_spec(rng, n_max=10, a_abs_max=6)
        base = measure_from_roots(spec).value
        for k in (2, 3):
            scaled = TrinomialSpec(k * spec.n, k * spec.m, spec.a, spec.b)
            assert measure_from_roots(scaled).value == pytest.approx(base, abs=1e-8)


def test_dominant_b_exact_for_every_n(rng):
    for _ in range(100):
        n, m = rng.choice(coprime_pairs(16))
        a = rng.choice([-1, 1]) * rng.randint(1, 3)
        b = rng.choice([-1, 1]) * (abs(a) + rng.randint(1, 5))
        assert measure_from_roots(TrinomialSpec(n, m, a, b)).value == pytest.approx(abs(b), abs=1e-9)


def test_convergence_to_dominant_a_limit():
    # the gap |M - 3| shrinks with n until it hits the double-precision floor
    gaps = [abs(measure_from_roots(TrinomialSpec(n, 1, 3, 1)).value - 3.0)
            for n in (10, 20, 40, 80)]
    for g0, g1 in zip(gaps, gaps[1:]):
        assert g1 < g0 or g1 < 1e-12
    assert all(g >= 0 for g in gaps)
