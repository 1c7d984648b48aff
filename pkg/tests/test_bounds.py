import math

import pytest

from conftest import THETA0, bisect_root
from trinotool.bounds import (
    check_extremality,
    comparison_bounds,
    house_lower_bound,
)
from trinotool.polycore import FamilyForm, classify_real_roots


def sample_family(rng, fam, a_lo=2.0, a_hi=20.0, n_max=40, int_a=False):
    while True:
        n = rng.randint(3, n_max)
        m = rng.randint(1, n - 1)
        if math.gcd(m, n) != 1:
            continue
        if fam == "R" and (m % 2 == 0 or n % 2 == 1):
            continue
        if fam == "S" and (n % 2 == 0 or m % 2 == 1):
            continue
        a = rng.randint(max(2, int(a_lo)), int(a_hi)) if int_a else rng.uniform(a_lo, a_hi)
        return FamilyForm(fam, n, m, a)


# -------------------------------------------------------- house_lower_bound

def test_bound_r413():
    r = house_lower_bound(FamilyForm("R", 4, 1, 3))
    assert r.bound == pytest.approx(1 + math.log(2) / 3, rel=1e-15)
    # the labelled real root already clears the bound; oracle by bisection
    r1 = bisect_root(lambda x: x**4 - 3 * x + 1, 1.0, 2.0)
    assert r1 >= r.bound and r.house >= r1 - 1e-10
    assert r.satisfied


def test_bound_t312():
    r = house_lower_bound(FamilyForm("T", 3, 1, 2))
    assert r.bound == pytest.approx(1 + math.log(2) / 2, rel=1e-15)
    assert r.house == pytest.approx((1 + 5**0.5) / 2, abs=1e-10)  # (z+1)(z^2-z-1)
    assert r.house > r.bound and r.satisfied


def test_bound_a2_is_exactly_one():
    r = house_lower_bound(FamilyForm("R", 4, 1, 2))
    assert r.bound == 1.0
    assert classify_real_roots(FamilyForm("R", 4, 1, 2))["r1"] == 1.0
    assert r.satisfied


def test_bound_unavailable_for_s_odd_odd():
    r = house_lower_bound(FamilyForm("S", 5, 3, 4))
    assert r.bound is None and r.t0 is None and r.satisfied is None
    assert "no nontrivial lower bound" in r.reason
    assert r.house > 1  # the house itself still exceeds 1


def test_bound_input_validation():
    with pytest.raises(ValueError):
        house_lower_bound(FamilyForm("T", 3, 1, 1.5))
    with pytest.raises(ValueError):
        house_lower_bound(FamilyForm("T", 6, 2, 3))


def test_bound_properties_per_family(rng):
    labels = {"R": "r1", "S": "s3", "T": "t1"}
    for fam in ("R", "S", "T"):
        for _ in range(200):
            f = sample_family(rng, fam)
            root = abs(classify_real_roots(f)[labels[fam]])
            base = f.a if fam == "T" else f.a - 1
            bound = 1 + math.log(base) / (f.n - f.m)
            if fam == "T":
                assert root > bound - 1e-12, f
            else:
                assert root >= bound - 1e-10, f
            report = house_lower_bound(f)
            assert report.satisfied
            assert report.house >= root - 1e-10
            # defining identity of t0, relative (both sides can be huge)
            lhs = (1 + report.t0) ** f.n
            rhs = base * (1 + report.t0) ** f.m
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))
            assert report.t0 >= math.log(base) / (f.n - f.m) - 1e-12


# -------------------------------------------------------- comparison bounds

def test_comparison_examples():
    cb = comparison_bounds(10)
    assert cb.dimitrov == pytest.approx(2 ** (1 / 40), rel=1e-15)
    assert cb.smyth_boyd_house == pytest.approx(THETA0 ** (3 / 20), rel=1e-12)
    assert cb.trivial_mn == pytest.approx(2 ** 0.1, rel=1e-15)
    # the degree-12 -> 13 formula switch
    assert comparison_bounds(12).rhin_wu == pytest.approx(math.exp(3 * math.log(4) / 144), rel=1e-15)
    assert comparison_bounds(13).rhin_wu == pytest.approx(math.exp(3 * math.log(6.5) / 169), rel=1e-15)
    assert comparison_bounds(3).rhin_wu is None


def test_comparison_values_exceed_one():
    for n in range(3, 60):
        cb = comparison_bounds(n)
        for name in ("dimitrov", "matveev", "voutier", "verger_gaugry",
                     "smyth_boyd_house", "trivial_mn"):
            assert getattr(cb, name) > 1.0, (n, name)
        if cb.rhin_wu is not None:
            assert cb.rhin_wu > 1.0
    with pytest.raises(ValueError):
        comparison_bounds(2)


# -------------------------------------------------------- extremality

def test_extremality_examples():
    v = check_extremality(FamilyForm("T", 3, 1, 2))
    assert v.verdict == "not-extremal"
    assert v.house == pytest.approx((1 + 5**0.5) / 2, abs=1e-10)
    assert v.threshold == pytest.approx(2 ** (1 / 3), rel=1e-15)
    assert v.sign_certificate == pytest.approx(1 - 2 * 2 ** (1 / 3), rel=1e-12)
    assert v.sign_certificate < 0

    v = check_extremality(FamilyForm("R", 4, 1, 3))
    assert v.verdict == "not-extremal"
    assert v.house > 2 ** 0.25
    assert v.sign_certificate is None


def test_extremality_a_ge_3_always_not_extremal(rng):
    for fam in ("R", "S", "T"):
        for _ in range(60):
            f = sample_family(rng, fam, a_lo=3, a_hi=12, n_max=30, int_a=True)
            if f.a < 3:
                continue
            v = check_extremality(f)
            assert v.verdict == "not-extremal", f
            if fam == "T":
                assert v.sign_certificate < 0


def test_extremality_t_sign_certificate_all_valid_inputs(rng):
    for _ in range(80):
        f = sample_family(rng, "T", a_lo=2, a_hi=12, int_a=True)
        v = check_extremality(f)
        assert v.sign_certificate < 0  # 1 - a 2^(m/n) < 0 whenever a >= 2


def test_extremality_requires_integer_a():
    with pytest.raises(ValueError):
        check_extremality(FamilyForm("T", 3, 1, 2.5))
