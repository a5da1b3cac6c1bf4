"""Smoke tests for the Python bindings."""

import math

import pytest

import thinlab as tl


def test_pmf_construction():
    f = tl.make_pmf([1.0, 4.0, 1.0])
    assert len(f) == 3
    assert f[1] == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert f.weights == pytest.approx([1 / 6, 2 / 3, 1 / 6], abs=1e-15)
    with pytest.raises(ValueError):
        tl.make_pmf([1.0, -1.0])
    with pytest.raises(ValueError):
        tl.make_pmf([0.0, 0.0])


def test_thinning_identities():
    f = tl.bernoulli_sum([0.3, 0.5, 0.7])
    assert tl.mean(tl.thin(f, 0.4)) == pytest.approx(0.4 * tl.mean(f), abs=1e-12)
    inner = tl.thin(tl.thin(f, 0.6), 0.5)
    assert tl.total_variation(inner, tl.thin(f, 0.3)) <= 1e-12
    assert tl.is_ulc(f)
    assert tl.is_ulc(tl.thin(f, 0.4))


def test_entropy_and_decomposition():
    f = tl.poisson_pmf(2.0)
    dec = tl.decompose(f)
    assert abs(dec.h + dec.d + dec.l) <= 1e-10
    assert dec.d < 1e-8  # Poisson decomposes with no divergence
    assert tl.entropy(tl.Pmf.delta(3)) == 0.0
    assert tl.poisson_entropy(1.0) == pytest.approx(tl.entropy(tl.poisson_pmf(1.0)), abs=1e-9)
    assert tl.entropy_power(tl.poisson_pmf(2.0)) == pytest.approx(2.0, abs=1e-6)


def test_theorem2_and_counterexample():
    f = tl.bernoulli_sum([0.4] * 5)
    g = tl.bernoulli_sum([0.2] * 4)
    r = tl.check_concavity_thm2(f, g, 0.3, 0.7)
    assert r.passed and r.slack >= 0.0
    ce = tl.naive_epi_counterexample()
    assert ce.passed and ce.slack < -1e-6
    with pytest.raises(ValueError):
        tl.check_concavity_thm2(f, g, 0.6, 0.7)  # alpha + beta > 1


def test_shepp_olkin_segment():
    seg = tl.check_shepp_olkin_segment([0.7, 0.0], [0.0, 0.4], grid_size=17)
    assert seg.disjoint_regime
    assert seg.max_second_diff <= 1e-9


def test_trace_and_random_ulc():
    rows = tl.law_of_thin_numbers_trace(tl.make_pmf([0.7, 0.3]), 10)
    entropies = [row.entropy for row in rows]
    assert entropies == sorted(entropies)
    assert tl.random_ulc(8, 42) == tl.random_ulc(8, 42)


def test_ab_kernel_identity():
    assert tl.ab_identity_residual(0, 0, 0.3, 1.0, 2.0) < 1e-12
    a_val, b_val = tl.ab_kernel(2, 3, 0.4, 1.5, 1.5)
    assert math.isfinite(a_val) and math.isfinite(b_val)
