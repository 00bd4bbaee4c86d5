import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from lpmix.empirical import (
    build_empirical,
    from_pmf,
    infer_kind,
    informative_quantile_summary,
    mid_quantile,
    normal_grid,
    quantile,
    standardize,
)

from conftest import discrete_distributions

SAMPLE = [3, 1, 4, 1, 5]

samples = st.lists(st.integers(-20, 20), min_size=1, max_size=60)


def test_build_example():
    d = build_empirical(SAMPLE)
    np.testing.assert_array_equal(d.support, [1, 3, 4, 5])
    np.testing.assert_allclose(d.pmf, [0.4, 0.2, 0.2, 0.2], atol=1e-15)
    np.testing.assert_allclose(d.mid, [0.2, 0.5, 0.7, 0.9], atol=1e-15)
    assert d.n == 5


def test_single_point_and_binary():
    d = build_empirical([7])
    assert d.support.tolist() == [7] and d.mid.tolist() == [0.5]
    np.testing.assert_allclose(build_empirical([0, 1]).mid, [0.25, 0.75])


@pytest.mark.parametrize("bad", [[], [1.0, float("nan")], [float("inf")]])
def test_build_rejects(bad):
    with pytest.raises(ValueError):
        build_empirical(bad)


def test_quantile_examples():
    d = build_empirical(SAMPLE)
    assert quantile(d, 0.5) == 3
    assert quantile(d, 0.4) == 1
    assert quantile(d, 1 - 1e-9) == 5
    for u in (0.0, 1.0, -0.2):
        with pytest.raises(ValueError):
            quantile(d, u)


def test_mid_quantile_examples():
    d = build_empirical(SAMPLE)
    assert mid_quantile(d, 0.35) == pytest.approx(2.0, abs=1e-12)
    for m, x in zip(d.mid, d.support):
        assert mid_quantile(d, m) == x
    assert mid_quantile(d, 0.05) == 1
    assert mid_quantile(d, 0.97) == 5
    with pytest.raises(ValueError):
        mid_quantile(d, 1.0)


def test_standardize_examples():
    d = from_pmf([0, 1], [0.5, 0.5])
    assert standardize(d, 1) == pytest.approx(1.0)
    assert standardize(d, d.mean) == 0
    assert standardize(build_empirical(SAMPLE), 5) == pytest.approx(1.375)
    with pytest.raises(ValueError):
        standardize(build_empirical([2, 2]), 2)


def test_quartile_summary_example():
    s = informative_quantile_summary(build_empirical(SAMPLE))
    assert (s.q1, s.q2, s.q3, s.mq, s.dq) == (1, 3, 4, 2.5, 6)
    assert s.outliers == ()
    assert s.qi(5) == pytest.approx(2.5 / 6)


def test_quartile_summary_normal_cutoff():
    s = informative_quantile_summary(normal_grid())
    z75 = stats.norm.ppf(0.75)
    assert s.mq == pytest.approx(0.0, abs=1e-3)  # grid resolution
    assert s.dq == pytest.approx(4 * z75, abs=2e-3)
    # Tukey cutoff |x| > MQ + DQ = 2.698
    assert s.mq + s.dq == pytest.approx(2.698, abs=2e-3)
    assert min(abs(v) for v in s.outliers) > 2.69


def test_quartile_summary_symmetric_and_degenerate():
    s = informative_quantile_summary(build_empirical([1, 2, 3, 4, 5, 6, 7]))
    assert s.mq == s.q2
    s = informative_quantile_summary(build_empirical([0] * 10 + [1]))
    assert s.dq == 0 and s.outliers is None
    with pytest.raises(ValueError):
        s.qi(1)
    with pytest.raises(ValueError):
        informative_quantile_summary(build_empirical([4, 4]))


def test_from_pmf_validation():
    d = from_pmf([3, 1, 2], [0.2, 0.5, 0.3])
    np.testing.assert_array_equal(d.support, [1, 2, 3])
    assert d.kind == "specified-discrete" and d.n is None
    with pytest.raises(ValueError):
        from_pmf([1, 2], [0.5, 0.6])
    with pytest.raises(ValueError):
        from_pmf([1, 1], [0.5, 0.5])
    with pytest.raises(ValueError):
        from_pmf([1, 2], [1.0, 0.0])


def test_infer_kind():
    assert infer_kind([0, 1] * 50) == "discrete-sample"
    assert infer_kind(np.arange(100)) == "continuous-sample"
    assert infer_kind(np.arange(20)) == "discrete-sample"


@given(samples)
def test_exact_inverse_at_probable_u(xs):
    d = build_empirical(xs)
    for x, u in zip(d.support, d.cdf):
        if u < 1:
            assert quantile(d, u) == x
    assert quantile(d, 1 - 1e-13) == d.support[-1]


@given(samples)
def test_mid_equals_tie_averaged_ranks(xs):
    d = build_empirical(xs)
    expected = (stats.rankdata(xs, method="average") - 0.5) / len(xs)
    np.testing.assert_allclose(d.F_mid(xs), expected, atol=1e-12)


@given(discrete_distributions())
def test_mid_mean_and_variance_identity(d):
    assert np.dot(d.pmf, d.mid) == pytest.approx(0.5, abs=1e-14)
    direct = np.dot(d.pmf, (d.mid - 0.5) ** 2)
    assert direct == pytest.approx((1 - np.sum(d.pmf**3)) / 12, abs=1e-12)
    assert np.all(np.diff(d.mid) > 0) and d.mid[0] > 0 and d.mid[-1] < 1
    np.testing.assert_allclose(d.mid, d.cdf - 0.5 * d.pmf, atol=1e-15)


@settings(max_examples=50)
@given(discrete_distributions(), st.lists(st.floats(1e-6, 1 - 1e-6), min_size=2, max_size=20))
def test_mid_quantile_monotone(d, us):
    us = np.sort(us)
    assert np.all(np.diff(mid_quantile(d, us)) >= 0)


def test_binary_mid_variance():
    p = 0.3
    d = from_pmf([0, 1], [1 - p, p])
    assert d.mid_var == pytest.approx(p * (1 - p) / 4, abs=1e-15)
    assert math.sqrt(np.dot(d.pmf, (d.mid - 0.5) ** 2)) == pytest.approx(math.sqrt(p * (1 - p)) / 2)
