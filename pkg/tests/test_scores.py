import math

import numpy as np
import pytest
from hypothesis import given
from scipy import special

from lpmix.empirical import build_empirical, from_pmf
from lpmix.scores import build_score_basis, eval_scores, eval_scores_u, legendre

from conftest import discrete_distributions

CLOSED_FORMS = {
    0: lambda u: np.ones_like(u),
    1: lambda u: math.sqrt(12) * (u - 0.5),
    2: lambda u: math.sqrt(5) * (6 * u**2 - 6 * u + 1),
    3: lambda u: math.sqrt(7) * (20 * u**3 - 30 * u**2 + 12 * u - 1),
    4: lambda u: 3 * (70 * u**4 - 140 * u**3 + 90 * u**2 - 20 * u + 1),
}


def test_legendre_examples():
    assert legendre(1, 1.0) == pytest.approx(math.sqrt(3), abs=1e-12)
    assert legendre(2, 0.5) == pytest.approx(-1.1180340, abs=1e-7)
    assert legendre(0, 0.37) == 1
    with pytest.raises(ValueError):
        legendre(-1, 0.5)


@pytest.mark.parametrize("j", range(5))
def test_legendre_closed_forms(j):
    u = np.linspace(0, 1, 101)
    np.testing.assert_allclose(legendre(j, u), CLOSED_FORMS[j](u), atol=1e-12)


@pytest.mark.parametrize("j", range(12))
def test_legendre_matches_scipy(j):
    u = np.linspace(0, 1, 57)
    np.testing.assert_allclose(legendre(j, u), math.sqrt(2 * j + 1) * special.eval_sh_legendre(j, u), atol=1e-9)


def test_legendre_orthonormal_by_quadrature():
    t, w = np.polynomial.legendre.leggauss(40)
    u, w = (t + 1) / 2, w / 2
    g = np.array([[np.dot(w, legendre(i, u) * legendre(j, u)) for j in range(10)] for i in range(10)])
    np.testing.assert_allclose(g, np.eye(10), atol=1e-12)


def test_binary_basis():
    b = build_score_basis(from_pmf([0, 1], [0.5, 0.5]), 3)
    assert b.m == 1
    np.testing.assert_allclose(b.table[:, 0], [-1, 1], atol=1e-15)
    np.testing.assert_allclose(eval_scores(b, 1.0), [1.0])


def test_die_basis_orthonormal():
    b = build_score_basis(from_pmf(range(1, 7), [1 / 6] * 6), 5)
    assert b.m == 5
    np.testing.assert_allclose(b.gram(), np.eye(5), atol=1e-12)


def test_binary_sigma():
    p = 0.2
    d = from_pmf([0, 1], [1 - p, p])
    b = build_score_basis(d, 1)
    sigma = math.sqrt(p * (1 - p)) / 2
    np.testing.assert_allclose(b.table[:, 0], (d.mid - 0.5) / sigma, atol=1e-12)


def test_errors():
    with pytest.raises(ValueError):
        build_score_basis(build_empirical([5, 5, 5]), 2)
    with pytest.raises(ValueError):
        build_score_basis(build_empirical([1, 2]), 0)
    b = build_score_basis(build_empirical([1, 2, 2, 3]), 2)
    with pytest.raises(KeyError):
        eval_scores(b, 2.5)


@given(discrete_distributions())
def test_orthonormal_property(d):
    b = build_score_basis(d, d.k - 1)
    assert b.m <= d.k - 1
    assert np.abs(d.pmf @ b.table).max() < 1e-10
    assert np.abs(b.gram() - np.eye(b.m)).max() < 1e-10


@given(discrete_distributions(max_k=8))
def test_matches_raw_power_gram_schmidt(d):
    # oracle: classical Gram-Schmidt on the raw powers 1, T1, T1^2, ...
    w = d.pmf
    t1 = (d.mid - 0.5) / math.sqrt(np.dot(w, (d.mid - 0.5) ** 2))
    q = [np.ones(d.k)]
    for j in range(1, d.k):
        v = t1**j
        for _ in range(2):
            for e in q:
                v = v - np.dot(w * e, v) * e
        q.append(v / math.sqrt(np.dot(w * v, v)))
    oracle = np.column_stack(q[1:])
    b = build_score_basis(d, d.k - 1)
    np.testing.assert_allclose(b.table, oracle, atol=1e-7)


def test_order_degrades_gracefully():
    d = build_empirical([1, 2, 3])
    assert build_score_basis(d, 10).m == 2
    assert d.score_basis().m == 2


def test_continuous_agrees_with_legendre(rng):
    x = rng.normal(size=1000)
    d = build_empirical(x)
    assert d.kind == "continuous-sample"
    b = build_score_basis(d, 4)
    leg = np.column_stack([legendre(j, d.mid) for j in range(1, 5)])
    assert np.abs(b.table - leg).max() < 0.05


def test_unit_interval_scores():
    d = build_empirical(np.arange(100.0))
    b = d.score_basis(4)
    assert b.kind == "legendre-continuous"
    assert eval_scores_u(b, 0.5)[0] == pytest.approx(0.0, abs=1e-15)
    disc = build_empirical([1, 1, 2, 3, 3, 3]).score_basis(2)
    np.testing.assert_array_equal(eval_scores_u(disc, 0.2), disc.table[0])
    np.testing.assert_array_equal(eval_scores_u(disc, 0.4), disc.table[1])


def test_basis_cache():
    d = build_empirical([1, 2, 2, 3, 4])
    assert d.score_basis(3) is d.score_basis(3)
    assert d.score_basis(2) is not d.score_basis(3)
