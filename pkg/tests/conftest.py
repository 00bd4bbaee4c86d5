import numpy as np
import pytest
from hypothesis import strategies as st

from lpmix.empirical import from_pmf


@st.composite
def discrete_distributions(draw, min_k=2, max_k=50):
    k = draw(st.integers(min_k, max_k))
    support = draw(
        st.lists(st.integers(-1000, 1000), min_size=k, max_size=k, unique=True)
    )
    weights = np.array(draw(st.lists(st.floats(0.01, 1.0), min_size=k, max_size=k)))
    return from_pmf(sorted(support), weights / weights.sum())


def random_discrete(rng, k_low=2, k_high=50):
    k = int(rng.integers(k_low, k_high + 1))
    support = np.sort(rng.choice(np.arange(-500, 500), size=k, replace=False)).astype(float)
    p = rng.dirichlet(np.ones(k))
    p = np.maximum(p, 1e-6)
    return from_pmf(support, p / p.sum())


def table_pairs(table):
    """Expand an r x c count table into (x, y) observation pairs."""
    table = np.asarray(table)
    xs, ys = [], []
    for i in range(table.shape[0]):
        for j in range(table.shape[1]):
            xs += [i] * int(table[i, j])
            ys += [j] * int(table[i, j])
    return np.array(xs, float), np.array(ys, float)


def pearson_chisq(table):
    """Classical Pearson chi-square, computed cell by cell."""
    t = np.asarray(table, float)
    n = t.sum()
    e = np.outer(t.sum(1), t.sum(0)) / n
    return float(((t - e) ** 2 / e).sum())


@pytest.fixture
def rng():
    return np.random.default_rng(20131001)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
