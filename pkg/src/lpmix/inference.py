"""Two-sample inference, LPINFOR feature screening and score-function classification."""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special, stats

from lpmix.comoments import LPComomentMatrix, Rule, lp_comoments, select_components
from lpmix.density import ComparisonDensityEstimate, NullModel, gof_components
from lpmix.empirical import build_empirical
from lpmix.scores import ScoreBasis, eval_scores, eval_scores_u, sample_scores


def binary_labels(y: Sequence, positive=None) -> NDArray[np.float64]:
    """Map a two-valued column to 0/1; the larger label is 1 unless ``positive`` is given."""
    arr = np.asarray(y)
    labels = np.unique(arr)
    if labels.size != 2:
        raise ValueError(f"expected exactly two classes, found {labels.size}")
    pos = labels[1] if positive is None else positive
    if pos not in labels:
        raise ValueError(f"positive label {pos!r} not present")
    return (arr == pos).astype(float)


def _pearson(x: NDArray, y: NDArray) -> float:
    xc, yc = x - x.mean(), y - y.mean()
    return float(np.dot(xc, yc) / math.sqrt(np.dot(xc, xc) * np.dot(yc, yc)))


@dataclass(frozen=True, eq=False)
class TwoSampleResult:
    lp11: float
    z_score: float
    p_value: float
    t_equiv: float
    pooled_n: int
    lpinfor: float
    comoments: LPComomentMatrix
    conditional_density: ComparisonDensityEstimate


def two_sample(
    sample0: ArrayLike, sample1: ArrayLike, m: int | None = None, rule: Rule = "threshold"
) -> TwoSampleResult:
    """Pool the samples and treat membership in ``sample1`` as the binary response.

    ``lp11`` is the correlation of the pooled mid-ranks with the indicator and
    is asymptotically N(0, 1/n) when the two samples share a distribution.
    """
    s0 = np.asarray(sample0, dtype=float).ravel()
    s1 = np.asarray(sample1, dtype=float).ravel()
    if s0.size == 0 or s1.size == 0:
        raise ValueError("both samples must be non-empty")
    x = np.concatenate((s0, s1))
    y = np.concatenate((np.zeros(s0.size), np.ones(s1.size)))
    mat = lp_comoments(x, y, m, 1, rule)
    n = int(x.size)
    lp11 = float(mat.values[0, 0])
    z = math.sqrt(n) * lp11
    r = _pearson(x, y) if np.ptp(x) > 0 else 0.0
    t = r / math.sqrt(1 - r * r) if abs(r) < 1 else math.copysign(math.inf, r)
    pooled = NullModel.from_distribution(mat.basis_x.dist, "pooled")
    comps = gof_components(s1, pooled, m)
    dens = ComparisonDensityEstimate(comps, select_components(comps.values, comps.n, rule), pooled)
    return TwoSampleResult(
        lp11=lp11,
        z_score=z,
        p_value=float(2 * stats.norm.sf(abs(z))),
        t_equiv=t,
        pooled_n=n,
        lpinfor=mat.lpinfor,
        comoments=mat,
        conditional_density=dens,
    )


def t_equivalent(x: ArrayLike, y: Sequence) -> float:
    """``R / sqrt(1 - R^2)`` for binary ``y``.

    This is the form without the ``sqrt(n - 2)`` factor; the classical pooled
    two-sample t statistic equals ``sqrt(n - 2)`` times this value.
    """
    xa = np.asarray(x, dtype=float).ravel()
    yb = binary_labels(y)
    if xa.size != yb.size:
        raise ValueError("x and y must have equal length")
    r = _pearson(xa, yb)
    if abs(r) >= 1:
        raise ValueError("|R| = 1: the statistic is infinite")
    return r / math.sqrt(1 - r * r)


@dataclass(frozen=True)
class ScreenEntry:
    name: str
    lpinfor: float
    rank: int
    n_selected: int


@dataclass(frozen=True)
class FeatureScreenReport:
    entries: tuple[ScreenEntry, ...]
    skipped: tuple[str, ...]

    def series(self) -> list[tuple[int, float]]:
        return [(e.rank, e.lpinfor) for e in self.entries]

    def names(self) -> list[str]:
        return [e.name for e in self.entries]


def _threads(threads: int | None) -> int:
    if threads:
        return threads
    env = os.environ.get("LP_THREADS")
    return int(env) if env else (os.cpu_count() or 1)


def feature_screen(
    features: Mapping[str, ArrayLike],
    y: ArrayLike,
    m: int | None = None,
    rule: Rule = "threshold",
    threads: int | None = None,
) -> FeatureScreenReport:
    """Rank features by ``LPINFOR(X_m, Y)``, descending (ties broken by name)."""
    ya = np.asarray(y, dtype=float).ravel()
    if np.unique(ya).size < 2:
        raise ValueError("y is degenerate")
    names = list(features)

    def one(name):
        x = np.asarray(features[name], dtype=float).ravel()
        if x.size != ya.size:
            raise ValueError(f"feature {name!r} has length {x.size}, expected {ya.size}")
        if np.unique(x).size < 2:
            return None
        mat = lp_comoments(x, ya, m, None, rule)
        return mat.lpinfor, int(mat.selection.sum())

    with ThreadPoolExecutor(max_workers=_threads(threads)) as pool:
        results = list(pool.map(one, names))
    skipped = tuple(nm for nm, r in zip(names, results) if r is None)
    for nm in skipped:
        warnings.warn(f"feature {nm!r} is constant and was skipped", stacklevel=2)
    scored = sorted(((nm, r) for nm, r in zip(names, results) if r is not None), key=lambda t: (-t[1][0], t[0]))
    entries = tuple(ScreenEntry(nm, val, i + 1, k) for i, (nm, (val, k)) in enumerate(scored))
    return FeatureScreenReport(entries, skipped)


@dataclass(frozen=True, eq=False)
class ScoreLogisticModel:
    """``logodds Pr[Y=1|X] = b0 + sum_j b_j T_j(x;X)`` over preselected score functions."""

    basis: ScoreBasis
    components: tuple[int, ...]  # 1-based score indices
    coef: NDArray[np.float64]  # intercept first
    converged: bool
    separated: bool
    n_iter: int

    def _design(self, scores: NDArray) -> NDArray:
        cols = [j - 1 for j in self.components]
        s = np.atleast_2d(scores)[:, cols]
        return np.column_stack((np.ones(s.shape[0]), s))

    def predict(self, x: ArrayLike) -> NDArray[np.float64]:
        return special.expit(self._design(eval_scores(self.basis, np.atleast_1d(x))) @ self.coef)

    def predict_u(self, u: ArrayLike) -> NDArray[np.float64]:
        return special.expit(self._design(eval_scores_u(self.basis, np.atleast_1d(u))) @ self.coef)


def _irls(design: NDArray, y: NDArray, max_iter: int, tol: float, ridge: float, cap: float):
    beta = np.zeros(design.shape[1])
    eye = ridge * np.eye(design.shape[1])
    for it in range(1, max_iter + 1):
        p = special.expit(design @ beta)
        w = p * (1 - p)
        step = np.linalg.solve(design.T @ (w[:, None] * design) + eye, design.T @ (y - p))
        beta = beta + step
        if np.max(np.abs(beta)) > cap:
            return beta * (cap / np.max(np.abs(beta))), False, True, it
        if np.max(np.abs(step)) < tol:
            return beta, True, False, it
    return beta, False, False, max_iter


def classify_fit(
    x: ArrayLike,
    y: Sequence,
    m: int | None = None,
    preselect: bool = True,
    max_iter: int = 50,
    tol: float = 1e-8,
    ridge: float = 1e-8,
    coef_cap: float = 30.0,
) -> ScoreLogisticModel:
    """Logistic regression on score functions fixed before fitting, solved by IRLS.

    With ``preselect`` only scores whose correlation with ``y`` exceeds
    ``2/sqrt(n)`` enter the model. Separation shows up as coefficients running
    past ``coef_cap``; the fit then stops, reports ``separated`` and keeps the
    estimate rescaled onto the cap (its direction is preserved).
    """
    xa = np.asarray(x, dtype=float).ravel()
    yb = binary_labels(y)
    if xa.size != yb.size:
        raise ValueError("x and y must have equal length")
    if m is not None and m < 1:
        raise ValueError("order m must be at least 1")
    dist = build_empirical(xa)
    basis = dist.score_basis(m)
    t = sample_scores(basis, xa)
    n = xa.size
    if preselect:
        yz = (yb - yb.mean()) / yb.std()
        corr = t.T @ yz / n
        comps = tuple(int(j) + 1 for j in np.nonzero(np.abs(corr) > 2 / math.sqrt(n))[0])
    else:
        comps = tuple(range(1, basis.m + 1))
    design = np.column_stack([np.ones(n)] + [t[:, j - 1] for j in comps])
    beta, converged, separated, it = _irls(design, yb, max_iter, tol, ridge, coef_cap)
    if separated:
        warnings.warn("complete separation: coefficients capped", stacklevel=2)
    elif not converged:
        warnings.warn(f"IRLS did not converge in {max_iter} iterations", stacklevel=2)
    return ScoreLogisticModel(basis, comps, beta, converged, separated, it)
